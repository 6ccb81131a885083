"""Registered batch experiments and the CSV/JSON report writer.

Every experiment is a function ``(params) -> (records, summary)``.  Records
are flat dicts (one CSV row each); the summary carries the estimate, its
error bound and ``passed`` against the experiment's tolerance.  Output is a
pure function of the parameters and the seed.
"""

from __future__ import annotations

import csv
import json
import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import gmpy2

from . import rng as rngmod
from .graded import estimate_limit, scaled_volume
from .metrics import Chi, chi_norm
from .norms import gram_schmidt_project
from .scalars import ValuedField
from .toric import energy, fekete_search, m_diameter, ma_measure, pullback_check, sup_norm_weights, toric_pair
from .toric.instances import named, random_p1, trivial
from .toric.plmetric import PLMetric
from .volumes import relative_volume, successive_minima

DEFAULT_FIELDS = ["TrivialQ", "PAdicQ(2)", "PAdicQ(3)", "LaurentQt"]


@dataclass
class ExperimentRecord:
    experiment: str
    params: dict
    rows: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.summary.get("passed", False))


class ConfigError(ValueError):
    """Malformed or unsatisfiable experiment configuration."""


# -- serialization ---------------------------------------------------------------
def fmt(x):
    """Report form of a value: rationals as ``a/b`` (or integer) strings, reals at 17 significant digits."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return format(x, ".17g")
    if isinstance(x, type(gmpy2.mpfr(0))):
        return format(float(x), ".17g")
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    return str(x)


def emit_report(records: list[ExperimentRecord], out_dir, name: str = "report", columns=None,
                gnuplot: bool = False) -> dict:
    """Write ``<name>.csv`` (all rows) and ``<name>.json`` (rows and summaries).

    With ``gnuplot`` and rows carrying ``m``, a whitespace table
    ``<name>.dat`` of ``m value limit`` is written as well.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [dict(r, experiment=rec.experiment) for rec in records for r in rec.rows]
    cols = ["experiment"] + [c for c in (columns or []) if c != "experiment"]
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    paths = {"csv": out / f"{name}.csv", "json": out / f"{name}.json"}
    with open(paths["csv"], "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow(["" if r.get(c) is None else fmt(r.get(c)) for c in cols])
    doc = [
        {"experiment": rec.experiment, "params": fmt(rec.params), "rows": fmt(rec.rows), "summary": fmt(rec.summary)}
        for rec in records
    ]
    with open(paths["json"], "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if gnuplot:
        paths["dat"] = out / f"{name}.dat"
        with open(paths["dat"], "w") as fh:
            fh.write("# m value limit\n")
            for rec in records:
                series = rec.summary.get("series")
                limit = rec.summary.get("limit")
                lim = fmt(float(limit)) if limit is not None else "nan"
                for r in rec.rows:
                    if series in r and "m" in r:
                        fh.write(f"{r['m']} {fmt(r[series])} {lim}\n")
    return paths


# -- parameter helpers ------------------------------------------------------------
def _fields(params) -> list[ValuedField]:
    names = params.get("fields") or ([params["field"]] if "field" in params else DEFAULT_FIELDS)
    try:
        return [ValuedField.parse(f) for f in names]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _metric(spec, polytope=None) -> PLMetric:
    if isinstance(spec, PLMetric):
        return spec
    if isinstance(spec, str):
        if spec.endswith(".json"):
            with open(spec) as fh:
                return PLMetric.from_json(json.load(fh), polytope)
        if spec == "trivial":
            if polytope is None:
                raise ConfigError("'trivial' needs a polytope")
            return trivial(polytope)
        try:
            return named(spec)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    if isinstance(spec, dict):
        return PLMetric.from_json(spec, polytope)
    raise ConfigError(f"cannot interpret metric {spec!r}")


def _pair_metrics(params):
    phi = _metric(params.get("phi", "p1-calibration"))
    psi = _metric(params.get("psi", "trivial"), phi.polytope)
    return phi, psi


def _limit(samples):
    if len(samples) < 3:
        raise ConfigError("at least 3 degrees are needed to extrapolate")
    return estimate_limit(samples)


def _m_values(params, default_max):
    if "m" in params and isinstance(params["m"], list):
        ms = [int(m) for m in params["m"]]
    else:
        m_max = int(params.get("m_max", default_max))
        m_min = int(params.get("m_min", 1))
        step = int(params.get("m_step", 1))
        ms = list(range(m_min, m_max + 1, step))
    if not ms or min(ms) < 1:
        raise ConfigError("degrees must be positive")
    return ms


# -- experiments ------------------------------------------------------------------
def exp_minkowski(params) -> ExperimentRecord:
    seed = int(params.get("seed", 0))
    pairs = int(params.get("pairs", 1000))
    dmax = int(params.get("max_dim", 6))
    max_den = int(params.get("max_den", 12))
    rows, failures, timings = [], 0, {}
    for k, F in enumerate(_fields(params)):
        rng = rngmod.SplitMix64(seed + 1000003 * k)
        t0 = time.perf_counter()
        bad = 0
        for _ in range(pairs):
            d = rng.randint(1, dmax)
            n1 = rngmod.random_norm(F, d, rng, max_den)
            n2 = rngmod.random_norm(F, d, rng, max_den)
            if relative_volume(n1, n2) != sum(successive_minima(n1, n2), Fraction(0)):
                bad += 1
        timings[str(F)] = time.perf_counter() - t0
        failures += bad
        rows.append({"field": str(F), "pairs": pairs, "failures": bad})
    return ExperimentRecord("minkowski-fuzz", params, rows,
                            {"failures": failures, "passed": failures == 0, "seconds": timings})


def exp_triangle(params) -> ExperimentRecord:
    seed = int(params.get("seed", 0))
    triples = int(params.get("triples", 2000))
    retractions = int(params.get("retractions", 500))
    dmax = int(params.get("max_dim", 4))
    tol = float(params.get("l2_tolerance", 1e-12))
    fields = _fields(params)
    rng = rngmod.SplitMix64(seed)
    bad = {c.value: 0 for c in Chi}
    bad_ret = {c.value: 0 for c in Chi}

    def ok(chi, lhs, rhs):
        if chi is Chi.L2:
            return float(lhs - rhs) <= tol
        return lhs <= rhs

    for k in range(triples):
        F = fields[k % len(fields)]
        d = rng.randint(1, dmax)
        a, b, c = (rngmod.random_norm(F, d, rng) for _ in range(3))
        ab, bc, ac = successive_minima(a, b), successive_minima(b, c), successive_minima(a, c)
        for chi in Chi:
            if not ok(chi, chi_norm(ac, chi), chi_norm(ab, chi) + chi_norm(bc, chi)):
                bad[chi.value] += 1
    for k in range(retractions):
        F = fields[k % len(fields)]
        d = rng.randint(1, dmax)
        E = rngmod.random_basis(F, d, rng)
        a, b = rngmod.random_norm(F, d, rng), rngmod.random_norm(F, d, rng)
        before = successive_minima(a, b)
        after = successive_minima(gram_schmidt_project(a, E), gram_schmidt_project(b, E))
        for chi in Chi:
            if not ok(chi, chi_norm(after, chi), chi_norm(before, chi)):
                bad_ret[chi.value] += 1
    rows = [{"chi": c, "triples": triples, "triangle_failures": bad[c],
             "retractions": retractions, "retraction_failures": bad_ret[c]} for c in bad]
    total = sum(bad.values()) + sum(bad_ret.values())
    return ExperimentRecord("triangle-fuzz", params, rows, {"failures": total, "passed": total == 0})


def exp_theorem_a(params) -> ExperimentRecord:
    phi, psi = _pair_metrics(params)
    ms = _m_values(params, 100)
    tol = float(params.get("tolerance", 5e-3))
    pair = toric_pair(phi, psi)
    E = energy(phi, psi)
    rows = []
    for m in ms:
        v = scaled_volume(pair, m)
        rows.append({"m": m, "N_m": pair.dim(m), "scaled_volume": v, "scaled_volume_real": float(v)})
    lim = _limit([(r["m"], r["scaled_volume"]) for r in rows])
    err = abs(lim.estimate - float(E))
    return ExperimentRecord("theorem-a", params, rows, {
        "limit": E, "limit_real": float(E), "estimate": lim.estimate, "error_bound": lim.error_bound,
        "error": err, "tolerance": tol, "passed": err <= tol, "series": "scaled_volume_real",
    })


def exp_theorem_b(params) -> ExperimentRecord:
    phi, psi = _pair_metrics(params)
    ms = _m_values(params, 100)
    rel = float(params.get("relative_tolerance", 0.02))
    E = energy(phi, psi)
    rows = []
    for m in ms:
        ref = sup_norm_weights(psi, m)
        v = m_diameter(phi, m, ref)
        rows.append({"m": m, "N_m": ref.dim, "m_diameter": v, "m_diameter_real": float(v)})
    lim = _limit([(r["m"], r["m_diameter"]) for r in rows])
    err = abs(lim.estimate - float(E))
    scale = abs(float(E)) or 1.0
    return ExperimentRecord("theorem-b", params, rows, {
        "limit": E, "limit_real": float(E), "estimate": lim.estimate, "error_bound": lim.error_bound,
        "relative_error": err / scale, "tolerance": rel, "passed": err <= rel * scale,
        "series": "m_diameter_real",
    })


def exp_fekete(params) -> ExperimentRecord:
    phi = _metric(params.get("phi", "p1-breakpoint-half"))
    m = int(params.get("m", 40))
    tol = Fraction(str(params.get("tolerance", "0.05")))
    field_name = str(params.get("field", "TrivialQ"))
    if field_name.startswith("PAdicQ"):
        warnings.warn("Fekete equidistribution assumes residue characteristic 0; PAdicQ is outside its hypotheses")
    target = ma_measure(phi)
    _, emp = fekete_search(phi, m)
    rows, worst = [], Fraction(0)
    for x, mass in target.atoms:
        got = emp.mass_at(x)
        worst = max(worst, abs(got - mass))
        rows.append({"atom": "(" + ", ".join(str(c) for c in x) + ")", "ma_mass": mass, "empirical_mass": got,
                     "difference": got - mass})
    stray = sum((mm for x, mm in emp.atoms if target.mass_at(x) == 0), Fraction(0))
    worst = max(worst, stray)
    return ExperimentRecord("fekete", params, rows, {
        "m": m, "max_difference": worst, "max_difference_real": float(worst), "tolerance": tol,
        "passed": worst <= tol, "field": field_name,
    })


def exp_pullback(params) -> ExperimentRecord:
    seed = int(params.get("seed", 0))
    count = int(params.get("instances", 20))
    ds = [int(d) for d in params.get("d", [2, 3])]
    rng = rngmod.SplitMix64(seed)
    rows, bad = [], 0
    if "phi" in params:
        instances = [_pair_metrics(params)]
    else:
        instances = [(random_p1(rng), random_p1(rng)) for _ in range(count)]
    for i, (phi, psi) in enumerate(instances):
        for d in ds:
            r = pullback_check(phi, psi, d)
            eq = r["lhs"] == r["rhs"]
            bad += not eq
            rows.append({"instance": i, "d": d, "lhs": r["lhs"], "rhs": r["rhs"], "equal": eq})
    return ExperimentRecord("pullback", params, rows, {"failures": bad, "passed": bad == 0})


def exp_energy(params) -> ExperimentRecord:
    phi, psi = _pair_metrics(params)
    E = energy(phi, psi)
    return ExperimentRecord("energy", params, [{"energy": E, "energy_real": float(E)}],
                            {"energy": E, "energy_real": float(E), "passed": True})


EXPERIMENTS = {
    "theorem-a": exp_theorem_a,
    "theorem-b": exp_theorem_b,
    "fekete": exp_fekete,
    "pullback": exp_pullback,
    "minkowski-fuzz": exp_minkowski,
    "triangle-fuzz": exp_triangle,
    "energy": exp_energy,
}


def run_experiment(config: dict) -> list[ExperimentRecord]:
    """Run the experiment named by ``config["experiment"]`` with the remaining keys as parameters."""
    if not isinstance(config, dict) or "experiment" not in config:
        raise ConfigError("config must be an object with an 'experiment' key")
    name = config["experiment"]
    if name not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {name!r}; known: {', '.join(sorted(EXPERIMENTS))}")
    params = {k: v for k, v in config.items() if k != "experiment"}
    return [EXPERIMENTS[name](params)]


__all__ = ["ExperimentRecord", "ConfigError", "EXPERIMENTS", "run_experiment", "emit_report", "fmt"]
