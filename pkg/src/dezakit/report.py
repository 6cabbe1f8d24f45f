"""Analysis reports: one JSON-ready record collecting every classification.

Reports are plain dicts built from JSON-native types only, so a report
serialised and re-parsed compares equal to the in-memory record, and the
key order (hence the rendered output) is deterministic.
"""

from __future__ import annotations

import json

from . import deza as deza_mod
from . import distreg
from . import theorems
from .errors import ContradictionError, InfeasibleError, SpectrumShapeError
from .graphs import Graph, structural_profile
from .spectra import NonQuadraticSpectrumError, exact_spectrum

SCHEMA = "deza-report/1"

_SKIPPABLE = (ValueError, InfeasibleError, SpectrumShapeError)


def _attempt(fn, *args):
    """Run one verifier; normal negatives become 'skipped', falsified
    instance checks become 'contradiction' (reported, never swallowed)."""
    try:
        return fn(*args)
    except ContradictionError as exc:
        return {"contradiction": str(exc)}
    except _SKIPPABLE as exc:
        return {"skipped": str(exc)}


def _case_dict(outcome) -> dict:
    if isinstance(outcome, dict):
        return outcome
    return {"case": outcome.case, "witness": outcome.witness}


def build_report(g: Graph, source: str = "graph") -> dict:
    profile = structural_profile(g)
    report: dict = {
        "schema": SCHEMA,
        "source": source,
        "n": g.n,
        "edges": g.edge_count(),
        "regular_degree": profile.regular_degree,
        "connected": profile.connected,
        "bipartite": profile.bipartite,
        "triangles": profile.triangle_count,
        "components": profile.component_count,
    }

    spec = None
    try:
        spec = exact_spectrum(g)
        report["spectrum"] = spec.to_json()
        report["spectrum_text"] = str(spec)
        report["spectrum_error"] = None
        report["distinct_eigenvalues"] = spec.distinct_count()
        report["distinct_abs_values"] = spec.distinct_abs_count()
    except NonQuadraticSpectrumError as exc:
        report["spectrum"] = None
        report["spectrum_text"] = None
        report["spectrum_error"] = str(exc)
        report["distinct_eigenvalues"] = None
        report["distinct_abs_values"] = None

    params = deza_mod.detect_deza(g)
    report["deza"] = None if params is None else {
        "n": params.n, "k": params.k, "b": params.b, "a": params.a
    }
    srg = deza_mod.detect_srg(g)
    report["srg"] = None if srg is None else {
        "n": srg.n, "k": srg.k, "lambda": srg.lam, "mu": srg.mu
    }

    report["strongly_deza"] = None
    report["ddg"] = None
    if params is not None and params.b > params.a:
        sd = deza_mod.is_strongly_deza(g)
        entry: dict = {
            "verdict": sd.verdict,
            "child_a_srg": None if sd.child_a_srg is None else list(sd.child_a_srg.as_tuple()),
            "child_b_srg": None if sd.child_b_srg is None else list(sd.child_b_srg.as_tuple()),
            "child_a_spectrum": None,
            "child_b_spectrum": None,
            "formula_spectra_match": None,
        }
        if spec is not None:
            pair = deza_mod.children(g, params)
            formula_a, formula_b = deza_mod.child_spectra_formula(spec, params)
            direct_a = exact_spectrum(pair.child_a)
            direct_b = exact_spectrum(pair.child_b)
            entry["child_a_spectrum"] = direct_a.to_json()
            entry["child_b_spectrum"] = direct_b.to_json()
            entry["formula_spectra_match"] = (
                formula_a == direct_a and formula_b == direct_b
            )
        report["strongly_deza"] = entry
        ddg = deza_mod.is_divisible_design(g)
        report["ddg"] = None if ddg is None else {
            "v": ddg.v, "k": ddg.k, "lambda1": ddg.lam1,
            "lambda2": ddg.lam2, "m": ddg.m, "n": ddg.n,
        }

    dr_entry = None
    if profile.connected:
        array, witness = distreg.intersection_numbers(g)
        if array is None:
            dr_entry = {"is_drg": False, "witness_pair": list(witness)}
        else:
            dr_entry = {
                "is_drg": True,
                "diameter": array.d,
                "b": list(array.b),
                "c": list(array.c),
                "a": list(array.a),
                "k_i": list(array.k_i),
                "antipodal": distreg.is_antipodal(g, array),
            }
            if array.d >= 3:
                dr_entry["deza_case"] = _case_dict(
                    _attempt(distreg.drg_deza_classification, g, array)
                )
        if report["ddg"] is not None:
            dr_entry["ddg_case"] = _case_dict(
                _attempt(distreg.ddg_drg_classification, g)
            )
    report["distance_regular"] = dr_entry

    checks: dict = {}
    if spec is not None:
        outcome = _attempt(theorems.check_trace_identity, spec)
        if isinstance(outcome, dict):
            checks["trace_identity"] = outcome
        else:
            checks["trace_identity"] = {
                "holds": outcome.holds,
                "theta2": str(outcome.theta2), "m2": outcome.m2, "m5": outcome.m5,
                "theta3": str(outcome.theta3), "m3": outcome.m3, "m4": outcome.m4,
            }
        checks["singular"] = _singular_dict(_attempt(theorems.singular_check, spec))
        if params is not None:
            if spec.distinct_count() <= 5:
                checks["eigenvalue_count"] = _case_dict(
                    _attempt(theorems.classify_eigenvalue_count, g)
                )
            else:
                # more than five distinct values already rules strongly
                # Deza out; the classifier's precondition is not met
                checks["eigenvalue_count"] = {
                    "skipped": f"{spec.distinct_count()} distinct eigenvalues"
                }
            if params.b > params.a:
                checks["last_case"] = _case_dict(
                    _attempt(theorems.classify_last_case, spec, params)
                )
                sd = deza_mod.is_strongly_deza(g)
                if sd.verdict and sd.child_a_srg is not None:
                    if spec.distinct_count() >= 4:
                        checks["square_case"] = _case_dict(
                            _attempt(
                                theorems.classify_square_case, spec, params, sd.child_a_srg
                            )
                        )
                    else:
                        # strongly regular degenerations sit outside the
                        # paired-eigenvalue regime the trichotomy addresses
                        checks["square_case"] = {
                            "skipped": "fewer than four distinct eigenvalues"
                        }
                witness = _attempt(theorems.strongly_deza_witness, g)
                if isinstance(witness, dict):
                    checks["witness"] = witness
                else:
                    checks["witness"] = {
                        "branch": witness.branch,
                        "bipartite": witness.bipartite,
                        "child_b_components": witness.child_b_components,
                        "halved": None if witness.halved is None else list(witness.halved),
                    }
    report["theorems"] = checks
    return report


def _singular_dict(outcome) -> dict:
    if isinstance(outcome, dict):
        return outcome
    return {
        "singular": outcome.singular,
        "integral": outcome.integral,
        "distinct": outcome.distinct,
        "four_distinct": outcome.four_distinct,
    }


def report_inconsistencies(report: dict) -> list[str]:
    """Reportable internal inconsistencies: a false formula-vs-direct match
    flag or any recorded contradiction.  Always empty on healthy inputs."""
    issues = []
    sd = report.get("strongly_deza")
    if sd and sd.get("formula_spectra_match") is False:
        issues.append("child spectra formula disagrees with constructed children")
    def walk(node, path):
        if isinstance(node, dict):
            if "contradiction" in node:
                issues.append(f"{path}: {node['contradiction']}")
            for key, value in node.items():
                walk(value, f"{path}.{key}" if path else key)
    walk(report, "")
    return issues


def render_text(report: dict) -> str:
    """Human-readable one-graph summary."""
    lines = [f"== {report['source']}"]
    degree = report["regular_degree"]
    lines.append(
        f"n={report['n']} edges={report['edges']} "
        + (f"{degree}-regular" if degree is not None else "irregular")
        + f" connected={report['connected']} bipartite={report['bipartite']}"
        + f" triangles={report['triangles']}"
    )
    if report["spectrum_error"]:
        lines.append(f"spectrum: ERROR {report['spectrum_error']}")
    else:
        lines.append(
            f"spectrum: {report['spectrum_text']}  "
            f"(distinct {report['distinct_eigenvalues']}, "
            f"abs {report['distinct_abs_values']})"
        )
    deza = report["deza"]
    srg = report["srg"]
    lines.append(
        "deza: " + (f"({deza['n']},{deza['k']},{deza['b']},{deza['a']})" if deza else "no")
        + "   srg: " + (f"({srg['n']},{srg['k']},{srg['lambda']},{srg['mu']})" if srg else "no")
    )
    sd = report["strongly_deza"]
    if sd:
        lines.append(
            f"strongly Deza: {sd['verdict']}"
            + (f"  child A SRG {sd['child_a_srg']}" if sd["child_a_srg"] else "")
            + (f"  child B SRG {sd['child_b_srg']}" if sd["child_b_srg"] else "")
            + (
                f"  formula/direct match: {sd['formula_spectra_match']}"
                if sd["formula_spectra_match"] is not None
                else ""
            )
        )
    if report["ddg"]:
        d = report["ddg"]
        lines.append(
            f"divisible design: (v={d['v']},k={d['k']},l1={d['lambda1']},"
            f"l2={d['lambda2']},m={d['m']},n={d['n']})"
        )
    dr = report["distance_regular"]
    if dr and dr.get("is_drg"):
        lines.append(
            "distance-regular: {" + ",".join(map(str, dr["b"])) + ";"
            + ",".join(map(str, dr["c"])) + "}"
            + f" antipodal={dr['antipodal']}"
            + (f" case={dr['deza_case'].get('case')}" if "deza_case" in dr else "")
            + (f" ddg-case={dr['ddg_case'].get('case')}" if "ddg_case" in dr else "")
        )
    elif dr and "ddg_case" in dr:
        lines.append(f"distance-regular: no  ddg-case={dr['ddg_case'].get('case')}")
    for name, entry in report.get("theorems", {}).items():
        if "skipped" in entry:
            continue
        lines.append(f"{name}: " + json.dumps(entry, sort_keys=False))
    return "\n".join(lines)


def matches_expectation(report: dict, expected: dict) -> list[str]:
    """Recursive subset comparison; returns human-readable mismatches."""
    problems: list[str] = []

    def walk(exp, got, path):
        if isinstance(exp, dict) and isinstance(got, dict):
            for key, value in exp.items():
                if key not in got:
                    problems.append(f"{path}.{key}: missing")
                else:
                    walk(value, got[key], f"{path}.{key}")
        elif exp != got:
            problems.append(f"{path}: expected {exp!r}, got {got!r}")

    walk(expected, report, report.get("source", "report"))
    return problems
