"""The built-in reproduction suite.

Every check evaluates a concrete identity or classification on a concrete
graph with pinned expected values and exact comparisons (no tolerances
anywhere).  Checks 1..15 are the release gate; the S-rows exercise the
remaining classifiers over the same corpus.  `dezakit verify-paper` prints
one row per check and fails if any row fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache

from . import deza as deza_mod
from . import distreg
from . import families
from . import graphs as graphs_mod
from . import spectra as spectra_mod
from . import theorems
from .charpoly import char_poly, poly_eval
from .eigenvalues import Eigenvalue, Spectrum
from .errors import SpectrumShapeError
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, bipartite_double, disjoint_union, line_graph


@dataclass(frozen=True)
class CheckRow:
    criterion: str
    name: str
    expected: str
    actual: str
    passed: bool


def _row(criterion: str, name: str, expected, actual) -> CheckRow:
    passed = expected == actual
    return CheckRow(criterion, name, str(expected), str(actual), passed)


def bareiss_determinant(matrix) -> int:
    """Fraction-free exact determinant of an integer matrix (the
    independent oracle for characteristic-polynomial evaluations)."""
    m = [[int(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# corpus


@cache
def corpus() -> dict[str, Graph]:
    """Every named asset used by the checks, keyed deterministically."""
    rook = line_graph(families.complete_multipartite([4, 4]))
    out = {
        "octahedron-line-graph": families.octahedron_line_graph(),
        "heawood": families.heawood(),
        "icosahedron": families.icosahedron(),
        "line-petersen": line_graph(families.petersen()),
        "johnson-6-3": families.johnson(6, 3),
        "klein24": families.bundled_graph("klein24"),
        "taylor-paley-13": families.taylor_double_cover(families.paley(13)),
        "biplane-11": families.biplane11(),
        "cube": families.trivial_design_incidence(3),
        "taylor-c5": families.taylor_double_cover(families.cycle(5)),
        "taylor-paley-9": families.taylor_double_cover(families.paley(9)),
        "petersen": families.petersen(),
        "paley-13": families.paley(13),
        "paley-9": families.paley(9),
        "c5": families.cycle(5),
        "c6": families.cycle(6),
        "c7": families.cycle(7),
        "k444": families.complete_multipartite([4, 4, 4]),
        "k33": families.complete_multipartite([3, 3]),
        "3k4": families.disjoint_cliques(3, 4),
        "2k7": families.disjoint_cliques(2, 7),
        "2k33": disjoint_union([families.complete_multipartite([3, 3])] * 2),
        "2rook4": disjoint_union([rook, rook]),
        "johnson-7-3": families.johnson(7, 3),
        "desargues": bipartite_double(families.petersen()),
    }
    return out


#: the strongly Deza assets in the shape the spectral theorems address
#: (connected, at least four distinct eigenvalues)
THEOREM_CORPUS = (
    "octahedron-line-graph",
    "heawood",
    "icosahedron",
    "line-petersen",
    "johnson-6-3",
    "klein24",
    "taylor-paley-13",
    "biplane-11",
    "cube",
)

#: Deza assets with b > a whose spectra are exactly representable
CHILD_FORMULA_CORPUS = THEOREM_CORPUS + (
    "taylor-c5",
    "taylor-paley-9",
    "petersen",
    "paley-13",
    "paley-9",
    "c5",
    "c6",
    "k444",
    "k33",
    "3k4",
    "2k7",
    "2k33",
    "2rook4",
)

#: distance-regular assets of diameter >= 3 for the a1/c2 biconditional
DRG_CORPUS = (
    "c6",
    "c7",
    "cube",
    "heawood",
    "icosahedron",
    "line-petersen",
    "johnson-6-3",
    "johnson-7-3",
    "klein24",
    "taylor-paley-13",
    "desargues",
)

#: cospectral-mate counts reported in the literature; recorded only, the
#: enumeration behind them is far beyond desk scale
COSPECTRAL_COUNTS_UNVERIFIED = {
    "icosahedron": "1",
    "line-petersen": "1",
    "johnson-6-3": "6",
    "klein24": "10",
    "taylor-paley-13": ">=1173",
}


def _spec(values) -> Spectrum:
    return Spectrum(values)


def _int(z: int) -> Eigenvalue:
    return Eigenvalue.integer(z)


def _root(m: int) -> Eigenvalue:
    return Eigenvalue.sqrt_pair(m)[0]


TABLE1_SPECTRA = {
    "icosahedron": [(_int(5), 1), (_root(5), 3), (_int(-1), 5), (-_root(5), 3)],
    "line-petersen": [(_int(4), 1), (_int(2), 5), (_int(-1), 4), (_int(-2), 5)],
    "johnson-6-3": [(_int(9), 1), (_int(3), 5), (_int(-1), 9), (_int(-3), 5)],
    "klein24": [(_int(7), 1), (_root(7), 8), (_int(-1), 7), (-_root(7), 8)],
    "taylor-paley-13": [(_int(13), 1), (_root(13), 7), (_int(-1), 13), (-_root(13), 7)],
}


# ---------------------------------------------------------------------------
# the fifteen gate criteria


def criterion_1() -> list[CheckRow]:
    g = corpus()["octahedron-line-graph"]
    params = deza_mod.detect_deza(g)
    expected_spec = _spec([(_int(6), 1), (_int(2), 3), (_int(0), 2), (_int(-2), 6)])
    return [
        _row("1", "octahedron-line-graph deza parameters", (12, 6, 3, 2), params.as_tuple()),
        _row("1", "octahedron-line-graph exact spectrum", expected_spec,
             spectra_mod.exact_spectrum(g)),
    ]


def criterion_2() -> list[CheckRow]:
    rows = []
    for name, entries in TABLE1_SPECTRA.items():
        g = corpus()[name]
        ia = distreg.intersection_array(g)
        rows.append(_row("2", f"{name} distance-regular d=3",
                         True, ia is not None and ia.d == 3))
        rows.append(_row("2", f"{name} a1 = c2", True,
                         ia is not None and ia.a[0] == ia.c[1]))
        rows.append(_row("2", f"{name} strongly Deza", True,
                         deza_mod.is_strongly_deza(g).verdict))
        rows.append(_row("2", f"{name} spectrum", _spec(entries),
                         spectra_mod.exact_spectrum(g)))
    return rows


def criterion_3() -> list[CheckRow]:
    rows = []
    for name in CHILD_FORMULA_CORPUS:
        g = corpus()[name]
        rows.append(_row("3", f"{name} child spectra formula = construction",
                         True, deza_mod.verify_child_formula(g)))
    hw = corpus()["heawood"]
    formula_a, _ = deza_mod.child_spectra_formula(
        spectra_mod.exact_spectrum(hw), deza_mod.detect_deza(hw)
    )
    rows.append(_row("3", "heawood bipartite -k maps to one (-7)",
                     1, formula_a.multiplicity(_int(-7))))
    return rows


def criterion_4() -> list[CheckRow]:
    rows = []
    for name in ("petersen", "paley-13", "paley-9", "k444", "c5"):
        g = corpus()[name]
        params = deza_mod.detect_srg(g)
        rows.append(_row("4", f"{name} SRG parameters reproduce spectrum",
                         spectra_mod.exact_spectrum(g), theorems.srg_spectrum(params)))
    for name in ("paley-13", "c5"):
        eigen = theorems.srg_eigen(deza_mod.detect_srg(corpus()[name]))
        rows.append(_row("4", f"{name} conference case", False, eigen.r.is_integer))
    return rows


def criterion_5() -> list[CheckRow]:
    rows = []
    for name in THEOREM_CORPUS:
        spec = spectra_mod.exact_spectrum(corpus()[name])
        pairing = theorems.check_trace_identity(spec)
        rows.append(_row("5", f"{name} trace identity", True, pairing.holds))
    return rows


def criterion_6() -> list[CheckRow]:
    rows = []
    cases = [
        # name, (n, k, theta2, m2, m5), four_eig m2, expected positive root
        ("heawood", (14, 3, -3, 0, 1), 1, _root(2)),
        ("icosahedron", (12, 5, -1, 0, 5), 5, _root(5)),
        ("johnson-6-3", (20, 9, -1, 0, 9), 9, _int(3)),
        ("taylor-paley-13", (28, 13, -1, 0, 13), 13, _root(13)),
    ]
    for name, (n, k, th2, m2, m5), m2four, expected in cases:
        plus, minus = theorems.remaining_pair_five_eig(n, k, th2, m2, m5)
        rows.append(_row("6", f"{name} five-eigenvalue relation",
                         (expected, -expected), (plus, minus)))
        plus4, minus4 = theorems.remaining_pair_four_eig(n, k, th2, m2four)
        rows.append(_row("6", f"{name} four-eigenvalue relation",
                         (expected, -expected), (plus4, minus4)))
    return rows


def criterion_7() -> list[CheckRow]:
    rows = []
    expected_cases = {
        "octahedron-line-graph": "square-i",
        "icosahedron": "square-ii",
    }
    for name in THEOREM_CORPUS:
        g = corpus()[name]
        sd = deza_mod.is_strongly_deza(g)
        case = theorems.classify_square_case(
            spectra_mod.exact_spectrum(g), sd.params, sd.child_a_srg
        )
        rows.append(_row("7", f"{name} square trichotomy verifies",
                         True, case.case in ("square-i", "square-ii", "square-iii")))
        if name in expected_cases:
            rows.append(_row("7", f"{name} case label", expected_cases[name], case.case))
        if name == "icosahedron":
            rows.append(_row("7", "icosahedron pair multiplicity = half child mult = 3",
                             (3, 3), (case.witness["pair_mult"], case.witness["half_child_mult"])))
    return rows


def criterion_8() -> list[CheckRow]:
    rows = []
    singular_names = []
    for name in THEOREM_CORPUS:
        spec = spectra_mod.exact_spectrum(corpus()[name])
        res = theorems.singular_check(spec)
        if res.singular:
            singular_names.append(name)
            rows.append(_row("8", f"{name} singular: integral with 4 distinct",
                             (True, True), (res.integral, res.four_distinct)))
    rows.append(_row("8", "singular assets in the corpus",
                     ["octahedron-line-graph"], singular_names))
    return rows


def criterion_9() -> list[CheckRow]:
    rows = []
    expect = {
        "heawood": ("last-i", "√2", 6),
        "icosahedron": ("last-ii", "√5", 3),
        "johnson-6-3": ("last-ii", "3", 5),
    }
    for name, (label, theta3, m3) in expect.items():
        g = corpus()[name]
        case = theorems.classify_last_case(
            spectra_mod.exact_spectrum(g), deza_mod.detect_deza(g)
        )
        rows.append(_row("9", f"{name} final classification",
                         (label, theta3, m3),
                         (case.case, case.witness["theta3"], case.witness["m3"])))
    return rows


def criterion_10() -> list[CheckRow]:
    rows = []
    for q, t in ((2, 2), (3, 2), (2, 3), (4, 2), (3, 3)):
        fam = theorems.affine_family_params(q, t)
        rows.append(_row("10", f"affine family ({q},{t}) closure identities",
                         (q ** (2 * (t - 1)), fam.k_squared),
                         (fam.k_minus_lam1, fam.lam2_v)))
    fam22 = theorems.affine_family_params(2, 2)
    ddg = deza_mod.is_divisible_design(corpus()["octahedron-line-graph"])
    rows.append(_row("10", "affine (2,2) equals octahedron-line-graph DDG",
                     fam22.params.as_tuple(), ddg.as_tuple()))
    return rows


def criterion_11() -> list[CheckRow]:
    rows = []
    for q in (3, 4, 5):
        res = distreg.unitary_nonisotropics_check(q)
        rows.append(_row("11", f"unitary nonisotropics arithmetic q={q} (not constructed)",
                         q * q * (q * q - q + 1),
                         1 + res.mult_plus + q**3 + res.mult_minus))
    return rows


def criterion_12() -> list[CheckRow]:
    rows = []
    for name, value in (("icosahedron", 2), ("klein24", 2), ("taylor-paley-13", 6)):
        check = distreg.antipodal_from_spectrum(corpus()[name])
        rows.append(_row("12", f"{name} n | k^2-1 with a1 = c2 = (k^2-1)/n",
                         (True, value), (check.divides, check.a1c2)))
    return rows


def criterion_13() -> list[CheckRow]:
    rows = []
    for name in DRG_CORPUS:
        g = corpus()[name]
        ia = distreg.intersection_array(g)
        by_array = ia.a[0] == 0 or ia.a[0] == ia.c[1]
        by_counts = deza_mod.detect_deza(g) is not None
        rows.append(_row("13", f"{name} Deza iff a1 in {{0, c2}}", by_array, by_counts))
        if ia.d >= 3:
            case = distreg.drg_deza_classification(g, ia)
            rows.append(_row("13", f"{name} classification consistent",
                             True, case.case in ("deza-a1-zero", "deza-a1-eq-c2", "not-deza")))
    return rows


def criterion_14() -> list[CheckRow]:
    rows = []
    rng = random.Random(181181)
    failures = 0
    for _ in range(1000):
        n = rng.randint(1, 40)
        g6 = write_graph6(_random_graph(rng, n))
        if write_graph6(parse_graph6(g6)) != g6:
            failures += 1
    rows.append(_row("14", "graph6 round trip on 1000 random graphs", 0, failures))

    bad_traces = 0
    spectral_assets = 0
    for g in corpus().values():
        try:
            spec = spectra_mod.exact_spectrum(g)
        except spectra_mod.NonQuadraticSpectrumError:
            continue
        spectral_assets += 1
        if spec.sum_of_squares() != 2 * g.edge_count():
            bad_traces += 1
    rows.append(_row("14", f"trace and norm identities on all {spectral_assets} "
                     "spectral assets", 0, bad_traces))

    bad_evals = 0
    for g in corpus().values():
        cp = char_poly(g)
        for x in (-2, -1, 0, 1, 2):
            xi_minus_m = [
                [x * (1 if i == j else 0) - int(g.adj[i, j]) for j in range(g.n)]
                for i in range(g.n)
            ]
            if poly_eval(cp.coeffs, x) != bareiss_determinant(xi_minus_m):
                bad_evals += 1
    rows.append(_row("14", "char poly vs exact determinant at 5 points per asset",
                     0, bad_evals))
    return rows


def criterion_15() -> list[CheckRow]:
    rows = []
    pairs = (("taylor-c5", "icosahedron"), ("taylor-paley-9", "johnson-6-3"))
    for a, b in pairs:
        rows.append(_row("15", f"{a} cospectral with {b}", True,
                         spectra_mod.is_cospectral(
                             spectra_mod.exact_spectrum(corpus()[a]),
                             spectra_mod.exact_spectrum(corpus()[b]),
                         )))
    recorded = ", ".join(f"{k}:{v}" for k, v in COSPECTRAL_COUNTS_UNVERIFIED.items())
    rows.append(_row("15", f"cospectral-mate counts recorded unverified [{recorded}]",
                     True, True))
    return rows


def _random_graph(rng: random.Random, n: int) -> Graph:
    import numpy as np

    a = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                a[u, v] = a[v, u] = 1
    return Graph(a)


# ---------------------------------------------------------------------------
# supplementary rows: the remaining classifiers over the same corpus


def supplementary() -> list[CheckRow]:
    rows = []
    g = corpus()

    count_cases = {
        "3k4": "prop3-2eig",
        "2k33": "prop3-3eig-disconn",
        "2rook4": "prop3-3eig-disconn",
        "petersen": "prop3-3eig-srg",
        "k444": "prop3-3eig-srg",
        "octahedron-line-graph": "prop3-4eig",
        "taylor-paley-13": "prop3-4eig",
    }
    for name, label in count_cases.items():
        case = theorems.classify_eigenvalue_count(g[name])
        rows.append(_row("S", f"{name} eigenvalue-count case", label, case.case))

    witness_cases = {
        "octahedron-line-graph": "strongly-deza",
        "heawood": "strongly-deza",
        "c6": "strongly-deza",
        "desargues": "halved-strongly-deza",
    }
    for name, label in witness_cases.items():
        rows.append(_row("S", f"{name} spectral-characterisation branch",
                         label, theorems.strongly_deza_witness(g[name]).branch))

    ddg_cases = {
        "k444": "complete-multipartite",
        "heawood": "incidence-symmetric-design",
        "biplane-11": "incidence-symmetric-design",
        "icosahedron": "antipodal-d3-a1-eq-c2",
        "klein24": "antipodal-d3-a1-eq-c2",
        "octahedron-line-graph": "not-distance-regular",
    }
    for name, label in ddg_cases.items():
        rows.append(_row("S", f"{name} divisible-design classification",
                         label, distreg.ddg_drg_classification(g[name]).case))

    for name, expected in (("icosahedron", True), ("johnson-6-3", True), ("heawood", False)):
        ia = distreg.intersection_array(g[name])
        rows.append(_row("S", f"{name} antipodal", expected, distreg.is_antipodal(g[name], ia)))

    for pair in (("icosahedron", "taylor-c5"), ("johnson-6-3", "taylor-paley-9")):
        case = distreg.cosp_deza_check(g[pair[0]], g[pair[1]])
        rows.append(_row("S", f"cospectral Deza mate {pair[1]} of {pair[0]}",
                         "same-intersection-numbers", case.case))

    counts, constant = distreg.distance3_counts(g["icosahedron"])
    rows.append(_row("S", "icosahedron distance-3 counts constant 1",
                     (True, 1), (constant, counts[0])))

    for tup in distreg.FEASIBLE_UNBUILT:
        rows.append(_row("S", f"feasible unbuilt tuple {tup} arithmetic",
                         True, distreg.feasible_tuple_check(*tup)))

    try:
        theorems.check_trace_identity(spectra_mod.exact_spectrum(g["petersen"]))
        shape_error = False
    except SpectrumShapeError:
        shape_error = True
    rows.append(_row("S", "petersen trace identity raises the shape error",
                     True, shape_error))

    # non-integral corpus spectra must contain an opposite pair of equal
    # multiplicities (the remark after the four-eigenvalue theorem)
    for name in THEOREM_CORPUS:
        spec = spectra_mod.exact_spectrum(g[name])
        if spec.is_integral():
            continue
        has_balanced_pair = any(
            ev.sign() > 0 and spec.multiplicity(-ev) == m for ev, m in spec
        )
        rows.append(_row("S", f"{name} non-integral: an opposite pair balances",
                         True, has_balanced_pair))

    # children of each strongly Deza corpus asset: parameters recovered
    # from the child spectra match the combinatorial detector
    for name in THEOREM_CORPUS:
        pair = deza_mod.children(g[name], deza_mod.detect_deza(g[name]))
        agree = all(
            theorems.srg_params_from_spectrum(spectra_mod.exact_spectrum(child))
            == deza_mod.detect_srg(child)
            for child in (pair.child_a, pair.child_b)
        )
        rows.append(_row("S", f"{name} child parameters recoverable from spectra",
                         True, agree))

    # bipartiteness of a connected regular graph is equivalent to -k
    for name in THEOREM_CORPUS + ("petersen", "c5", "desargues"):
        asset = g[name]
        spec = spectra_mod.exact_spectrum(asset)
        minus_k = spec.multiplicity(Eigenvalue.integer(-asset.regular_degree())) > 0
        rows.append(_row("S", f"{name} bipartite iff -k in spectrum",
                         graphs_mod.is_bipartite(asset), minus_k))

    rows.append(_row("S", "non-quadratic spectrum detected on c7", True,
                     _c7_detects()))
    return rows


def _c7_detects() -> bool:
    try:
        spectra_mod.exact_spectrum(corpus()["c7"])
    except spectra_mod.NonQuadraticSpectrumError as exc:
        return len(exc.residual) - 1 == 6
    return False


def run_all() -> list[CheckRow]:
    rows: list[CheckRow] = []
    for fn in (
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
        criterion_11, criterion_12, criterion_13, criterion_14, criterion_15,
    ):
        rows.extend(fn())
    rows.extend(supplementary())
    return rows


def render_table(rows: list[CheckRow]) -> str:
    lines = []
    width = max(len(r.name) for r in rows)
    for row in rows:
        status = "PASS" if row.passed else "FAIL"
        line = f"{status}  [{row.criterion:>2}] {row.name:<{width}}"
        if not row.passed:
            line += f"  expected={row.expected} actual={row.actual}"
        lines.append(line)
    failed = sum(not r.passed for r in rows)
    lines.append(f"-- {len(rows) - failed}/{len(rows)} checks passed")
    return "\n".join(lines)
