"""Exact spectra: frozen examples, invariants, numeric cross-validation."""

import random

import numpy as np
import pytest

from conftest import random_graph
from dezakit import families
from dezakit.eigenvalues import Eigenvalue, Spectrum
from dezakit.graphs import disjoint_union
from dezakit.spectra import (
    NonQuadraticSpectrumError,
    distinct_abs_values,
    exact_spectrum,
    is_cospectral,
    spectrum_from_pairs,
)


def _spec(pairs):
    return Spectrum([(ev, m) for ev, m in pairs])


def test_c5_golden_ratio(c5):
    golden_plus = Eigenvalue.quadratic(-1, 1, 5, 2)
    assert exact_spectrum(c5) == _spec(
        [(Eigenvalue.integer(2), 1), (golden_plus, 2), (golden_plus.conjugate(), 2)]
    )


def test_petersen(petersen):
    assert exact_spectrum(petersen) == _spec(
        [(Eigenvalue.integer(3), 1), (Eigenvalue.integer(1), 5), (Eigenvalue.integer(-2), 4)]
    )


def test_icosahedron(icosahedron):
    root5 = Eigenvalue.sqrt_pair(5)[0]
    assert exact_spectrum(icosahedron) == _spec(
        [(Eigenvalue.integer(5), 1), (root5, 3), (Eigenvalue.integer(-1), 5), (-root5, 3)]
    )


def test_bipartite_examples(heawood, c6):
    root2 = Eigenvalue.sqrt_pair(2)[0]
    assert exact_spectrum(heawood) == _spec(
        [(Eigenvalue.integer(3), 1), (root2, 6), (-root2, 6), (Eigenvalue.integer(-3), 1)]
    )
    assert exact_spectrum(families.complete_multipartite([3, 3])) == _spec(
        [(Eigenvalue.integer(3), 1), (Eigenvalue.integer(0), 4), (Eigenvalue.integer(-3), 1)]
    )
    assert exact_spectrum(c6) == _spec(
        [(Eigenvalue.integer(2), 1), (Eigenvalue.integer(1), 2),
         (Eigenvalue.integer(-1), 2), (Eigenvalue.integer(-2), 1)]
    )


def test_disconnected_multiplicity_of_degree():
    g = families.disjoint_cliques(3, 4)
    spec = exact_spectrum(g)
    assert spec.multiplicity(Eigenvalue.integer(3)) == 3
    assert spec.multiplicity(Eigenvalue.integer(-1)) == 9


def test_mixed_radicals():
    # P3 has eigenvalues 0, +-sqrt(2); P4 has +-(1+-sqrt(5))/2
    from dezakit.graphs import Graph

    path3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    union = disjoint_union([path3, path4])
    spec = exact_spectrum(union)
    assert spec.n == 7
    assert spec.multiplicity(Eigenvalue.sqrt_pair(2)[0]) == 1
    assert spec.multiplicity(Eigenvalue.quadratic(1, 1, 5, 2)) == 1
    assert spec.sum_of_squares() == 2 * union.edge_count()


def test_c7_non_quadratic(c7):
    with pytest.raises(NonQuadraticSpectrumError) as info:
        exact_spectrum(c7)
    assert len(info.value.residual) - 1 == 6


def test_numeric_cross_validation(petersen, heawood, icosahedron, johnson63, taylor13, klein24):
    for g in (petersen, heawood, icosahedron, johnson63, taylor13, klein24):
        numeric = np.linalg.eigvalsh(g.adj.astype(float))
        exact = sorted(
            float(ev) for ev, m in exact_spectrum(g) for _ in range(m)
        )
        assert np.allclose(numeric, exact, atol=1e-9)


def test_random_graphs_reconstruct():
    rng = random.Random(41)
    for _ in range(12):
        g = random_graph(rng, rng.randint(1, 12))
        try:
            spec = exact_spectrum(g)
        except NonQuadraticSpectrumError:
            continue
        assert spec.n == g.n
        assert spec.sum_of_squares() == 2 * g.edge_count()


def test_larger_johnson_instance():
    # J(9,3): the four Johnson eigenvalues (3-j)(6-j) - j at binomial
    # multiplicities; exercises the integer scan at n = 84
    spec = exact_spectrum(families.johnson(9, 3))
    assert spec.to_json() == [
        {"value": "18", "mult": 1},
        {"value": "9", "mult": 8},
        {"value": "2", "mult": 27},
        {"value": "-3", "mult": 48},
    ]


def test_conference_paley_61():
    spec = exact_spectrum(families.paley(61))
    assert spec.multiplicity(Eigenvalue.quadratic(-1, 1, 61, 2)) == 30


def test_distinct_abs_values(petersen):
    spec = _spec([(Eigenvalue.integer(6), 1), (Eigenvalue.integer(2), 3),
                  (Eigenvalue.integer(0), 2), (Eigenvalue.integer(-2), 6)])
    assert distinct_abs_values(spec) == 3
    assert distinct_abs_values(exact_spectrum(petersen)) == 3
    assert distinct_abs_values(exact_spectrum(families.complete(2))) == 1


def test_is_cospectral(icosahedron, c6):
    assert is_cospectral(exact_spectrum(icosahedron), exact_spectrum(icosahedron))
    k33 = families.complete_multipartite([3, 3])
    assert not is_cospectral(exact_spectrum(k33), exact_spectrum(c6))
    # same multiplicity multisets {1,5,4} vs {1,4,5}, different eigenvalues
    pet = exact_spectrum(families.petersen())
    k2x5 = exact_spectrum(families.complete_multipartite([2] * 5))
    assert sorted(m for _, m in pet) == sorted(m for _, m in k2x5)
    assert not is_cospectral(pet, k2x5)


def test_spectrum_from_pairs_merges():
    spec = spectrum_from_pairs(
        [(Eigenvalue.integer(1), 1), (Eigenvalue.integer(1), 2),
         (Eigenvalue.integer(-1), 3), (Eigenvalue.integer(5), 0)]
    )
    assert spec.multiplicity(Eigenvalue.integer(1)) == 3
    assert spec.multiplicity(Eigenvalue.integer(5)) == 0
