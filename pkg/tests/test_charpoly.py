"""Exact characteristic polynomials against an independent determinant."""

import random

import pytest

from conftest import random_graph
from dezakit import families
from dezakit.charpoly import CharPoly, char_poly, poly_divmod_monic, poly_eval, poly_mul, poly_try_divide
from dezakit.verify import bareiss_determinant


def test_small_examples():
    assert char_poly(families.complete(2)).coeffs == (-1, 0, 1)
    assert char_poly(families.complete(3)).coeffs == (-2, -3, 0, 1)
    # (x-2)(x^2+x-1)^2 expanded
    assert char_poly(families.cycle(5)).coeffs == (-2, 5, 0, -5, 0, 1)


def test_str():
    assert str(char_poly(families.cycle(5))) == "x^5 - 5x^3 + 5x - 2"
    assert str(char_poly(families.complete(2))) == "x^2 - 1"


def test_validation():
    with pytest.raises(ValueError, match="monic"):
        CharPoly((1, 2))
    with pytest.raises(ValueError, match="traceless"):
        CharPoly((0, 1, 1))


def test_edge_count_coefficient():
    # coefficient of x^(n-2) equals minus the number of edges
    rng = random.Random(31)
    for _ in range(10):
        g = random_graph(rng, rng.randint(3, 14))
        assert char_poly(g).coeffs[g.n - 2] == -g.edge_count()


def test_matches_bareiss_determinant():
    rng = random.Random(13)
    for _ in range(8):
        g = random_graph(rng, rng.randint(2, 12))
        cp = char_poly(g)
        for x in (-3, -1, 0, 2, 5):
            xi_minus_m = [
                [x * (i == j) - int(g.adj[i, j]) for j in range(g.n)]
                for i in range(g.n)
            ]
            assert cp(x) == bareiss_determinant(xi_minus_m)


def test_poly_helpers():
    a = poly_mul((1, 1), (-1, 1))  # (x+1)(x-1) = x^2 - 1
    assert a == (-1, 0, 1)
    quot, rem = poly_divmod_monic((-1, 0, 1), (1, 1))
    assert quot == (-1, 1) and rem == (0,)
    assert poly_try_divide((-1, 0, 1), (2, 1)) is None
    assert poly_try_divide((-1, 0, 1), (-1, 1)) == (1, 1)
    assert poly_eval((1, 2, 3), 10) == 321
    with pytest.raises(ValueError, match="monic"):
        poly_divmod_monic((1, 1), (1, 2))
