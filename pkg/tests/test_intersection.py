import logging
import random

import pytest

from lexvanish.errors import DimensionError, PreconditionError, ValidationError
from lexvanish.intersection import ReducedBasis, gp, intersect, p0, quotient_basis, standard_monomials
from lexvanish.poly import Polynomial, lc_n, normal_form
from lexvanish.unipoly import UniPoly
from lexvanish.vanishing import Instance, solve

from oracles import (
    D_DOUBLE_PRIME,
    D_PRIME,
    F1,
    F2,
    F3,
    FIBRE1_PAIRS,
    FIBRE2_PAIRS,
    H1,
    H2,
    X1,
    X2,
    disjoint_pair,
    example_instance,
)

BASIS1 = ReducedBasis([F1, F2, F3], provenance="points")
BASIS2 = ReducedBasis([H1, H2], provenance="points")


def point_basis(*coords):
    n = len(coords)
    xs = Polynomial.variables(n)
    return ReducedBasis([x - c for x, c in zip(xs, coords)], provenance="points")


def test_p0_examples():
    assert p0(BASIS1) == UniPoly.from_polynomial(F1)
    assert p0(BASIS2) == UniPoly.linear(2, 1)
    assert p0(point_basis(3, 4, 5)) == UniPoly.linear(5, 2)


def test_quotient_examples():
    assert quotient_basis(BASIS1) == D_PRIME
    assert quotient_basis(BASIS2) == D_DOUBLE_PRIME
    assert quotient_basis(point_basis(1, 7)) == {(0, 0)}


def test_standard_monomials_infinite():
    with pytest.raises(ValidationError, match="infinite"):
        standard_monomials([X1 * X2, X2**2], 2)


def test_reduced_basis_validation():
    with pytest.raises(ValidationError, match="monic"):
        ReducedBasis([2 * X1, X2])
    with pytest.raises(ValidationError, match="not reduced"):
        ReducedBasis([X1 + X2, X2])
    with pytest.raises(ValidationError, match="limiting set"):
        ReducedBasis([X1**2, X1 * X2, X2**2, X2 * X1**2])


def test_gp_examples():
    assert gp((3, 1), BASIS1) == F2
    assert gp((3, 1), BASIS2) == X1**3
    for g in BASIS1:
        assert gp(g.lead_exp, BASIS1) == g
    with pytest.raises(ValidationError):
        gp((1, 1), BASIS1)


def test_intersect_example_equals_joint_solve():
    G = intersect(BASIS1, BASIS2)
    assert G.basis == solve(example_instance()).basis
    assert sorted(g.lead_exp for g in G) == [(0, 3), (2, 2), (3, 1), (4, 0)]


def test_intersect_with_self_is_rejected():
    with pytest.raises(PreconditionError, match="coprime"):
        intersect(BASIS1, BASIS1)


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionError):
        intersect(BASIS1, point_basis(1, 2, 3))


def test_two_points():
    G = intersect(point_basis(1, 1), point_basis(2, 2))
    H = Instance.from_pairs([((1, 1), [(0, 0)]), ((2, 2), [(0, 0)])])
    assert G.basis == solve(H).basis
    assert [str(g) for g in G] == ["x2^2 - 3*x2 + 2", "x1 - x2"]


def test_unknown_provenance_warns(caplog):
    with caplog.at_level(logging.WARNING):
        G = intersect(ReducedBasis([F1, F2, F3]), BASIS2)
    assert "provenance" in caplog.text
    assert G.provenance is None


def test_intersection_properties_on_random_pairs():
    rng = random.Random(7)
    for _ in range(15):
        A, B, H = disjoint_pair(rng, rng.choice((1, 2, 3)), max_m=8)
        G1_ = ReducedBasis.from_solved(solve(A))
        G2_ = ReducedBasis.from_solved(solve(B))
        G = intersect(G1_, G2_)
        for g in G:
            assert normal_form(g, G1_.basis).is_zero()
            assert normal_form(g, G2_.basis).is_zero()
            assert (G.p0 % lc_n(g)).is_zero()
        assert len(G.quotient) == len(G1_.quotient) + len(G2_.quotient)
        assert G.basis == solve(H).basis


def test_leading_coefficients_divide_p0_on_inputs():
    for G in (BASIS1, BASIS2, point_basis(1, 2)):
        for g in G:
            assert (G.p0 % lc_n(g)).is_zero()


def test_fibre_bases_round_trip():
    assert ReducedBasis.from_solved(solve(Instance.from_pairs(FIBRE1_PAIRS))) == BASIS1
    assert ReducedBasis.from_solved(solve(Instance.from_pairs(FIBRE2_PAIRS))) == BASIS2
