import random
from fractions import Fraction

import pytest

from lexvanish.errors import DimensionError, ValidationError
from lexvanish.lowerset import LowerSet
from lexvanish.poly import Polynomial, normal_form, render_polynomial
from lexvanish.vanishing import (
    Instance,
    PointWithStructure,
    combine_fibres,
    glp,
    solve,
    solve_special,
    solve_univariate,
    split_fibres,
)
from lexvanish.verify import verify_solution

from oracles import (
    D_DOUBLE_PRIME,
    D_FULL,
    D_PRIME,
    F1,
    F2,
    F3,
    FIBRE1_PAIRS,
    FIBRE2_PAIRS,
    G1,
    G2,
    G3_UNREDUCED,
    G4_UNREDUCED,
    H1,
    H2,
    X1,
    X2,
    greedy_quotient,
    instance_stream,
    interpolation_basis,
    example_instance,
)


def rendered(polys):
    return sorted(render_polynomial(g) for g in polys)


# -- instance validation ---------------------------------------------------


def test_instance_rejects_empty():
    with pytest.raises(ValidationError):
        Instance([])


def test_instance_rejects_duplicate_points():
    with pytest.raises(ValidationError):
        Instance.from_pairs([((1, 1), [(0, 0)]), ((1, 1), [(0, 0), (1, 0)])])


def test_instance_rejects_dimension_mismatch():
    with pytest.raises(DimensionError):
        Instance.from_pairs([((1, 1), [(0, 0)]), ((1, 1, 1), [(0, 0, 0)])])


def test_structure_must_be_lower_set():
    with pytest.raises(ValidationError):
        PointWithStructure((0, 0), [(1, 0)])


def test_instance_counts_functionals():
    H = example_instance()
    assert H.m == 9
    assert len(H.functionals()) == 9


# -- univariate ------------------------------------------------------------


def test_univariate_product_of_powers():
    H = Instance.from_pairs([((1,), [(0,), (1,)]), ((Fraction(-1, 2),), [(0,)])])
    s = solve_univariate(H)
    x = Polynomial.variable(0, 1)
    assert s.basis == ((x - 1) ** 2 * (x + Fraction(1, 2)),)
    assert s.quotient == {(0,), (1,), (2,)}


def test_univariate_needs_dimension_one():
    with pytest.raises(DimensionError):
        solve_univariate(example_instance())


# -- single fibre ----------------------------------------------------------


def test_fibre_one():
    s = solve_special(Instance.from_pairs(FIBRE1_PAIRS), 1)
    assert s.quotient == D_PRIME
    assert rendered(s.basis) == rendered([F1, F2, F3])
    assert all(g.lead_coef == 1 for g in s.basis)


def test_fibre_two():
    s = solve_special(Instance.from_pairs(FIBRE2_PAIRS), 2)
    assert s.quotient == D_DOUBLE_PRIME
    assert rendered(s.basis) == rendered([H1, H2])


def test_special_rejects_mixed_levels():
    with pytest.raises(ValidationError):
        solve_special(example_instance())


def test_special_with_vertical_structure():
    # structure {1, x2, x2^2} at the origin: ideal <x1, x2^3>
    H = Instance.from_pairs([((0, 0), [(0, 0), (0, 1), (0, 2)])])
    s = solve_special(H)
    assert rendered(s.basis) == rendered([X1, X2**3])


def test_split_fibres_orders_by_level():
    fibres = split_fibres(example_instance())
    assert [f.level for f in fibres] == [1, 2]
    assert [f.w for f in fibres] == [1, 0]
    assert [len(f.items) for f in fibres] == [2, 1]


# -- GLP -------------------------------------------------------------------


def test_glp_examples():
    assert glp((3, 1), LowerSet(D_PRIME), [F1, F2, F3]) == F2
    assert glp((3, 1), LowerSet(D_DOUBLE_PRIME), [H1, H2]) == X1**3
    # glt drops (0, 3) to (0, 2), the lead of F1 itself
    assert glp((0, 3), LowerSet(D_PRIME), [F1, F2, F3]) == F1
    assert glp((2, 2), LowerSet(D_DOUBLE_PRIME), [H1, H2]) == X1**2


# -- the full example ------------------------------------------------------


@pytest.mark.parametrize("method", ["simplified", "original"])
def test_full_example(method):
    s = solve(example_instance(), method=method)
    assert s.quotient == D_FULL
    assert sorted(s.leading_exps) == [(0, 3), (2, 2), (3, 1), (4, 0)]
    by_lead = {g.lead_exp: g for g in s.basis}
    assert by_lead[(0, 3)] == G1
    assert by_lead[(2, 2)] == G2
    assert by_lead[(3, 1)] == normal_form(G3_UNREDUCED, [G1, G2])
    assert by_lead[(4, 0)] == normal_form(G4_UNREDUCED, [G1, G2, by_lead[(3, 1)]])


def test_full_example_matches_interpolation_oracle():
    H = example_instance()
    s = solve(H)
    assert greedy_quotient(H) == s.quotient.elements
    assert rendered(interpolation_basis(H, s.quotient)) == rendered(s.basis)


def test_combine_rejects_repeated_levels():
    H = Instance.from_pairs(FIBRE2_PAIRS)
    f = split_fibres(H)[0]
    sol = solve_special(H)
    with pytest.raises(ValidationError):
        combine_fibres([f, f], [sol, sol])


def test_combine_rejects_unknown_method():
    with pytest.raises(ValueError):
        solve(example_instance(), method="fast")


def test_point_order_does_not_matter():
    pairs = [((1, 1), [(0, 0)]), ((2, 3), [(0, 0), (1, 0)]), ((0, 2), [(0, 0), (0, 1)])]
    ref = solve(Instance.from_pairs(pairs))
    for _ in range(5):
        random.shuffle(pairs)
        assert solve(Instance.from_pairs(pairs)).basis == ref.basis


# -- randomized against the oracles ---------------------------------------


@pytest.mark.parametrize("seed", range(3))
def test_random_instances_match_oracles(seed):
    for H in instance_stream(1000 + seed, 15, max_m=8):
        s = solve(H)
        report = verify_solution(s.basis, s.quotient, H)
        assert report.overall, report.render_text()
        assert greedy_quotient(H) == s.quotient.elements
        assert rendered(interpolation_basis(H, s.quotient)) == rendered(s.basis)


def test_three_dimensional_example():
    H = Instance.from_pairs(
        [
            ((0, 0, 0), [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
            ((1, 2, 0), [(0, 0, 0)]),
            ((1, 0, 5), [(0, 0, 0), (1, 0, 0)]),
        ]
    )
    s = solve(H)
    assert len(s.quotient) == 7
    assert verify_solution(s.basis, s.quotient, H).overall
    assert rendered(s.basis) == rendered(solve(H, method="original").basis)
