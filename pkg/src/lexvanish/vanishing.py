"""Reduced lex Groebner basis and quotient basis of I(H) by induction on variables.

H is a list of points each carrying a lower-set multiplicity structure; every
element d of the structure at p stands for the functional f -> (d/dx)^d f(p).

The construction splits H into fibres sharing the last coordinate. A single
fibre is sliced by the last coordinate of its derivative orders into
(n-1)-dimensional problems which are solved recursively and stacked. Fibres
are then folded together one at a time: for each target leading term the two
partial solutions are multiplied by each other's univariate element and glued
with Bezout cofactors in the last variable.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, InvariantError, ValidationError
from .lowerset import LowerSet, add_lower_sets, embed, glt, proj_hat
from .poly import Functional, Polynomial, divides, lc_n, normal_form
from .unipoly import UniPoly, eea

__all__ = [
    "PointWithStructure",
    "Instance",
    "Fibre",
    "SolvedIdeal",
    "split_fibres",
    "solve_univariate",
    "solve_special",
    "glp",
    "combine_fibres",
    "solve",
    "univariate_element",
    "COMBINE_METHODS",
]

COMBINE_METHODS = ("simplified", "original")


@dataclass(frozen=True)
class PointWithStructure:
    point: tuple
    structure: LowerSet

    def __post_init__(self):
        point = tuple(Fraction(c) for c in self.point)
        object.__setattr__(self, "point", point)
        structure = self.structure
        if not isinstance(structure, LowerSet):
            structure = LowerSet(structure, len(point))
        object.__setattr__(self, "structure", structure)
        if len(structure) == 0:
            raise ValidationError(f"point {point} has an empty multiplicity structure")
        if structure.dim != len(point):
            raise DimensionError(
                f"structure of dimension {structure.dim} attached to point of dimension {len(point)}"
            )

    @property
    def multiplicity(self):
        return len(self.structure)

    def functionals(self):
        return [Functional(self.point, d) for d in self.structure]


class Instance:
    """A finite set of points with multiplicity structures in dimension ``dim``."""

    def __init__(self, items, dim=None):
        items = [
            it if isinstance(it, PointWithStructure) else PointWithStructure(*it) for it in items
        ]
        if not items:
            raise ValidationError("instance must contain at least one functional")
        if dim is None:
            dim = len(items[0].point)
        if dim < 1:
            raise ValidationError("dimension must be at least 1")
        seen = set()
        for it in items:
            if len(it.point) != dim:
                raise DimensionError(f"point {it.point} is not of dimension {dim}")
            if it.point in seen:
                raise ValidationError(f"duplicate point {_fmt_point(it.point)}")
            seen.add(it.point)
        self.dim = dim
        self.items = tuple(items)

    @classmethod
    def from_pairs(cls, pairs, dim=None):
        return cls([PointWithStructure(p, s) for p, s in pairs], dim)

    @property
    def m(self):
        return sum(it.multiplicity for it in self.items)

    def functionals(self):
        return [L for it in self.items for L in it.functionals()]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __repr__(self):
        return f"Instance(dim={self.dim}, points={len(self.items)}, m={self.m})"


def _fmt_point(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


@dataclass(frozen=True)
class Fibre:
    items: tuple
    level: Fraction
    w: int

    def instance(self):
        return Instance(self.items)


@dataclass(frozen=True)
class SolvedIdeal:
    quotient: LowerSet
    basis: tuple
    dim: int

    @property
    def leading_exps(self):
        return [g.lead_exp for g in self.basis]

    def p0(self):
        return univariate_element(self.basis)


def univariate_element(basis):
    """The basis element involving only the last variable, as a UniPoly."""
    for g in basis:
        if g.is_univariate_in(g.nvars - 1):
            return UniPoly.from_polynomial(g)
    raise ValidationError("no univariate element in the last variable: not zero-dimensional or not a reduced lex basis")


def split_fibres(H):
    """Partition H by the last coordinate of the points, in increasing level."""
    groups = defaultdict(list)
    for it in H.items:
        groups[it.point[-1]].append(it)
    fibres = []
    for level in sorted(groups):
        items = tuple(groups[level])
        w = max(d[-1] for it in items for d in it.structure)
        fibres.append(Fibre(items, level, w))
    return fibres


def solve_univariate(H):
    if H.dim != 1:
        raise DimensionError("solve_univariate needs a one-dimensional instance")
    x = Polynomial.variable(0, 1)
    f = Polynomial.constant(1, 1)
    for it in H.items:
        f = f * (x - it.point[0]) ** it.multiplicity
    quotient = LowerSet(((k,) for k in range(H.m)), 1, check=False)
    return SolvedIdeal(quotient, (f,), 1)


def solve_special(H, level=None, method="simplified"):
    """Solve an instance whose points all lie on the hyperplane X_n = level."""
    n = H.dim
    if n < 2:
        raise DimensionError("solve_special needs dimension >= 2")
    if level is None:
        level = H.items[0].point[-1]
    level = Fraction(level)
    if any(it.point[-1] != level for it in H.items):
        raise ValidationError("solve_special needs all points on the same last coordinate")
    w = max(d[-1] for it in H.items for d in it.structure)

    slices = []
    for i in range(w + 1):
        sub = []
        for it in H.items:
            layer = [d for d in it.structure if d[-1] == i]
            if layer:
                sub.append(PointWithStructure(it.point[:-1], LowerSet(proj_hat(layer), n - 1)))
        slices.append(solve(Instance(sub, n - 1), method=method))

    for lower, upper in zip(slices, slices[1:]):
        if not upper.quotient <= lower.quotient:
            raise InvariantError("slice quotients are not nested")

    quotient = LowerSet(
        (e for i, s in enumerate(slices) for e in embed(s.quotient, i)), n, check=__debug__
    )
    staircase = quotient.limiting_set
    shift = UniPoly.linear(level, n - 1).to_polynomial(n)
    candidates = [shift ** (w + 1)]
    for i, s in enumerate(slices):
        factor = shift**i
        candidates.extend(factor * g.lift(n) for g in s.basis)
    basis = sorted((g for g in candidates if g.lead_exp in staircase), key=lambda g: g.lead_exp)
    if len(basis) != len(staircase):
        raise InvariantError("leading terms of the stacked basis do not cover E(D)")
    return SolvedIdeal(quotient, tuple(basis), n)


def glp(a, D, G):
    """Element of <G> whose leading term is glt(a, D), obtained by multiplying
    the basis element with the lex-smallest eligible leading term by a monomial
    free of the last variable."""
    c = glt(a, D)
    by_lead = {g.lead_exp: g for g in G}
    eligible = sorted(e for e in D.limiting_set if e[-1] == c[-1] and divides(e, c))
    if not eligible:
        raise InvariantError(f"no element of E(D) divides {c}")
    lead = eligible[0]
    if lead not in by_lead:
        raise InvariantError(f"no basis element with leading term {lead}")
    return by_lead[lead].mul_term(tuple(x - y for x, y in zip(c, lead)))


def _fold_step(LT, D_acc, G_acc, fibre, solved, previous, method):
    """One target leading term of the fold; returns the unreduced combination."""
    n = solved.dim
    f1 = glp(LT, D_acc, G_acc)
    f2 = glp(LT, solved.quotient, solved.basis)
    if method == "simplified":
        p_new = univariate_element(solved.basis)
        p_acc = univariate_element(G_acc)
        q1 = f1 * p_new.to_polynomial(n)
        q2 = f2 * p_acc.to_polynomial(n)
        pp1 = p_new.exact_div(lc_n(f2))
        pp2 = p_acc.exact_div(lc_n(f1))
    else:
        var = n - 1
        vanish_new = UniPoly.linear(fibre.level, var) ** (fibre.w + 1)
        vanish_acc = UniPoly((1,), var)
        pp2 = UniPoly((1,), var)
        for fib, sol in previous:
            v = glt(LT, sol.quotient)[-1]
            vanish_acc = vanish_acc * UniPoly.linear(fib.level, var) ** (fib.w + 1)
            pp2 = pp2 * UniPoly.linear(fib.level, var) ** (fib.w + 1 - v)
        v_new = glt(LT, solved.quotient)[-1]
        q1 = f1 * vanish_new.to_polynomial(n)
        q2 = f2 * vanish_acc.to_polynomial(n)
        pp1 = UniPoly.linear(fibre.level, var) ** (fibre.w + 1 - v_new)
    g, r1, r2 = eea(pp1, pp2)
    if g != 1:
        raise InvariantError("cofactor polynomials are not coprime; fibre levels must be distinct")
    return r1.to_polynomial(n) * q1 + r2.to_polynomial(n) * q2


def combine_fibres(fibres, solved, method="simplified"):
    """Fold per-fibre solutions into the solution for their union."""
    if method not in COMBINE_METHODS:
        raise ValueError(f"unknown combine method {method!r}; expected one of {COMBINE_METHODS}")
    if len(fibres) != len(solved) or not fibres:
        raise ValidationError("need one solved ideal per fibre")
    levels = [f.level for f in fibres]
    if len(set(levels)) != len(levels):
        raise ValidationError("fibre levels must be pairwise distinct")

    D, G = solved[0].quotient, tuple(solved[0].basis)
    previous = [(fibres[0], solved[0])]
    for fibre, sol in zip(fibres[1:], solved[1:]):
        D_new = add_lower_sets(D, sol.quotient)
        new_basis = []
        for LT in sorted(D_new.limiting_set):
            f = _fold_step(LT, D, G, fibre, sol, previous, method)
            f = normal_form(f, new_basis).monic()
            if f.is_zero() or f.lead_exp != LT:
                raise InvariantError(f"combination for {LT} has the wrong leading term")
            new_basis.append(f)
        D, G = D_new, tuple(new_basis)
        previous.append((fibre, sol))
    return SolvedIdeal(D, G, solved[0].dim)


def solve(H, method="simplified"):
    """Quotient basis D(H) and reduced lex Groebner basis of I(H)."""
    if not isinstance(H, Instance):
        H = Instance(H)
    if H.dim == 1:
        return solve_univariate(H)
    fibres = split_fibres(H)
    solved = [solve_special(f.instance(), f.level, method) for f in fibres]
    if len(fibres) == 1:
        return solved[0]
    return combine_fibres(fibres, solved, method)
