"""Intersection of two zero-dimensional ideals given by reduced lex bases.

Works whenever the univariate elements p0(G1), p0(G2) in the last variable are
coprime, i.e. the zero sets lie over disjoint values of X_n. No knowledge of
the zeros themselves is needed.
"""

import logging
from itertools import product

from .errors import DimensionError, InvariantError, PreconditionError, ValidationError
from .lowerset import LowerSet, add_lower_sets
from .poly import divides, lc_n, normal_form
from .unipoly import eea
from .vanishing import univariate_element

__all__ = ["ReducedBasis", "standard_monomials", "p0", "quotient_basis", "gp", "intersect", "NOT_COPRIME_MESSAGE"]

log = logging.getLogger(__name__)

NOT_COPRIME_MESSAGE = "intersection requires coprime p0 (disjoint Xn-fibres)"


def standard_monomials(polys, dim):
    """Exponents divisible by no leading term; errors if that set is infinite."""
    leads = [g.lead_exp for g in polys]
    bounds = []
    for i in range(dim):
        pure = [e[i] for e in leads if all(k == 0 for j, k in enumerate(e) if j != i)]
        if not pure:
            raise ValidationError(
                f"no leading term is a pure power of x{i + 1}: the quotient is infinite"
            )
        bounds.append(min(pure))
    return LowerSet(
        (e for e in product(*(range(b) for b in bounds)) if not any(divides(l, e) for l in leads)),
        dim,
        check=False,
    )


class ReducedBasis:
    """A validated reduced lex basis of a zero-dimensional ideal.

    Validation checks monic elements, a finite staircase whose limiting set is
    exactly the set of leading terms, tails inside the staircase, and the
    presence of the univariate element p0.
    """

    def __init__(self, polys, dim=None, provenance=None):
        polys = list(polys)
        if not polys:
            raise ValidationError("a reduced basis needs at least one polynomial")
        if dim is None:
            dim = polys[0].nvars
        for g in polys:
            if g.nvars != dim:
                raise DimensionError(f"{g} does not have {dim} variables")
            if g.is_zero():
                raise ValidationError("the zero polynomial cannot be a basis element")
            if g.lead_coef != 1:
                raise ValidationError(f"basis element {g} is not monic")
        polys.sort(key=lambda g: g.lead_exp)
        leads = [g.lead_exp for g in polys]
        if len(set(leads)) != len(leads):
            raise ValidationError("two basis elements share a leading term")
        Q = standard_monomials(polys, dim)
        if set(Q.limiting_set) != set(leads):
            raise ValidationError("leading terms do not form the limiting set of the quotient")
        for g in polys:
            bad = [e for e in g.tail_exps() if e not in Q]
            if bad:
                raise ValidationError(f"{g} is not reduced: tail exponent {bad[0]} outside the quotient")
        self.dim = dim
        self.basis = tuple(polys)
        self.quotient = Q
        self.provenance = provenance
        self._p0 = univariate_element(polys)

    @classmethod
    def from_solved(cls, solved):
        return cls(solved.basis, solved.dim, provenance="points")

    @property
    def staircase(self):
        return self.quotient.limiting_set

    @property
    def p0(self):
        return self._p0

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, ReducedBasis):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __repr__(self):
        return f"ReducedBasis({[str(g) for g in self.basis]})"


def p0(G):
    return G.p0


def quotient_basis(G):
    return G.quotient


def gp(LT, G):
    """Multiple of the basis element whose leading monomial divides LT with the
    lowest X_n degree, shifted so its X_1..X_{n-1} part matches LT."""
    LT = tuple(LT)
    cands = [g for g in G.basis if divides(g.lead_exp, LT)]
    if not cands:
        raise ValidationError(f"{LT} lies in the quotient; no basis element divides it")
    g = min(cands, key=lambda g: (g.lead_exp[-1], g.lead_exp))
    shift = tuple(a - b for a, b in zip(LT[:-1], g.lead_exp[:-1])) + (0,)
    return g.mul_term(shift)


def intersect(G1, G2):
    """Reduced lex basis of I1 ∩ I2 from reduced bases G1, G2 with coprime p0."""
    if G1.dim != G2.dim:
        raise DimensionError(f"dimension mismatch: {G1.dim} vs {G2.dim}")
    for G in (G1, G2):
        if G.provenance is None:
            log.warning(
                "basis of unknown provenance; the method is only known to be valid for"
                " ideals of points with multiplicity structures"
            )
    n = G1.dim
    a, b = G1.p0, G2.p0
    if eea(a, b)[0] != 1:
        raise PreconditionError(NOT_COPRIME_MESSAGE)
    pa, pb = a.to_polynomial(n), b.to_polynomial(n)
    D = add_lower_sets(G1.quotient, G2.quotient)
    out = []
    for T in sorted(D.limiting_set):
        f1, f2 = gp(T, G1), gp(T, G2)
        q1, q2 = f1 * pb, f2 * pa
        t1 = b.exact_div(lc_n(f2))
        t2 = a.exact_div(lc_n(f1))
        g, r1, r2 = eea(t1, t2)
        if g != 1:
            raise InvariantError("cofactors t1, t2 are not coprime")
        f = r1.to_polynomial(n) * q1 + r2.to_polynomial(n) * q2
        f = normal_form(f, out).monic()
        if f.is_zero() or f.lead_exp != T:
            raise InvariantError(f"combination for {T} has the wrong leading term")
        out.append(f)
    provenance = "points" if G1.provenance and G2.provenance else None
    return ReducedBasis(out, n, provenance=provenance)
