"""Independent certificates for a computed basis.

None of these trust the construction: vanishing is checked by applying every
functional, the quotient by an exact rank computation, Groebner-ness by
reducing all S-polynomials.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import ValidationError
from .lowerset import LowerSet
from .poly import Polynomial, divides, lc_n, normal_form, s_polynomial
from .unipoly import UniPoly
from .vanishing import univariate_element

__all__ = [
    "Check",
    "VerificationReport",
    "check_vanishing",
    "check_independence",
    "independence_report",
    "check_staircase",
    "check_tails",
    "check_count",
    "buchberger_check",
    "check_lc_structure",
    "verify_solution",
    "exact_rank",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def overall(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.overall

    def add(self, name, passed, witness=""):
        self.checks.append(Check(name, bool(passed), witness))
        return self

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def render_text(self):
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}"
            if c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)

    def json_lines(self):
        return "\n".join(
            json.dumps({"check": c.name, "passed": c.passed, "witness": c.witness})
            for c in self.checks
        )


def check_vanishing(basis, H):
    report = VerificationReport()
    functionals = H.functionals()
    for idx, g in enumerate(basis):
        for L in functionals:
            val = L(g)
            if val:
                return report.add(
                    "vanishing", False, f"basis[{idx}] = {g}: {L} gives {val}"
                )
    return report.add("vanishing", True)


def exact_rank(rows):
    """Rank of a matrix of rationals by fraction-exact Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, len(M)):
            if M[r][col]:
                k = M[r][col] / p
                M[r] = [a - k * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def _evaluation_matrix(D, H):
    monos = [Polynomial.monomial(d) for d in D]
    return [[L(x) for x in monos] for L in H.functionals()]


def check_independence(D, H):
    """True iff the m x m matrix L_i(X^d), d in D, is nonsingular."""
    if len(D) != H.m:
        return False
    return exact_rank(_evaluation_matrix(D, H)) == H.m


def independence_report(D, H):
    report = VerificationReport()
    if len(D) != H.m:
        return report.add("independence", False, f"#D = {len(D)} but m = {H.m}")
    r = exact_rank(_evaluation_matrix(D, H))
    return report.add("independence", r == H.m, "" if r == H.m else f"rank {r} < {H.m}")


def check_staircase(basis, D):
    leads = sorted(g.lead_exp for g in basis)
    E = sorted(D.limiting_set)
    report = VerificationReport()
    if leads == E:
        return report.add("staircase", True)
    return report.add("staircase", False, f"leading terms {leads} but E(D) = {E}")


def check_tails(basis, D):
    report = VerificationReport()
    for idx, g in enumerate(basis):
        for e in g.tail_exps():
            if e not in D:
                return report.add("tails-in-D", False, f"basis[{idx}] has tail exponent {e}")
    return report.add("tails-in-D", True)


def check_count(D, H):
    ok = len(D) == H.m
    return VerificationReport().add("count", ok, "" if ok else f"#D = {len(D)}, m = {H.m}")


def buchberger_check(basis):
    """All S-polynomials reduce to zero, and the set is reduced and monic."""
    basis = list(basis)
    report = VerificationReport()
    witness = ""
    for (i, f), (j, g) in combinations(enumerate(basis), 2):
        r = normal_form(s_polynomial(f, g), basis)
        if r:
            witness = f"S(basis[{i}], basis[{j}]) reduces to {r}"
            break
    report.add("buchberger", not witness, witness)

    witness = ""
    for i, f in enumerate(basis):
        if f.lead_coef != 1:
            witness = f"basis[{i}] is not monic"
            break
        for j, g in enumerate(basis):
            if i != j:
                hit = next((e for e in f.items() if divides(g.lead_exp, e[0])), None)
                if hit is not None:
                    witness = f"term {hit[0]} of basis[{i}] divisible by lead of basis[{j}]"
                    break
        if witness:
            break
    return report.add("reduced", not witness, witness)


def check_lc_structure(G, levels=None):
    """LC_n(g) divides p0 for every element; with known fibre levels, also
    check that LC_n(g) splits into linear factors (Xn - c) within p0."""
    basis = list(getattr(G, "basis", G))
    report = VerificationReport()
    try:
        p = univariate_element(basis)
    except ValidationError as exc:
        return report.add("lc-structure", False, str(exc))
    witness = ""
    for idx, g in enumerate(basis):
        u = lc_n(g)
        if p % u:
            witness = f"LC_n(basis[{idx}]) = {u} does not divide p0 = {p}"
            break
        if levels is not None:
            rest, left_p = u, p
            for c in levels:
                lin = UniPoly.linear(c, p.var)
                while not (rest % lin):
                    rest = rest // lin
                    if left_p % lin:
                        witness = f"LC_n(basis[{idx}]) has (x{p.var + 1} - {c}) to a higher power than p0"
                        break
                    left_p = left_p // lin
                if witness:
                    break
            if not witness and rest != 1:
                witness = f"LC_n(basis[{idx}]) = {u} leaves factor {rest} after removing fibre levels"
            if witness:
                break
    return report.add("lc-structure", not witness, witness)


def verify_solution(basis, D, H, levels=None):
    """Full oracle suite for a claimed (basis, quotient) of I(H)."""
    if not isinstance(D, LowerSet):
        D = LowerSet(D, H.dim)
    if levels is None:
        levels = sorted({it.point[-1] for it in H.items})
    report = VerificationReport()
    report.extend(check_count(D, H))
    report.extend(check_vanishing(basis, H))
    report.extend(independence_report(D, H))
    report.extend(check_staircase(basis, D))
    report.extend(check_tails(basis, D))
    report.extend(buchberger_check(basis))
    report.extend(check_lc_structure(basis, levels))
    return report
