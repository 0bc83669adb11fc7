"""Dense univariate polynomials over Q and the extended Euclidean algorithm.

These carry the leading-coefficient polynomials LC_n(f), the p0 element of a
lex basis, and the Bezout cofactors used when gluing fibres together.
"""

from fractions import Fraction

from .errors import InvariantError, ValidationError

__all__ = ["UniPoly", "eea", "gcd"]


class UniPoly:
    """Coefficients stored low degree first; ``var`` is the zero-based index
    of the variable the polynomial lives in (used for rendering and lifting).
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var=0):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_dict(cls, mapping, var=0):
        if not mapping:
            return cls((), var)
        cs = [0] * (max(mapping) + 1)
        for k, c in mapping.items():
            cs[k] = c
        return cls(cs, var)

    @classmethod
    def linear(cls, root, var=0):
        """The monic polynomial X - root."""
        return cls((-Fraction(root), 1), var)

    @classmethod
    def from_polynomial(cls, f, var=None):
        var = f.nvars - 1 if var is None else var
        if not f.is_univariate_in(var):
            raise ValidationError(f"{f} is not univariate in x{var + 1}")
        return cls.from_dict({e[var]: c for e, c in f.items()}, var)

    def to_polynomial(self, nvars):
        from .poly import Polynomial

        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * nvars
                e[self.var] = k
                terms[tuple(e)] = c
        return Polynomial._raw(terms, nvars)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        c = self.coeffs[-1]
        return UniPoly([x / c for x in self.coeffs], self.var)

    def _like(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
            self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._like(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UniPoly((1,), self.var)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._like(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.lead
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                q = c / lc
                quot[k - d] = q
                for j, y in enumerate(other.coeffs):
                    rem[k - d + j] -= q * y
        return UniPoly(quot, self.var), UniPoly(rem[:d], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient, raising InvariantError if ``other`` does not divide self."""
        q, r = divmod(self, other)
        if r:
            raise InvariantError(f"{other} does not divide {self} (remainder {r})")
        return q

    def divides(self, other):
        return not (other % self)

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,), self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.coeffs == other.coeffs and (self.var == other.var or self.degree <= 0)

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        from .poly import render_polynomial

        return render_polynomial(self.to_polynomial(self.var + 1))

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


def eea(a, b):
    """Extended Euclid: return ``(g, r1, r2)`` with r1*a + r2*b == g == monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValidationError("eea of two zero polynomials is undefined")
    var = a.var if a else b.var
    one, zero = UniPoly((1,), var), UniPoly((), var)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = r0.lead
    g, x, y = r0.monic(), s0 * (1 / c), t0 * (1 / c)
    if __debug__ and x * a + y * b != g:
        raise InvariantError("Bezout identity failed in eea")
    return g, x, y


def gcd(a, b):
    return eea(a, b)[0]
