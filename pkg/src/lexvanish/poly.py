"""Sparse multivariate polynomials over Q under the lex order X1 > X2 > ... > Xn.

Exponents are plain tuples of non-negative ints; Python's tuple comparison
is exactly the lex order with the first variable most significant, so the
leading exponent of a polynomial is simply ``max`` over its support.
"""

import re
from fractions import Fraction
from math import prod

from .errors import DimensionError, ValidationError

__all__ = [
    "Polynomial",
    "Functional",
    "lex_compare",
    "leading_term",
    "lc_n",
    "apply_functional",
    "normal_form",
    "s_polynomial",
    "divides",
    "parse_polynomial",
    "render_polynomial",
]


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def lex_compare(a, b):
    """Return -1, 0 or 1 as exponent ``a`` is lex-less, equal or greater than ``b``."""
    _check_dims(a, b)
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def divides(a, b):
    """True if the monomial X^a divides X^b."""
    return all(x <= y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _falling(e, d):
    # e * (e-1) * ... * (e-d+1)
    out = 1
    for k in range(e - d + 1, e + 1):
        out *= k
    return out


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions.

    >>> x1, x2 = Polynomial.variables(2)
    >>> str((x2 - 1) * (x2 - 1))
    'x2^2 - 2*x2 + 1'
    """

    __slots__ = ("nvars", "_terms", "_lead")

    def __init__(self, terms=None, nvars=None):
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(k) for k in exp)
            if nvars is None:
                nvars = len(exp)
            elif len(exp) != nvars:
                raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(k < 0 for k in exp):
                raise ValidationError(f"negative exponent {exp}")
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
                if not clean[exp]:
                    del clean[exp]
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self.nvars = nvars
        self._terms = clean
        self._lead = None

    @classmethod
    def _raw(cls, terms, nvars):
        # trusted constructor: terms already normalized (no zeros, Fractions)
        self = cls.__new__(cls)
        self.nvars = nvars
        self._terms = terms
        self._lead = None
        return self

    @classmethod
    def zero(cls, nvars):
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exp, coef=1):
        exp = tuple(exp)
        return cls({exp: coef}, len(exp))

    @classmethod
    def variable(cls, i, nvars):
        """The polynomial X_{i+1} (``i`` is zero-based)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)}, nvars)

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def lead_exp(self):
        if self._lead is None:
            if not self._terms:
                raise ValidationError("the zero polynomial has no leading term")
            self._lead = max(self._terms)
        return self._lead

    @property
    def lead_coef(self):
        return self._terms[self.lead_exp]

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self):
        """Terms in decreasing lex order."""
        return sorted(self._terms.items(), reverse=True)

    def tail_exps(self):
        lead = self.lead_exp
        return [e for e in self._terms if e != lead]

    def degree(self, var):
        return max((e[var] for e in self._terms), default=-1)

    def is_univariate_in(self, var):
        return all(k == 0 for e in self._terms for i, k in enumerate(e) if i != var)

    def monic(self):
        if not self._terms:
            return self
        c = self.lead_coef
        if c == 1:
            return self
        return self._raw({e: v / c for e, v in self._terms.items()}, self.nvars)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"dimension mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return self._raw({e: v * c for e, v in self._terms.items()}, self.nvars)

    def mul_term(self, exp, coef=1):
        """Multiply by the single term ``coef * X^exp``."""
        _check_dims(exp, (0,) * self.nvars)
        coef = Fraction(coef)
        if not coef:
            return Polynomial.zero(self.nvars)
        return self._raw({_add(e, exp): v * coef for e, v in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return self._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- calculus -------------------------------------------------------

    def derivative(self, order):
        """Plain iterated partial derivative; ``order[i]`` times in X_{i+1}."""
        _check_dims(order, (0,) * self.nvars)
        out = {}
        for e, c in self._terms.items():
            if all(k >= d for k, d in zip(e, order)):
                factor = prod(_falling(k, d) for k, d in zip(e, order))
                out[_sub(e, order)] = c * factor
        return self._raw(out, self.nvars)

    def evaluate(self, point):
        _check_dims(point, (0,) * self.nvars)
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * prod(p**k for p, k in zip(point, e))
        return total

    def lift(self, nvars, pad=0):
        """Embed into ``nvars`` variables by appending ``pad`` to every exponent.

        The extra variables come last. ``pad`` multiplies by X_n^pad.
        """
        extra = nvars - self.nvars
        if extra < 0:
            raise DimensionError("cannot lift into fewer variables")
        tail = (0,) * (extra - 1) + (pad,) if extra else ()
        return self._raw({e + tail: c for e, c in self._terms.items()}, nvars)

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"


def leading_term(f):
    """Lex-greatest exponent of ``f`` together with its coefficient."""
    if f.is_zero():
        raise ValidationError("the zero polynomial has no leading term")
    return f.lead_exp, f.lead_coef


def lc_n(f):
    """Leading coefficient of ``f`` read in k(Xn)[X1..X_{n-1}], as a UniPoly in Xn."""
    from .unipoly import UniPoly

    if f.is_zero():
        raise ValidationError("LC_n of the zero polynomial is undefined")
    head = f.lead_exp[:-1]
    coeffs = {}
    for e, c in f.items():
        if e[:-1] == head:
            coeffs[e[-1]] = c
    return UniPoly.from_dict(coeffs, var=f.nvars - 1)


class Functional:
    """Evaluation of a plain partial derivative at a point.

    ``Functional((1, 2), (1, 0))`` maps f to df/dx1 evaluated at (1, 2).
    """

    __slots__ = ("point", "order")

    def __init__(self, point, order):
        point = tuple(Fraction(p) for p in point)
        order = tuple(int(k) for k in order)
        _check_dims(point, order)
        if any(k < 0 for k in order):
            raise ValidationError(f"negative derivative order {order}")
        self.point = point
        self.order = order

    def __call__(self, f):
        return apply_functional(self, f)

    def __eq__(self, other):
        return (
            isinstance(other, Functional)
            and self.point == other.point
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.point, self.order))

    def __repr__(self):
        pt = ", ".join(str(p) for p in self.point)
        return f"Functional(point=({pt}), order={self.order})"


def apply_functional(L, f):
    _check_dims(L.point, (0,) * f.nvars)
    total = Fraction(0)
    for e, c in f.items():
        if any(k < d for k, d in zip(e, L.order)):
            continue
        term = c
        for k, d, p in zip(e, L.order, L.point):
            if d:
                term *= _falling(k, d)
            if k > d:
                term *= p ** (k - d)
        total += term
    return total


def normal_form(f, G):
    """Fully reduce ``f`` modulo the polynomials ``G``.

    The lex-greatest reducible term is always eliminated first, using the
    divisor whose leading exponent is lex-smallest, so the result is
    reproducible term for term.
    """
    divisors = sorted(G, key=lambda g: g.lead_exp)
    for g in divisors:
        if g.is_zero():
            raise ValidationError("cannot reduce by the zero polynomial")
        if g.nvars != f.nvars:
            raise DimensionError(f"dimension mismatch: {f.nvars} vs {g.nvars}")
    heads = [(g.lead_exp, g.lead_coef, g) for g in divisors]
    p = dict(f.items())
    rem = {}
    while p:
        e = max(p)
        c = p[e]
        for le, lc, g in heads:
            if divides(le, e):
                q = c / lc
                shift = _sub(e, le)
                for ge, gc in g.items():
                    k = _add(ge, shift)
                    v = p.get(k, 0) - q * gc
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
                break
        else:
            rem[e] = p.pop(e)
    return Polynomial._raw(rem, f.nvars)


def s_polynomial(f, g):
    lf, lg = f.lead_exp, g.lead_exp
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    return f.mul_term(_sub(lcm, lf), 1 / f.lead_coef) - g.mul_term(_sub(lcm, lg), 1 / g.lead_coef)


# -- canonical text ------------------------------------------------------


def _render_monomial(exp):
    parts = []
    for i, k in enumerate(exp):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts)


def render_polynomial(f):
    """Canonical text: decreasing lex order, exact rationals, ``x1..xn``.

    >>> x1, x2 = Polynomial.variables(2)
    >>> render_polynomial(x1**3 * x2 - Fraction(1, 2) * x2**2)
    'x1^3*x2 - 1/2*x2^2'
    """
    if f.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(f.sorted_terms()):
        mono = _render_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?|x(?P<var>\d+)(?:\s*\^\s*(?P<pow>\d+))?|(?P<op>[+\-*]))")


def parse_polynomial(text, nvars):
    """Inverse of :func:`render_polynomial`; also accepts any sum of products
    of rationals and powers of ``x1..xn``."""
    text = text.strip()
    if not text:
        raise ValidationError("empty polynomial text")
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValidationError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        tokens.append(m)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    terms = {}
    sign = 1
    coef = None
    exp = None
    expect_factor = True

    def flush():
        nonlocal coef, exp
        if exp is None and coef is None:
            raise ValidationError(f"dangling operator in {text!r}")
        e = tuple(exp or (0,) * nvars)
        c = sign * (coef if coef is not None else Fraction(1))
        terms[e] = terms.get(e, 0) + c
        coef, exp = None, None

    for m in tokens:
        op = m.group("op")
        if op in ("+", "-"):
            if not expect_factor:
                flush()
                sign = 1
            elif coef is not None or exp is not None:
                raise ValidationError(f"misplaced {op!r} in {text!r}")
            if op == "-":
                sign = -sign
            expect_factor = True
        elif op == "*":
            if expect_factor:
                raise ValidationError(f"misplaced '*' in {text!r}")
            expect_factor = True
        else:
            if not expect_factor:
                raise ValidationError(f"missing operator in {text!r}")
            if m.group("num") is not None:
                den = int(m.group("den")) if m.group("den") else 1
                if den == 0:
                    raise ValidationError(f"zero denominator in {text!r}")
                val = Fraction(int(m.group("num")), den)
                coef = val if coef is None else coef * val
            else:
                i = int(m.group("var"))
                if not 1 <= i <= nvars:
                    raise DimensionError(f"variable x{i} out of range for {nvars} variables")
                k = int(m.group("pow") or 1)
                exp = list(exp or (0,) * nvars)
                exp[i - 1] += k
            expect_factor = False
    if expect_factor:
        raise ValidationError(f"polynomial text ends with an operator: {text!r}")
    flush()
    return Polynomial(terms, nvars)
