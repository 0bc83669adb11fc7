"""Lower sets (monomial staircases) in N_0^n and the operations on them.

A lower set is stored as a frozenset of exponent tuples. Besides membership
and the limiting set E(D) this module holds the projections used to split a
problem along the last variable, and the addition of lower sets that drops
one staircase onto another along that axis.
"""

from .errors import DimensionError, ValidationError

__all__ = [
    "LowerSet",
    "is_lower_set",
    "limiting_set",
    "proj",
    "proj_hat",
    "embed",
    "add_lower_sets",
    "glt",
    "render_staircase",
]


def _dimension(elements, dim=None):
    for e in elements:
        if dim is None:
            dim = len(e)
        elif len(e) != dim:
            raise DimensionError(f"mixed dimensions: {e} is not of dimension {dim}")
    return dim


def _lower_neighbours(d):
    for i, k in enumerate(d):
        if k:
            yield d[:i] + (k - 1,) + d[i + 1 :]


def is_lower_set(S):
    """True iff every element's lower neighbours are also in ``S``."""
    S = {tuple(e) for e in S}
    _dimension(S)
    return all(nb in S for d in S for nb in _lower_neighbours(d))


class LowerSet:
    """Finite downward-closed subset of N_0^dim. Iterates in increasing lex order."""

    __slots__ = ("dim", "_elements", "_limiting", "_sorted")

    def __init__(self, elements=(), dim=None, check=True):
        elements = frozenset(tuple(int(k) for k in e) for e in elements)
        dim = _dimension(elements, dim)
        if dim is None:
            raise ValueError("dim is required for an empty lower set")
        if check:
            if any(k < 0 for e in elements for k in e):
                raise ValidationError("lower set elements must be non-negative")
            if not is_lower_set(elements):
                missing = next(
                    nb for d in sorted(elements) for nb in _lower_neighbours(d) if nb not in elements
                )
                raise ValidationError(f"not a lower set: {missing} is missing")
        self.dim = dim
        self._elements = elements
        self._limiting = None
        self._sorted = None

    @property
    def elements(self):
        return self._elements

    def sorted(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._elements))
        return self._sorted

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self._elements)

    def __contains__(self, e):
        return tuple(e) in self._elements

    def __eq__(self, other):
        if isinstance(other, LowerSet):
            return self.dim == other.dim and self._elements == other._elements
        if isinstance(other, (set, frozenset)):
            return self._elements == other
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self._elements))

    def __le__(self, other):
        return self._elements <= other._elements

    def __ge__(self, other):
        return self._elements >= other._elements

    def __repr__(self):
        return f"LowerSet({sorted(self._elements)}, dim={self.dim})"

    @property
    def limiting_set(self):
        """E(D): exponents outside D all of whose lower neighbours lie in D."""
        if self._limiting is None:
            D = self._elements
            cands = {(0,) * self.dim}
            for d in D:
                for i in range(self.dim):
                    cands.add(d[:i] + (d[i] + 1,) + d[i + 1 :])
            self._limiting = frozenset(
                b for b in cands if b not in D and all(nb in D for nb in _lower_neighbours(b))
            )
        return self._limiting

    def column_height(self, head):
        """Number of elements whose first dim-1 coordinates equal ``head``."""
        head = tuple(head)
        h = 0
        while head + (h,) in self._elements:
            h += 1
        return h

    def __add__(self, other):
        return add_lower_sets(self, other)


def limiting_set(D):
    return D.limiting_set


def proj(d):
    """Last coordinate of an exponent."""
    return d[-1]


def proj_hat(S):
    """Drop the last coordinate, elementwise; accepts one exponent or a collection."""
    if S and isinstance(next(iter(S)), int):
        if len(S) < 2:
            raise DimensionError("proj_hat needs dimension >= 2")
        return tuple(S[:-1])
    out = set()
    for d in S:
        if len(d) < 2:
            raise DimensionError("proj_hat needs dimension >= 2")
        out.add(tuple(d[:-1]))
    return out


def embed(S, c):
    """Append the coordinate ``c`` to every element of ``S``."""
    if c < 0:
        raise ValidationError("embed parameter must be non-negative")
    return {tuple(d) + (c,) for d in S}


def add_lower_sets(D1, D2):
    """Drop the elements of D2, in increasing lex order, along the last axis
    until each rests on top of what is already there."""
    if D1.dim != D2.dim:
        raise DimensionError(f"dimension mismatch: {D1.dim} vs {D2.dim}")
    D = set(D1.elements)
    for a in D2:
        while a in D:
            a = a[:-1] + (a[-1] + 1,)
        D.add(a)
    return LowerSet(D, D1.dim, check=False)


def glt(a, D):
    """Smallest-last-coordinate exponent outside D sharing a's first n-1 coordinates."""
    a = tuple(a)
    if len(a) != D.dim:
        raise DimensionError(f"dimension mismatch: {len(a)} vs {D.dim}")
    if a in D:
        raise ValidationError(f"glt requires {a} not in the lower set")
    return a[:-1] + (D.column_height(a[:-1]),)


def render_staircase(D, solid="*", hollow="o", empty="."):
    """ASCII picture of a 2-D lower set, X2 upward and X1 rightward."""
    if D.dim != 2:
        raise DimensionError("staircase rendering is only defined for dimension 2")
    E = D.limiting_set
    pts = set(D.elements) | E
    width = max(e[0] for e in pts) + 1
    height = max(e[1] for e in pts) + 1
    rows = []
    for y in range(height - 1, -1, -1):
        cells = []
        for x in range(width):
            if (x, y) in D:
                cells.append(solid)
            elif (x, y) in E:
                cells.append(hollow)
            else:
                cells.append(empty)
        rows.append(f"{y:>3} " + " ".join(cells))
    rows.append("    " + " ".join(str(x % 10) for x in range(width)))
    return "\n".join(rows)
