"""Line-oriented text formats for instances and bases.

Instance file::

    # points with multiplicity structures; '#' starts a comment
    dimension 2
    point 1 1 : 0 0, 0 1, 1 0
    point 2 1 : 0 0, 0 1, 1 0, 1 1
    point 0 2 : 0 0, 1 0

``row <coords> : <order>`` lines give one functional each (the matrix form);
rows sharing a point are merged into one structure.

Basis file::

    dimension 2
    poly x2^2 - 2*x2 + 1
    poly x1^2
    quotient 0 0, 0 1, 1 0, 1 1

Coordinates are exact rationals written ``3`` or ``-1/2``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import LexVanishError, ValidationError
from .lowerset import LowerSet
from .poly import parse_polynomial, render_polynomial
from .vanishing import Instance, PointWithStructure

__all__ = [
    "BasisFile",
    "parse_rational",
    "parse_instance",
    "render_instance",
    "parse_basis",
    "render_basis",
    "read_instance",
    "read_basis",
]

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text):
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise ValidationError(f"malformed rational {text!r}")
    return Fraction(text)


@dataclass
class BasisFile:
    dim: int
    polynomials: list
    quotient: list = None


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header(lines):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ValidationError("empty file: expected 'dimension <n>'") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "dimension" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ValidationError(f"line {lineno}: expected 'dimension <n>' with n >= 1, got {line!r}")
    return int(parts[1])


def _exponent(text, dim, lineno):
    parts = text.split()
    if len(parts) != dim or not all(p.isdigit() for p in parts):
        raise ValidationError(
            f"line {lineno}: expected {dim} non-negative integers, got {text.strip()!r}"
        )
    return tuple(int(p) for p in parts)


def _exponent_list(text, dim, lineno):
    return [_exponent(chunk, dim, lineno) for chunk in text.split(",") if chunk.strip()]


def _coords(text, dim, lineno):
    parts = text.split()
    if len(parts) != dim:
        raise ValidationError(f"line {lineno}: expected {dim} coordinates, got {len(parts)}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValidationError as exc:
        raise ValidationError(f"line {lineno}: {exc}") from None


def parse_instance(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _lines(text)
    dim = _header(lines)
    points = {}
    origin = {}
    for lineno, line in lines:
        keyword, _, rest = line.partition(" ")
        if keyword not in ("point", "row"):
            raise ValidationError(f"line {lineno}: unknown keyword {keyword!r}")
        if ":" not in rest:
            raise ValidationError(f"line {lineno}: missing ':' between coordinates and structure")
        left, right = rest.split(":", 1)
        p = _coords(left, dim, lineno)
        if keyword == "point":
            if p in points:
                raise ValidationError(f"line {lineno}: duplicate point {' '.join(map(str, p))}")
            structure = _exponent_list(right, dim, lineno)
            if not structure:
                raise ValidationError(f"line {lineno}: empty multiplicity structure")
            points[p] = set(structure)
            origin[p] = lineno
        else:
            points.setdefault(p, set()).add(_exponent(right, dim, lineno))
            origin.setdefault(p, lineno)
    if not points:
        raise ValidationError("instance must contain at least one functional")
    items = []
    for p, structure in points.items():
        try:
            items.append(PointWithStructure(p, LowerSet(structure, dim)))
        except LexVanishError as exc:
            raise ValidationError(f"line {origin[p]}: {exc}") from None
    return Instance(items, dim)


def render_instance(H):
    out = [f"dimension {H.dim}"]
    for it in H.items:
        coords = " ".join(str(c) for c in it.point)
        structure = ", ".join(" ".join(map(str, d)) for d in it.structure)
        out.append(f"point {coords} : {structure}")
    return "\n".join(out) + "\n"


def parse_basis(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _lines(text)
    dim = _header(lines)
    polys = []
    quotient = None
    for lineno, line in lines:
        keyword, _, rest = line.partition(" ")
        if keyword == "poly":
            try:
                polys.append(parse_polynomial(rest, dim))
            except LexVanishError as exc:
                raise ValidationError(f"line {lineno}: {exc}") from None
        elif keyword == "quotient":
            if quotient is not None:
                raise ValidationError(f"line {lineno}: second quotient line")
            quotient = _exponent_list(rest, dim, lineno)
        else:
            raise ValidationError(f"line {lineno}: unknown keyword {keyword!r}")
    if not polys:
        raise ValidationError("basis file contains no polynomials")
    return BasisFile(dim, polys, quotient)


def render_basis(polys, quotient=None, dim=None):
    polys = sorted(polys, key=lambda g: g.lead_exp)
    dim = dim if dim is not None else polys[0].nvars
    out = [f"dimension {dim}"]
    out.extend(f"poly {render_polynomial(g)}" for g in polys)
    if quotient is not None:
        out.append("quotient " + ", ".join(" ".join(map(str, d)) for d in sorted(quotient)))
    return "\n".join(out) + "\n"


def read_instance(path):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def read_basis(path):
    with open(path, encoding="utf-8") as fh:
        return parse_basis(fh.read())
