"""Triangulations of a labeled convex polygon and the tail map to diagrams.

Vertices of the N-gon are labeled ``0..N-1`` counter-clockwise.  A diagonal
is a pair ``(tail, head)`` with ``tail < head``; ``Lambda`` sends a
triangulation to the multiset of its tails, sorted decreasingly, which is a
diagram in ``Y(N - 2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BudgetExceeded, DiagonalAbsent, InvalidTriangulation, ParseError
from .partitions import Partition, make_partition, require_fits

Diagonal = tuple[int, int]

MAX_ENUM_NGON = 12

__all__ = [
    "Diagonal",
    "Triangulation",
    "crosses",
    "is_diagonal",
    "validate",
    "lambda_map",
    "lambda_inverse",
    "diag_order",
    "flip_diagonal",
    "rotate",
    "reflect",
    "enumerate_triangulations",
    "format_triangulation",
    "parse_triangulation",
    "triangles",
    "iter_flips",
]


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    a, b = d1
    c, d = d2
    return a < c < b < d or c < a < d < b


def is_diagonal(d: Diagonal, ngon: int) -> bool:
    a, b = d
    return 0 <= a < b <= ngon - 1 and b - a >= 2 and (a, b) != (0, ngon - 1)


def normalize(a: int, b: int) -> Diagonal:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Triangulation:
    ngon: int
    diagonals: frozenset[Diagonal]

    @classmethod
    def of(cls, ngon: int, diagonals: Iterable[Iterable[int]]) -> "Triangulation":
        return cls(ngon, frozenset(normalize(*d) for d in diagonals))

    def __str__(self) -> str:
        return format_triangulation(self)


def validate(t: Triangulation) -> bool:
    n = t.ngon
    if n < 3 or len(t.diagonals) != n - 3:
        return False
    if not all(is_diagonal(d, n) for d in t.diagonals):
        return False
    ds = sorted(t.diagonals)
    return not any(crosses(ds[i], ds[j]) for i in range(len(ds)) for j in range(i + 1, len(ds)))


def _require_valid(t: Triangulation) -> None:
    if not validate(t):
        raise InvalidTriangulation(f"not a triangulation of the {t.ngon}-gon: {sorted(t.diagonals)}")


def diag_order(t: Triangulation) -> list[Diagonal]:
    """Diagonals by number: larger tail first, ties broken by smaller head."""
    _require_valid(t)
    return sorted(t.diagonals, key=lambda d: (-d[0], d[1]))


def lambda_map(t: Triangulation) -> Partition:
    _require_valid(t)
    return make_partition(a for a, _ in t.diagonals)


def lambda_inverse(p: Partition, ngon: int) -> Triangulation:
    """The unique triangulation of the ``ngon`` whose tails are ``p``.

    Built by peeling the longest row ``b``: the rest is triangulated on the
    polygon with vertex ``b + 1`` cut off, then the ear ``(b, b + 2)`` is
    glued back.
    """
    n = ngon - 2
    require_fits(p, n)
    rows = list(p) + [0] * (n - 1 - len(p))
    diags: list[Diagonal] = []
    # unrolled induction, innermost polygon first: reinsert the cut vertex
    # b + 1 by shifting labels above b, then glue the ear (b, b + 2)
    for b in reversed(rows):
        diags = [(x if x <= b else x + 1, y if y <= b else y + 1) for x, y in diags]
        diags.append((b, b + 2))
    return Triangulation.of(ngon, diags)


def _edges(t: Triangulation) -> set[Diagonal]:
    n = t.ngon
    sides = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return set(t.diagonals) | sides


def _apexes(edges: set[Diagonal], a: int, b: int, ngon: int) -> tuple[int | None, int | None]:
    inner = outer = None
    for c in range(ngon):
        if c in (a, b):
            continue
        if normalize(a, c) in edges and normalize(c, b) in edges:
            if a < c < b:
                if inner is None or c < inner:
                    inner = c
            elif outer is None:
                outer = c
    return inner, outer


def flip_diagonal(t: Triangulation, d: Diagonal) -> Triangulation:
    d = normalize(*d)
    if d not in t.diagonals:
        raise DiagonalAbsent(f"{d} is not a diagonal of the triangulation")
    _require_valid(t)
    inner, outer = _apexes(_edges(t), d[0], d[1], t.ngon)
    # a triangulation has exactly one triangle on each side of a diagonal
    assert inner is not None and outer is not None
    return Triangulation(t.ngon, (t.diagonals - {d}) | {normalize(inner, outer)})


def triangles(t: Triangulation) -> list[tuple[int, int, int]]:
    """All triangles ``(a, b, c)`` with ``a < b < c`` of the triangulation."""
    edges = _edges(t)
    n = t.ngon
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in edges:
                continue
            for c in range(b + 1, n):
                if (b, c) in edges and (a, c) in edges:
                    out.append((a, b, c))
    return out


def rotate(t: Triangulation, times: int = 1) -> Triangulation:
    """Relabel ``v -> v + 1 (mod N)``."""
    n = t.ngon
    return Triangulation.of(n, (((a + times) % n, (b + times) % n) for a, b in t.diagonals))


def reflect(t: Triangulation) -> Triangulation:
    """Reflection fixing the perpendicular bisector of side ``(0, N-1)``."""
    n = t.ngon
    return Triangulation.of(n, ((n - 1 - a, n - 1 - b) for a, b in t.diagonals))


@lru_cache(maxsize=None)
def _triangulate(verts: tuple[int, ...]) -> tuple[frozenset[Diagonal], ...]:
    if len(verts) < 3:
        return (frozenset(),)
    a, b = verts[0], verts[-1]
    out = []
    for i in range(1, len(verts) - 1):
        c = verts[i]
        extra = set()
        if i > 1:
            extra.add(normalize(a, c))
        if i < len(verts) - 2:
            extra.add(normalize(c, b))
        for left in _triangulate(verts[: i + 1]):
            for right in _triangulate(verts[i:]):
                out.append(frozenset(extra) | left | right)
    return tuple(out)


def enumerate_triangulations(ngon: int) -> list[Triangulation]:
    """Every triangulation of the ``ngon``; Catalan(ngon - 2) of them."""
    if ngon < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if ngon > MAX_ENUM_NGON:
        raise BudgetExceeded(f"enumeration limited to N <= {MAX_ENUM_NGON}")
    return [Triangulation(ngon, ds) for ds in _triangulate(tuple(range(ngon)))]


def format_triangulation(t: Triangulation) -> str:
    ds = sorted(t.diagonals, key=lambda d: (-d[0], d[1]))
    return f"{t.ngon}; " + ",".join(f"({a},{b})" for a, b in ds)


_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(text)]
    leftover = _PAIR_RE.sub("", text).replace(",", "").replace(";", "").strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r}")
    return pairs


def parse_triangulation(text: str) -> Triangulation:
    """Parse ``"N; (a,b),(c,d),..."``; diagonals may come in any order."""
    head, sep, body = text.partition(";")
    if not sep:
        raise ParseError(f"expected 'N; (a,b),...' but got {text!r}")
    try:
        ngon = int(head.strip())
    except ValueError as exc:
        raise ParseError(f"bad polygon size in {text!r}") from exc
    return Triangulation.of(ngon, parse_pairs(body))


def iter_flips(t: Triangulation) -> Iterator[tuple[Diagonal, Triangulation]]:
    for d in sorted(t.diagonals):
        yield d, flip_diagonal(t, d)
