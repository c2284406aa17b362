"""Young diagrams as partitions, row flips, heads and the dihedral action.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order; trailing zero rows are implicit.  Row indices in the
public API are 1-based, matching the usual picture of a diagram drawn in
the fourth quadrant with row ``k`` occupying ``-k <= y <= -(k - 1)``.

``Y(n)`` denotes the diagrams sitting weakly above the line ``y = x - n``,
i.e. ``p_i + i <= n`` for every nonzero row.  There are Catalan(n) of them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotInYn, ParseError

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "DihedralElement",
    "make_partition",
    "format_partition",
    "parse_partition",
    "row",
    "fits_in",
    "require_fits",
    "enumerate_yn",
    "flip_row",
    "flip_neighbors",
    "heads",
    "transpose",
    "act_alpha",
    "act_beta",
    "act",
]


def make_partition(rows: Iterable[int]) -> Partition:
    """Canonical partition from any iterable of nonnegative row lengths.

    The rows are sorted decreasingly and zeros are dropped, so the result
    depends only on the multiset of lengths.
    """
    out = []
    for r in rows:
        r = int(r)
        if r < 0:
            raise ValueError(f"negative row length {r}")
        if r:
            out.append(r)
    out.sort(reverse=True)
    return tuple(out)


def format_partition(p: Sequence[int]) -> str:
    return "[" + ",".join(str(r) for r in p) + "]"


_PART_RE = re.compile(r"^\s*[\[(]?\s*([0-9,\s]*)\s*[\])]?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[4,2,2]"`` (brackets optional, zeros allowed)."""
    m = _PART_RE.match(text)
    if m is None:
        raise ParseError(f"cannot parse partition {text!r}")
    body = m.group(1).strip()
    if not body:
        return ()
    try:
        rows = [int(tok) for tok in body.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise ParseError(f"cannot parse partition {text!r}") from exc
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ParseError(f"rows of {text!r} are not weakly decreasing")
    return make_partition(rows)


def row(p: Partition, k: int) -> int:
    """Length of row ``k`` (1-based); rows past the end are zero."""
    return p[k - 1] if 1 <= k <= len(p) else 0


def fits_in(p: Partition, n: int) -> bool:
    return all(r + i <= n for i, r in enumerate(p, start=1))


def require_fits(p: Partition, n: int) -> None:
    if not fits_in(p, n):
        raise NotInYn(f"{format_partition(p)} does not fit in Y_{n}")


def enumerate_yn(n: int) -> Iterator[Partition]:
    """All diagrams of ``Y(n)``, generated directly (no triangulations)."""

    def rec(i: int, cap: int, prefix: list[int]):
        yield tuple(prefix)
        top = min(cap, n - i)
        for r in range(top, 0, -1):
            prefix.append(r)
            yield from rec(i + 1, r, prefix)
            prefix.pop()

    if n < 0:
        return
    yield from rec(1, n, [])


def _replace_row(p: Partition, k: int, new_len: int) -> Partition:
    rows = list(p) + [0] * max(0, k - len(p))
    rows[k - 1] = new_len
    return make_partition(rows)


def flip_length(p: Partition, k: int) -> int:
    """Length of the row inserted by the flip in row ``k``."""
    if k < 1:
        raise ValueError("row index must be >= 1")
    mu_k = row(p, k)
    level = k + mu_k
    if row(p, k + 1) == mu_k:
        # equal rows (including zero rows): walk right and up
        best = 0
        for m in range(k - 1, 0, -1):
            if m + row(p, m) >= level:
                best = m
                break
        return level - best if best else level
    # strictly longer than the next row: walk left and down; zero rows far
    # enough below always qualify, so the scan terminates by m = level
    for m in range(k + 1, level + 1):
        if m + row(p, m) >= level:
            return level - m
    return 0  # pragma: no cover - unreachable


def flip_row(p: Partition, k: int) -> Partition:
    """Flip of the diagram ``p`` in row ``k``.

    >>> flip_row((4, 3, 2), 2)
    (4, 2, 2)
    >>> flip_row((4, 2, 2), 2)
    (4, 3, 2)
    """
    return _replace_row(p, k, flip_length(p, k))


def flip_neighbors(p: Partition, n: int) -> frozenset[Partition]:
    """Diagrams joined to ``p`` by one edge of the flip graph of ``Y(n)``."""
    require_fits(p, n)
    return frozenset(flip_row(p, k) for k in range(1, n))


def heads(p: Partition, n: int) -> tuple[int, ...]:
    """Heads ``l_1..l_{n-1}`` of the diagonals of the triangulation of ``p``.

    The k-th diagonal (in the numbering where tails decrease) has tail
    ``p_k`` and head ``1 + k + p_k - max({m < k : m + p_m > k + p_k} | {0})``.
    """
    require_fits(p, n)
    out = []
    for k in range(1, n):
        level = k + row(p, k)
        best = 0
        for m in range(k - 1, 0, -1):
            if m + row(p, m) > level:
                best = m
                break
        out.append(1 + level - best)
    return tuple(out)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for r in p if r >= c) for c in range(1, p[0] + 1))


def act_alpha(p: Partition, n: int) -> Partition:
    """Reflection across the perpendicular bisector of side ``(0, n+1)``."""
    return make_partition(n + 1 - h for h in heads(p, n))


def act_beta(p: Partition, n: int) -> Partition:
    """Rotation of the ``(n+2)``-gon by one step counter-clockwise."""
    require_fits(p, n)
    out = []
    for i in range(1, n):
        a = row(p, i)
        out.append(a + 1 if a < n - i else 0)
    return make_partition(out)


@dataclass(frozen=True)
class DihedralElement:
    """Element ``alpha^reflect * beta^rotations`` of ``D_{n+2}``.

    Acting on a diagram applies ``beta`` ``rotations`` times first, then
    ``alpha`` if ``reflect`` is set.  ``order`` is ``n + 2``.
    """

    order: int
    reflect: bool = False
    rotations: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "rotations", self.rotations % self.order)

    @classmethod
    def identity(cls, order: int) -> "DihedralElement":
        return cls(order)

    @classmethod
    def alpha(cls, order: int) -> "DihedralElement":
        return cls(order, True, 0)

    @classmethod
    def beta(cls, order: int, power: int = 1) -> "DihedralElement":
        return cls(order, False, power)

    @classmethod
    def from_word(cls, order: int, word: str) -> "DihedralElement":
        """Compose a word over ``a``/``b``/``B`` (``B`` is beta inverse).

        The word reads like function composition: the rightmost letter
        acts first.
        """
        g = cls.identity(order)
        for ch in word.replace(" ", "").replace("*", ""):
            if ch in "aA" or ch == "α":
                h = cls.alpha(order)
            elif ch == "b" or ch == "β":
                h = cls.beta(order)
            elif ch == "B":
                h = cls.beta(order, -1)
            else:
                raise ParseError(f"unknown letter {ch!r} in dihedral word")
            g = g * h
        return g

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if self.order != other.order:
            raise ValueError("cannot compose elements of different dihedral groups")
        # a^x b^r a^y b^s = a^(x+y) b^((-1)^y r + s)
        r = -self.rotations if other.reflect else self.rotations
        return DihedralElement(self.order, self.reflect != other.reflect, r + other.rotations)

    def inverse(self) -> "DihedralElement":
        if self.reflect:
            return self
        return DihedralElement(self.order, False, -self.rotations)

    def __str__(self) -> str:
        parts = []
        if self.reflect:
            parts.append("a")
        if self.rotations:
            parts.append(f"b^{self.rotations}")
        return "*".join(parts) or "e"


def act(g: DihedralElement, p: Partition, n: int) -> Partition:
    if g.order != n + 2:
        raise ValueError(f"element of D_{g.order} cannot act on Y_{n}")
    require_fits(p, n)
    for _ in range(g.rotations):
        p = act_beta(p, n)
    if g.reflect:
        p = act_alpha(p, n)
    return p
