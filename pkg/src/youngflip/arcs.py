"""Arcs between non-neighbouring integers, non-crossing collections and flips.

Infinite collections are described by a family formula and only ever
looked at through a finite window ``[lo, hi]``.  Inside a window the points
``lo..hi`` are the vertices of a convex polygon: unit pairs ``(k, k+1)``
are its sides and the hull pair ``(lo, hi)`` closes it up.  A collection is
maximal in the window when its arcs (hull excluded) triangulate that
polygon, and a flip is the polygon flip.

The hull is only a real side when the collection actually contains the
arc ``(lo, hi)``.  ``flip_arc(..., strict=True)`` refuses flips whose
quadrilateral leans on a hull that is not an arc, because the true
neighbours may lie outside the window.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BudgetExceeded, NoUniqueReplacement, PreconditionError, UnknownFormat
from .triangulation import Triangulation, enumerate_triangulations, flip_diagonal, parse_pairs, validate

Arc = tuple[int, int]

KINDS = ("explicit", "fountain_T0", "leapfrog_T0prime", "fountain_spaced", "leapfrog_shifted")


def make_arc(m: int, n: int) -> Arc:
    if m > n:
        m, n = n, m
    if n - m < 2:
        raise PreconditionError(f"({m},{n}) joins neighbouring integers")
    return (m, n)


def crossing(a: Arc, b: Arc) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def format_arc(a: Arc) -> str:
    return f"({a[0]},{a[1]})"


def format_arcs(arcs: Iterable[Arc]) -> str:
    return "{" + ", ".join(format_arc(a) for a in sorted(arcs)) + "}"


def window_arcs(lo: int, hi: int) -> list[Arc]:
    """Every arc with both ends in ``[lo, hi]``, the hull ``(lo, hi)`` excluded."""
    return [(m, n) for m in range(lo, hi + 1) for n in range(m + 2, hi + 1) if (m, n) != (lo, hi)]


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class ArcFamily:
    kind: str
    center: int | None = None
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownFormat(f"unknown arc family kind {self.kind!r}")
        if self.kind in ("fountain_T0", "fountain_spaced") and self.center is None:
            raise PreconditionError(f"{self.kind} needs a center")

    def __str__(self) -> str:
        return {
            "fountain_T0": f"fountain:{self.center}",
            "fountain_spaced": f"fountain-spaced:{self.center}",
            "leapfrog_T0prime": "leapfrog",
            "leapfrog_shifted": "leapfrog-shifted",
        }.get(self.kind, "explicit:" + format_arcs(self.arcs))


def fountain_T0(center: int) -> ArcFamily:
    return ArcFamily("fountain_T0", center)


def fountain_spaced(center: int) -> ArcFamily:
    return ArcFamily("fountain_spaced", center)


def leapfrog_T0prime() -> ArcFamily:
    return ArcFamily("leapfrog_T0prime")


def leapfrog_shifted() -> ArcFamily:
    return ArcFamily("leapfrog_shifted")


def explicit(arcs: Iterable[Iterable[int]]) -> ArcFamily:
    return ArcFamily("explicit", None, frozenset(make_arc(*a) for a in arcs))


_FAMILY_RE = re.compile(r"^(fountain|fountain-spaced):(-?\d+)$")


def parse_family(text: str) -> ArcFamily:
    text = text.strip()
    if text == "leapfrog":
        return leapfrog_T0prime()
    if text == "leapfrog-shifted":
        return leapfrog_shifted()
    m = _FAMILY_RE.match(text)
    if m:
        c = int(m.group(2))
        return fountain_T0(c) if m.group(1) == "fountain" else fountain_spaced(c)
    if text.startswith("explicit:"):
        return explicit(parse_pairs(text[len("explicit:"):].strip().strip("{}")))
    raise UnknownFormat(f"unknown family {text!r}")


def materialize(f: ArcFamily, lo: int, hi: int) -> frozenset[Arc]:
    """Family arcs with both endpoints in ``[lo, hi]``."""
    if lo >= hi:
        raise PreconditionError("need lo < hi")
    inside = lambda a: lo <= a[0] and a[1] <= hi  # noqa: E731
    span = hi - lo + 2
    out: set[Arc] = set()
    c = f.center
    if f.kind == "explicit":
        out = set(f.arcs)
    elif f.kind == "fountain_T0":
        for i in range(1, span + 1):
            out |= {(c - i - 1, c), (c, c + i + 1)}
    elif f.kind == "fountain_spaced":
        for k in range(0, span + 1):
            for a in ((c, c + 2 * k), (c - 2 * k, c), (c - 2 * (k + 1), c - 2 * k), (c + 2 * k, c + 2 * (k + 1))):
                if a[1] - a[0] >= 2:
                    out.add(a)
    elif f.kind == "leapfrog_T0prime":
        for n in range(1, span + abs(lo) + abs(hi) + 1):
            out |= {(-n, n), (-n, n + 1)}
    elif f.kind == "leapfrog_shifted":
        for n in range(1, span + abs(lo) + abs(hi) + 1):
            out |= {(-n, n), (-(n + 1), n)}
    return frozenset(a for a in out if inside(a))


def endpoint_multiplicity(f: ArcFamily, v: int) -> tuple[float, float]:
    """``(#arcs (m, v), #arcs (v, p))`` in closed form; ``inf`` when unbounded."""
    inf = math.inf
    c = f.center
    if f.kind == "fountain_T0":
        if v == c:
            return inf, inf
        return (1.0, 0.0) if v - c >= 2 else (0.0, 1.0) if c - v >= 2 else (0.0, 0.0)
    if f.kind == "fountain_spaced":
        if v == c:
            return inf, inf
        if (v - c) % 2:
            return 0.0, 0.0
        # the spoke to c, plus chain links to v -+ 2 (the first link is the spoke)
        if v > c:
            return (1.0 if v == c + 2 else 2.0), 1.0
        return 1.0, (1.0 if v == c - 2 else 2.0)
    if f.kind == "leapfrog_T0prime":
        # (-n, n) and (-n, n + 1): v > 0 ends (-v, v) and (-(v-1), v); v < 0 starts two
        if v > 0:
            return (1.0 + (1.0 if v >= 2 else 0.0), 0.0)
        return (0.0, 2.0) if v < 0 else (0.0, 0.0)
    if f.kind == "leapfrog_shifted":
        # (-n, n) and (-(n + 1), n)
        if v > 0:
            return 2.0, 0.0
        if v < 0:
            return 0.0, 1.0 + (1.0 if v <= -2 else 0.0)
        return 0.0, 0.0
    raise PreconditionError("explicit families carry finite data and are not classified")


def classify(f: ArcFamily) -> tuple[str, int | None]:
    """``("fountain", n)`` or ``("locally_finite", None)``."""
    if f.kind == "explicit":
        raise PreconditionError("explicit families carry finite data and are not classified")
    # only the center can carry infinitely many arcs; every other point is
    # bounded by the closed forms above
    if f.center is not None:
        left, right = endpoint_multiplicity(f, f.center)
        if math.isinf(left) and math.isinf(right):
            return "fountain", f.center
    return "locally_finite", None


# ---------------------------------------------------------------------------
# windowed collections


def is_noncrossing(arcs: Iterable[Arc]) -> bool:
    a = sorted(arcs)
    return not any(crossing(a[i], a[j]) for i in range(len(a)) for j in range(i + 1, len(a)))


def is_window_maximal(arcs: Iterable[Arc], lo: int, hi: int) -> bool:
    arcs = set(arcs)
    if not is_noncrossing(arcs):
        return False
    return all(any(crossing(w, a) for a in arcs) for w in window_arcs(lo, hi) if w not in arcs)


def to_triangulation(arcs: Iterable[Arc], lo: int, hi: int) -> Triangulation:
    diags = [(a - lo, b - lo) for a, b in arcs if lo <= a and b <= hi and (a, b) != (lo, hi)]
    return Triangulation.of(hi - lo + 1, diags)


def from_triangulation(t: Triangulation, lo: int = 0) -> frozenset[Arc]:
    return frozenset((a + lo, b + lo) for a, b in t.diagonals)


def _quad(t: Triangulation, d: tuple[int, int]) -> tuple[int, int]:
    flipped = flip_diagonal(t, d)
    (e,) = flipped.diagonals - t.diagonals
    return e


def flip_arc(collection: Iterable[Arc], a: Arc, window: tuple[int, int], strict: bool = False) -> frozenset[Arc]:
    """Replace ``a`` by the other diagonal of its quadrilateral in the window."""
    lo, hi = window
    coll = frozenset(collection)
    a = tuple(a)
    if a not in coll:
        raise PreconditionError(f"{format_arc(a)} is not in the collection")
    if a == (lo, hi):
        raise PreconditionError("the hull arc bounds the window and cannot be flipped")
    if any(b < lo or b > hi for arc in coll for b in arc):
        raise PreconditionError("collection leaves the window")
    t = to_triangulation(coll, lo, hi)
    if not validate(t):
        raise PreconditionError("collection is not maximal non-crossing in the window")
    d = (a[0] - lo, a[1] - lo)
    e = _quad(t, d)
    if strict and (lo, hi) not in coll:
        # the quadrilateral is {a0, a1, e0, e1}; it leans on the hull iff it has both lo and hi
        corners = {d[0], d[1], e[0], e[1]}
        if 0 in corners and hi - lo in corners:
            raise NoUniqueReplacement(f"flip of {format_arc(a)} depends on points outside [{lo},{hi}]")
    new = (e[0] + lo, e[1] + lo)
    return (coll - {a}) | {new}


@dataclass
class ReachabilityReport:
    center: int
    window: tuple[int, int]
    budget: int
    collections: int
    reached: set[Arc]
    violating: set[Arc]
    not_yet_reached: set[Arc]
    skipped_flips: int

    @property
    def ok(self) -> bool:
        return not self.violating

    def to_record(self) -> dict:
        return {
            "center": self.center,
            "window": list(self.window),
            "budget": self.budget,
            "collections": self.collections,
            "sign_condition": self.ok,
            "violating": [format_arc(a) for a in sorted(self.violating)],
            "reached": [format_arc(a) for a in sorted(self.reached)],
            "not_yet_reached": [format_arc(a) for a in sorted(self.not_yet_reached)],
            "skipped_flips": self.skipped_flips,
        }


def reachability_window_check(f: ArcFamily, window: tuple[int, int], budget: int, max_collections: int = 10**5) -> ReachabilityReport:
    """Flip search from a fountain family inside ``window``.

    ``ok`` is the sign condition: no arc ``(k, l)`` seen in a descendant of
    at most ``budget`` flips has ``(k - c)(l - c) < 0``.  Arcs meeting the
    condition are split into reached / not yet reached.
    """
    kind, c = classify(f)
    if kind != "fountain":
        raise PreconditionError("reachability is checked for fountain families")
    lo, hi = window
    if not lo < c < hi:
        raise PreconditionError("the window must contain the fountain center")
    start = materialize(f, lo, hi)
    if not is_window_maximal(start, lo, hi):
        raise PreconditionError("family is not maximal in this window")
    seen = {start}
    frontier = [start]
    skipped = 0
    for _ in range(budget):
        nxt = []
        for coll in frontier:
            for a in sorted(coll):
                if a == (lo, hi):
                    continue
                try:
                    new = flip_arc(coll, a, window, strict=True)
                except NoUniqueReplacement:
                    skipped += 1
                    continue
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
                    if len(seen) > max_collections:
                        raise BudgetExceeded(f"more than {max_collections} collections")
        frontier = nxt
    arcs = set().union(*seen)
    sign_ok = lambda arc: (arc[0] - c) * (arc[1] - c) >= 0  # noqa: E731
    legal = {w for w in window_arcs(lo, hi) if sign_ok(w)}
    return ReachabilityReport(
        center=c,
        window=(lo, hi),
        budget=budget,
        collections=len(seen),
        reached=arcs & legal,
        violating={a for a in arcs if not sign_ok(a)},
        not_yet_reached=legal - arcs,
        skipped_flips=skipped,
    )


def flip_agrees_with_triangulation(ngon: int) -> bool:
    """On points ``0..N-1`` arc flips and polygon flips coincide."""
    for t in enumerate_triangulations(ngon):
        coll = from_triangulation(t)
        for d in sorted(t.diagonals):
            if from_triangulation(flip_diagonal(t, d)) != flip_arc(coll, d, (0, ngon - 1)):
                return False
    return True
