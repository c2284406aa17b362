"""Interval modules over type A quivers and the Caldero-Chapoton map.

Every indecomposable representation of an orientation of ``A_n`` is an
interval module: ``k`` on the vertices ``i..j``, identity maps along the
arrows inside the interval, zero elsewhere.  For a 0/1 dimension vector
each quiver Grassmannian is a point or empty, so its Euler characteristic
is just an admissibility test on the subdimension vector ``e``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cluster import Quiver, Seed, exchange_graph, initial_seed_An, linear_quiver
from .errors import BudgetExceeded, PreconditionError
from .laurent import ZERO, LaurentPoly, format_fraction, format_laurent, x, x_index

MAX_CC_N = 8


def is_type_a(q: Quiver) -> bool:
    """Underlying graph is the path ``1 - 2 - ... - n`` with single arrows."""
    n = q.size
    if q.mutable_count != n:
        return False
    for i in range(n):
        for j in range(n):
            v = abs(int(q.b[i, j]))
            if v != (1 if abs(i - j) == 1 else 0):
                return False
    return True


def orientation_id(q: Quiver) -> str:
    """``R`` for ``k -> k+1`` and ``L`` for ``k+1 -> k``, read along the path."""
    if not is_type_a(q):
        raise PreconditionError("not an orientation of a type A path")
    return "".join("R" if q.b[k, k + 1] > 0 else "L" for k in range(q.size - 1)) or "-"


def quiver_from_orientation(code: str) -> Quiver:
    code = "" if code == "-" else code
    arrows = []
    for k, ch in enumerate(code, start=1):
        if ch == "R":
            arrows.append((k, k + 1))
        elif ch == "L":
            arrows.append((k + 1, k))
        else:
            raise PreconditionError(f"orientation letters are R/L, got {ch!r}")
    n = len(code) + 1
    return Quiver.from_arrows(n, n, arrows)


@dataclass(frozen=True)
class IntervalModule:
    quiver: Quiver
    i: int
    j: int

    def __post_init__(self):
        if not is_type_a(self.quiver):
            raise PreconditionError("interval modules need a type A orientation")
        if not 1 <= self.i <= self.j <= self.quiver.size:
            raise PreconditionError(f"bad interval [{self.i},{self.j}]")

    @property
    def n(self) -> int:
        return self.quiver.size

    @property
    def dim(self) -> tuple[int, ...]:
        return tuple(1 if self.i <= k <= self.j else 0 for k in range(1, self.n + 1))

    def name(self) -> str:
        return f"M[{self.i},{self.j}]@{orientation_id(self.quiver)}"


def positive_roots_An(n: int) -> set[tuple[int, ...]]:
    if not 1 <= n <= MAX_CC_N:
        raise BudgetExceeded(f"root listing limited to 1 <= n <= {MAX_CC_N}")
    return {tuple(1 if i <= k <= j else 0 for k in range(1, n + 1)) for i in range(1, n + 1) for j in range(i, n + 1)}


def indecomposables(q: Quiver) -> list[IntervalModule]:
    n = q.size
    return [IntervalModule(q, i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def grassmannian_chi(V: IntervalModule, e) -> int:
    e = tuple(int(v) for v in e)
    d = V.dim
    if len(e) != len(d) or any(not 0 <= a <= b for a, b in zip(e, d)):
        raise PreconditionError(f"need 0 <= e <= {d}, got {e}")
    for s, t, _ in V.quiver.arrows():
        # the map along s -> t is the identity when both ends are in the support
        if d[s - 1] and d[t - 1] and e[s - 1] and not e[t - 1]:
            return 0
    return 1


def cc_terms(V: IntervalModule) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Admissible ``e`` together with the exponent vector of its numerator term."""
    d = V.dim
    n = V.n
    arrows = V.quiver.arrows()
    out = []
    for e in itertools.product(*(range(dk + 1) for dk in d)):
        if not grassmannian_chi(V, e):
            continue
        exps = [0] * n
        for s, t, mult in arrows:
            # x_t collects e_s over arrows s -> t; x_s collects d_t - e_t
            exps[t - 1] += mult * e[s - 1]
            exps[s - 1] += mult * (d[t - 1] - e[t - 1])
        out.append((e, tuple(exps)))
    return out


def cc_map(V: IntervalModule) -> LaurentPoly:
    if V.n > MAX_CC_N:
        raise BudgetExceeded(f"CC map limited to n <= {MAX_CC_N}")
    d = V.dim
    total = ZERO
    for _, exps in cc_terms(V):
        total = total + LaurentPoly.monomial({x_index(k + 1): exps[k] - d[k] for k in range(V.n)})
    return total


def denominator_vector(p: LaurentPoly, n: int) -> tuple[int, ...]:
    """``d_i = max(0, -min exponent of x_i)``; initial variables give zeros."""
    return tuple(max(0, -p.min_exponent(x_index(i))) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# verification


@dataclass
class Row:
    module: str
    dim: tuple[int, ...]
    denominator: tuple[int, ...] | None
    cc: str
    matched: str | None
    ok: bool


@dataclass
class CCReport:
    n: int
    orientation: str
    rows: list[Row] = field(default_factory=list)
    bijective: bool = False

    @property
    def ok(self) -> bool:
        return self.bijective and all(r.ok for r in self.rows)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "orientation": self.orientation,
            "ok": self.ok,
            "bijective": self.bijective,
            "rows": [r.__dict__ | {"dim": list(r.dim), "denominator": r.denominator and list(r.denominator)} for r in self.rows],
        }


def non_initial_by_denominator(seed: Seed) -> dict[tuple[int, ...], list[LaurentPoly]]:
    n = seed.rank
    initial = set(seed.vars)
    out: dict[tuple[int, ...], list[LaurentPoly]] = {}
    for v in exchange_graph(seed).cluster_variables():
        if v in initial:
            continue
        out.setdefault(denominator_vector(v, n), []).append(v)
    return out


def cc_report(seed: Seed, modules: list[IntervalModule], n: int, orientation: str) -> CCReport:
    found = non_initial_by_denominator(seed)
    rep = CCReport(n, orientation)
    used = set()
    for V in modules:
        cc = cc_map(V)
        cands = found.get(V.dim, [])
        match = cands[0] if len(cands) == 1 else None
        ok = match is not None and match == cc
        if match is not None:
            used.add(match)
        rep.rows.append(Row(V.name(), V.dim, V.dim if match is not None else None, format_fraction(cc), match and format_fraction(match), ok))
    all_found = {v for vs in found.values() for v in vs}
    rep.bijective = used == all_found and len(used) == len(modules)
    return rep


def verify_cc_theorem(n: int, orientation: str | None = None) -> CCReport:
    """Compare ``CC(V)`` with the non-initial cluster variable of denominator ``dim V``."""
    if not 1 <= n <= 4:
        raise BudgetExceeded("CC verification limited to 1 <= n <= 4")
    q = linear_quiver(n) if orientation is None else quiver_from_orientation(orientation)
    if q.size != n:
        raise PreconditionError("orientation length does not match n")
    seed = Seed(q, tuple(x(i) for i in range(1, n + 1)))
    return cc_report(seed, indecomposables(q), n, orientation_id(q))


def pad_module(V: IntervalModule, N: int) -> IntervalModule:
    """Same interval over ``A_N``: zero spaces and arrows ``k-1 -> k`` for ``k > n``."""
    if N < V.n:
        raise PreconditionError("cannot pad to a smaller quiver")
    code = orientation_id(V.quiver).strip("-") + "R" * (N - V.n)
    return IntervalModule(quiver_from_orientation(code or "-"), V.i, V.j)


@dataclass
class ExtensionRow:
    module: str
    small: str
    padded: str
    identical: bool


@dataclass
class ExtensionReport:
    n: int
    N: int
    rows: list[ExtensionRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.identical for r in self.rows)

    def failures(self) -> list[ExtensionRow]:
        return [r for r in self.rows if not r.identical]


def _check_extension_range(n: int, N: int) -> None:
    if not 1 <= n < N <= MAX_CC_N:
        raise PreconditionError(f"need 1 <= n < N <= {MAX_CC_N}")


def infinite_extension_check(n: int, N: int) -> ExtensionReport:
    """Is ``CC`` of every ``A_n`` indecomposable textually unchanged after
    zero-padding to ``A_N``?

    It is not for intervals ending at ``n``: the new arrow ``n -> n+1``
    puts ``x_{n+1}^{e_n}`` into the numerator.
    """
    _check_extension_range(n, N)
    rep = ExtensionReport(n, N)
    for V in indecomposables(linear_quiver(n)):
        a, b = format_laurent(cc_map(V)), format_laurent(cc_map(pad_module(V, N)))
        rep.rows.append(ExtensionRow(V.name(), a, b, a == b))
    return rep


def stable_extension_check(n: int, N: int) -> ExtensionReport:
    """Padding is stable from ``A_{n+1}`` on, and matches the ``A_oo`` variable.

    For every ``A_n`` indecomposable, ``CC`` over ``A_N`` must equal ``CC``
    over ``A_{n+1}`` and the cluster variable of the same denominator in the
    window seed where ``x_1..x_n`` are mutable and ``x_{n+1}`` stays
    untouched (vertex ``n + 1`` frozen).
    """
    _check_extension_range(n, N)
    window = Quiver.from_arrows(n + 1, n, [(k, k + 1) for k in range(1, n + 1)])
    seed = Seed(window, tuple(x(i) for i in range(1, n + 1)), (x(n + 1),))
    found = non_initial_by_denominator(seed)
    rep = ExtensionReport(n, N)
    for V in indecomposables(linear_quiver(n)):
        near = cc_map(pad_module(V, n + 1))
        far = cc_map(pad_module(V, N))
        cands = found.get(V.dim, [])
        same = near == far and len(cands) == 1 and cands[0] == far
        rep.rows.append(ExtensionRow(V.name(), format_laurent(near), format_laurent(far), same))
    return rep


def variable_census(n: int) -> dict:
    """Counts for the ``A_n`` closure: variables, and non-initial denominators vs roots."""
    seed = initial_seed_An(n)
    g = exchange_graph(seed)
    vs = g.cluster_variables()
    non_initial = [v for v in vs if v not in set(seed.vars)]
    dens = [denominator_vector(v, n) for v in non_initial]
    return {
        "variables": len(vs),
        "non_initial": len(non_initial),
        "denominators": set(dens),
        "distinct_denominators": len(set(dens)) == len(dens),
        "roots": positive_roots_An(n),
    }
