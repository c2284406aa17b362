"""Quivers, seeds, mutation and exchange graphs.

A quiver on ``m`` vertices with ``n`` mutable ones is stored as a skew
symmetric integer matrix ``b`` (``b[i, j] > 0`` means ``b[i, j]`` arrows
``i -> j``).  Mutable vertices come first.  Vertex numbers in the public
API are 1-based; frozen vertex ``n + t`` is the ``t``-th frozen vertex.

Two mutation routines are kept on purpose: :func:`mutate_quiver` uses the
matrix rule through the compiled kernel, :func:`mutate_quiver_pictorial`
works on the arrow multiset (compose paths through ``k``, reverse arrows
at ``k``, cancel 2-cycles).  Tests compare them on random quivers.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, FrozenVertex, InvalidTriangulation, PreconditionError
from .flipgraph import LabeledGraph, build_flip_graph, labeled
from .partitions import transpose
from .laurent import (
    ONE,
    LaurentPoly,
    c,
    div_exact,
    forget_coefficients,
    format_laurent,
    parse_laurent,
    x,
)
from .triangulation import (
    Diagonal,
    Triangulation,
    diag_order,
    flip_diagonal,
    lambda_inverse,
    lambda_map,
    triangles,
    validate,
)

DEFAULT_BUDGET = 10**4


# ---------------------------------------------------------------------------
# quivers


@dataclass(frozen=True, eq=False)
class Quiver:
    b: np.ndarray
    mutable_count: int

    def __post_init__(self):
        b = np.array(self.b, dtype=np.int64)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise PreconditionError("exchange matrix must be square")
        if not (b == -b.T).all():
            raise PreconditionError("exchange matrix must be skew-symmetric")
        n = self.mutable_count
        if not 0 <= n <= b.shape[0]:
            raise PreconditionError("mutable_count out of range")
        if b[n:, n:].any():
            raise PreconditionError("arrows between frozen vertices are not allowed")
        b.setflags(write=False)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_arrows(cls, size: int, mutable_count: int, arrows: Iterable[tuple[int, int]]) -> "Quiver":
        """Build from 1-based arrows ``(i, j)``; repeats add multiplicity."""
        b = np.zeros((size, size), dtype=np.int64)
        for i, j in arrows:
            if i == j:
                raise PreconditionError("loops are not allowed")
            b[i - 1, j - 1] += 1
            b[j - 1, i - 1] -= 1
        return cls(b, mutable_count)

    @property
    def size(self) -> int:
        return self.b.shape[0]

    def arrows(self) -> list[tuple[int, int, int]]:
        """``(i, j, multiplicity)`` for every arrow, 1-based, sorted."""
        m = self.size
        return [(i + 1, j + 1, int(self.b[i, j])) for i in range(m) for j in range(m) if self.b[i, j] > 0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.mutable_count == other.mutable_count and np.array_equal(self.b, other.b)

    def __hash__(self) -> int:
        return hash((self.mutable_count, self.b.shape, self.b.tobytes()))

    def __repr__(self) -> str:
        return f"Quiver(size={self.size}, mutable={self.mutable_count}, arrows={self.arrows()})"


def _check_mutable(q: Quiver, k: int) -> None:
    if not 1 <= k <= q.mutable_count:
        raise FrozenVertex(f"vertex {k} is frozen or out of range (mutable: 1..{q.mutable_count})")


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    _check_mutable(q, k)
    return Quiver(_kernels.mutate_matrix(q.b, k - 1, q.mutable_count), q.mutable_count)


def mutate_quiver_pictorial(q: Quiver, k: int) -> Quiver:
    """Mutation on the arrow multiset, independent of the matrix formula."""
    _check_mutable(q, k)
    n, m = q.mutable_count, q.size
    count: Counter = Counter()
    for i, j, mult in q.arrows():
        count[(i, j)] += mult
    ins = [(i, mult) for (i, j), mult in count.items() if j == k]
    outs = [(j, mult) for (i, j), mult in count.items() if i == k]
    new: Counter = Counter()
    # every path i -> k -> j contributes an arrow i -> j
    for i, a in ins:
        for j, b in outs:
            new[(i, j)] += a * b
    for (i, j), mult in count.items():
        if i == k or j == k:
            new[(j, i)] += mult
        else:
            new[(i, j)] += mult
    arrows = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if i > n and j > n:
                continue  # frozen pairs carry no arrows
            net = new[(i, j)] - new[(j, i)]  # remove 2-cycles
            if net > 0:
                arrows += [(i, j)] * net
            elif net < 0:
                arrows += [(j, i)] * (-net)
    return Quiver.from_arrows(m, n, arrows)


def quiver_isomorphism(q1: Quiver, q2: Quiver) -> list[int] | None:
    """A 1-based vertex map ``f`` with ``b1[i, j] == b2[f(i), f(j)]``.

    Mutable vertices go to mutable ones and frozen to frozen.
    """
    if q1.size != q2.size or q1.mutable_count != q2.mutable_count:
        return None
    perm = _kernels.find_isomorphism(q1.b, q2.b, q1.mutable_count)
    if perm is None:
        return None
    return [int(p) + 1 for p in perm]


def quiver_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    return quiver_isomorphism(q1, q2) is not None


def quiver_isomorphic_bruteforce(q1: Quiver, q2: Quiver) -> bool:
    """Try every permutation; only for small quivers."""
    if q1.size != q2.size or q1.mutable_count != q2.mutable_count:
        return False
    n, m = q1.mutable_count, q1.size
    if m > 9:
        raise BudgetExceeded("brute-force isomorphism limited to 9 vertices")
    for pm in itertools.permutations(range(n)):
        for pf in itertools.permutations(range(n, m)):
            p = list(pm) + list(pf)
            if np.array_equal(q1.b, q2.b[np.ix_(p, p)]):
                return True
    return False


# ---------------------------------------------------------------------------
# seeds


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    vars: tuple[LaurentPoly, ...]
    coeffs: tuple[LaurentPoly, ...] = ()

    def __post_init__(self):
        q = self.quiver
        if len(self.vars) != q.mutable_count or len(self.coeffs) != q.size - q.mutable_count:
            raise PreconditionError("seed needs one variable per mutable and one symbol per frozen vertex")

    @property
    def rank(self) -> int:
        return self.quiver.mutable_count

    def cluster(self) -> frozenset[LaurentPoly]:
        return frozenset(self.vars)

    def value(self, v: int) -> LaurentPoly:
        """Variable (mutable) or coefficient (frozen) at 1-based vertex ``v``."""
        n = self.rank
        return self.vars[v - 1] if v <= n else self.coeffs[v - n - 1]

    def to_record(self) -> dict:
        return {
            "matrix": self.quiver.b.tolist(),
            "mutable_count": self.rank,
            "vars": [format_laurent(v) for v in self.vars],
            "coeffs": [format_laurent(v) for v in self.coeffs],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Seed":
        q = Quiver(np.array(rec["matrix"], dtype=np.int64), int(rec["mutable_count"]))
        return cls(q, tuple(map(parse_laurent, rec["vars"])), tuple(map(parse_laurent, rec["coeffs"])))


def exchange_binomial(s: Seed, k: int) -> LaurentPoly:
    """Product over arrows into ``k`` plus product over arrows out of ``k``."""
    b = s.quiver.b
    into = out = ONE
    for i in range(s.quiver.size):
        e = int(b[i, k - 1])
        if e > 0:
            into = into * s.value(i + 1) ** e
        elif e < 0:
            out = out * s.value(i + 1) ** (-e)
    return into + out


def mutate_seed(s: Seed, k: int) -> Seed:
    _check_mutable(s.quiver, k)
    new_var = div_exact(exchange_binomial(s, k), s.vars[k - 1])
    vars_ = s.vars[: k - 1] + (new_var,) + s.vars[k:]
    return Seed(mutate_quiver(s.quiver, k), vars_, s.coeffs)


def mutate_sequence(s: Seed, ks: Iterable[int]) -> Seed:
    """Apply ``mu_k`` for each ``k`` in order (first element first)."""
    for k in ks:
        s = mutate_seed(s, k)
    return s


def _plain_seed(q: Quiver) -> Seed:
    return Seed(q, tuple(x(i) for i in range(1, q.mutable_count + 1)))


def linear_quiver(n: int) -> Quiver:
    return Quiver.from_arrows(n, n, [(i, i + 1) for i in range(1, n)])


def initial_seed_An(n: int) -> Seed:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    return _plain_seed(linear_quiver(n))


def ice_arrows_An(n: int) -> list[tuple[str, int, str, int]]:
    """Arrows of the coefficient quiver as ``(kind, index, kind, index)``."""
    out = [("c", 1, "x", 1), ("x", n, "c", n + 3)]
    for k in range(1, n + 1):
        if k < n:
            out.append(("x", k, "x", k + 1))
        out.append(("x", k, "c", k + 1))
        out.append(("c", k + 2, "x", k))
    return out


def initial_seed_An_ice(n: int) -> Seed:
    """``A_n`` with ``n + 3`` frozen vertices ``c_1 .. c_{n+3}``.

    ``c_{k+1}`` and ``c_{k+2}`` sit under ``x_k`` forming oriented triangles
    with the chain; ``c_1`` feeds ``x_1`` and ``x_n`` feeds ``c_{n+3}``.
    This is the dual quiver of the fan triangulation at vertex 0.
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    pos = lambda kind, i: i if kind == "x" else n + i  # noqa: E731
    arrows = [(pos(a, i), pos(b, j)) for a, i, b, j in ice_arrows_An(n)]
    q = Quiver.from_arrows(2 * n + 3, n, arrows)
    return Seed(q, tuple(x(i) for i in range(1, n + 1)), tuple(c(j) for j in range(1, n + 4)))


def initial_seed_Dinfty_window(N: int) -> Seed:
    """Vertices 1 and 2 both point at 3, then ``3 -> 4 -> ... -> N``."""
    if N < 3:
        raise PreconditionError("the D window needs at least 3 vertices")
    arrows = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, N)]
    return _plain_seed(Quiver.from_arrows(N, N, arrows))


# ---------------------------------------------------------------------------
# triangulations


def polygon_sides(ngon: int) -> list[Diagonal]:
    """Sides in frozen order: ``(j-1, j)`` for ``j = 1..N-1``, then ``(0, N-1)``."""
    return [(j - 1, j) for j in range(1, ngon)] + [(0, ngon - 1)]


def triangulation_vertices(t: Triangulation) -> list[Diagonal]:
    """Quiver vertex order: diagonals by number, then the sides."""
    return diag_order(t) + polygon_sides(t.ngon)


def triangulation_to_ice_quiver(t: Triangulation) -> Seed:
    """Dual quiver: within each triangle ``a < b < c`` the arrows run
    ``(a,b) -> (a,c) -> (b,c) -> (a,b)``, counter-clockwise."""
    if not validate(t):
        raise InvalidTriangulation(f"not a triangulation: {sorted(t.diagonals)}")
    verts = triangulation_vertices(t)
    index = {e: i + 1 for i, e in enumerate(verts)}
    n = t.ngon - 3
    arrows = []
    for a, b_, c_ in triangles(t):
        cyc = [(a, b_), (a, c_), (b_, c_)]
        for s, u in zip(cyc, cyc[1:] + cyc[:1]):
            i, j = index[s], index[u]
            if i > n and j > n:
                continue
            arrows.append((i, j))
    q = Quiver.from_arrows(len(verts), n, arrows)
    return Seed(q, tuple(x(i) for i in range(1, n + 1)), tuple(c(j) for j in range(1, t.ngon + 1)))


def labeled_arrows(q: Quiver, labels: Sequence) -> Counter:
    return Counter({(labels[i - 1], labels[j - 1]): m for i, j, m in q.arrows()})


def flip_mutation_check(t: Triangulation) -> bool:
    """Each diagonal flip of ``t`` matches mutation of its dual quiver."""
    seed = triangulation_to_ice_quiver(t)
    verts = triangulation_vertices(t)
    for k, d in enumerate(diag_order(t), start=1):
        t2 = flip_diagonal(t, d)
        new_d = next(iter(t2.diagonals - t.diagonals))
        labels = list(verts)
        labels[k - 1] = new_d
        mutated = labeled_arrows(mutate_quiver(seed.quiver, k), labels)
        target = labeled_arrows(triangulation_to_ice_quiver(t2).quiver, triangulation_vertices(t2))
        if mutated != target:
            return False
    return True


# ---------------------------------------------------------------------------
# exchange graphs


@dataclass
class ExchangeGraph:
    seeds: dict[frozenset, Seed] = field(default_factory=dict)
    edges: set[frozenset] = field(default_factory=set)

    def cluster_variables(self) -> set[LaurentPoly]:
        return {v for key in self.seeds for v in key}

    def adjacency(self) -> dict[frozenset, set[frozenset]]:
        adj: dict[frozenset, set[frozenset]] = {k: set() for k in self.seeds}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj


def exchange_graph(seed: Seed, budget: int = DEFAULT_BUDGET) -> ExchangeGraph:
    """Closure of ``seed`` under mutation; seeds are identified by cluster."""
    g = ExchangeGraph()
    start = seed.cluster()
    g.seeds[start] = seed
    todo = deque([seed])
    while todo:
        s = todo.popleft()
        key = s.cluster()
        for k in range(1, s.rank + 1):
            t = mutate_seed(s, k)
            tk = t.cluster()
            if tk not in g.seeds:
                if len(g.seeds) >= budget:
                    raise BudgetExceeded(f"exchange graph exceeds {budget} seeds")
                g.seeds[tk] = t
                todo.append(t)
            g.edges.add(frozenset((key, tk)))
    return g


def _cluster_label(key: frozenset) -> str:
    return "{" + ", ".join(sorted(format_laurent(v) for v in key)) + "}"


def exchange_graph_labeled(g: ExchangeGraph, name: str = "exchange_graph") -> LabeledGraph:
    pairs = [tuple(e) for e in g.edges]
    return labeled(name, g.seeds, pairs, _cluster_label, meta={"kind": "exchange-graph", "seeds": len(g.seeds)})


def fan_triangulation(ngon: int) -> Triangulation:
    return Triangulation.of(ngon, [(0, j) for j in range(2, ngon - 1)])


def exchange_to_flip_map(n: int, budget: int = DEFAULT_BUDGET) -> tuple[ExchangeGraph, dict[frozenset, tuple]]:
    """Exchange graph of ``A_n`` with the partition attached to each seed.

    The initial seed is matched with the fan at vertex 0 of the
    ``(n + 3)``-gon (``x_k`` with diagonal ``(0, k + 1)``); mutation at
    ``k`` is matched with flipping the diagonal carried by ``k``.
    """
    start = initial_seed_An(n)
    fan = fan_triangulation(n + 3)
    labels0 = tuple((0, k + 1) for k in range(1, n + 1))
    g = ExchangeGraph()
    g.seeds[start.cluster()] = start
    tri: dict[frozenset, Triangulation] = {start.cluster(): fan}
    todo = deque([(start, fan, labels0)])
    while todo:
        s, t, labels = todo.popleft()
        key = s.cluster()
        for k in range(1, n + 1):
            s2 = mutate_seed(s, k)
            t2 = flip_diagonal(t, labels[k - 1])
            new_d = next(iter(t2.diagonals - t.diagonals))
            labels2 = labels[: k - 1] + (new_d,) + labels[k:]
            k2 = s2.cluster()
            if k2 in tri:
                if tri[k2] != t2:
                    raise AssertionError("one cluster matched with two triangulations")
            else:
                if len(g.seeds) >= budget:
                    raise BudgetExceeded(f"exchange graph exceeds {budget} seeds")
                tri[k2] = t2
                g.seeds[k2] = s2
                todo.append((s2, t2, labels2))
            g.edges.add(frozenset((key, k2)))
    return g, {key: lambda_map(t) for key, t in tri.items()}


def exchange_graph_is_associahedron(n: int) -> bool:
    """Check the exchange graph of ``A_n`` against the flip graph of ``Y(n+1)``
    through the explicit seed -> triangulation -> partition map."""
    if n > 4:
        raise BudgetExceeded("associahedron comparison limited to n <= 4")
    g, part = exchange_to_flip_map(n)
    fg = build_flip_graph(n + 1)
    if len(set(part.values())) != len(part) or set(part.values()) != set(fg.vertices):
        return False
    mapped = set()
    for e in g.edges:
        a, b = tuple(e)
        p, q = part[a], part[b]
        mapped.add((p, q) if p <= q else (q, p))
    return len(g.edges) == len(fg.edges) and mapped == set(fg.edges)


def coefficient_free_check(n: int) -> bool:
    """Forgetting the coefficients of the ice seed does not change the exchange graph."""
    ice = exchange_graph(initial_seed_An_ice(n))
    plain = exchange_graph(initial_seed_An(n))
    forget = {key: frozenset(forget_coefficients(v) for v in key) for key in ice.seeds}
    if len(set(forget.values())) != len(forget) or set(forget.values()) != set(plain.seeds):
        return False
    image = {frozenset(forget[k] for k in e) for e in ice.edges}
    return image == plain.edges


def gsv_closure_check(n: int) -> bool:
    """Exhaustive on the ``A_n`` closure: a cluster fixes its seed, and two
    seeds are one mutation apart iff their clusters differ in one variable."""
    if not 1 <= n <= 4:
        raise BudgetExceeded("closure check limited to 1 <= n <= 4")
    g = exchange_graph(initial_seed_An(n))
    for s in g.seeds.values():
        for k in range(1, n + 1):
            t = mutate_seed(s, k)
            stored = g.seeds[t.cluster()]
            # same cluster reached another way: the quivers agree after renaming
            idx = [stored.vars.index(v) for v in t.vars]
            if not np.array_equal(t.quiver.b, stored.quiver.b[np.ix_(idx, idx)]):
                return False
    keys = list(g.seeds)
    for a, b in itertools.combinations(keys, 2):
        if (len(a - b) == 1) != (frozenset((a, b)) in g.edges):
            return False
    return True


def row_column_check(n: int) -> bool:
    """Every seed of the ``A_n`` closure, read as a triangulation through
    :func:`exchange_to_flip_map`, has a diagram with at most ``n`` rows whose
    ``k``-th column counts the diagonals with tail above ``k - 1``."""
    if not 1 <= n <= 4:
        raise BudgetExceeded("row/column check limited to 1 <= n <= 4")
    _, part = exchange_to_flip_map(n)
    for key, p in part.items():
        t = lambda_inverse(p, n + 3)
        tails = [a for a, _ in diag_order(t)]
        if len(key) != n or len(tails) != n or len(p) > n:
            return False
        cols = transpose(p)
        if any(cols[k - 1] != sum(1 for a in tails if a > k - 1) for k in range(1, len(cols) + 1)):
            return False
        if sum(1 for a in tails if a > len(cols)):
            return False
    return True


# ---------------------------------------------------------------------------
# A_infinity windows


def a_infinity_quiver(window: int, with_coefficients: bool) -> Quiver:
    """Truncation of the ``A_oo`` (or coefficient ``A~_oo``) quiver to ``x_1..x_N``.

    With coefficients the frozen vertices touching the window are
    ``c_1 .. c_{N+2}``.
    """
    N = window
    arrows = [(i, i + 1) for i in range(1, N)]
    if not with_coefficients:
        return Quiver.from_arrows(N, N, arrows)
    arrows.append((N + 1, 1))  # c_1 -> x_1
    for k in range(1, N + 1):
        arrows.append((k, N + k + 1))  # x_k -> c_{k+1}
        arrows.append((N + k + 2, k))  # c_{k+2} -> x_k
    return Quiver.from_arrows(2 * N + 2, N, arrows)


def _a_infinity_seed(window: int, with_coefficients: bool) -> Seed:
    q = a_infinity_quiver(window, with_coefficients)
    coeffs = tuple(c(j) for j in range(1, window + 3)) if with_coefficients else ()
    return Seed(q, tuple(x(i) for i in range(1, window + 1)), coeffs)


@dataclass(frozen=True)
class LazySeedAInfty:
    """Finite window of a seed of ``A_oo`` reached by finitely many mutations.

    Every vertex above ``window`` still carries its initial variable and
    initial arrows.
    """

    window: int
    seed: Seed
    history: tuple[int, ...] = ()
    with_coefficients: bool = False

    def var(self, i: int) -> LaurentPoly:
        if i < 1:
            raise PreconditionError("vertices start at 1")
        return self.seed.vars[i - 1] if i <= self.window else x(i)

    def cluster_window(self, upto: int | None = None) -> frozenset:
        upto = self.window if upto is None else upto
        return frozenset(self.var(i) for i in range(1, upto + 1))


def lazy_initial(with_coefficients: bool = False, window: int = 2) -> LazySeedAInfty:
    return LazySeedAInfty(window, _a_infinity_seed(window, with_coefficients), (), with_coefficients)


def extend_window(s: LazySeedAInfty, window: int) -> LazySeedAInfty:
    """Grow the window by padding with untouched initial vertices."""
    if window <= s.window:
        return s
    N, M = s.window, window
    big = _a_infinity_seed(M, s.with_coefficients)
    b = big.quiver.b.copy()
    # old vertex -> new vertex (0-based): x_i stays, c_j moves from N + j - 1 to M + j - 1
    old = list(range(N))
    if s.with_coefficients:
        old += [M + j for j in range(N + 2)]
    old_b = s.seed.quiver.b
    for a, na in enumerate(old):
        for bb, nb in enumerate(old):
            b[na, nb] = old_b[a, bb]
    vars_ = s.seed.vars + big.vars[N:]
    seed = Seed(Quiver(b, M), vars_, big.coeffs)
    return LazySeedAInfty(M, seed, s.history, s.with_coefficients)


def mutate_lazy(s: LazySeedAInfty, k: int) -> LazySeedAInfty:
    if k < 1:
        raise FrozenVertex("A_oo vertices start at 1")
    if k + 2 > s.window:
        s = extend_window(s, k + 2)
    seed = mutate_seed(s.seed, k)
    return LazySeedAInfty(s.window, seed, s.history + (k,), s.with_coefficients)


def replay_lazy(history: Iterable[int], with_coefficients: bool = False, window: int | None = None) -> LazySeedAInfty:
    """Mutate a fresh finite truncation of the requested window directly."""
    history = tuple(history)
    N = window if window is not None else max(history + (0,)) + 2
    N = max(N, 2)
    seed = mutate_sequence(_a_infinity_seed(N, with_coefficients), history)
    return LazySeedAInfty(N, seed, history, with_coefficients)


def _common_window(s1: LazySeedAInfty, s2: LazySeedAInfty, extra: int = 0):
    W = max(s1.window, s2.window) + extra
    return extend_window(s1, W), extend_window(s2, W)


def lazy_seeds_match(s1: LazySeedAInfty, s2: LazySeedAInfty) -> list[int] | None:
    """Vertex bijection under which two lazy seeds coincide, or ``None``.

    Both seeds are brought to a common window first; beyond it they agree.
    The bijection is read off from the clusters (``s1.var(i) ==
    s2.var(perm[i-1])``) and then required to carry one quiver onto the other.
    """
    a, b = _common_window(s1, s2)
    where = {v: i for i, v in enumerate(b.seed.vars, start=1)}
    if set(where) != set(a.seed.vars):
        return None
    perm = [where[v] for v in a.seed.vars]
    idx = [p - 1 for p in perm] + list(range(len(perm), a.seed.quiver.size))
    if not np.array_equal(a.seed.quiver.b, b.seed.quiver.b[np.ix_(idx, idx)]):
        return None
    return perm


@dataclass
class PairReport:
    same_cluster: bool
    seeds_match: bool
    one_variable_apart: bool
    adjacent: bool

    @property
    def ok(self) -> bool:
        return self.same_cluster == self.seeds_match and self.one_variable_apart == self.adjacent


def gsv_pair_check(s1: LazySeedAInfty, s2: LazySeedAInfty) -> PairReport:
    """Cluster determines the seed; one-variable difference iff one mutation apart."""
    a, b = _common_window(s1, s2, extra=2)
    c1, c2 = set(a.seed.vars), set(b.seed.vars)
    same = c1 == c2
    one = len(c1 - c2) == 1 and len(c2 - c1) == 1
    adjacent = False
    for k in range(1, a.window - 1):
        if set(mutate_seed(a.seed, k).vars) == c2:
            adjacent = True
            break
    return PairReport(same, lazy_seeds_match(a, b) is not None, one, adjacent)


# ---------------------------------------------------------------------------
# alternating orientation


def alt_quiver(n: int) -> Quiver:
    """``A_n`` with every odd vertex a source."""
    arrows = []
    for i in range(1, n + 1, 2):
        for j in (i - 1, i + 1):
            if 1 <= j <= n:
                arrows.append((i, j))
    return Quiver.from_arrows(n, n, arrows)


def alt_schedule(n: int, order: str = "left-to-right") -> list[int]:
    """Mutation sequence of the inductive step for ``A_n^alt``.

    For even ``n`` the word is ``mu_2 mu_4 .. mu_{n-2} mu_1 mu_3 .. mu_{n-1}``
    and for odd ``n`` it is ``mu_1 mu_3 .. mu_{n-2} mu_2 mu_4 .. mu_{n-1}``.
    ``order`` says how the word is read: ``left-to-right`` applies ``mu_2``
    (resp. ``mu_1``) first, ``right-to-left`` treats it as a composition.
    """
    if n % 2 == 0:
        word = list(range(2, n - 1, 2)) + list(range(1, n, 2))
    else:
        word = list(range(1, n - 1, 2)) + list(range(2, n, 2))
    if order == "left-to-right":
        return word
    if order == "right-to-left":
        return word[::-1]
    raise ValueError(f"unknown order {order!r}")


def alt_full_schedule(n: int, order: str = "left-to-right") -> list[int]:
    """Steps for ``m = n, n-1, .., 2`` concatenated."""
    out: list[int] = []
    for m in range(n, 1, -1):
        out += alt_schedule(m, order)
    return out


def apply_quiver_mutations(q: Quiver, ks: Iterable[int]) -> Quiver:
    for k in ks:
        q = mutate_quiver(q, k)
    return q


def alt_step_check(n: int, order: str = "left-to-right") -> bool:
    """After one step the quiver is ``A_{n-1}^alt`` plus a single arrow between ``n-1`` and ``n``."""
    q = apply_quiver_mutations(alt_quiver(n), alt_schedule(n, order))
    b = q.b
    sub_ok = np.array_equal(b[: n - 1, : n - 1], alt_quiver(n - 1).b)
    return sub_ok and abs(int(b[n - 2, n - 1])) == 1 and not b[: n - 2, n - 1].any()


def alt_equivalence_check(n: int, order: str = "left-to-right") -> bool:
    if not 1 <= n <= 9:
        raise BudgetExceeded("alternating check limited to 1 <= n <= 9")
    q = apply_quiver_mutations(alt_quiver(n), alt_full_schedule(n, order))
    return quiver_isomorphic(q, linear_quiver(n))
