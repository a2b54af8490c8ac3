"""Ground-truth engines: exhaustive minimum-call search and scheme enumerators.

The searcher answers "what is the true minimum number of calls so that all
n persons know at least k gossips" by iterative-deepening DFS over raw
knowledge states.  Soundness levers:

* no-op pruning: a call between two persons with identical knowledge can be
  deleted from any sequence without changing the outcome, so no minimal
  sequence contains one;
* symmetry: persons are interchangeable only under a joint relabeling that
  permutes person indices and gossip bits together.  States equal under
  such a relabeling have identical reachable awareness profiles, so failure
  depths are memoized per canonical form;
* an admissible lower bound on remaining calls (each call informs at most
  two persons, and the maximum awareness can at most double per call).

Exceeding the time budget yields a Timeout-style result carrying how far
the refutation got; it never yields a wrong number.
"""
from __future__ import annotations

import heapq
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterator

from .core import Schedule, ValidationError

FOUND = "found"
TIMEOUT = "timeout"
DEPTH_EXHAUSTED = "depth-exhausted"

# States whose symmetry class admits more relabelings than this are keyed by
# a single deterministic relabeling instead of the true minimum; that only
# costs memo hits, never correctness (any relabeling of a state identifies
# its equivalence class member).
_CANON_PERM_CAP = 1024


@dataclass
class SearchConfig:
    max_depth: int = 64
    canonicalize: bool = True
    prune_noop_calls: bool = True
    time_budget: float = 600.0  # seconds
    memo_limit: int = 4_000_000

    def __post_init__(self):
        if self.max_depth < 0:
            raise ValidationError(f"max_depth must be >= 0, got {self.max_depth}")
        if self.time_budget <= 0:
            raise ValidationError(f"time_budget must be > 0, got {self.time_budget}")


@dataclass
class SearchResult:
    status: str                 # FOUND | TIMEOUT | DEPTH_EXHAUSTED
    min_calls: int | None       # exact minimum when status == FOUND
    witness: Schedule | None    # a schedule attaining the minimum
    refuted_depth: int          # no schedule with <= this many calls exists (proven)
    nodes: int
    elapsed: float

    @property
    def timed_out(self) -> bool:
        return self.status == TIMEOUT


class _BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# canonical forms under joint person/gossip relabeling
# ---------------------------------------------------------------------------

def _refine_colors(state: tuple[int, ...], n: int) -> list[int]:
    """Partition persons by iterated structural signatures.

    The signature of p combines how much p knows, how widely p's gossip is
    known, and (iterated) the signatures of the gossips p knows and of the
    persons who know p.  Signatures are converted to ranks by sorting, so
    the resulting color vector is invariant under joint relabeling.
    """
    col = [0] * n
    for row in state:
        x = row
        while x:
            col[(x & -x).bit_length() - 1] += 1
            x &= x - 1
    sigs: list = [(state[p].bit_count(), col[p]) for p in range(n)]
    ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
    colors = [ranking[s] for s in sigs]
    while True:
        sigs = []
        for p in range(n):
            known = []
            x = state[p]
            while x:
                known.append(colors[(x & -x).bit_length() - 1])
                x &= x - 1
            knowers = [colors[q] for q in range(n) if (state[q] >> p) & 1]
            sigs.append((colors[p], tuple(sorted(known)), tuple(sorted(knowers))))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _relabel(state: tuple[int, ...], perm: list[int], n: int) -> tuple[int, ...]:
    """Apply person permutation perm (old -> new) to indices and gossip bits."""
    out = [0] * n
    for p in range(n):
        x = state[p]
        y = 0
        while x:
            g = (x & -x).bit_length() - 1
            y |= 1 << perm[g]
            x &= x - 1
        out[perm[p]] = y
    return tuple(out)


def canonical_key(state: tuple[int, ...], n: int) -> tuple[int, ...]:
    """A representative of the state's joint-relabeling equivalence class.

    Exact (the lexicographic minimum over class-respecting relabelings)
    whenever the symmetry classes admit at most _CANON_PERM_CAP relabelings;
    beyond that a single deterministic relabeling is used.
    """
    colors = _refine_colors(state, n)
    groups: dict[int, list[int]] = {}
    for p in range(n):
        groups.setdefault(colors[p], []).append(p)
    ordered = [groups[c] for c in sorted(groups)]
    total = 1
    for g in ordered:
        total *= _factorial(len(g))
        if total > _CANON_PERM_CAP:
            break
    if total > _CANON_PERM_CAP:
        perm = [0] * n
        pos = 0
        for g in ordered:
            for p in g:
                perm[p] = pos
                pos += 1
        return _relabel(state, perm, n)
    best: tuple[int, ...] | None = None
    for pieces in itertools.product(*(itertools.permutations(g) for g in ordered)):
        perm = [0] * n
        pos = 0
        for piece in pieces:
            for p in piece:
                perm[p] = pos
                pos += 1
        cand = _relabel(state, perm, n)
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


def _factorial(m: int) -> int:
    out = 1
    for j in range(2, m + 1):
        out *= j
    return out


# ---------------------------------------------------------------------------
# minimum-call search
# ---------------------------------------------------------------------------

def _lower_bound(state: tuple[int, ...], k: int) -> int:
    """Admissible bound on calls still needed to make everyone k-informed."""
    below = 0
    best = 0
    for x in state:
        c = x.bit_count()
        if c < k:
            below += 1
        if c > best:
            best = c
    if below == 0:
        return 0
    if best >= k:
        return (below + 1) // 2
    # nobody informed yet: the maximum awareness at most doubles per call
    rounds = 0
    reach = best
    while reach < k:
        reach *= 2
        rounds += 1
    return rounds + max(0, (below - 2 + 1) // 2)


def min_calls_bruteforce(n: int, k: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact minimum length of a call sequence making all n persons k-informed.

    Iterative deepening: depth d is only reported once every depth < d has
    been exhaustively refuted, so a FOUND result is the true minimum.
    """
    if not 2 <= k <= n:
        raise ValidationError(f"need 2 <= k <= n, got n={n}, k={k}")
    if n > 64:
        raise ValidationError(f"search supports n <= 64, got n={n}")
    cfg = cfg or SearchConfig()
    deadline = time.monotonic() + cfg.time_budget
    start_time = time.monotonic()
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    initial = tuple(1 << p for p in range(n))
    memo: dict[tuple[int, ...], int] = {}
    nodes = 0

    def dfs(state: tuple[int, ...], remaining: int) -> list[tuple[int, int]] | None:
        """Suffix of calls completing the goal within ``remaining``, or None."""
        nonlocal nodes
        nodes += 1
        if nodes % 4096 == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        below = 0
        best = 0
        for x in state:
            c = x.bit_count()
            if c < k:
                below += 1
            if c > best:
                best = c
        if below == 0:
            return []
        if remaining == 0:
            return None
        if best >= k:
            lb = (below + 1) // 2
        else:
            lb = max(0, (below - 1) // 2)
            reach = best
            while reach < k:
                reach *= 2
                lb += 1
        if lb > remaining:
            return None
        key = canonical_key(state, n) if cfg.canonicalize else state
        if memo.get(key, -1) >= remaining:
            return None
        for a, b in pairs:
            sa, sb = state[a], state[b]
            if cfg.prune_noop_calls and sa == sb:
                continue
            u = sa | sb
            child = state[:a] + (u,) + state[a + 1 : b] + (u,) + state[b + 1 :]
            tail = dfs(child, remaining - 1)
            if tail is not None:
                return [(a, b)] + tail
        if len(memo) < cfg.memo_limit:
            memo[key] = remaining
        return None

    depth = _lower_bound(initial, k)
    refuted = depth - 1
    try:
        while depth <= cfg.max_depth:
            found = dfs(initial, depth)
            if found is not None:
                return SearchResult(
                    FOUND, len(found), Schedule(n, found), refuted,
                    nodes, time.monotonic() - start_time,
                )
            refuted = depth
            depth += 1
    except _BudgetExceeded:
        return SearchResult(TIMEOUT, None, None, refuted, nodes, time.monotonic() - start_time)
    return SearchResult(DEPTH_EXHAUSTED, None, None, refuted, nodes, time.monotonic() - start_time)


def max_informing_level(s: Schedule) -> int:
    """Largest k for which the schedule is k-informing (min final awareness)."""
    from .core import simulate

    return min(simulate(s).awareness())


# ---------------------------------------------------------------------------
# scheme enumerators
# ---------------------------------------------------------------------------

@dataclass
class SchemeStream:
    """An enumeration of schedules plus metadata about its coverage."""

    n: int
    exhaustive: bool
    expected_count: int | None
    schedules: Iterator[Schedule] = field(repr=False)


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edge list of the labeled tree with this Pruefer sequence (len n-2)."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaf_heap = sorted(p for p in range(n) if degree[p] == 1)
    heapq.heapify(leaf_heap)
    for x in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaf_heap, x)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((min(u, v), max(u, v)))
    return edges


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """All n^(n-2) labeled trees on n vertices."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


EXHAUSTIVE_TREE_LIMIT = 6  # all trees x all call orders up to here


def enumerate_tree_schemes(n: int, limit: int | None = None, seed: int = 0) -> SchemeStream:
    """Schedules whose communication graph is a spanning tree on n vertices.

    Exhaustive (every labeled tree times every chronological edge order) for
    n <= 6; uniformly sampled, ``limit`` schemes, for n in {7, 8}.
    """
    if not 2 <= n <= 8:
        raise ValidationError(f"tree enumeration supports 2 <= n <= 8, got n={n}")
    if n <= EXHAUSTIVE_TREE_LIMIT and limit is None:
        expected = n ** (n - 2) * _factorial(n - 1)

        def gen_all() -> Iterator[Schedule]:
            for edges in labeled_trees(n):
                for order in itertools.permutations(edges):
                    yield Schedule(n, order)

        return SchemeStream(n, True, expected, gen_all())
    count = limit if limit is not None else 1000
    rng = random.Random(seed)

    def gen_sampled() -> Iterator[Schedule]:
        for _ in range(count):
            seq = tuple(rng.randrange(n) for _ in range(n - 2))
            edges = prufer_decode(seq, n)
            rng.shuffle(edges)
            yield Schedule(n, edges)

    return SchemeStream(n, False, count, gen_sampled())


def enumerate_unicyclic_schemes(n: int, limit: int | None = None, seed: int = 0) -> SchemeStream:
    """Schedules whose graph is connected and spanning with exactly n edges.

    Built as spanning tree plus one extra pair (possibly duplicating a tree
    edge, the degenerate two-fold cycle).  Exhaustive over edge orders for
    n <= 5, sampled for larger n.
    """
    if not 2 <= n <= 8:
        raise ValidationError(f"unicyclic enumeration supports 2 <= n <= 8, got n={n}")
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if n <= 5 and limit is None:

        def gen_all() -> Iterator[Schedule]:
            for edges in labeled_trees(n):
                for extra in all_pairs:
                    for order in itertools.permutations(edges + [extra]):
                        yield Schedule(n, order)

        return SchemeStream(n, True, None, gen_all())
    count = limit if limit is not None else 1000
    rng = random.Random(seed)

    def gen_sampled() -> Iterator[Schedule]:
        for _ in range(count):
            seq = tuple(rng.randrange(n) for _ in range(n - 2)) if n > 2 else ()
            edges = prufer_decode(seq, n) if n > 2 else [(0, 1)]
            edges.append(all_pairs[rng.randrange(len(all_pairs))])
            rng.shuffle(edges)
            yield Schedule(n, edges)

    return SchemeStream(n, False, count, gen_sampled())
