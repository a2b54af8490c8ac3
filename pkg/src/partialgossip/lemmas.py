"""Empirical verification harnesses for the structural lower-bound lemmas.

Each checker enumerates (exhaustively on small sizes, by seeded sampling
beyond) communication schemes satisfying a lemma's hypotheses and asserts
its conclusion, reporting violations instead of raising.  The harness can
be pointed at a deliberately falsified bound (``bound_slack``) to prove it
is able to fail.

Documented instance ranges (defaults in LemmaParams):

* tree schemes: exhaustive for n <= 5 (n <= 6 for the suites over trees
  alone: L1a, L1b and the exact-tree filter of L3), uniformly sampled for
  n in {6, 7, 8};
* unicyclic schemes: exhaustive for n <= 4, sampled for n in {5, ..., 8};
* preliminary-call counts: up to 3; single calls and disjoint-edge
  matchings are enumerated, denser preliminary graphs are sampled;
* call-sequence suites: exhaustive while the sequence space is small,
  sampled beyond.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import ValidationError
from .constructions import minimal_informing_tree
from .formulas import lemma1b_bound, t_value
from .oracle import enumerate_tree_schemes, enumerate_unicyclic_schemes, labeled_trees

LEMMA_IDS = (
    "L1a", "L1b", "L1c", "L2", "L3", "L4a", "L4b", "L5a", "L5b", "L6s1",
)


@dataclass(frozen=True)
class Violation:
    instance: dict
    expected_bound: int
    observed_n: int


@dataclass
class LemmaReport:
    lemma_id: str
    instances_checked: int
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "checked": self.instances_checked,
            "violations": [
                {
                    "instance": v.instance,
                    "expected_bound": v.expected_bound,
                    "observed_n": v.observed_n,
                }
                for v in self.violations
            ],
        }


@dataclass
class LemmaParams:
    """Instance-generation ranges; defaults are the documented ranges."""

    max_exhaustive_n: int | None = None  # per-lemma default when None
    max_sampled_n: int = 8
    samples: int = 400
    max_prelim: int = 3
    seed: int = 0
    bound_slack: int = 0  # tighten the asserted inequality by this much

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def check_lemma(lemma_id: str, params: LemmaParams | None = None) -> LemmaReport:
    """Run one lemma suite over its documented ranges."""
    if lemma_id not in LEMMA_IDS:
        raise ValidationError(f"unknown lemma id {lemma_id!r}; valid: {', '.join(LEMMA_IDS)}")
    params = params or LemmaParams()
    return _CHECKERS[lemma_id](params)


# ---------------------------------------------------------------------------
# shared machinery
# ---------------------------------------------------------------------------

def _sim(n: int, pairs) -> list[int]:
    know = [1 << p for p in range(n)]
    for a, b in pairs:
        u = know[a] | know[b]
        know[a] = u
        know[b] = u
    return know


def _aw(n: int, pairs) -> list[int]:
    return [x.bit_count() for x in _sim(n, pairs)]


def _tree_schemes(params: LemmaParams, exhaustive_to: int):
    """(n, pair list) tree schemes: exhaustive to the cut-off, sampled beyond.

    The exhaustive branch walks labeled trees x edge orders directly; it is
    the same enumeration enumerate_tree_schemes performs, minus the
    per-schedule object construction.
    """
    for n in range(2, exhaustive_to + 1):
        for edges in labeled_trees(n):
            yield from ((n, order) for order in itertools.permutations(edges))
    for n in range(exhaustive_to + 1, params.max_sampled_n + 1):
        stream = enumerate_tree_schemes(n, limit=params.samples, seed=params.seed)
        for s in stream.schedules:
            yield n, [(c.a, c.b) for c in s.calls]


def _unicyclic_schemes(params: LemmaParams, exhaustive_to: int = 4):
    for n in range(2, params.max_sampled_n + 1):
        limit = None if n <= exhaustive_to else params.samples
        stream = enumerate_unicyclic_schemes(n, limit=limit, seed=params.seed)
        for s in stream.schedules:
            yield n, [(c.a, c.b) for c in s.calls]


def _matchings(n: int, size: int, rng: random.Random, cap: int = 48):
    """Preliminary graphs that are unions of ``size`` disjoint edges.

    Exhaustive while there are at most ``cap`` of them, else ``cap`` sampled.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    found = []
    for combo in itertools.combinations(pairs, size):
        used: set[int] = set()
        ok = True
        for a, b in combo:
            if a in used or b in used:
                ok = False
                break
            used.update((a, b))
        if ok:
            found.append(list(combo))
    if len(found) <= cap:
        yield from found
    else:
        for idx in rng.sample(range(len(found)), cap):
            yield found[idx]


def _prelim_lists(n: int, size: int, rng: random.Random, general_samples: int = 10):
    """Preliminary call lists: disjoint-edge matchings first, then denser samples."""
    if size == 0:
        yield []
        return
    yield from _matchings(n, size, rng)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if size >= 2 and len(pairs) >= 2:
        for _ in range(general_samples):
            yield [pairs[rng.randrange(len(pairs))] for _ in range(size)]


def _describe(n: int, pairs, prelim=None, **extra) -> dict:
    d = {"n": n, "calls": [list(p) for p in pairs]}
    if prelim is not None:
        d["preliminary"] = [list(p) for p in prelim]
    d.update(extra)
    return d


# ---------------------------------------------------------------------------
# the ten suites
# ---------------------------------------------------------------------------

def _check_l1a(params: LemmaParams) -> LemmaReport:
    """k-informing tree on n persons implies n >= 2^(k-1)."""
    checked = 0
    violations = []
    exhaustive_to = params.max_exhaustive_n or 6
    for n, pairs in _tree_schemes(params, exhaustive_to):
        kmax = min(_aw(n, pairs))
        bound = (1 << (kmax - 1)) + params.bound_slack
        checked += 1
        if n < bound:
            violations.append(Violation(_describe(n, pairs, k=kmax), bound, n))
    return LemmaReport("L1a", checked, violations)


def _check_l1b(params: LemmaParams) -> LemmaReport:
    """Tree with one kp-informed person and the rest k-informed: size bound."""
    checked = 0
    violations = []
    exhaustive_to = params.max_exhaustive_n or 6
    for n, pairs in _tree_schemes(params, exhaustive_to):
        if n < 2:
            continue
        aw = _aw(n, pairs)
        kp = min(aw)
        weakest = aw.index(kp)
        k = min(a for p, a in enumerate(aw) if p != weakest)
        bound = lemma1b_bound(k, kp) + params.bound_slack
        checked += 1
        if n < bound:
            violations.append(Violation(_describe(n, pairs, k=k, kp=kp), bound, n))
    return LemmaReport("L1b", checked, violations)


def _check_l1c(params: LemmaParams) -> LemmaReport:
    """Unicyclic k-informing scheme (k >= 4) has at least 2^(k-2) vertices."""
    checked = 0
    violations = []
    for n, pairs in _unicyclic_schemes(params):
        kmax = min(_aw(n, pairs))
        if kmax < 4:
            continue
        bound = (1 << (kmax - 2)) + params.bound_slack
        checked += 1
        if n < bound:
            violations.append(Violation(_describe(n, pairs, k=kmax), bound, n))
    return LemmaReport("L1c", checked, violations)


def _check_l2(params: LemmaParams) -> LemmaReport:
    """Appending ell preliminary calls raises nobody's awareness by more than ell."""
    checked = 0
    violations = []
    rng = params.rng()

    def run(n: int, base, prelim) -> None:
        nonlocal checked
        checked += 1
        before = _aw(n, base)
        after = _aw(n, list(prelim) + list(base))
        allowed = len(prelim) - params.bound_slack
        gain = max(b - a for a, b in zip(before, after))
        if gain > allowed:
            violations.append(
                Violation(_describe(n, base, prelim, max_gain=gain), allowed, gain)
            )

    # exhaustive small box: every schedule and every preliminary list
    for n, max_len in ((3, 4), (4, 4)):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for length in range(0, max_len + 1):
            for base in itertools.product(pairs, repeat=length):
                for ell in (1, 2):
                    for prelim in itertools.product(pairs, repeat=ell):
                        run(n, base, prelim)
    # sampled larger instances
    for _ in range(params.samples):
        n = rng.randrange(5, params.max_sampled_n + 1)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        base = [pairs[rng.randrange(len(pairs))] for _ in range(rng.randrange(0, 9))]
        ell = rng.randrange(1, params.max_prelim + 1)
        prelim = [pairs[rng.randrange(len(pairs))] for _ in range(ell)]
        run(n, base, prelim)
    return LemmaReport("L2", checked, violations)


def _exact_k_trees(params: LemmaParams, exhaustive_to: int = 6):
    """Exact k-informing trees (k >= 3) from enumeration plus the minimal family."""
    for n, pairs in _tree_schemes(params, exhaustive_to):
        aw = _aw(n, pairs)
        k = aw[0]
        if k >= 3 and n > k and all(a == k for a in aw):
            yield n, k, pairs
    for k in (3, 4):
        s = minimal_informing_tree(k)
        yield s.n, k, [(c.a, c.b) for c in s.calls]


def _check_l3(params: LemmaParams) -> LemmaReport:
    """Exact k-informing tree lifted to all (k+ell)-informed: n >= 2^(k-1)+ell-1."""
    checked = 0
    violations = []
    rng = params.rng()
    for n, k, base in _exact_k_trees(params, params.max_exhaustive_n or 6):
        for ell in range(1, params.max_prelim + 1):
            for prelim in _prelim_lists(n, ell, rng):
                if min(_aw(n, list(prelim) + list(base))) < k + ell:
                    continue  # hypothesis not satisfied
                bound = (1 << (k - 1)) + ell - 1 + params.bound_slack
                checked += 1
                if n < bound:
                    violations.append(
                        Violation(_describe(n, base, prelim, k=k, ell=ell), bound, n)
                    )
    return LemmaReport("L3", checked, violations)


def _enlarged_tree_instances(params: LemmaParams, outsiders: int):
    """(universe, n_total, m, tree_pairs, prelims): trees with prepended calls.

    The tree lives on persons [0, m); preliminary calls may touch up to
    ``outsiders`` extra persons and must use exactly the allotted number so
    outsider counts are not re-checked.  n_total counts tree vertices plus
    the outsiders actually appearing in preliminary calls.
    """
    rng = params.rng()
    exhaustive_to = params.max_exhaustive_n or 5
    trees = list(_tree_schemes(params, exhaustive_to))
    s = minimal_informing_tree(4)
    trees.append((s.n, tuple((c.a, c.b) for c in s.calls)))
    for m, pairs in trees:
        for o in range(0, outsiders + 1):
            universe = m + o
            for ell in range(max(1, o), params.max_prelim + 1):
                for prelim in _prelim_lists(universe, ell, rng):
                    extra = {v for p in prelim for v in p if v >= m}
                    if len(extra) != o:
                        continue
                    yield universe, m + o, m, pairs, prelim
        yield m, m, m, pairs, []  # the i = 0 case


def _check_l4(params: LemmaParams, lemma_id: str) -> LemmaReport:
    """Tree plus i preliminary calls, k-informing: n >= t_{i-1}(k).

    L4a keeps every preliminary call inside the tree's vertex set; L4b lets
    them touch outsiders and only requires the tree's own vertices to end
    k-informed, counting outsiders in n.
    """
    checked = 0
    violations = []
    outsiders = 0 if lemma_id == "L4a" else 2
    for universe, n_total, m, tree, prelim in _enlarged_tree_instances(params, outsiders):
        aw = _aw(universe, list(prelim) + list(tree))
        k = min(aw[:m])
        i = len(prelim)
        if k < 4 or i > k - 4 or n_total < k:
            continue
        bound = t_value(i - 1, k) + params.bound_slack
        checked += 1
        if n_total < bound:
            violations.append(
                Violation(_describe(m, tree, prelim, k=k, i=i), bound, n_total)
            )
    return LemmaReport(lemma_id, checked, violations)


def _check_l5a(params: LemmaParams) -> LemmaReport:
    """Tree whose vertices, except one, end k-informed after i prelims: n >= t_i(k)."""
    checked = 0
    violations = []
    for universe, n_total, m, tree, prelim in _enlarged_tree_instances(params, outsiders=1):
        if len(tree) < 1 or m < 2:
            continue
        aw = _aw(universe, list(prelim) + list(tree))
        tree_aw = aw[:m]
        weakest = tree_aw.index(min(tree_aw))
        k = min(a for v, a in enumerate(tree_aw) if v != weakest)
        i = len(prelim)
        if k < 4 or i > k - 4 or n_total < k:
            continue
        bound = t_value(i, k) + params.bound_slack
        checked += 1
        if n_total < bound:
            violations.append(
                Violation(_describe(m, tree, prelim, k=k, i=i), bound, n_total)
            )
    return LemmaReport("L5a", checked, violations)


def _check_l5b(params: LemmaParams) -> LemmaReport:
    """Unicyclic scheme whose vertices all end k-informed after i prelims: n >= t_i(k)."""
    checked = 0
    violations = []
    rng = params.rng()
    for m, pairs in _unicyclic_schemes(params):
        for i in range(0, params.max_prelim + 1):
            for prelim in _prelim_lists(m, i, rng, general_samples=5):
                k = min(_aw(m, list(prelim) + list(pairs)))
                if k < 4 or i > k - 4:
                    continue
                bound = t_value(i, k) + params.bound_slack
                checked += 1
                if m < bound:
                    violations.append(
                        Violation(_describe(m, pairs, prelim, k=k, i=i), bound, m)
                    )
    return LemmaReport("L5b", checked, violations)


def _check_l6s1(params: LemmaParams) -> LemmaReport:
    """With n <= t_{i-1}(k)-1, any i+j calls leave at most j persons k-informed."""
    checked = 0
    violations = []
    rng = params.rng()
    exhaustive_cap = 70_000
    for k in (4, 5, 6):
        for i in range(0, min(k - 4, params.max_prelim) + 1):
            n_hi = min(t_value(i - 1, k) - 1, params.max_sampled_n)
            for n in range(k, n_hi + 1):
                pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
                for j in range(1, n + 1):
                    length = i + j
                    space = len(pairs) ** length
                    if space <= exhaustive_cap:
                        seqs = itertools.product(pairs, repeat=length)
                    else:
                        seqs = (
                            tuple(pairs[rng.randrange(len(pairs))] for _ in range(length))
                            for _ in range(params.samples)
                        )
                    for seq in seqs:
                        informed = sum(1 for a in _aw(n, seq) if a >= k)
                        allowed = j - params.bound_slack
                        checked += 1
                        if informed > allowed:
                            violations.append(
                                Violation(
                                    _describe(n, seq, k=k, i=i, j=j, informed=informed),
                                    allowed,
                                    informed,
                                )
                            )
    return LemmaReport("L6s1", checked, violations)


_CHECKERS = {
    "L1a": _check_l1a,
    "L1b": _check_l1b,
    "L1c": _check_l1c,
    "L2": _check_l2,
    "L3": _check_l3,
    "L4a": lambda p: _check_l4(p, "L4a"),
    "L4b": lambda p: _check_l4(p, "L4b"),
    "L5a": _check_l5a,
    "L5b": _check_l5b,
    "L6s1": _check_l6s1,
}
