"""Communication-multigraph analysis and the block-swap equivalence transform."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .core import AugmentedSchedule, Call, Schedule, ValidationError, simulate


class ComponentKind(enum.Enum):
    TREE = "tree"           # connected, |E| = |V| - 1
    UNICYCLIC = "unicyclic"  # connected, |E| = |V| (a doubled edge counts as the cycle)
    OTHER = "other"          # connected, |E| > |V|

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CommGraph:
    """A multigraph of persons and timestamped calls.

    ``vertices`` normally equals the set of call endpoints; components
    produced by splitting may be single vertices with no calls.
    """

    vertices: frozenset[int]
    edges: tuple[tuple[Call, int], ...]  # (call, timestamp), timestamps strictly increasing

    def __post_init__(self):
        stamps = [t for _, t in self.edges]
        if any(s >= t for s, t in zip(stamps, stamps[1:])):
            raise ValidationError("edge timestamps must strictly increase")
        for c, _ in self.edges:
            if c.a not in self.vertices or c.b not in self.vertices:
                raise ValidationError(f"edge ({c.a},{c.b}) endpoint outside vertex set")

    def calls(self) -> list[Call]:
        return [c for c, _ in self.edges]


def full_graph(s: Schedule) -> CommGraph:
    """Communication graph generated by every call of the schedule."""
    return build_subgraph(s, range(len(s.calls)))


def build_subgraph(s: Schedule, call_indices: Iterable[int]) -> CommGraph:
    """Subgraph generated by the selected calls; vertices are their endpoints."""
    idx = sorted(set(call_indices))
    if idx and (idx[0] < 0 or idx[-1] >= len(s.calls)):
        raise ValidationError(f"call index out of range [0, {len(s.calls)})")
    edges = tuple((s.calls[i], i) for i in idx)
    verts = frozenset(v for c, _ in edges for v in (c.a, c.b))
    return CommGraph(verts, edges)


def classify_components(g: CommGraph) -> list[tuple[frozenset[int], ComponentKind]]:
    """Partition into connected components, each labeled tree / unicyclic / other."""
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices}
    for c, _ in g.edges:
        adjacency[c.a].add(c.b)
        adjacency[c.b].add(c.a)
    seen: set[int] = set()
    out = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        n_edges = sum(1 for c, _ in g.edges if c.a in comp)  # c.b is in comp too
        if n_edges == len(comp) - 1:
            kind = ComponentKind.TREE
        elif n_edges == len(comp):
            kind = ComponentKind.UNICYCLIC
        else:
            kind = ComponentKind.OTHER
        out.append((frozenset(comp), kind))
    return out


def is_single_tree(g: CommGraph) -> bool:
    comps = classify_components(g)
    return len(comps) == 1 and comps[0][1] is ComponentKind.TREE


def is_spanning_tree(s: Schedule) -> bool:
    """True iff the full communication graph is one tree covering all n persons."""
    g = full_graph(s)
    return len(g.vertices) == s.n and is_single_tree(g)


def first_call_split(s: Schedule) -> tuple[CommGraph, CommGraph]:
    """Delete the chronologically first call of a tree schedule.

    Returns the two resulting components (the first containing the lower
    endpoint of the removed call), each carrying its own induced call
    subsequence.  Either side may be a single vertex with no calls.
    """
    if not s.calls:
        raise ValidationError("schedule has no calls to split on")
    g = full_graph(s)
    if not is_single_tree(g):
        raise ValidationError("first_call_split requires a single tree communication graph")
    first = s.calls[0]
    rest = build_subgraph(s, range(1, len(s.calls)))
    side_a = _component_of(rest, first.a, g.vertices)
    side_b = _component_of(rest, first.b, g.vertices)
    def induced(side: set[int]) -> CommGraph:
        edges = tuple((c, t) for c, t in rest.edges if c.a in side)
        return CommGraph(frozenset(side), edges)
    return induced(side_a), induced(side_b)


def _component_of(g: CommGraph, start: int, universe: frozenset[int]) -> set[int]:
    adjacency: dict[int, set[int]] = {v: set() for v in universe}
    for c, _ in g.edges:
        adjacency[c.a].add(c.b)
        adjacency[c.b].add(c.a)
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def swap_blocks(s: Schedule, split: int, m: int, l: int) -> Schedule:
    """Exchange the adjacent call blocks [split, split+m) and [split+m, split+m+l).

    Legal only when the two blocks have disjoint participant sets, in which
    case the result has the same communication graph and the same final
    knowledge state.
    """
    if split < 0 or m < 0 or l < 0 or split + m + l > len(s.calls):
        raise ValidationError(
            f"blocks [{split},{split + m}) and [{split + m},{split + m + l}) "
            f"out of range for {len(s.calls)} calls"
        )
    block1 = s.calls[split : split + m]
    block2 = s.calls[split + m : split + m + l]
    people1 = {v for c in block1 for v in (c.a, c.b)}
    people2 = {v for c in block2 for v in (c.a, c.b)}
    if people1 & people2:
        raise ValidationError(
            f"blocks share participants {sorted(people1 & people2)}; swap rule does not apply"
        )
    swapped = s.calls[:split] + block2 + block1 + s.calls[split + m + l :]
    return Schedule(s.n, swapped)


def are_equivalent(s1: Schedule, s2: Schedule) -> bool:
    """Conservative equivalence check: same call multiset and same final state.

    This is a pair of checkable necessary conditions for two schedules being
    connected by block swaps, not a decision procedure for swap reachability.
    """
    if s1.n != s2.n:
        raise ValidationError(f"person counts differ: {s1.n} != {s2.n}")
    if Counter(s1.calls) != Counter(s2.calls):
        return False
    return simulate(s1) == simulate(s2)


def to_dot(obj: "Schedule | AugmentedSchedule", name: str = "calls") -> str:
    """Render a schedule as Graphviz DOT.

    Edges carry their 1-based chronological index (preliminary calls first);
    preliminary calls are drawn dashed, mirroring the usual diagrams.
    """
    if isinstance(obj, AugmentedSchedule):
        pre, base = obj.preliminary, obj.base
    else:
        pre, base = (), obj
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for p in range(base.n):
        lines.append(f"  {p};")
    order = 0
    for c in pre:
        order += 1
        lines.append(f'  {c.a} -- {c.b} [label="{order}", style=dashed];')
    for c in base.calls:
        order += 1
        lines.append(f'  {c.a} -- {c.b} [label="{order}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
