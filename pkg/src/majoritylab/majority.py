"""Majority-coloring verification, greedy DAG 2-coloring, and enumeration.

A coloring is a majority coloring when every vertex has at least as many
bichromatic out-edges as monochromatic ones.  This module provides the
verifier (the ground truth every other routine is checked against), the
folklore greedy 2-coloring of finite DAGs in reverse topological order,
a backtracking enumerator of all majority k-colorings with incremental
pruning, a deliberately naive brute-force oracle, and the feasible-prefix
experiment over the counterexample truncations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .errors import CycleFound, ExtensionConflict, NotADag, NotUnique
from .graph import Coloring, DiGraph, VertexId, topological_sort

ExtensionRule = Callable[[Mapping[int, int]], Sequence[int]]


class VertexCheck(NamedTuple):
    mono_count: int
    diff_count: int
    satisfied: bool


@dataclass(frozen=True)
class DeficiencyReport:
    """Per-vertex monochromatic/bichromatic out-edge counts."""

    checks: tuple[VertexCheck, ...]
    satisfied: bool
    first_violation: int | None


@dataclass(frozen=True)
class TruthView:
    """Reads a 2-coloring as booleans relative to an anchor vertex.

    A vertex is *true* exactly when it shares the anchor's color.
    """

    anchor: VertexId
    coloring: Coloring

    def __post_init__(self) -> None:
        if self.coloring.palette_size != 2:
            raise ValueError("truth semantics require palette size 2")

    def truth(self, v: VertexId) -> bool:
        return self.coloring.colors[v] == self.coloring.colors[self.anchor]

    def truths(self, vertices: Iterable[VertexId]) -> tuple[bool, ...]:
        return tuple(self.truth(v) for v in vertices)


def verify(g: DiGraph, coloring: Coloring) -> DeficiencyReport:
    """Check the majority condition at every vertex.

    Out-degree-0 vertices are unconstrained (0 >= 0).  ``first_violation``
    is the smallest-index violating vertex, if any.
    """
    if len(coloring.colors) != g.vertex_count:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, "
            f"graph has {g.vertex_count}"
        )
    colors = coloring.colors
    checks: list[VertexCheck] = []
    first: int | None = None
    for v in range(g.vertex_count):
        cv = colors[v]
        mono = 0
        out = g.out(v)
        for u in out:
            if colors[u] == cv:
                mono += 1
        diff = len(out) - mono
        ok = diff >= mono
        checks.append(VertexCheck(mono, diff, ok))
        if not ok and first is None:
            first = v
    return DeficiencyReport(tuple(checks), first is None, first)


def greedy_dag_2color(g: DiGraph) -> Coloring:
    """The folklore majority 2-coloring of a finite DAG.

    Vertices are processed in reverse topological order, so all
    out-neighbors are already colored; each vertex takes the color with
    the smaller monochromatic count, ties going to color 0.
    """
    try:
        order = topological_sort(g)
    except CycleFound as e:
        raise NotADag(f"greedy 2-coloring needs a DAG: {e}") from e
    colors = [0] * g.vertex_count
    for v in reversed(order):
        zeros = sum(1 for u in g.out(v) if colors[u] == 0)
        ones = g.out_degree(v) - zeros
        colors[v] = 0 if zeros <= ones else 1
    return Coloring(2, tuple(colors))


def project(coloring: Coloring, vertices: Sequence[VertexId]) -> tuple[int, ...]:
    """The coloring restricted to ``vertices``, as a plain tuple."""
    return tuple(coloring.colors[v] for v in vertices)


def _normalize_free(
    g: DiGraph,
    free: Iterable[VertexId] | None,
    fixed: Mapping[VertexId, int] | None,
) -> tuple[list[int], dict[int, int]]:
    fixed = dict(fixed or {})
    if free is None:
        free_list = [v for v in range(g.vertex_count) if v not in fixed]
    else:
        free_list = sorted(set(free))
    for v in free_list:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"free vertex {v} out of range")
        if v in fixed:
            raise ValueError(f"vertex {v} is both free and fixed")
    for v in fixed:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"fixed vertex {v} out of range")
    return free_list, fixed


def enumerate_majority_colorings(
    g: DiGraph,
    palette_size: int,
    free: Iterable[VertexId] | None = None,
    extend: ExtensionRule | None = None,
    fixed: Mapping[VertexId, int] | None = None,
) -> list[Coloring]:
    """All majority colorings, ordered lexicographically over the free vertices.

    Without an extension rule, ``free`` plus ``fixed`` must cover every
    vertex; the search backtracks over vertices in index order and prunes
    a branch as soon as some vertex with all out-neighbors assigned fails
    the majority condition.

    With an extension rule, only the free and fixed vertices are assigned
    explicitly; the rule maps each such assignment to a total assignment
    (gadget internals forced), which is kept iff it passes :func:`verify`.
    A rule that reports non-uniqueness surfaces as ExtensionConflict.
    """
    if palette_size < 1:
        raise ValueError("palette_size must be positive")
    free_list, fixed_map = _normalize_free(g, free, fixed)
    if extend is None:
        if len(free_list) + len(fixed_map) != g.vertex_count:
            raise ValueError(
                "without an extension rule, free plus fixed must cover all vertices"
            )
        return _enumerate_backtracking(g, palette_size, free_list, fixed_map)
    return _enumerate_with_extension(g, palette_size, free_list, fixed_map, extend)


def _enumerate_backtracking(
    g: DiGraph,
    k: int,
    free_list: list[int],
    fixed_map: dict[int, int],
) -> list[Coloring]:
    n = g.vertex_count
    # Vertex v becomes checkable once the last of {v} + out(v) is assigned.
    checks_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if g.out_degree(v) == 0:
            continue
        checks_at[max(v, max(g.out(v)))].append(v)
    colors = [-1] * n
    for v, c in fixed_map.items():
        if not 0 <= c < k:
            raise ValueError(f"fixed color {c} for vertex {v} outside palette")
    free_set = set(free_list)
    results: list[Coloring] = []

    def condition_holds(v: int) -> bool:
        cv = colors[v]
        mono = sum(1 for u in g.out(v) if colors[u] == cv)
        return 2 * mono <= g.out_degree(v)

    def recurse(v: int) -> None:
        if v == n:
            results.append(Coloring(k, tuple(colors)))
            return
        choices = range(k) if v in free_set else (fixed_map[v],)
        for c in choices:
            colors[v] = c
            if all(condition_holds(w) for w in checks_at[v]):
                recurse(v + 1)
        colors[v] = -1

    recurse(0)
    return results


def _enumerate_with_extension(
    g: DiGraph,
    k: int,
    free_list: list[int],
    fixed_map: dict[int, int],
    extend: ExtensionRule,
) -> list[Coloring]:
    results: list[Coloring] = []
    for combo in itertools.product(range(k), repeat=len(free_list)):
        assignment = dict(zip(free_list, combo))
        assignment.update(fixed_map)
        try:
            full = extend(assignment)
        except NotUnique as e:
            raise ExtensionConflict(f"extension rule reported non-uniqueness: {e}") from e
        if len(full) != g.vertex_count:
            raise ExtensionConflict(
                f"extension returned {len(full)} colors for {g.vertex_count} vertices"
            )
        candidate = Coloring(k, tuple(full))
        if verify(g, candidate).satisfied:
            results.append(candidate)
    return results


def brute_force_majority_colorings(g: DiGraph, palette_size: int) -> list[Coloring]:
    """Oracle: every total assignment, filtered by the verifier.

    Exponential in the vertex count; meant for graphs small enough to
    exhaust.  The 2-color path counts monochromatic out-edges with
    bitmask popcounts but still visits all 2^V assignments.
    """
    if palette_size == 2:
        return _brute_force_two_colors(g)
    results = []
    for combo in itertools.product(range(palette_size), repeat=g.vertex_count):
        candidate = Coloring(palette_size, combo)
        if verify(g, candidate).satisfied:
            results.append(candidate)
    return results


def _brute_force_two_colors(g: DiGraph) -> list[Coloring]:
    n = g.vertex_count
    masks = []
    for v in range(n):
        m = 0
        for u in g.out(v):
            m |= 1 << u
        masks.append((v, m, g.out_degree(v)))
    masks = [(v, m, d) for v, m, d in masks if d > 0]
    found: list[int] = []
    for assignment in range(1 << n):
        ok = True
        for v, m, d in masks:
            ones = (assignment & m).bit_count()
            mono = ones if (assignment >> v) & 1 else d - ones
            if 2 * mono > d:
                ok = False
                break
        if ok:
            found.append(assignment)
    results = [
        Coloring(2, tuple((a >> v) & 1 for v in range(n))) for a in found
    ]
    results.sort(key=lambda c: c.colors)
    return results


def feasible_prefix_set(n: int, m: int) -> set[tuple[bool, ...]]:
    """Truth patterns on the first ``m`` path vertices realizable in G_n.

    Enumerates the majority 2-colorings of the depth-``n`` truncation with
    the anchor's color pinned to 0 (color-swap symmetry makes this lossless)
    and gadget internals filled by the forced extension, then projects the
    survivors onto path positions 1..m.
    """
    if n < 2:
        raise ValueError("truncation depth must be at least 2")
    if not 1 <= m <= n:
        raise ValueError("prefix length must satisfy 1 <= m <= n")
    from .counterexample import build_truncation, truncation_extension

    g, spec = build_truncation(n)
    rule = truncation_extension(g, spec)
    solutions = enumerate_majority_colorings(
        g, 2, free=spec.path, extend=rule, fixed={spec.anchor: 0}
    )
    return {
        TruthView(spec.anchor, c).truths(spec.path[:m]) for c in solutions
    }
