"""Canonical labeling for small graphs.

Iterated degree refinement plus individualization backtracking.  The
search records automorphisms discovered when two leaves produce the same
canonical key and uses them (restricted to those fixing the current
individualization prefix pointwise) to prune sibling branches.  Complete
and edgeless graphs short-circuit.

Only meant for desk-scale graphs (roughly <= 12 vertices); correctness
is tested against brute-force isomorphism on small graphs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

EdgeKey = tuple[tuple[int, int], ...]
Perm = tuple[int, ...]


def _renumber(keys: Sequence) -> tuple[int, ...]:
    """Map each distinct key to its rank in sorted order."""
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return tuple(order[k] for k in keys)


def _refine(adj: list[list[int]], colors: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            for v in range(len(adj))
        ]
        new = _renumber(keys)
        if new == colors:
            return colors
        colors = new


def _full_symmetry_generators(n: int) -> list[Perm]:
    if n < 2:
        return []
    swap = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    return [swap, cycle] if n > 2 else [swap]


def canonical_form(
    n: int, edges: Iterable[tuple[int, int]]
) -> tuple[EdgeKey, list[Perm]]:
    """Canonical edge tuple plus discovered automorphism generators.

    Two graphs on the same vertex count are isomorphic iff their
    canonical edge tuples are equal.  The generator list is a (possibly
    incomplete) set of automorphisms of the input labeling, usable for
    orbit-based deduplication; completeness is never assumed.
    """
    edge_set = {tuple(sorted(e)) for e in edges}
    if any(u == v for u, v in edge_set):
        raise ValueError("self-loops are not allowed")
    m = len(edge_set)
    if n <= 1 or m == 0:
        return (), _full_symmetry_generators(n)
    if m == n * (n - 1) // 2:
        return tuple(combinations(range(n), 2)), _full_symmetry_generators(n)

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)

    best: dict = {"key": None, "perm": None}
    gens: list[Perm] = []

    def leaf(colors: tuple[int, ...]) -> None:
        # discrete coloring: color value = canonical position
        perm = colors
        key = tuple(sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v]))
            for u, v in edge_set))
        if best["key"] is None or key < best["key"]:
            best["key"] = key
            best["perm"] = perm
        elif key == best["key"]:
            bp = best["perm"]
            inv = [0] * n
            for v in range(n):
                inv[bp[v]] = v
            sigma = tuple(inv[perm[v]] for v in range(n))
            if any(sigma[v] != v for v in range(n)):
                gens.append(sigma)

    def search(colors: tuple[int, ...], prefix: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            leaf(colors)
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(
            (c for c in counts if counts[c] > 1),
            key=lambda c: (counts[c], c))
        candidates = [v for v in range(n) if colors[v] == target]
        processed: list[int] = []
        for v in candidates:
            if _in_processed_orbit(v, processed, gens, prefix):
                continue
            processed.append(v)
            branched = _renumber([
                (colors[u], 0 if u == v else 1) for u in range(n)])
            search(branched, prefix + [v])

    def _in_processed_orbit(
        v: int, processed: list[int], gens: list[Perm], prefix: list[int]
    ) -> bool:
        if not processed:
            return False
        usable = [g for g in gens
                  if all(g[p] == p for p in prefix)]
        if not usable:
            return False
        seen = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in usable:
                y = g[x]
                if y in processed:
                    return True
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return False

    search(_renumber([0] * n), [])
    return best["key"], gens


def canonical_key(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    key, _ = canonical_form(n, edges)
    return (n, key)


def vertex_orbits(n: int, gens: list[Perm]) -> list[list[int]]:
    """Orbits of the group generated by gens (union-find closure)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def edge_orbits(
    edges: list[tuple[int, int]], gens: list[Perm]
) -> list[list[tuple[int, int]]]:
    """Orbits of the generated group acting on the given edges."""
    idx = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for e in edges:
            img = (min(g[e[0]], g[e[1]]), max(g[e[0]], g[e[1]]))
            a, b = find(idx[e]), find(idx[img])
            if a != b:
                parent[a] = b
    groups: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        groups.setdefault(find(idx[e]), []).append(e)
    return list(groups.values())
