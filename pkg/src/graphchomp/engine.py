"""Exhaustive perfect-play solver.

Grundy values by memoized mex recursion, with XOR composition over
vertex-connected components.  This module is the ground truth every
closed form in the package is tested against.
"""

from __future__ import annotations

import os
import sys
import threading
from contextlib import contextmanager
from enum import Enum

from . import canon
from .core import FaceTable, GameState, Move, iter_bits, legal_moves
from .errors import ResourceExceeded

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_TT_CAP = 5_000_000


def node_budget_default() -> int:
    raw = os.environ.get("CHOMP_NODE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


def tt_cap_default() -> int:
    raw = os.environ.get("CHOMP_TT_CAP")
    return int(raw) if raw else DEFAULT_TT_CAP


class Outcome(Enum):
    A = "A"
    B = "B"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


def mex(values) -> int:
    """Smallest nonnegative integer not in the set."""
    present = set(values)
    i = 0
    while i in present:
        i += 1
    return i


def xor_sum(a: int, b: int) -> int:
    return a ^ b


class Budget:
    """Counts expanded states; raises when the limit runs out."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceExceeded(
                f"node budget of {self.limit} exhausted", nodes=self.used)


class TranspositionTable:
    """Shared map canonical_key -> grundy value.

    Stored values are final, so concurrent duplicate computation is
    benign; the lock only protects dict integrity and the counters.
    """

    def __init__(self, capacity: int | None = None):
        self.capacity = capacity if capacity is not None else tt_cap_default()
        self.data: dict = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.RLock()

    def get(self, key):
        with self._lock:
            value = self.data.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key, value: int) -> None:
        with self._lock:
            if len(self.data) >= self.capacity and key not in self.data:
                raise ResourceExceeded(
                    f"transposition table capacity {self.capacity} exhausted")
            self.data[key] = value

    def __len__(self) -> int:
        return len(self.data)

    def stats(self) -> dict:
        with self._lock:
            return {"entries": len(self.data), "hits": self.hits,
                    "misses": self.misses, "capacity": self.capacity}

    def clear(self) -> None:
        with self._lock:
            self.data.clear()
            self.hits = 0
            self.misses = 0


_shared_table: TranspositionTable | None = None


def default_table() -> TranspositionTable:
    global _shared_table
    if _shared_table is None:
        _shared_table = TranspositionTable()
    return _shared_table


def clear_if_full(table: TranspositionTable | None = None) -> bool:
    """Reset a table that filled to capacity; returns whether it did.

    A solve that dies on table capacity leaves the table full, which
    would make every later solve fail instantly on its first new state.
    Callers that survive a ResourceExceeded call this so unrelated work
    starts from a usable table.
    """
    tt = table if table is not None else default_table()
    if len(tt) >= tt.capacity:
        tt.clear()
        return True
    return False


@contextmanager
def _recursion_room(extra: int):
    old = sys.getrecursionlimit()
    need = extra * 3 + 1000
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _solve(ft: FaceTable, mask: int, tt: TranspositionTable,
           budget: Budget) -> int:
    if mask == 0:
        return 0
    key = (ft.uid, mask)
    cached = tt.get(key)
    if cached is not None:
        return cached
    budget.spend()
    comps = ft.split_components(mask)
    if len(comps) > 1:
        value = 0
        for comp in comps:
            value ^= _component_value(ft, comp, tt, budget)
    else:
        child_values = set()
        up = ft.up_masks
        for i in iter_bits(mask):
            child_values.add(_solve(ft, mask & ~up[i], tt, budget))
        value = mex(child_values)
    tt.put(key, value)
    return value


def _component_value(ft: FaceTable, comp_mask: int, tt: TranspositionTable,
                     budget: Budget) -> int:
    # structural key shares entries between identical components that
    # occur inside different starting complexes
    norm = ft.normalized_faces(comp_mask)
    cached = tt.get(norm)
    if cached is not None:
        return cached
    value = _solve(ft, comp_mask, tt, budget)
    tt.put(norm, value)
    return value


def grundy(state: GameState, table: TranspositionTable | None = None, *,
           node_budget: int | None = None) -> int:
    """Exact grundy value of the state; raises ResourceExceeded past budget."""
    tt = table if table is not None else default_table()
    budget = Budget(node_budget if node_budget is not None
                    else node_budget_default())
    with _recursion_room(state.face_count):
        return _solve(state.table, state.mask, tt, budget)


def grundy_with_stats(state: GameState,
                      table: TranspositionTable | None = None, *,
                      node_budget: int | None = None) -> tuple[int, int]:
    """(grundy value, states expanded) for reporting."""
    tt = table if table is not None else default_table()
    budget = Budget(node_budget if node_budget is not None
                    else node_budget_default())
    with _recursion_room(state.face_count):
        value = _solve(state.table, state.mask, tt, budget)
    return value, budget.used


def best_move(state: GameState, table: TranspositionTable | None = None, *,
              node_budget: int | None = None) -> Move | None:
    """First move (in face order) leading to a grundy-0 child, if any.

    Returns None when the position itself has grundy 0: every move then
    loses against perfect play.
    """
    tt = table if table is not None else default_table()
    budget = Budget(node_budget if node_budget is not None
                    else node_budget_default())
    with _recursion_room(state.face_count):
        if _solve(state.table, state.mask, tt, budget) == 0:
            return None
        up = state.table.up_masks
        for i in iter_bits(state.mask):
            if _solve(state.table, state.mask & ~up[i], tt, budget) == 0:
                return Move(state.table.faces[i])
    raise AssertionError("nonzero grundy but no winning move found")


def outcome(state: GameState, table: TranspositionTable | None = None, *,
            node_budget: int | None = None) -> Outcome:
    """A iff the player to move wins; Unknown only on resource exhaustion."""
    try:
        value = grundy(state, table, node_budget=node_budget)
    except ResourceExceeded:
        clear_if_full(table)
        return Outcome.UNKNOWN
    return Outcome.B if value == 0 else Outcome.A


# --- isomorphism-canonicalized layer (graph states only) -------------------


def _graph_of_state(state: GameState) -> tuple[list[int], list[tuple[int, int]]]:
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for f in state.faces():
        if len(f) == 1:
            vertices.append(f[0])
        elif len(f) == 2:
            edges.append(f)
        else:
            raise ValueError(
                "grundy_canonicalized handles graph states only "
                f"(found face of cardinality {len(f)})")
    return vertices, edges


def _graph_components(
    vertices: list[int], edges: list[tuple[int, int]]
) -> list[tuple[list[int], list[tuple[int, int]]]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        comp_vs = []
        while stack:
            x = stack.pop()
            comp_vs.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp_vs.sort()
        vset = set(comp_vs)
        comp_es = [e for e in edges if e[0] in vset]
        comps.append((comp_vs, comp_es))
    return comps


def _canon_component_value(vertices: list[int], edges: list[tuple[int, int]],
                           tt: TranspositionTable, budget: Budget) -> int:
    n = len(vertices)
    remap = {v: i for i, v in enumerate(vertices)}
    local_edges = [(remap[u], remap[v]) for u, v in edges]
    local_edges = [(min(e), max(e)) for e in local_edges]
    key_edges, gens = canon.canonical_form(n, local_edges)
    key = ("canon", n, key_edges)
    cached = tt.get(key)
    if cached is not None:
        return cached
    budget.spend()

    child_values = set()

    def child_value(vs: list[int], es: list[tuple[int, int]]) -> int:
        total = 0
        for comp_vs, comp_es in _graph_components(vs, es):
            total ^= _canon_component_value(comp_vs, comp_es, tt, budget)
        return total

    all_vs = list(range(n))
    for orbit in canon.vertex_orbits(n, gens):
        v = orbit[0]
        vs = [x for x in all_vs if x != v]
        es = [e for e in local_edges if v not in e]
        child_values.add(child_value(vs, es))
    for orbit in canon.edge_orbits(local_edges, gens):
        e = orbit[0]
        es = [x for x in local_edges if x != e]
        child_values.add(child_value(all_vs, es))

    value = mex(child_values)
    tt.put(key, value)
    return value


def grundy_canonicalized(state: GameState,
                         table: TranspositionTable | None = None, *,
                         node_budget: int | None = None) -> int:
    """Same value as grundy, memoized on canonical isomorphism classes.

    Graph states only.  Makes dense symmetric instances (complete and
    complete multipartite graphs on 7+ vertices) tractable.
    """
    vertices, edges = _graph_of_state(state)
    tt = table if table is not None else default_table()
    budget = Budget(node_budget if node_budget is not None
                    else node_budget_default())
    total = 0
    with _recursion_room(len(vertices) + len(edges)):
        for comp_vs, comp_es in _graph_components(vertices, edges):
            total ^= _canon_component_value(comp_vs, comp_es, tt, budget)
    return total
