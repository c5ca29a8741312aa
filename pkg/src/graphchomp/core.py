"""Game substrate: complexes, faces, game states, moves.

A position of chomp is a down-closed family of nonempty faces.  A move
picks a face and removes every face containing it; the player who cannot
move loses.  All reachable positions are subfamilies of the starting
complex, so states are bitmasks over a face table computed once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import FaceNotPresent, TooLarge

DEFAULT_FACE_CAP = 4096

FaceTuple = tuple[int, ...]


def _normalize_face(face: Iterable[int]) -> FaceTuple:
    out = tuple(sorted(set(int(v) for v in face)))
    if not out:
        raise ValueError("faces must be nonempty")
    if any(v < 0 for v in out):
        raise ValueError("vertex ids must be nonnegative")
    return out


def close_downward(faces: Iterable[Iterable[int]]) -> set[FaceTuple]:
    """All nonempty subsets of the given faces (the down-closure)."""
    closed: set[FaceTuple] = set()
    for face in faces:
        f = _normalize_face(face)
        if f in closed:
            continue
        for size in range(1, len(f) + 1):
            for sub in combinations(f, size):
                closed.add(sub)
    return closed


@dataclass(frozen=True)
class Move:
    """A chomp move: pick this face, removing it and every superset."""

    face: FaceTuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "face", _normalize_face(self.face))


class Complex:
    """An immutable simplicial complex with integer vertex ids.

    Vertex ids are contiguous from 0.  Faces are stored sorted by
    (cardinality, lexicographic), which fixes the move order everywhere.
    `closure_added` records whether constructing the complex had to add
    faces to restore down-closure (used by the JSON loader).
    """

    __slots__ = ("vertex_count", "vertex_labels", "faces", "closure_added",
                 "_face_set", "_table")

    def __init__(
        self,
        vertex_count: int,
        faces: Iterable[Iterable[int]],
        vertex_labels: Iterable[str] | None = None,
        face_cap: int = DEFAULT_FACE_CAP,
    ):
        given = [_normalize_face(f) for f in faces]
        closed = close_downward(given)
        if len(closed) > face_cap:
            raise TooLarge(
                f"complex has {len(closed)} faces, cap is {face_cap}")
        for f in closed:
            if f[-1] >= vertex_count:
                raise ValueError(
                    f"face {f} references vertex >= vertex_count={vertex_count}")
        self.vertex_count = int(vertex_count)
        self.faces: tuple[FaceTuple, ...] = tuple(
            sorted(closed, key=lambda f: (len(f), f)))
        self.closure_added = len(closed) > len(set(given))
        if vertex_labels is None:
            self.vertex_labels = tuple(str(i) for i in range(vertex_count))
        else:
            labels = tuple(str(x) for x in vertex_labels)
            if len(labels) != vertex_count:
                raise ValueError("vertex_labels length != vertex_count")
            self.vertex_labels = labels
        self._face_set = frozenset(self.faces)
        self._table: FaceTable | None = None

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def has_face(self, face: Iterable[int]) -> bool:
        return _normalize_face(face) in self._face_set

    def is_graph(self) -> bool:
        return all(len(f) <= 2 for f in self.faces)

    def table(self) -> "FaceTable":
        if self._table is None:
            self._table = FaceTable(self)
        return self._table

    def state(self) -> "GameState":
        t = self.table()
        return GameState(t, (1 << len(t.faces)) - 1)

    def __repr__(self) -> str:
        return f"Complex(vertices={self.vertex_count}, faces={self.face_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.faces == other.faces)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.faces))


class Graph(Complex):
    """A complex whose faces all have cardinality <= 2."""

    def __init__(self, vertex_count, faces, vertex_labels=None,
                 face_cap=DEFAULT_FACE_CAP):
        super().__init__(vertex_count, faces, vertex_labels, face_cap)
        if not self.is_graph():
            raise ValueError("Graph may only contain faces of cardinality <= 2")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        vertex_labels: Iterable[str] | None = None,
        face_cap: int = DEFAULT_FACE_CAP,
    ) -> "Graph":
        """Build a graph; every vertex id below vertex_count gets a face."""
        faces: list[FaceTuple] = [(v,) for v in range(vertex_count)]
        faces.extend(_normalize_face(e) for e in edges)
        return cls(vertex_count, faces, vertex_labels, face_cap)

    def edges(self) -> list[FaceTuple]:
        return [f for f in self.faces if len(f) == 2]

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return self.has_face((u, v))


_table_registry: dict[tuple, int] = {}


def _structural_uid(vertex_count: int, faces: tuple[FaceTuple, ...]) -> int:
    # Complexes with identical face families share one uid, so memo
    # entries keyed on (uid, mask) transfer between separately built
    # copies of the same complex.
    key = (vertex_count, faces)
    uid = _table_registry.get(key)
    if uid is None:
        uid = len(_table_registry)
        _table_registry[key] = uid
    return uid


class FaceTable:
    """Precomputed index of a starting complex for bitmask play.

    up_masks[i] is the bitmask of every face containing face i, so a
    move on face i maps mask -> mask & ~up_masks[i].
    """

    __slots__ = ("complex", "faces", "index", "vmasks", "up_masks",
                 "vertex_face_masks", "uid", "full_mask")

    def __init__(self, cx: Complex):
        self.complex = cx
        self.faces = cx.faces
        self.index = {f: i for i, f in enumerate(self.faces)}
        self.vmasks = tuple(
            sum(1 << v for v in f) for f in self.faces)
        self.uid = _structural_uid(cx.vertex_count, cx.faces)
        self.full_mask = (1 << len(self.faces)) - 1

        vmask_index = {vm: i for i, vm in enumerate(self.vmasks)}
        up = [0] * len(self.faces)
        for i, vm in enumerate(self.vmasks):
            # enumerate submasks of vm; each is a subface of face i
            sub = vm
            while sub:
                j = vmask_index.get(sub)
                if j is not None:
                    up[j] |= 1 << i
                sub = (sub - 1) & vm
        self.up_masks = up

        per_vertex = [0] * cx.vertex_count
        for i, f in enumerate(self.faces):
            for v in f:
                per_vertex[v] |= 1 << i
        self.vertex_face_masks = per_vertex

    def split_components(self, mask: int) -> list[int]:
        """Partition a live mask into vertex-connected face groups."""
        comps: list[int] = []
        remaining = mask
        while remaining:
            low = remaining & -remaining
            comp = low
            verts = self.vmasks[low.bit_length() - 1]
            while True:
                touched = 0
                vm = verts
                while vm:
                    vlow = vm & -vm
                    touched |= self.vertex_face_masks[vlow.bit_length() - 1]
                    vm ^= vlow
                new_comp = (comp | touched) & remaining
                if new_comp == comp:
                    break
                added = new_comp & ~comp
                comp = new_comp
                fm = added
                while fm:
                    flow = fm & -fm
                    verts |= self.vmasks[flow.bit_length() - 1]
                    fm ^= flow
            comps.append(comp)
            remaining &= ~comp
        return comps

    def normalized_faces(self, mask: int) -> tuple[FaceTuple, ...]:
        """Live faces with vertices relabeled contiguously from 0.

        Structural key for sharing memo entries between identical
        components that live inside different starting complexes.
        """
        live = [self.faces[i] for i in iter_bits(mask)]
        verts = sorted({v for f in live for v in f})
        remap = {v: i for i, v in enumerate(verts)}
        relabeled = [tuple(remap[v] for v in f) for f in live]
        return tuple(sorted(relabeled, key=lambda f: (len(f), f)))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GameState:
    """A live chomp position: a face table plus the mask of live faces."""

    __slots__ = ("table", "mask")

    def __init__(self, table: FaceTable, mask: int):
        self.table = table
        self.mask = mask

    @property
    def canonical_key(self) -> tuple[int, int]:
        return (self.table.uid, self.mask)

    @property
    def face_count(self) -> int:
        return bin(self.mask).count("1")

    def is_terminal(self) -> bool:
        return self.mask == 0

    def faces(self) -> list[FaceTuple]:
        return [self.table.faces[i] for i in iter_bits(self.mask)]

    def has_face(self, face: Iterable[int]) -> bool:
        i = self.table.index.get(_normalize_face(face))
        return i is not None and bool(self.mask >> i & 1)

    def complex(self) -> Complex:
        cx = self.table.complex
        return Complex(cx.vertex_count, self.faces(), cx.vertex_labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GameState):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __repr__(self) -> str:
        return f"GameState(faces={self.face_count})"


def apply_move(state: GameState, move: Move) -> GameState:
    """Remove move.face and every face containing it."""
    i = state.table.index.get(move.face)
    if i is None or not state.mask >> i & 1:
        raise FaceNotPresent(f"face {move.face} is not in the state")
    return GameState(state.table, state.mask & ~state.table.up_masks[i])


def legal_moves(state: GameState) -> list[Move]:
    """One move per live face, ordered by (cardinality, lexicographic)."""
    return [Move(state.table.faces[i]) for i in iter_bits(state.mask)]


def connected_components(state: GameState) -> list[GameState]:
    """Split the state into maximal vertex-connected face groups."""
    return [GameState(state.table, m)
            for m in state.table.split_components(state.mask)]


def disjoint_union(a: Complex, b: Complex) -> Complex:
    """The two complexes side by side, b's vertex ids shifted up."""
    shift = a.vertex_count
    faces = list(a.faces)
    faces += [tuple(v + shift for v in f) for f in b.faces]
    labels = a.vertex_labels + b.vertex_labels
    cls = Graph if isinstance(a, Graph) and isinstance(b, Graph) else Complex
    return cls(a.vertex_count + b.vertex_count, faces, labels)


def complex_to_json(cx: Complex) -> dict:
    return {
        "vertices": list(cx.vertex_labels),
        "faces": [list(f) for f in cx.faces],
    }


def complex_from_json(data: dict, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    """Load the interchange format {"vertices": [...], "faces": [[...]]}.

    Listed faces need not be down-closed; the loader closes them and the
    result's closure_added flag records whether that added anything.
    """
    if not isinstance(data, dict) or "vertices" not in data or "faces" not in data:
        raise ValueError('expected {"vertices": [...], "faces": [[...], ...]}')
    labels = [str(x) for x in data["vertices"]]
    faces = data["faces"]
    cx = Complex(len(labels), faces, labels, face_cap=face_cap)
    if cx.is_graph():
        return Graph(len(labels), faces, labels, face_cap=face_cap)
    return cx


def load_complex(path: str, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    with open(path) as fh:
        return complex_from_json(json.load(fh), face_cap=face_cap)
