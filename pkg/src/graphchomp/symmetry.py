"""Involution machinery and the mirror strategy.

A validated involution (self-inverse automorphism mapping no vertex to a
neighbor) reduces the game to its fixed subgraph; the analogous poset
involution on a complex reduces to its fixed down-set.  The mirror
strategy turns such a reduction into actual play: answer every move
outside the fixed part by its image, delegate fixed-part moves to the
engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import engine
from .core import Complex, FaceTuple, GameState, Graph, Move, apply_move
from .errors import (DisciplineBroken, InvalidSpec, NotApplicable,
                     NotValidated, TooLarge)
from .families import (FamilySpec, JohnsonParams, KneserParams,
                       MultipartiteSpec, ksubsets_colex)

# --- graph involutions ------------------------------------------------------


@dataclass(frozen=True)
class Involution:
    """A vertex permutation with per-hypothesis validation flags."""

    mapping: tuple[int, ...]
    self_inverse: bool
    automorphism: bool
    no_adjacent_image: bool

    @property
    def validated(self) -> bool:
        return self.self_inverse and self.automorphism and self.no_adjacent_image

    def fixed_points(self) -> list[int]:
        return [v for v, w in enumerate(self.mapping) if v == w]

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.mapping))


@dataclass(frozen=True)
class InvolutionViolation:
    hypothesis: str  # "self-inverse" | "automorphism" | "adjacent-image"
    witness: tuple


def validate_involution(
    g: Graph, phi: Sequence[int]
) -> Involution | list[InvolutionViolation]:
    """Check the reduction hypotheses; return the violations otherwise.

    Hypotheses: (a) phi is self-inverse, (b) phi maps edges onto edges,
    (c) no vertex is adjacent to its own image.
    """
    n = g.vertex_count
    mapping = tuple(int(x) for x in phi)
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        raise ValueError("phi must be a permutation of all vertex ids")
    violations: list[InvolutionViolation] = []
    self_inverse = True
    for v in range(n):
        if mapping[mapping[v]] != v:
            violations.append(InvolutionViolation("self-inverse", (v,)))
            self_inverse = False
            break
    # a bijection preserving every edge forward preserves the edge count,
    # so the reverse direction needs no separate pass
    edges = set(g.edges())
    automorphism = True
    for u, v in edges:
        img = (mapping[u], mapping[v])
        img = (min(img), max(img))
        if img not in edges:
            violations.append(InvolutionViolation("automorphism", (u, v)))
            automorphism = False
            break
    no_adjacent = True
    for v in range(n):
        w = mapping[v]
        if v != w and (min(v, w), max(v, w)) in edges:
            violations.append(InvolutionViolation("adjacent-image", (v,)))
            no_adjacent = False
            break
    if violations:
        return violations
    return Involution(mapping, self_inverse, automorphism, no_adjacent)


def fixed_subgraph(g: Graph, phi: Involution) -> Graph:
    """Induced subgraph on phi's fixed points; grundy-equivalent to g."""
    if not isinstance(phi, Involution) or not phi.validated:
        raise NotValidated("fixed_subgraph needs a validated involution")
    fixed = phi.fixed_points()
    remap = {v: i for i, v in enumerate(fixed)}
    edges = [(remap[u], remap[v]) for u, v in g.edges()
             if u in remap and v in remap]
    labels = [g.vertex_labels[v] for v in fixed]
    return Graph.from_edges(len(fixed), edges, labels)


def identity_involution(g: Graph) -> Involution:
    return Involution(tuple(range(g.vertex_count)), True, True, True)


# --- ground permutations and subset lifts -----------------------------------


@dataclass(frozen=True)
class GroundPermutation:
    """An order-2 permutation of {1..n} given by disjoint transpositions."""

    transpositions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for a, b in self.transpositions:
            if a == b or a < 1 or b < 1:
                raise ValueError(f"bad transposition ({a},{b})")
            if a in seen or b in seen:
                raise ValueError("transpositions must be disjoint")
            seen.update((a, b))

    @property
    def t(self) -> int:
        return len(self.transpositions)

    def mapping(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.transpositions:
            out[a] = b
            out[b] = a
        return out

    def apply_to_subset(self, subset: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a 0-based subset under the 1-based ground permutation."""
        m = self.mapping()
        return tuple(sorted(m.get(v + 1, v + 1) - 1 for v in subset))

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.transpositions) or "id"


def lift_ground_permutation(
    gp: GroundPermutation, subsets: Sequence[tuple[int, ...]]
) -> tuple[int, ...]:
    """Lift a ground permutation to a permutation of subset-vertices.

    subsets[i] is the 0-based subset behind vertex i; the image of every
    subset must itself appear in the list.
    """
    index = {s: i for i, s in enumerate(subsets)}
    out = []
    for s in subsets:
        img = gp.apply_to_subset(s)
        if img not in index:
            raise ValueError(f"image {img} of subset {s} is not a vertex")
        out.append(index[img])
    return tuple(out)


def kneser_halving_chain(p: KneserParams) -> list[GroundPermutation]:
    """The halving permutations whose iterated fixed-point reductions
    collapse the first 2^m ground elements to all-or-nothing membership.

    Step i pairs j with j + 2^(i-1) whenever 0 < (j mod 2^i) <= 2^(i-1),
    giving 2^(m-1) transpositions, strictly fewer than k - l.
    """
    if p.l >= p.k:
        raise NotApplicable("halving chain needs l < k")
    m = p.m
    if m == 0:
        return []
    if (1 << m) > p.n:
        raise NotApplicable(
            f"halving chain needs 2^m = {1 << m} <= n = {p.n}")
    chain = []
    for i in range(1, m + 1):
        half = 1 << (i - 1)
        pairs = tuple(
            (j, j + half)
            for j in range(1, (1 << m) + 1)
            if 0 < j % (1 << i) <= half)
        chain.append(GroundPermutation(pairs))
    return chain


def kneser_halving_fixed_graph(p: KneserParams) -> Graph:
    """The graph left after applying the whole halving chain.

    Its vertices are the k-subsets that contain the first 2^m ground
    elements entirely or avoid them entirely.
    """
    subs = ksubsets_colex(p.n, p.k)
    for gp in kneser_halving_chain(p):
        subs = [s for s in subs if gp.apply_to_subset(s) == s]
    edges = []
    sets = [frozenset(s) for s in subs]
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            if len(sets[a] & sets[b]) <= p.l:
                edges.append((a, b))
    from .families import subset_label
    return Graph.from_edges(len(subs), edges,
                            [subset_label(s) for s in subs])


def kneser_multipartite_reduction(p: KneserParams) -> MultipartiteSpec:
    """Multipartite graph with the same grundy value as the Kneser graph.

    C(t, j) parts, each of size C(n mod 2^m, k mod 2^m); empty when
    either count is zero.
    """
    if p.k < 0 or p.n < p.k:
        return MultipartiteSpec(())
    if p.l == p.k - 1:
        count = math.comb(p.n, p.k)
        if count > 4096:
            raise TooLarge(f"complete graph on {count} vertices")
        return MultipartiteSpec((1,) * count)
    if not 0 <= p.l <= p.k - 2:
        raise InvalidSpec(f"reduction needs 0 <= l <= k-2, got {p}")
    block = p.block
    size = math.comb(p.n % block, p.k % block)
    count = math.comb(p.t, p.j)
    if size == 0 or count == 0:
        return MultipartiteSpec(())
    if count > 4096:
        raise TooLarge(f"{count} parts exceed desk scale")
    return MultipartiteSpec((size,) * count)


def join_involution(g1: Graph, phi1: Involution,
                    g2: Graph, phi2: Involution) -> Involution:
    """Combine involutions of two graphs into one on their join."""
    for phi in (phi1, phi2):
        if not isinstance(phi, Involution) or not phi.validated:
            raise NotValidated("join_involution needs validated involutions")
    shift = g1.vertex_count
    mapping = tuple(phi1.mapping) + tuple(v + shift for v in phi2.mapping)
    from .families import join_graph
    joined = join_graph(g1, g2)
    result = validate_involution(joined, mapping)
    if not isinstance(result, Involution):
        raise AssertionError(f"join involution failed validation: {result}")
    return result


def johnson_involution(p: JohnsonParams) -> Involution | None:
    """The standard usable involution of a Johnson graph, if one exists.

    n and k both even: lift of the ground pairing (1,2)(3,4)...(n-1,n).
    n = 2k with k >= 2: set complementation.  Otherwise no non-identity
    involution satisfies the reduction hypotheses, and None is returned.
    """
    if not 0 <= p.k <= p.n:
        raise InvalidSpec(f"johnson requires 0 <= k <= n, got {p}")
    g = None
    mapping: tuple[int, ...] | None = None
    if p.n % 2 == 0 and p.k % 2 == 0:
        subs = ksubsets_colex(p.n, p.k)
        gp = GroundPermutation(tuple(
            (j, j + 1) for j in range(1, p.n, 2)))
        mapping = lift_ground_permutation(gp, subs)
    elif p.n == 2 * p.k and p.k >= 2:
        subs = ksubsets_colex(p.n, p.k)
        index = {s: i for i, s in enumerate(subs)}
        ground = set(range(p.n))
        mapping = tuple(
            index[tuple(sorted(ground - set(s)))] for s in subs)
    if mapping is None:
        return None
    from .families import johnson_graph
    g = johnson_graph(p)
    result = validate_involution(g, mapping)
    if not isinstance(result, Involution):
        raise AssertionError(f"johnson involution failed validation: {result}")
    return result


# --- poset involutions on complexes ----------------------------------------


@dataclass(frozen=True)
class PosetInvolution:
    """A self-inverse order-isomorphism of a complex's face poset whose
    fixed set is a down-set; the game reduces to that fixed set."""

    mapping: dict[FaceTuple, FaceTuple]
    fixed: frozenset[FaceTuple]

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.mapping.items())), self.fixed))


@dataclass(frozen=True)
class PosetViolation:
    hypothesis: str
    witness: tuple


def lift_involution_to_faces(
    cx: Complex, mapping: Sequence[int]
) -> dict[FaceTuple, FaceTuple]:
    """Apply a vertex permutation to every face of the complex."""
    return {f: tuple(sorted(mapping[v] for v in f)) for f in cx.faces}


def validate_poset_involution(
    cx: Complex, psi: dict[FaceTuple, FaceTuple] | Callable[[FaceTuple], FaceTuple]
) -> PosetInvolution | list[PosetViolation]:
    """Check self-inverseness, order-isomorphism, and the down-set
    condition on the fixed faces; return violations otherwise."""
    faces = cx.faces
    if callable(psi):
        table = {f: tuple(sorted(psi(f))) for f in faces}
    else:
        table = {f: tuple(sorted(psi[f])) for f in faces if f in psi}
        if len(table) != len(faces):
            missing = next(f for f in faces if f not in psi)
            raise ValueError(f"psi is not defined on face {missing}")
    violations: list[PosetViolation] = []
    face_set = set(faces)
    bad_image = next((f for f, im in table.items() if im not in face_set), None)
    if bad_image is not None:
        violations.append(PosetViolation("image-not-face", (bad_image,)))
        return violations
    for f in faces:
        if table[table[f]] != f:
            violations.append(PosetViolation("self-inverse", (f,)))
            break
    order_ok = True
    for f in faces:
        for g in faces:
            sub = set(f) <= set(g)
            img_sub = set(table[f]) <= set(table[g])
            if sub != img_sub:
                violations.append(PosetViolation("order-isomorphism", (f, g)))
                order_ok = False
                break
        if not order_ok:
            break
    fixed = frozenset(f for f in faces if table[f] == f)
    for f in fixed:
        for g in faces:
            if set(g) < set(f) and g not in fixed:
                violations.append(
                    PosetViolation("fixed-set-not-down-closed", (g, f)))
                break
        else:
            continue
        break
    if violations:
        return violations
    return PosetInvolution(dict(table), fixed)


# --- mirror strategy --------------------------------------------------------


class MirrorStrategy:
    """Plays the reduction: mirror non-fixed moves through the involution,
    answer fixed-part moves with the engine's best move on the fixed part.

    One instance is bound to one game; it tracks the expected state and
    raises DisciplineBroken when handed a position it cannot have
    produced.
    """

    def __init__(self, cx: Complex, involution: PosetInvolution, *,
                 table: engine.TranspositionTable | None = None,
                 node_budget: int | None = None):
        if not isinstance(involution, PosetInvolution):
            raise NotValidated("MirrorStrategy needs a validated PosetInvolution")
        self.complex = cx
        self.involution = involution
        self._table = table
        self._node_budget = node_budget
        fixed_faces = sorted(involution.fixed, key=lambda f: (len(f), f))
        self._fixed_complex = Complex(cx.vertex_count, fixed_faces,
                                      cx.vertex_labels) \
            if fixed_faces else Complex(0, [])
        self._fixed_state = self._fixed_complex.state()
        self._fixed_set = involution.fixed
        self._expected = cx.state()

    @property
    def expected_state(self) -> GameState:
        return self._expected

    def fixed_part_grundy(self) -> int:
        return engine.grundy(self._fixed_state, self._table,
                             node_budget=self._node_budget)

    def opening_move(self) -> Move | None:
        """Winning first move inside the fixed part, when one exists.

        None means the fixed part has grundy 0, i.e. the strategy's seat
        is the second player.
        """
        if self._expected.mask != self._expected.table.full_mask:
            raise DisciplineBroken("opening_move only applies at the start")
        mv = engine.best_move(self._fixed_state, self._table,
                              node_budget=self._node_budget)
        if mv is None:
            return None
        self._fixed_state = apply_move(self._fixed_state, mv)
        self._expected = apply_move(self._expected, mv)
        return mv

    def reply(self, state: GameState, opponent_move: Move) -> Move:
        if state.canonical_key != self._expected.canonical_key:
            raise DisciplineBroken(
                "state does not match the strategy's tracked position")
        after = apply_move(state, opponent_move)
        if opponent_move.face in self._fixed_set:
            fixed_after = apply_move(self._fixed_state, opponent_move)
            mv = engine.best_move(fixed_after, self._table,
                                  node_budget=self._node_budget)
            if mv is None:
                raise DisciplineBroken(
                    "no reply available: the strategy was not seated "
                    "as the winning player")
            self._fixed_state = apply_move(fixed_after, mv)
        else:
            mv = Move(self.involution.mapping[opponent_move.face])
        self._expected = apply_move(after, mv)
        return mv


def mirror_reply(strategy: MirrorStrategy, state: GameState,
                 opponent_move: Move) -> Move:
    """Strategy's legal reply to the opponent's move from this state."""
    return strategy.reply(state, opponent_move)


def multipartite_pairing(spec: MultipartiteSpec) -> tuple[int, ...]:
    """Involution pairing consecutive vertices inside every part; fixes
    one representative per odd part, so the fixed subgraph is complete."""
    mapping: list[int] = []
    base = 0
    for size in spec.parts:
        for j in range(size // 2):
            mapping.extend([base + 2 * j + 1, base + 2 * j])
        if size % 2:
            mapping.append(base + size - 1)
        base += size
    return tuple(mapping)


def family_vertex_involution(spec: FamilySpec) -> tuple[int, ...] | None:
    """A usable non-identity vertex involution for a family, if known."""
    if spec.kind == "johnson":
        inv = johnson_involution(spec.params)
        if inv is not None and not inv.is_identity():
            return inv.mapping
        return None
    if spec.kind == "multipartite":
        mapping = multipartite_pairing(spec.params)
        if any(v != w for v, w in enumerate(mapping)):
            return mapping
        return None
    if spec.kind == "kneser":
        p = spec.params
        if p.k < 0 or p.n < p.k or p.l >= p.k:
            return None
        try:
            chain = kneser_halving_chain(p)
        except NotApplicable:
            return None
        if not chain:
            return None
        subs = ksubsets_colex(p.n, p.k)
        return lift_ground_permutation(chain[0], subs)
    return None


def family_mirror_strategy(
    spec: FamilySpec, cx: Complex, *,
    table: engine.TranspositionTable | None = None,
    node_budget: int | None = None,
) -> MirrorStrategy | None:
    """Mirror strategy for a built family complex, when the family has
    a usable involution.  The involution lifts to skeleton complexes."""
    base = spec.inner if spec.kind == "skeleton" else spec
    mapping = family_vertex_involution(base)
    if mapping is None:
        return None
    psi = lift_involution_to_faces(cx, mapping)
    validated = validate_poset_involution(cx, psi)
    if not isinstance(validated, PosetInvolution):
        return None
    return MirrorStrategy(cx, validated, table=table, node_budget=node_budget)
