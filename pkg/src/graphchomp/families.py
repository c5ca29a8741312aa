"""Constructors for the graph and complex families the toolkit analyzes.

Vertices of the subset-based families (generalized Kneser, Johnson) are
the k-subsets of {1..n}, numbered by colexicographic rank so ids are
stable across runs; labels render the subsets ("{1,3}").
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import combinations

from .core import DEFAULT_FACE_CAP, Complex, Graph
from .errors import InvalidSpec, TooLarge


@dataclass(frozen=True)
class KneserParams:
    """Generalized Kneser graph parameters: k-subsets of an n-set,
    adjacent when they intersect in at most l elements."""

    n: int
    k: int
    l: int

    @property
    def m(self) -> int:
        """ceil(log2(k - l)); the halving depth.  Defined for l < k."""
        if self.l >= self.k:
            raise ValueError("m is defined only for l < k")
        return (self.k - self.l - 1).bit_length()

    @property
    def block(self) -> int:
        return 1 << self.m

    @property
    def t(self) -> int:
        return self.n // self.block

    @property
    def j(self) -> int:
        return self.k // self.block


@dataclass(frozen=True)
class JohnsonParams:
    """Johnson graph parameters: k-subsets of an n-set, adjacent when
    they intersect in exactly k-1 elements."""

    n: int
    k: int


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))

    @property
    def odd_part_count(self) -> int:
        return sum(1 for p in self.parts if p % 2 == 1)


@dataclass(frozen=True)
class ThresholdSpec:
    """A clique on u_1..u_n plus one extra vertex per attachment index i,
    adjacent to u_1..u_i (an index of 0 gives an isolated vertex)."""

    n: int
    attachments: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "attachments", tuple(int(i) for i in self.attachments))


def subset_label(subset: tuple[int, ...]) -> str:
    return "{" + ",".join(str(v + 1) for v in sorted(subset)) + "}"


def colex_rank(subset: tuple[int, ...]) -> int:
    """Position of a sorted 0-based subset in colexicographic order."""
    return sum(math.comb(v, i + 1) for i, v in enumerate(sorted(subset)))


def ksubsets_colex(n: int, k: int) -> list[tuple[int, ...]]:
    subs = list(combinations(range(n), k))
    subs.sort(key=colex_rank)
    return subs


def _subset_graph(n: int, k: int, adjacent, face_cap: int) -> Graph:
    if k < 0 or n < 0 or n < k:
        return Graph(0, [])
    count = math.comb(n, k)
    if count > face_cap:
        raise TooLarge(f"C({n},{k}) = {count} vertices exceeds cap {face_cap}")
    subs = ksubsets_colex(n, k)
    labels = [subset_label(s) for s in subs]
    sets = [frozenset(s) for s in subs]
    edges = []
    for a in range(count):
        for b in range(a + 1, count):
            if adjacent(sets[a], sets[b]):
                edges.append((a, b))
    return Graph.from_edges(count, edges, labels, face_cap=face_cap)


def kneser_graph(p: KneserParams, face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    """Empty graph when k < 0 or n < k; edgeless when l < 0 or n < 2k-l."""
    return _subset_graph(
        p.n, p.k, lambda a, b: len(a & b) <= p.l, face_cap)


def johnson_graph(p: JohnsonParams, face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    if not 0 <= p.k <= p.n:
        raise InvalidSpec(f"johnson requires 0 <= k <= n, got {p}")
    return _subset_graph(
        p.n, p.k, lambda a, b: len(a & b) == p.k - 1, face_cap)


def multipartite_graph(spec: MultipartiteSpec,
                       face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    if any(p < 1 for p in spec.parts):
        raise InvalidSpec(f"multipartite parts must be >= 1, got {spec.parts}")
    total = sum(spec.parts)
    labels = []
    part_of = []
    for i, size in enumerate(spec.parts):
        for j in range(size):
            labels.append(f"{i + 1}.{j + 1}")
            part_of.append(i)
    edges = [(a, b)
             for a in range(total)
             for b in range(a + 1, total)
             if part_of[a] != part_of[b]]
    return Graph.from_edges(total, edges, labels, face_cap=face_cap)


def complete_graph(n: int, face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    if n < 0:
        raise InvalidSpec("complete graph needs n >= 0")
    labels = [str(i + 1) for i in range(n)]
    edges = list(combinations(range(n), 2))
    return Graph.from_edges(n, edges, labels, face_cap=face_cap)


def threshold_graph(spec: ThresholdSpec,
                    face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    if spec.n < 0:
        raise InvalidSpec("threshold clique size must be >= 0")
    for i in spec.attachments:
        if not 0 <= i <= spec.n:
            raise InvalidSpec(
                f"attachment index {i} out of range 0..{spec.n}")
    n = spec.n
    labels = [f"u{i + 1}" for i in range(n)]
    edges = list(combinations(range(n), 2))
    for j, i in enumerate(spec.attachments):
        vid = n + j
        labels.append(f"v{j + 1}")
        edges.extend((u, vid) for u in range(i))
    return Graph.from_edges(n + len(spec.attachments), edges, labels,
                            face_cap=face_cap)


def join_graph(g1: Graph, g2: Graph, face_cap: int = DEFAULT_FACE_CAP) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    shift = g1.vertex_count
    edges = list(g1.edges())
    edges += [(u + shift, v + shift) for u, v in g2.edges()]
    edges += [(u, v + shift)
              for u in range(g1.vertex_count)
              for v in range(g2.vertex_count)]
    labels = g1.vertex_labels + g2.vertex_labels
    return Graph.from_edges(g1.vertex_count + g2.vertex_count, edges, labels,
                            face_cap=face_cap)


def clique_skeleton(g: Graph, s: int, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
    """All cliques of g of size <= s, as a complex.  s=2 returns g itself."""
    if s < 0:
        raise InvalidSpec("skeleton parameter s must be >= 0")
    if s == 2:
        return g
    if s == 0:
        return Complex(0, [])
    if s == 1:
        return Graph(g.vertex_count, [(v,) for v in range(g.vertex_count)],
                     g.vertex_labels)
    adj = g.adjacency()
    faces: list[tuple[int, ...]] = [(v,) for v in range(g.vertex_count)]
    layer = [(v,) for v in range(g.vertex_count)]
    size = 1
    while layer and size < s:
        next_layer = []
        for clique in layer:
            last = clique[-1]
            common = adj[last].intersection(*(adj[v] for v in clique[:-1])) \
                if len(clique) > 1 else adj[last]
            for w in sorted(common):
                if w > last:
                    next_layer.append(clique + (w,))
                    if len(faces) + len(next_layer) > face_cap:
                        raise TooLarge(
                            f"clique enumeration exceeds face cap {face_cap}")
        faces.extend(next_layer)
        layer = next_layer
        size += 1
    return Complex(g.vertex_count, faces, g.vertex_labels, face_cap=face_cap)


# --- family spec strings ----------------------------------------------------

SPEC_GRAMMAR = [
    ("kneser:n,k,l", "generalized Kneser graph on k-subsets of {1..n}, "
                     "adjacent when intersecting in at most l elements"),
    ("johnson:n,k", "Johnson graph on k-subsets of {1..n}, adjacent when "
                    "intersecting in exactly k-1 elements"),
    ("multipartite:n1+n2+...", "complete multipartite graph"),
    ("threshold:n;i1,i2,...", "clique K_n plus attachment vertices adjacent "
                              "to the first i_j clique vertices"),
    ("complete:n", "complete graph"),
    ("skeleton(s=<s>):<inner spec>", "cliques of the inner graph of size <= s"),
]

_SKELETON_RE = re.compile(r"^skeleton\(s=(-?\d+)\):(.+)$")


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family spec; build() constructs the graph or complex."""

    kind: str
    params: object = None
    s: int | None = None
    inner: "FamilySpec | None" = field(default=None)

    def build(self, face_cap: int = DEFAULT_FACE_CAP) -> Complex:
        if self.kind == "kneser":
            return kneser_graph(self.params, face_cap)
        if self.kind == "johnson":
            return johnson_graph(self.params, face_cap)
        if self.kind == "multipartite":
            return multipartite_graph(self.params, face_cap)
        if self.kind == "threshold":
            return threshold_graph(self.params, face_cap)
        if self.kind == "complete":
            return complete_graph(self.params, face_cap)
        if self.kind == "skeleton":
            inner = self.inner.build(face_cap)
            if not isinstance(inner, Graph):
                raise InvalidSpec("skeleton needs a graph inside")
            return clique_skeleton(inner, self.s, face_cap)
        raise InvalidSpec(f"unknown family kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "kneser":
            p = self.params
            return f"kneser:{p.n},{p.k},{p.l}"
        if self.kind == "johnson":
            p = self.params
            return f"johnson:{p.n},{p.k}"
        if self.kind == "multipartite":
            return "multipartite:" + "+".join(str(x) for x in self.params.parts)
        if self.kind == "threshold":
            p = self.params
            return (f"threshold:{p.n};"
                    + ",".join(str(i) for i in p.attachments))
        if self.kind == "complete":
            return f"complete:{self.params}"
        if self.kind == "skeleton":
            return f"skeleton(s={self.s}):{self.inner.describe()}"
        raise InvalidSpec(f"unknown family kind {self.kind!r}")


def _ints(text: str, sep: str, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(sep)]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidSpec(f"could not parse {what}: {text!r}") from None


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    m = _SKELETON_RE.match(text)
    if m:
        s = int(m.group(1))
        if s < 0:
            raise InvalidSpec("skeleton parameter s must be >= 0")
        return FamilySpec("skeleton", s=s, inner=parse_family_spec(m.group(2)))
    if ":" not in text:
        raise InvalidSpec(f"not a family spec: {text!r}")
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    rest = rest.strip()
    if kind == "kneser":
        vals = _ints(rest, ",", "kneser parameters n,k,l")
        if len(vals) != 3:
            raise InvalidSpec("kneser takes exactly n,k,l")
        return FamilySpec("kneser", KneserParams(*vals))
    if kind == "johnson":
        vals = _ints(rest, ",", "johnson parameters n,k")
        if len(vals) != 2:
            raise InvalidSpec("johnson takes exactly n,k")
        return FamilySpec("johnson", JohnsonParams(*vals))
    if kind == "multipartite":
        vals = _ints(rest, "+", "multipartite part sizes")
        if not vals:
            raise InvalidSpec("multipartite needs at least one part")
        return FamilySpec("multipartite", MultipartiteSpec(tuple(vals)))
    if kind == "threshold":
        head, sep, tail = rest.partition(";")
        if not sep:
            raise InvalidSpec("threshold spec is threshold:n;i1,i2,...")
        head_vals = _ints(head, ",", "threshold clique size")
        if len(head_vals) != 1:
            raise InvalidSpec("threshold clique size must be a single integer")
        n = head_vals[0]
        attachments = _ints(tail, ",", "threshold attachment indices") \
            if tail.strip() else []
        return FamilySpec("threshold", ThresholdSpec(n, tuple(attachments)))
    if kind == "complete":
        vals = _ints(rest, ",", "complete graph size")
        if len(vals) != 1:
            raise InvalidSpec("complete takes exactly n")
        return FamilySpec("complete", vals[0])
    raise InvalidSpec(f"unknown family {kind!r}")
