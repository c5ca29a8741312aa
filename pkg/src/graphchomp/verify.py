"""Dual-route checks: every closed form replayed against the engine.

Each runner sweeps a parameter range, computes the formula answer and
the engine answer independently, and reports per-row agreement.  Rows
the engine cannot settle at desk scale are recorded as skips, never as
failures; a fail means the two routes disagree and is always a bug.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import closedforms, engine, families, symmetry
from .core import Graph, GameState, disjoint_union
from .engine import Outcome
from .errors import ResourceExceeded, TooLarge
from .families import (FamilySpec, JohnsonParams, KneserParams,
                       MultipartiteSpec, ThresholdSpec)

DEFAULT_STATE_LIMIT = 500_000
CANON_VERTEX_LIMIT = 9


@dataclass
class VerificationRow:
    label: str
    expected: str
    computed: str
    status: str  # "ok" | "fail" | "skip"
    detail: str = ""

    def format(self) -> str:
        line = f"  {self.label:<28} expected={self.expected:<8} " \
               f"engine={self.computed:<8} {self.status}"
        if self.detail:
            line += f" ({self.detail})"
        return line


@dataclass
class VerificationReport:
    name: str
    rows: list[VerificationRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    def counts(self) -> tuple[int, int, int]:
        ok = sum(1 for r in self.rows if r.status == "ok")
        fail = sum(1 for r in self.rows if r.status == "fail")
        skip = sum(1 for r in self.rows if r.status == "skip")
        return ok, fail, skip

    def format(self, show_ok: bool = True) -> str:
        ok, fail, skip = self.counts()
        lines = [f"== {self.name} =="]
        for r in self.rows:
            if show_ok or r.status != "ok":
                lines.append(r.format())
        lines.append(f"{len(self.rows)} rows: {ok} ok, {fail} fail, "
                     f"{skip} skipped")
        return "\n".join(lines)


# --- engine feasibility gate -------------------------------------------------


def down_set_count(g: Graph, limit: int) -> int:
    """Number of game states of g, capped at limit + 1.

    States are the down-sets of the face poset; per component the count
    is sum over vertex subsets S of 2^(edges inside S), and components
    multiply.  Components over 16 vertices report the cap.
    """
    adj = g.adjacency()
    seen: set[int] = set()
    total = 1
    for start in range(g.vertex_count):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        if len(comp) > 16:
            return limit + 1
        pos = {v: i for i, v in enumerate(comp)}
        bit_adj = [0] * len(comp)
        for v in comp:
            for w in adj[v]:
                bit_adj[pos[v]] |= 1 << pos[w]
        sub = 0
        for mask in range(1 << len(comp)):
            edges = 0
            m = mask
            while m:
                low = m & -m
                i = low.bit_length() - 1
                m ^= low
                edges += bin(bit_adj[i] & m).count("1")
            sub += 1 << edges
        total *= sub
        if total > limit:
            return limit + 1
    return total


def engine_nim(state: GameState, *, node_budget: int | None = None,
               state_limit: int = DEFAULT_STATE_LIMIT) -> int:
    """Engine grundy value with a feasibility gate in front.

    Graph states past the plain-search state limit fall back to the
    isomorphism-canonicalized search when small enough; anything else
    raises ResourceExceeded without burning the budget.
    """
    cx = state.complex()
    if cx.is_graph():
        g = cx if isinstance(cx, Graph) else Graph(
            cx.vertex_count, cx.faces, cx.vertex_labels)
        count = down_set_count(g, state_limit)
        if count <= state_limit:
            return engine.grundy(state, node_budget=node_budget)
        if g.vertex_count <= CANON_VERTEX_LIMIT:
            return engine.grundy_canonicalized(state, node_budget=node_budget)
        raise ResourceExceeded(
            f"about {count} states and {g.vertex_count} vertices "
            f"exceed desk scale")
    if len(state.table.faces) > 40:
        raise ResourceExceeded(
            f"{len(state.table.faces)} faces exceed desk scale for "
            f"non-graph complexes")
    return engine.grundy(state, node_budget=node_budget)


def _nim_row(label: str, formula: closedforms.ClosedFormResult,
             state: GameState, *, node_budget: int | None,
             state_limit: int) -> VerificationRow:
    if not formula.known:
        return VerificationRow(label, "?", "-", "skip", "no closed form")
    try:
        value = engine_nim(state, node_budget=node_budget,
                           state_limit=state_limit)
    except ResourceExceeded as exc:
        engine.clear_if_full()
        return VerificationRow(label, str(formula.nim), "-", "skip", str(exc))
    status = "ok" if value == formula.nim else "fail"
    return VerificationRow(label, str(formula.nim), str(value), status,
                           formula.provenance)


def _outcome_row(label: str, expected: Outcome, state: GameState, *,
                 node_budget: int | None, state_limit: int,
                 detail: str = "") -> VerificationRow:
    if expected is Outcome.UNKNOWN:
        return VerificationRow(label, "?", "-", "skip", "no closed form")
    try:
        value = engine_nim(state, node_budget=node_budget,
                           state_limit=state_limit)
    except ResourceExceeded as exc:
        engine.clear_if_full()
        return VerificationRow(label, expected.value, "-", "skip", str(exc))
    got = Outcome.B if value == 0 else Outcome.A
    status = "ok" if got is expected else "fail"
    return VerificationRow(label, expected.value, got.value, status, detail)


# --- family sweeps -----------------------------------------------------------


def verify_kneser(n_max: int = 5, *, node_budget: int | None = None,
                  state_limit: int = DEFAULT_STATE_LIMIT) -> VerificationReport:
    """Product formula against the engine for all -1 <= l < k <= n <= n_max.

    l = -1 forces an edgeless graph; it is included because the formula
    covers it and the engine disagrees loudly if vertex parity is wrong.
    """
    report = VerificationReport(f"kneser nim formula, n <= {n_max}")
    for n in range(n_max + 1):
        for k in range(n + 1):
            for l in range(-1, k):
                p = KneserParams(n, k, l)
                label = f"kneser:{n},{k},{l}"
                formula = closedforms.kneser_nim(p)
                g = families.kneser_graph(p)
                report.rows.append(_nim_row(
                    label, formula, g.state(),
                    node_budget=node_budget, state_limit=state_limit))
    return report


def verify_complete(n_max: int = 7, *, node_budget: int | None = None,
                    state_limit: int = DEFAULT_STATE_LIMIT
                    ) -> VerificationReport:
    """K_n grundy = n mod 3 against the engine for n <= n_max."""
    report = VerificationReport(f"complete graphs, n <= {n_max}")
    for n in range(n_max + 1):
        g = families.complete_graph(n)
        formula = closedforms.known(n % 3, closedforms.PROV_COMPLETE)
        report.rows.append(_nim_row(
            f"complete:{n}", formula, g.state(),
            node_budget=node_budget, state_limit=state_limit))
    return report


def _partitions(total: int, largest: int | None = None):
    if total == 0:
        yield ()
        return
    if largest is None:
        largest = total
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def verify_multipartite(sum_max: int = 7, *, node_budget: int | None = None,
                        state_limit: int = DEFAULT_STATE_LIMIT
                        ) -> VerificationReport:
    """Odd-part count mod 3 against the engine for all partitions."""
    report = VerificationReport(
        f"complete multipartite graphs, vertex total <= {sum_max}")
    for total in range(1, sum_max + 1):
        for parts in _partitions(total):
            spec = MultipartiteSpec(parts)
            label = "multipartite:" + "+".join(str(x) for x in parts)
            formula = closedforms.multipartite_nim(spec)
            g = families.multipartite_graph(spec)
            report.rows.append(_nim_row(
                label, formula, g.state(),
                node_budget=node_budget, state_limit=state_limit))
    return report


def verify_johnson(n_max: int = 6, *, node_budget: int | None = None,
                   state_limit: int = DEFAULT_STATE_LIMIT
                   ) -> VerificationReport:
    """Known Johnson values against the engine; open cases are skips."""
    report = VerificationReport(f"johnson graphs, n <= {n_max}")
    for n in range(n_max + 1):
        for k in range(n + 1):
            p = JohnsonParams(n, k)
            formula = closedforms.johnson_nim(p)
            g = families.johnson_graph(p)
            report.rows.append(_nim_row(
                f"johnson:{n},{k}", formula, g.state(),
                node_budget=node_budget, state_limit=state_limit))
    return report


def verify_threshold(n_max: int = 5, max_attachments: int = 2, *,
                     node_budget: int | None = None,
                     state_limit: int = DEFAULT_STATE_LIMIT
                     ) -> VerificationReport:
    """Threshold outcome tables against the engine.

    Sweeps cliques K_n with every single attachment for n <= n_max and
    every attachment pair for n <= min(n_max, 4).
    """
    report = VerificationReport(
        f"threshold graphs, n <= {n_max}, up to {max_attachments} attachments")
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            spec = ThresholdSpec(n, (i,))
            label = f"threshold:{n};{i}"
            expected = closedforms.threshold_outcome(spec)
            g = families.threshold_graph(spec)
            report.rows.append(_outcome_row(
                label, expected, g.state(),
                node_budget=node_budget, state_limit=state_limit))
    if max_attachments >= 2:
        for n in range(1, min(n_max, 4) + 1):
            for i1 in range(n + 1):
                for i2 in range(i1, n + 1):
                    spec = ThresholdSpec(n, (i1, i2))
                    label = f"threshold:{n};{i1},{i2}"
                    expected = closedforms.threshold_outcome(spec)
                    g = families.threshold_graph(spec)
                    report.rows.append(_outcome_row(
                        label, expected, g.state(),
                        node_budget=node_budget, state_limit=state_limit))
    return report


_SKELETON_BASES = (
    "complete:1", "complete:2", "complete:3", "complete:4", "complete:5",
    "kneser:4,2,0", "kneser:5,2,0", "kneser:4,3,0", "kneser:5,4,0",
    "kneser:3,2,1", "kneser:4,2,1",
    "johnson:2,1", "johnson:3,1", "johnson:4,2", "johnson:4,1",
    "multipartite:1+1+1", "multipartite:2+2", "multipartite:3+1",
    "multipartite:2+1+1", "multipartite:3+2+1",
)


def verify_skeletons(s_max: int = 4, face_cap: int = 40, *,
                     node_budget: int | None = None,
                     state_limit: int = DEFAULT_STATE_LIMIT
                     ) -> VerificationReport:
    """Skeleton closed forms against the engine on every base family
    whose s-skeleton fits within face_cap faces."""
    report = VerificationReport(
        f"clique skeletons, s <= {s_max}, <= {face_cap} faces")
    for base_text in _SKELETON_BASES:
        base = families.parse_family_spec(base_text)
        for s in range(1, s_max + 1):
            spec = FamilySpec("skeleton", s=s, inner=base)
            label = spec.describe()
            try:
                cx = spec.build(face_cap)
            except TooLarge as exc:
                report.rows.append(VerificationRow(
                    label, "?", "-", "skip", str(exc)))
                continue
            formula = closedforms.closed_form_for_spec(
                spec, node_budget=node_budget)
            report.rows.append(_nim_row(
                label, formula, cx.state(),
                node_budget=node_budget, state_limit=state_limit))
    return report


def verify_clique_complexes(n_max: int = 5, face_cap: int = 40, *,
                            node_budget: int | None = None,
                            state_limit: int = DEFAULT_STATE_LIMIT
                            ) -> VerificationReport:
    """Full-clique-complex outcome parity against the engine for Kneser
    parameters with 0 <= l < k <= n <= n_max."""
    report = VerificationReport(
        f"kneser clique complexes, n <= {n_max}")
    for n in range(n_max + 1):
        for k in range(1, n + 1):
            for l in range(k):
                p = KneserParams(n, k, l)
                label = f"clique-complex kneser:{n},{k},{l}"
                expected = closedforms.kneser_chomp_clique(p)
                g = families.kneser_graph(p)
                try:
                    cx = families.clique_skeleton(
                        g, max(2, g.vertex_count), face_cap)
                except TooLarge as exc:
                    report.rows.append(VerificationRow(
                        label, expected.value, "-", "skip", str(exc)))
                    continue
                report.rows.append(_outcome_row(
                    label, expected, cx.state(),
                    node_budget=node_budget, state_limit=state_limit))
    return report


# --- randomized law checks ---------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def planted_involution(rng: random.Random, pairs: int, fixed: int,
                       p: float = 0.4) -> tuple[Graph, tuple[int, ...]]:
    """Random graph carrying a valid involution by construction.

    Vertices 2i and 2i+1 are swapped partners for i < pairs; the last
    `fixed` vertices are fixed points.  Candidate edges are symmetrized
    and partner edges dropped, so all three hypotheses hold.
    """
    n = 2 * pairs + fixed
    mapping = []
    for i in range(pairs):
        mapping.extend([2 * i + 1, 2 * i])
    mapping.extend(range(2 * pairs, n))
    edge_set: set[tuple[int, int]] = set()
    for u in range(n):
        for v in range(u + 1, n):
            if mapping[u] == v:
                continue
            if rng.random() < p:
                edge_set.add((u, v))
                iu, iv = mapping[u], mapping[v]
                # the image of a non-partner edge is never a partner edge
                edge_set.add((min(iu, iv), max(iu, iv)))
    return Graph.from_edges(n, sorted(edge_set)), tuple(mapping)


def mutate_involution(rng: random.Random, g: Graph,
                      mapping: tuple[int, ...]) -> tuple[Graph, str]:
    """Break the planted involution with one targeted edit.

    Either toggles an edge whose image is a different pair (breaking the
    automorphism hypothesis) or inserts a partner edge (breaking the
    no-adjacent-image hypothesis).  Returns the mutated graph together
    with the name of the hypothesis the edit is guaranteed to break.
    """
    n = g.vertex_count
    moved = [v for v in range(n) if mapping[v] != v]
    candidates = [(u, w) for u in moved for w in range(n)
                  if w not in (u, mapping[u])]
    if not candidates or rng.random() < 0.5:
        u = rng.choice(moved)
        bad = Graph.from_edges(
            n, sorted(set(g.edges()) | {(min(u, mapping[u]),
                                         max(u, mapping[u]))}),
            g.vertex_labels)
        # a partner edge maps onto itself, so only the adjacency
        # hypothesis can fail
        return bad, "adjacent-image"
    u, w = rng.choice(candidates)
    e = (min(u, w), max(u, w))
    # the image of e is a different pair (w is neither u nor its partner),
    # so the toggle desynchronizes e from its image
    edges = set(g.edges())
    edges.symmetric_difference_update({e})
    return Graph.from_edges(n, sorted(edges), g.vertex_labels), "automorphism"


def fuzz_involution_law(trials: int = 100, seed: int = 0, *,
                        node_budget: int | None = None) -> VerificationReport:
    """Planted involutions validate and preserve the grundy value;
    mutated ones are rejected by validation."""
    rng = random.Random(seed)
    report = VerificationReport(
        f"involution reduction law, {trials} planted + {trials} mutated")
    for trial in range(trials):
        pairs = rng.randint(1, 3)
        fixed = rng.randint(0, 2)
        g, mapping = planted_involution(rng, pairs, fixed)
        label = f"planted #{trial} ({2 * pairs}+{fixed} vertices)"
        result = symmetry.validate_involution(g, mapping)
        if not isinstance(result, symmetry.Involution):
            report.rows.append(VerificationRow(
                label, "valid", str(result[0].hypothesis), "fail",
                "planted involution rejected"))
            continue
        sub = symmetry.fixed_subgraph(g, result)
        try:
            full = engine_nim(g.state(), node_budget=node_budget)
            part = engine_nim(sub.state(), node_budget=node_budget)
        except ResourceExceeded as exc:
            engine.clear_if_full()
            report.rows.append(VerificationRow(
                label, "=", "-", "skip", str(exc)))
            continue
        status = "ok" if full == part else "fail"
        report.rows.append(VerificationRow(
            label, f"nim={full}", f"fixed nim={part}", status))
    for trial in range(trials):
        pairs = rng.randint(1, 3)
        fixed = rng.randint(0, 2)
        g, mapping = planted_involution(rng, pairs, fixed)
        bad, broken = mutate_involution(rng, g, mapping)
        label = f"mutated #{trial}"
        result = symmetry.validate_involution(bad, mapping)
        if isinstance(result, symmetry.Involution):
            report.rows.append(VerificationRow(
                label, "rejected", "validated", "fail",
                "mutation slipped through validation"))
            continue
        kinds = [v.hypothesis for v in result]
        if broken in kinds:
            report.rows.append(VerificationRow(
                label, broken, ",".join(kinds), "ok"))
        else:
            report.rows.append(VerificationRow(
                label, broken, ",".join(kinds), "fail",
                "rejected for the wrong hypothesis"))
    return report


def fuzz_xor_law(trials: int = 200, seed: int = 0, *,
                 node_budget: int | None = None) -> VerificationReport:
    """grundy(g1 + g2) equals grundy(g1) xor grundy(g2) on random graphs."""
    rng = random.Random(seed)
    report = VerificationReport(f"disjoint union xor law, {trials} trials")
    for trial in range(trials):
        g1 = random_graph(rng, rng.randint(1, 5), rng.random())
        g2 = random_graph(rng, rng.randint(1, 5), rng.random())
        label = f"xor #{trial}"
        try:
            v1 = engine.grundy(g1.state(), node_budget=node_budget)
            v2 = engine.grundy(g2.state(), node_budget=node_budget)
            both = engine.grundy(disjoint_union(g1, g2).state(),
                                 node_budget=node_budget)
        except ResourceExceeded as exc:
            engine.clear_if_full()
            report.rows.append(VerificationRow(
                label, "=", "-", "skip", str(exc)))
            continue
        status = "ok" if both == (v1 ^ v2) else "fail"
        report.rows.append(VerificationRow(
            label, f"{v1}^{v2}={v1 ^ v2}", str(both), status))
    return report


# --- registry ----------------------------------------------------------------

CHECKS = {
    "kneser": verify_kneser,
    "complete": verify_complete,
    "multipartite": verify_multipartite,
    "johnson": verify_johnson,
    "threshold": verify_threshold,
    "skeletons": verify_skeletons,
    "clique-complexes": verify_clique_complexes,
}


def run_checks(names: list[str] | None = None, *,
               node_budget: int | None = None) -> list[VerificationReport]:
    """Run the named family sweeps (all of them by default)."""
    if not names or names == ["all"]:
        names = list(CHECKS)
    reports = []
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; "
                           f"choose from {', '.join(CHECKS)} or all")
        reports.append(CHECKS[name](node_budget=node_budget))
    return reports
