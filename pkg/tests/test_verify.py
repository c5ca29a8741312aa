import random

import pytest

from graphchomp import Graph, ResourceExceeded
from graphchomp.verify import (
    CHECKS, VerificationReport, VerificationRow, down_set_count, engine_nim,
    fuzz_involution_law, fuzz_xor_law, mutate_involution, planted_involution,
    random_graph, run_checks, verify_complete, verify_kneser,
)

import reference


def test_down_set_count_small_graphs():
    # every down-closed family is a reachable position, start and empty
    # included, so the reference reachability count is an exact oracle
    cases = [
        Graph.from_edges(1, []),
        Graph.from_edges(3, [(0, 1)]),
        Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]),
        Graph.from_edges(4, [(0, 1), (2, 3)]),
        Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    ]
    for g in cases:
        expect = len(reference.reachable_positions(
            reference.graph_faces(g.vertex_count, g.edges())))
        assert down_set_count(g, 10 ** 9) == expect


def test_down_set_count_random_graphs():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 5), 0.5)
        expect = len(reference.reachable_positions(
            reference.graph_faces(g.vertex_count, g.edges())))
        assert down_set_count(g, 10 ** 9) == expect


def test_down_set_count_respects_limit():
    g = Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])
    capped = down_set_count(g, 50)
    assert capped > 50  # reports over-limit without exact counting


def test_down_set_count_multiplies_components():
    a = Graph.from_edges(2, [(0, 1)])
    b = Graph.from_edges(4, [(0, 1), (2, 3)])
    ca = down_set_count(a, 10 ** 9)
    assert down_set_count(b, 10 ** 9) == ca * ca


def test_engine_nim_gates_oversized_graphs():
    # K_10: too many states and too many vertices for canonicalization
    g = Graph.from_edges(10, [(i, j) for i in range(10)
                              for j in range(i + 1, 10)])
    with pytest.raises(ResourceExceeded):
        engine_nim(g.state())


def test_engine_nim_uses_canonicalization_in_the_gap():
    # K_7 has ~2.4M raw states but only 7 vertices: orbit folding applies
    g = Graph.from_edges(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])
    assert engine_nim(g.state()) == 1


def test_verification_report_formatting():
    report = VerificationReport("demo", [
        VerificationRow("a", "1", "1", "ok"),
        VerificationRow("b", "2", "3", "fail", "mismatch"),
        VerificationRow("c", "-", "-", "skip", "too big"),
    ])
    assert not report.ok
    assert report.counts() == (1, 1, 1)
    text = report.format()
    assert "demo" in text and "mismatch" in text
    quiet = report.format(show_ok=False)
    assert "\n  a" not in quiet and "b" in quiet


def test_verify_kneser_small_sweep():
    report = verify_kneser(n_max=3)
    ok, fail, skip = report.counts()
    assert fail == 0 and skip == 0 and ok > 0


def test_verify_complete_small_sweep():
    report = verify_complete(n_max=4)
    assert report.ok
    assert report.counts()[0] == 5


def test_planted_involutions_validate():
    from graphchomp import Involution, validate_involution
    rng = random.Random(0)
    for _ in range(30):
        g, mapping = planted_involution(rng, rng.randint(1, 3),
                                        rng.randint(0, 2))
        assert isinstance(validate_involution(g, mapping), Involution)


def test_mutations_break_the_named_hypothesis():
    from graphchomp import Involution, validate_involution
    rng = random.Random(1)
    for _ in range(30):
        g, mapping = planted_involution(rng, rng.randint(1, 3),
                                        rng.randint(0, 2))
        bad, broken = mutate_involution(rng, g, mapping)
        out = validate_involution(bad, mapping)
        assert not isinstance(out, Involution)
        assert broken in {v.hypothesis for v in out}


def test_fuzz_laws_small_runs():
    assert fuzz_involution_law(trials=5, seed=42).ok
    assert fuzz_xor_law(trials=10, seed=42).ok


def test_run_checks_selection():
    reports = run_checks(["complete"])
    assert len(reports) == 1
    assert reports[0].ok
    with pytest.raises(KeyError) as err:
        run_checks(["nonesuch"])
    assert "nonesuch" in str(err.value)
    assert set(CHECKS) >= {"kneser", "complete", "johnson", "threshold"}
