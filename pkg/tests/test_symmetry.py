import random

import pytest

from graphchomp import (
    Complex, DisciplineBroken, GroundPermutation, Graph, Involution,
    InvalidSpec, JohnsonParams, KneserParams, MirrorStrategy, Move,
    MultipartiteSpec, NotApplicable, NotValidated, PosetInvolution,
    TooLarge, apply_move, fixed_subgraph, family_mirror_strategy,
    family_vertex_involution, grundy, johnson_graph, johnson_involution,
    join_graph, join_involution, kneser_graph, kneser_halving_chain,
    kneser_halving_fixed_graph, kneser_multipartite_reduction, kneser_nim,
    ksubsets_colex, legal_moves, lift_ground_permutation,
    lift_involution_to_faces, mirror_reply, multipartite_graph,
    multipartite_nim, multipartite_pairing, parse_family_spec,
    validate_involution, validate_poset_involution,
)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# --- vertex involutions ------------------------------------------------------


def test_validate_rejects_non_permutation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        validate_involution(g, (0, 0, 1))
    with pytest.raises(ValueError):
        validate_involution(g, (0, 1))


def test_identity_is_always_valid():
    g = cycle_graph(5)
    phi = validate_involution(g, tuple(range(5)))
    assert isinstance(phi, Involution)
    assert phi.is_identity()
    assert phi.fixed_points() == list(range(5))
    assert phi.validated


def test_three_cycle_breaks_self_inverse():
    g = Graph.from_edges(3, [])
    out = validate_involution(g, (1, 2, 0))
    assert isinstance(out, list)
    assert [v.hypothesis for v in out] == ["self-inverse"]


def test_non_automorphism_is_rejected():
    g = Graph.from_edges(3, [(0, 2)])
    out = validate_involution(g, (1, 0, 2))
    assert [v.hypothesis for v in out] == ["automorphism"]
    assert out[0].witness == (0, 2)


def test_adjacent_image_is_rejected():
    g = Graph.from_edges(2, [(0, 1)])
    out = validate_involution(g, (1, 0))
    assert [v.hypothesis for v in out] == ["adjacent-image"]


def test_multiple_violations_reported_together():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    out = validate_involution(g, (1, 0, 2))
    kinds = {v.hypothesis for v in out}
    assert kinds == {"automorphism", "adjacent-image"}


def test_path_reversal_reduction():
    # reversing a 5-path fixes the middle vertex only
    g = path_graph(5)
    phi = validate_involution(g, (4, 3, 2, 1, 0))
    assert isinstance(phi, Involution)
    assert phi.fixed_points() == [2]
    sub = fixed_subgraph(g, phi)
    assert sub.vertex_count == 1
    assert sub.vertex_labels == ("2",)
    assert grundy(g.state()) == grundy(sub.state()) == 1


def test_even_path_reversal_is_invalid():
    # on a 4-path the two middle vertices swap across an edge
    g = path_graph(4)
    out = validate_involution(g, (3, 2, 1, 0))
    assert isinstance(out, list)
    assert "adjacent-image" in {v.hypothesis for v in out}


def test_cycle_antipodal_reduction():
    for n in (4, 6):
        g = cycle_graph(n)
        half = n // 2
        mapping = tuple((v + half) % n for v in range(n))
        phi = validate_involution(g, mapping)
        assert isinstance(phi, Involution), n
        assert phi.fixed_points() == []
        assert grundy(g.state()) == 0


def test_fixed_subgraph_requires_validation():
    g = path_graph(5)
    with pytest.raises(NotValidated):
        fixed_subgraph(g, (4, 3, 2, 1, 0))
    unchecked = Involution((4, 3, 2, 1, 0), True, False, True)
    with pytest.raises(NotValidated):
        fixed_subgraph(g, unchecked)


# --- ground permutations and lifts -------------------------------------------


def test_ground_permutation_validation():
    with pytest.raises(ValueError):
        GroundPermutation(((1, 1),))
    with pytest.raises(ValueError):
        GroundPermutation(((0, 1),))
    with pytest.raises(ValueError):
        GroundPermutation(((1, 2), (2, 3)))


def test_ground_permutation_apply():
    gp = GroundPermutation(((1, 2), (3, 4)))
    assert gp.t == 2
    assert str(gp) == "(1,2)(3,4)"
    assert str(GroundPermutation(())) == "id"
    # subsets are 0-based, the permutation is 1-based
    assert gp.apply_to_subset((0, 2)) == (1, 3)
    assert gp.apply_to_subset((0, 1)) == (0, 1)
    assert gp.apply_to_subset((4,)) == (4,)


def test_lift_ground_permutation():
    subs = ksubsets_colex(4, 2)
    lift = lift_ground_permutation(GroundPermutation(((1, 2),)), subs)
    assert lift == (0, 2, 1, 4, 3, 5)
    with pytest.raises(ValueError):
        lift_ground_permutation(GroundPermutation(((1, 2),)), [(0, 2)])


def test_halving_chain_shapes():
    assert kneser_halving_chain(KneserParams(4, 2, 1)) == []
    chain = kneser_halving_chain(KneserParams(4, 2, 0))
    assert [gp.transpositions for gp in chain] == [((1, 2),)]
    chain = kneser_halving_chain(KneserParams(8, 4, 1))
    assert [gp.transpositions for gp in chain] == [
        ((1, 2), (3, 4)), ((1, 3), (2, 4))]


def test_halving_chain_not_applicable():
    with pytest.raises(NotApplicable):
        kneser_halving_chain(KneserParams(4, 2, 2))
    with pytest.raises(NotApplicable):
        kneser_halving_chain(KneserParams(3, 3, 0))


def test_halving_chain_commutes():
    chain = kneser_halving_chain(KneserParams(8, 4, 1))
    a, b = (gp.mapping() for gp in chain)
    for v in range(1, 9):
        assert a.get(b.get(v, v), b.get(v, v)) == b.get(a.get(v, v), a.get(v, v))


def test_halving_chain_lifts_are_valid_involutions():
    for (n, k, l) in [(4, 2, 0), (5, 2, 0), (6, 2, 0), (8, 4, 1)]:
        p = KneserParams(n, k, l)
        g = kneser_graph(p)
        subs = ksubsets_colex(n, k)
        for gp in kneser_halving_chain(p):
            phi = validate_involution(g, lift_ground_permutation(gp, subs))
            assert isinstance(phi, Involution), (n, k, l, str(gp))


def test_halving_fixed_graph_small():
    g = kneser_halving_fixed_graph(KneserParams(4, 2, 0))
    assert g.vertex_count == 2
    assert set(g.vertex_labels) == {"{1,2}", "{3,4}"}
    assert len(g.edges()) == 1


def test_halving_fixed_graph_preserves_nim():
    for (n, k, l) in [(4, 2, 0), (5, 2, 0), (6, 2, 0), (5, 3, 0), (4, 3, 0)]:
        p = KneserParams(n, k, l)
        fixed = kneser_halving_fixed_graph(p)
        assert grundy(fixed.state()) == kneser_nim(p).nim, (n, k, l)


def test_multipartite_reduction_values():
    r = kneser_multipartite_reduction(KneserParams(4, 2, 1))
    assert r.parts == (1,) * 6
    r = kneser_multipartite_reduction(KneserParams(4, 2, 0))
    assert r.parts == (1, 1)
    assert kneser_multipartite_reduction(KneserParams(2, 3, 0)).parts == ()
    with pytest.raises(InvalidSpec):
        kneser_multipartite_reduction(KneserParams(4, 2, -1))
    with pytest.raises(TooLarge):
        kneser_multipartite_reduction(KneserParams(100, 2, 1))


def test_multipartite_reduction_preserves_nim():
    for n in range(7):
        for k in range(1, n + 1):
            for l in range(k):
                p = KneserParams(n, k, l)
                spec = kneser_multipartite_reduction(p)
                got = multipartite_nim(spec).nim if spec.parts else 0
                assert got == kneser_nim(p).nim, (n, k, l)


def test_join_involution():
    g = path_graph(3)
    phi = validate_involution(g, (2, 1, 0))
    joined = join_involution(g, phi, g, phi)
    assert isinstance(joined, Involution)
    assert joined.mapping == (2, 1, 0, 5, 4, 3)
    assert joined.fixed_points() == [1, 4]
    # the fixed part of the join is the join of the fixed parts: K_2
    j = join_graph(g, g)
    assert grundy(j.state()) == 2
    with pytest.raises(NotValidated):
        join_involution(g, (2, 1, 0), g, phi)


def test_johnson_involution_complementation():
    phi = johnson_involution(JohnsonParams(6, 3))
    assert isinstance(phi, Involution)
    assert phi.fixed_points() == []
    subs = ksubsets_colex(6, 3)
    for i, s in enumerate(subs):
        assert set(subs[phi.mapping[i]]) == set(range(6)) - set(s)


def test_johnson_involution_even_pairing():
    # J(6,2) itself is past desk scale; the involution reduces it to
    # three isolated vertices, which pins its value to 1
    g = johnson_graph(JohnsonParams(6, 2))
    phi = johnson_involution(JohnsonParams(6, 2))
    assert isinstance(phi, Involution)
    sub = fixed_subgraph(g, phi)
    assert sub.vertex_count == 3
    assert not sub.edges()
    assert grundy(sub.state()) == 1


def test_johnson_involution_none_for_open_cases():
    assert johnson_involution(JohnsonParams(5, 2)) is None
    assert johnson_involution(JohnsonParams(3, 1)) is None
    assert johnson_involution(JohnsonParams(2, 1)) is None


# --- poset involutions and the mirror ----------------------------------------


def two_edge_complex():
    return Complex(4, [(0, 1), (2, 3)])


def swap_psi():
    return {(0,): (2,), (1,): (3,), (2,): (0,), (3,): (1,),
            (0, 1): (2, 3), (2, 3): (0, 1)}


def test_poset_involution_valid_swap():
    psi = validate_poset_involution(two_edge_complex(), swap_psi())
    assert isinstance(psi, PosetInvolution)
    assert psi.fixed == frozenset()


def test_poset_involution_callable_form():
    cx = two_edge_complex()
    table = swap_psi()
    psi = validate_poset_involution(cx, lambda f: table[f])
    assert isinstance(psi, PosetInvolution)


def test_poset_involution_identity_fixed_set():
    cx = two_edge_complex()
    psi = validate_poset_involution(cx, {f: f for f in cx.faces})
    assert isinstance(psi, PosetInvolution)
    assert psi.fixed == frozenset(cx.faces)


def test_poset_involution_missing_face():
    cx = two_edge_complex()
    partial = {f: f for f in cx.faces[:-1]}
    with pytest.raises(ValueError):
        validate_poset_involution(cx, partial)


def test_poset_violation_image_not_face():
    cx = two_edge_complex()
    bad = {f: f for f in cx.faces}
    bad[(0,)] = (9,)
    out = validate_poset_involution(cx, bad)
    assert [v.hypothesis for v in out] == ["image-not-face"]


def test_poset_violation_self_inverse():
    cx = Complex(3, [(0,), (1,), (2,)])
    bad = {(0,): (1,), (1,): (2,), (2,): (0,)}
    out = validate_poset_involution(cx, bad)
    assert "self-inverse" in {v.hypothesis for v in out}


def test_poset_violation_order_isomorphism():
    cx = Complex(3, [(0, 1), (2,)])
    bad = {(0,): (2,), (2,): (0,), (1,): (1,), (0, 1): (0, 1)}
    out = validate_poset_involution(cx, bad)
    assert "order-isomorphism" in {v.hypothesis for v in out}


def test_poset_violation_fixed_set_not_down_closed():
    cx = Complex(2, [(0, 1)])
    bad = {(0,): (1,), (1,): (0,), (0, 1): (0, 1)}
    out = validate_poset_involution(cx, bad)
    assert [v.hypothesis for v in out] == ["fixed-set-not-down-closed"]


def test_lift_involution_to_faces():
    cx = two_edge_complex()
    assert lift_involution_to_faces(cx, (2, 3, 0, 1)) == swap_psi()


def test_mirror_wins_as_second_player():
    cx = two_edge_complex()
    psi = validate_poset_involution(cx, swap_psi())
    strat = MirrorStrategy(cx, psi)
    assert strat.fixed_part_grundy() == 0
    assert strat.opening_move() is None
    state = cx.state()
    rng = random.Random(11)
    while True:
        moves = legal_moves(state)
        if not moves:
            break  # opponent cannot move: mirror player won
        mv = rng.choice(moves)
        reply = mirror_reply(strat, state, mv)
        state = apply_move(apply_move(state, mv), reply)
    assert state.is_terminal()


def test_mirror_reply_mirrors_non_fixed_moves():
    cx = two_edge_complex()
    psi = validate_poset_involution(cx, swap_psi())
    strat = MirrorStrategy(cx, psi)
    state = cx.state()
    reply = strat.reply(state, Move((0, 1)))
    assert reply.face == (2, 3)


def test_mirror_opening_move_in_fixed_part():
    cx = Complex(5, [(0, 1), (2, 3), (4,)])
    psi_map = dict(swap_psi())
    psi_map[(4,)] = (4,)
    psi = validate_poset_involution(cx, psi_map)
    strat = MirrorStrategy(cx, psi)
    assert strat.fixed_part_grundy() == 1
    assert strat.opening_move() == Move((4,))
    # after the opening the remaining game is pure mirroring
    state = apply_move(cx.state(), Move((4,)))
    reply = strat.reply(state, Move((2,)))
    assert reply.face == (0,)


def test_mirror_wrong_seat_raises():
    cx = Complex(5, [(0, 1), (2, 3), (4,)])
    psi_map = dict(swap_psi())
    psi_map[(4,)] = (4,)
    psi = validate_poset_involution(cx, psi_map)
    strat = MirrorStrategy(cx, psi)
    # seated second on a fixed part the first player wins: no reply exists
    with pytest.raises(DisciplineBroken):
        strat.reply(cx.state(), Move((4,)))


def test_mirror_rejects_stale_state():
    cx = two_edge_complex()
    psi = validate_poset_involution(cx, swap_psi())
    strat = MirrorStrategy(cx, psi)
    state = cx.state()
    strat.reply(state, Move((0,)))
    with pytest.raises(DisciplineBroken):
        strat.reply(state, Move((1,)))  # strategy has moved on
    with pytest.raises(DisciplineBroken):
        strat.opening_move()


def test_mirror_needs_validated_involution():
    cx = two_edge_complex()
    with pytest.raises(NotValidated):
        MirrorStrategy(cx, swap_psi())


# --- family involutions ------------------------------------------------------


def test_multipartite_pairing_mapping():
    assert multipartite_pairing(MultipartiteSpec((3, 2))) == (1, 0, 2, 4, 3)
    assert multipartite_pairing(MultipartiteSpec((1, 1))) == (0, 1)


def test_multipartite_pairing_validates_and_reduces():
    spec = MultipartiteSpec((3, 2, 2))
    g = multipartite_graph(spec)
    phi = validate_involution(g, multipartite_pairing(spec))
    assert isinstance(phi, Involution)
    sub = fixed_subgraph(g, phi)
    # one leftover vertex per odd part, all in different parts: complete
    assert sub.vertex_count == 1
    assert grundy(g.state()) == grundy(sub.state())


def test_family_vertex_involution_coverage():
    assert family_vertex_involution(parse_family_spec("complete:4")) is None
    assert family_vertex_involution(parse_family_spec("threshold:3;2")) is None
    assert family_vertex_involution(parse_family_spec("johnson:5,2")) is None
    m = family_vertex_involution(parse_family_spec("johnson:6,3"))
    assert m is not None and all(v != w for v, w in enumerate(m))
    m = family_vertex_involution(parse_family_spec("multipartite:2+2"))
    assert m == (1, 0, 3, 2)
    m = family_vertex_involution(parse_family_spec("kneser:4,2,0"))
    assert m == (0, 2, 1, 4, 3, 5)
    # identity pairings are suppressed
    assert family_vertex_involution(
        parse_family_spec("multipartite:1+1")) is None


def test_family_mirror_strategy_availability():
    spec = parse_family_spec("johnson:6,3")
    strat = family_mirror_strategy(spec, spec.build())
    assert strat is not None
    assert strat.fixed_part_grundy() == 0
    spec = parse_family_spec("complete:4")
    assert family_mirror_strategy(spec, spec.build()) is None


def test_family_mirror_strategy_on_skeleton_complex():
    # octahedron: the involution lifts from the graph to its 3-skeleton
    spec = parse_family_spec("skeleton(s=3):multipartite:2+2+2")
    cx = spec.build()
    assert any(len(f) == 3 for f in cx.faces)
    strat = family_mirror_strategy(spec, cx)
    assert strat is not None
    assert strat.opening_move() is None
    rng = random.Random(5)
    state = cx.state()
    while True:
        moves = legal_moves(state)
        if not moves:
            break
        mv = rng.choice(moves)
        reply = strat.reply(state, mv)
        state = apply_move(apply_move(state, mv), reply)
    assert state.is_terminal()


def test_mirror_full_playouts_never_lose():
    # randomized soak across three involution sources
    cases = ["johnson:6,3", "kneser:4,2,0", "multipartite:3+3+2"]
    for text in cases:
        spec = parse_family_spec(text)
        cx = spec.build()
        for seed in range(5):
            strat = family_mirror_strategy(spec, cx)
            state = cx.state()
            opening = strat.opening_move()
            if opening is not None:
                state = apply_move(state, opening)
            rng = random.Random(seed)
            while True:
                moves = legal_moves(state)
                if not moves:
                    break
                mv = rng.choice(moves)
                reply = strat.reply(state, mv)
                state = apply_move(apply_move(state, mv), reply)
            assert state.is_terminal(), (text, seed)
