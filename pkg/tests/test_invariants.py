import random

import pytest

from artin import (
    AbelianShape,
    PreconditionError,
    aut_acylindrically_hyperbolic,
    compare,
    odd_components,
    parse_graph,
    profile,
)
from artin.invariants import (
    ABELIANIZATION_MISMATCH,
    BRAIDED_LEAF_LABEL_MISMATCH,
    CHUNK_COUNT_MISMATCH,
    LABEL2_NONLEAF_MISMATCH,
    TORAL_LEAF_COUNT_MISMATCH,
    VERDICT_CONSISTENT,
    VERDICT_NON_ISOMORPHIC,
)

from corpus import (
    connected_atlas,
    fan_graph,
    path3,
    random_connected_graph,
    relabelled_copy,
    star,
    triangle,
)


def test_fan_profile_values():
    p = profile(fan_graph())
    assert p.chunk_count == 3
    assert p.toral_leaf_count == 1
    assert p.braided_leaf_labels == (6,)
    assert p.label2_nonleaf_edge_count == 0
    assert p.abelianization == AbelianShape(4, ())
    assert p.betti == 1
    assert len(p.bigbig_canonical_forms) == 1
    assert p.odd_leaf_labels == ()


def test_path3_profile_values():
    p = profile(path3())
    assert p.chunk_count == 2
    assert p.toral_leaf_count == 1
    assert p.braided_leaf_labels == ()
    assert p.odd_leaf_labels == (3,)
    assert p.abelianization == AbelianShape(2, ())


def test_profile_preconditions():
    with pytest.raises(PreconditionError):
        profile(parse_graph("v a\n"))
    with pytest.raises(Exception):
        profile(parse_graph("v a\nv b\n"))


def test_star_comparisons():
    base = profile(star(2, 4, 5))
    odd_differs = compare(base, profile(star(2, 4, 7)))
    assert odd_differs.verdict == VERDICT_CONSISTENT
    assert any("odd" in note.lower() for note in odd_differs.notes)

    braided = compare(base, profile(star(2, 6, 5)))
    assert braided.verdict == VERDICT_NON_ISOMORPHIC
    assert braided.reasons == (BRAIDED_LEAF_LABEL_MISMATCH,)

    toral = compare(base, profile(star(3, 4, 5)))
    assert toral.verdict == VERDICT_NON_ISOMORPHIC
    assert toral.reasons == (
        TORAL_LEAF_COUNT_MISMATCH,
        ABELIANIZATION_MISMATCH,
    )


def test_reason_order_is_stable():
    g1 = parse_graph("e a b 2\ne b c 2\ne c d 3\n")
    g2 = parse_graph("e a b 5\n")
    res = compare(profile(g1), profile(g2))
    assert res.verdict == VERDICT_NON_ISOMORPHIC
    assert list(res.reasons) == sorted(
        res.reasons,
        key=[
            CHUNK_COUNT_MISMATCH,
            TORAL_LEAF_COUNT_MISMATCH,
            BRAIDED_LEAF_LABEL_MISMATCH,
            LABEL2_NONLEAF_MISMATCH,
            ABELIANIZATION_MISMATCH,
        ].index,
    )
    assert CHUNK_COUNT_MISMATCH in res.reasons


def test_compare_is_sound_under_relabelling():
    rng = random.Random(3)
    graphs = [g for g in connected_atlas(6) if len(g.vertices) >= 2]
    graphs += [random_connected_graph(rng, rng.randint(2, 7)) for _ in range(60)]
    for g in graphs:
        h = relabelled_copy(rng, g)
        res = compare(profile(g), profile(h))
        assert res.verdict == VERDICT_CONSISTENT, g.to_text()
        assert res.reasons == ()


def test_compare_self_has_no_notes_for_equal_forms():
    p = profile(triangle())
    res = compare(p, p)
    assert res.verdict == VERDICT_CONSISTENT
    assert res.notes == ()


def test_bigbig_form_difference_is_only_a_note():
    sq = parse_graph("e a b 3\ne b c 3\ne c d 3\ne a d 3\n")
    tri = triangle()
    res = compare(profile(sq), profile(tri))
    if res.verdict == VERDICT_CONSISTENT:
        assert any("inconclusive" in n for n in res.notes)


def test_abelianization_in_profile_matches_odd_components():
    rng = random.Random(44)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 7))
        p = profile(g)
        assert p.abelianization == AbelianShape(len(odd_components(g)), ())


def test_profile_json_round_trips_through_keys():
    d = profile(fan_graph()).to_json_dict()
    assert d["chunk_count"] == 3
    assert d["braided_leaf_labels"] == [6]
    assert d["abelianization"] == {"free_rank": 4, "torsion": []}
    assert isinstance(d["bigbig_canonical_forms"], list)
    assert all(isinstance(s, str) for s in d["bigbig_canonical_forms"])


def test_acylindricity_examples():
    res = aut_acylindrically_hyperbolic(path3())
    assert res.value is True
    assert res.witness == ("b", "a")
    assert "torsion-free" in res.reason

    assert aut_acylindrically_hyperbolic(star(2, 2, 2)).value is False
    assert aut_acylindrically_hyperbolic(triangle()).value is False
    assert aut_acylindrically_hyperbolic(fan_graph()).value is True


def test_acylindricity_preconditions():
    with pytest.raises(PreconditionError):
        aut_acylindrically_hyperbolic(parse_graph("e a b 3\n"))


def test_acylindricity_witness_is_valid():
    rng = random.Random(8)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(3, 7))
        res = aut_acylindrically_hyperbolic(g)
        if res.value:
            s, t = res.witness
            assert s in g.vertices and t in g.vertices and s != t
            assert (not g.has_edge(s, t)) or g.label(s, t) >= 3
