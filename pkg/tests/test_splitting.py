import random

import pytest

from artin import PreconditionError, big_chunks, parse_graph, splits_over_cyclic
from artin.splitting import (
    ABELIAN_RANK_TWO,
    DIHEDRAL_SPLIT,
    FREE_PRODUCT_SPLIT,
    FREE_RANK_TWO,
    INFINITE_CYCLIC,
    MORE_THAN_ONE_END,
    NO_SPLIT,
    ONE_ENDED,
    VISUAL_SPLIT,
)

from corpus import connected_atlas, fan_graph, path3, random_connected_graph, triangle
from oracles import oracle_separating


def test_path3_visual_split():
    v = splits_over_cyclic(path3())
    assert v.verdict == VISUAL_SPLIT
    assert v.vertex == "b"
    assert v.left == ("a", "b")
    assert v.right == ("b", "c")
    assert v.ends == ONE_ENDED


def test_fan_visual_split_sides():
    v = splits_over_cyclic(fan_graph())
    assert v.verdict == VISUAL_SPLIT and v.vertex == "a"
    assert v.left == ("a", "b")
    assert v.right == ("a", "c", "d", "e")


def test_triangle_no_split():
    v = splits_over_cyclic(triangle())
    assert v.verdict == NO_SPLIT and v.ends == ONE_ENDED


def test_small_graph_verdicts():
    assert splits_over_cyclic(parse_graph("v a\n")).verdict == INFINITE_CYCLIC
    assert splits_over_cyclic(parse_graph("e a b 2\n")).verdict == ABELIAN_RANK_TWO
    high = splits_over_cyclic(parse_graph("e a b 7\n"))
    assert high.verdict == DIHEDRAL_SPLIT and high.label == 7
    assert high.ends == ONE_ENDED


def test_disconnected_verdicts():
    pair = splits_over_cyclic(parse_graph("v a\nv b\n"))
    assert pair.verdict == FREE_RANK_TWO
    assert pair.ends == MORE_THAN_ONE_END
    bigger = splits_over_cyclic(parse_graph("e a b 3\nv z\n"))
    assert bigger.verdict == FREE_PRODUCT_SPLIT
    assert bigger.components == (("a", "b"), ("z",))


def test_empty_graph_rejected():
    with pytest.raises(PreconditionError):
        splits_over_cyclic(parse_graph(""))


def _check_witness(g, v):
    left, right = set(v.left), set(v.right)
    vertex = v.vertex
    assert left | right == set(g.vertices)
    assert left & right == {vertex}
    assert left != {vertex} and right != {vertex}
    assert g.induced(left).is_connected()
    assert g.induced(right).is_connected()
    for x, y, _ in g.edges:
        inside = (x in left and y in left) or (x in right and y in right)
        assert inside, (x, y)


def test_characterisation_and_witnesses_on_corpus():
    rng = random.Random(21)
    graphs = connected_atlas(6) + [
        random_connected_graph(rng, rng.randint(3, 8)) for _ in range(80)
    ]
    for g in graphs:
        verdict = splits_over_cyclic(g)
        if len(g.vertices) < 3:
            continue
        separating = oracle_separating(g)
        if separating:
            assert verdict.verdict == VISUAL_SPLIT
            assert verdict.vertex == separating[0]
            _check_witness(g, verdict)
        else:
            assert verdict.verdict == NO_SPLIT
        assert verdict.ends == ONE_ENDED
        assert (verdict.verdict == NO_SPLIT) == (len(big_chunks(g).chunks) == 1)


def test_verdict_json_shape():
    d = splits_over_cyclic(path3()).to_json_dict()
    assert d == {
        "verdict": "VisualSplit",
        "witness": {"vertex": "b", "left": ["a", "b"], "right": ["b", "c"]},
        "ends": "OneEnded",
    }
