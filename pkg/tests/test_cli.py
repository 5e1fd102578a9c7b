import json

import pytest

from artin.cli import main

from corpus import FAN_TEXT


@pytest.fixture
def fan_file(tmp_path):
    p = tmp_path / "fan.graph"
    p.write_text(FAN_TEXT)
    return str(p)


@pytest.fixture
def path_file(tmp_path):
    p = tmp_path / "p3.graph"
    p.write_text("e a b 3\ne b c 2\n")
    return str(p)


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_text_and_json(capsys, fan_file):
    code, out, _ = _run(capsys, ["validate", fan_file])
    assert code == 0
    assert "5 vertices" in out and "connected" in out

    code, out, _ = _run(capsys, ["validate", fan_file, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["vertices"] == ["a", "b", "c", "d", "e"]
    assert data["connected"] is True


def test_chunks_output(capsys, fan_file):
    code, out, _ = _run(capsys, ["chunks", fan_file])
    assert code == 0
    assert "chunk 0: {a,b} ToralLeaf(2, tip=b)" in out
    assert "chunk 1: {a,d} BraidedLeaf(6, tip=d)" in out
    assert "chunk 2: {a,c,e} BigBig" in out
    assert "separating: a" in out

    code, out, _ = _run(capsys, ["chunks", fan_file, "--json"])
    data = json.loads(out)
    assert data["separating"] == ["a"]
    assert len(data["chunks"]) == 3


def test_split_output(capsys, path_file):
    code, out, _ = _run(capsys, ["split", path_file, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "VisualSplit"
    assert data["witness"]["vertex"] == "b"
    assert data["ends"] == "OneEnded"


def test_jsj_text_json_and_dot(capsys, tmp_path, fan_file):
    code, out, _ = _run(capsys, ["jsj", fan_file])
    assert code == 0
    assert "black vertex B_a_c_e" in out
    assert "betti: 1" in out

    code, out, _ = _run(capsys, ["jsj", fan_file, "--json"])
    data = json.loads(out)
    assert data["betti"] == 1
    assert len(data["vertices"]) == 5

    dot_path = tmp_path / "fan.dot"
    code, out, _ = _run(capsys, ["jsj", fan_file, "--dot", str(dot_path)])
    assert code == 0 and f"wrote {dot_path}" in out
    dot = dot_path.read_text()
    assert dot.startswith("graph gog {") and "stable letter b" in dot

    code, out, _ = _run(capsys, ["jsj", fan_file, "--collapsed", "--json"])
    data = json.loads(out)
    assert data["betti"] == 0
    assert len(data["vertices"]) == 4


def test_dihedral_jsj_text(capsys):
    code, out, _ = _run(capsys, ["dihedral-jsj", "3"])
    assert code == 0
    assert "rel: x^2 y^-3" in out
    assert "where x = a b a" in out
    assert "where y = a b" in out

    code, out, _ = _run(capsys, ["dihedral-jsj", "6", "--json"])
    data = json.loads(out)
    assert data["presentation"]["relators"] == ["x y^3 x^-1 y^-3"]


def test_dihedral_jsj_label_two_fails(capsys):
    code, _, err = _run(capsys, ["dihedral-jsj", "2"])
    assert code == 2
    assert "error" in err


def test_abelianize_both_sources_agree(capsys, fan_file):
    code, out1, _ = _run(capsys, ["abelianize", fan_file])
    assert code == 0 and out1.startswith("Z^4")
    code, out2, _ = _run(capsys, ["abelianize", fan_file, "--of-jsj"])
    assert code == 0 and out2.startswith("Z^4")


def test_presentation_simplify(capsys, path_file):
    code, out, _ = _run(
        capsys, ["presentation", path_file, "--of-jsj", "--simplify", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["generators"] == ["a", "b", "c"]
    assert "a b a b^-1 a^-1 b^-1" in data["relators"]


def test_profile_and_compare(capsys, tmp_path, fan_file):
    code, out, _ = _run(capsys, ["profile", fan_file, "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["chunk_count"] == 3

    other = tmp_path / "other.graph"
    other.write_text("e a b 5\n")
    code, out, _ = _run(capsys, ["compare", fan_file, str(other), "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NonIsomorphic"
    assert "ChunkCountMismatch" in data["reasons"]


def test_acylindrical(capsys, path_file):
    code, out, _ = _run(capsys, ["acylindrical", path_file])
    assert code == 0
    assert "acylindrically hyperbolic: yes" in out
    assert "witness: (b, a)" in out


def test_dihedral_nf_and_eq(capsys):
    code, out, _ = _run(capsys, ["dihedral-nf", "3", "a b a"])
    assert code == 0 and out.strip() == "x"

    code, out, _ = _run(capsys, ["dihedral-eq", "3", "a b a", "b a b"])
    assert code == 0 and out.strip() == "equal"
    code, out, _ = _run(capsys, ["dihedral-eq", "3", "a b", "b a"])
    assert code == 0 and out.strip() == "different"


def test_retract(capsys, fan_file):
    code, out, _ = _run(capsys, ["retract", fan_file, "2", "a b c"])
    assert code == 0 and out.strip() == "a a c"

    code, _, err = _run(capsys, ["retract", fan_file, "9", "a"])
    assert code == 2 and "out of range" in err


def test_root_search(capsys):
    code, out, _ = _run(capsys, ["root-search", "4", "3", "3", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["counterexamples"] == []


def test_exit_codes(capsys, tmp_path, path_file):
    code, _, err = _run(capsys, ["no-such-command"])
    assert code == 64 and "invalid choice" in err

    code, _, err = _run(capsys, ["validate", str(tmp_path / "missing.graph")])
    assert code == 1

    bad = tmp_path / "bad.graph"
    bad.write_text("e a a 3\n")
    code, _, err = _run(capsys, ["validate", str(bad)])
    assert code == 1 and "line 1" in err

    disc = tmp_path / "disc.graph"
    disc.write_text("v a\nv b\n")
    code, _, err = _run(capsys, ["chunks", str(disc)])
    assert code == 2

    two = tmp_path / "two.graph"
    two.write_text("e a b 4\n")
    code, _, err = _run(capsys, ["jsj", str(two)])
    assert code == 2

    code, _, err = _run(capsys, ["dihedral-nf", "3", "a q"])
    assert code == 1

    code, _, _ = _run(capsys, [])
    assert code == 1


def test_output_is_byte_stable(capsys, fan_file):
    first = []
    for _ in range(2):
        code, out, _ = _run(capsys, ["profile", fan_file, "--json"])
        assert code == 0
        first.append(out)
    assert first[0] == first[1]
    for _ in range(2):
        code, out, _ = _run(capsys, ["jsj", fan_file, "--json"])
        first.append(out)
    assert first[2] == first[3]
