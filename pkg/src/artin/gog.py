"""Graphs of groups: the JSJ decomposition of an Artin group.

The decomposition of a connected defining graph on at least three
vertices is built from the block-cut structure. Black vertices carry the
chunks, white vertices the separating vertices, every white-black
incidence is an edge over the cyclic group on the separating vertex. Two
kinds of leaf chunk get special treatment:

* a toral leaf (label 2 at a valence-1 tip t with base a) contributes a
  black vertex <a> with a loop whose stable letter is t, realizing the
  Z^2 chunk as an HNN extension of <a>;
* a braided leaf (even label 2m >= 4, m >= 2) contributes a black vertex
  <a, z> (free abelian of rank 2, z the generator of the centre of the
  chunk group) and a red vertex <r> with r = a t, glued along r^m = z.

Collapsing the loops and red edges gives the coarser decomposition with
one black vertex per chunk carrying the full chunk group.

Dihedral Artin groups (a single edge, label n >= 3) have their own JSJ:
an amalgam <x> *_{x^2 = y^n} <y> for odd n, and for even n = 2m an HNN
extension of <y> with stable letter x conjugating y^m to itself. The
label 2 group is Z^2 and has no JSJ over cyclic subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import NoJsjExistsError, PreconditionError
from .graphs import (
    CHUNK_BRAIDED_LEAF,
    CHUNK_TORAL_LEAF,
    BigChunk,
    ChunkClass,
    LabelledGraph,
    big_chunks,
    classify_chunk,
)
from .words import Word, alternating

BLACK = "black"
WHITE = "white"
RED = "red"


@dataclass(frozen=True)
class CyclicOnGenerator:
    """Infinite cyclic group on one vertex generator."""

    generator: str

    def describe(self) -> str:
        return f"<{self.generator}>"


@dataclass(frozen=True)
class CyclicOnWord:
    """Infinite cyclic group on a word in the vertex generators."""

    word: Word

    def describe(self) -> str:
        return f"<{self.word.to_text()}>"


@dataclass(frozen=True)
class FreeAbelianPair:
    """Rank-2 free abelian group on a vertex generator and a central word."""

    base: str
    central: Word

    def describe(self) -> str:
        return f"<{self.base}, {self.central.to_text()}>"


@dataclass(frozen=True)
class ChunkParabolic:
    """The full Artin group on a chunk of the defining graph."""

    chunk: BigChunk

    def describe(self) -> str:
        return "<" + ", ".join(self.chunk.vertices) + ">"


GroupDescriptor = Union[CyclicOnGenerator, CyclicOnWord, FreeAbelianPair, ChunkParabolic]


@dataclass(frozen=True)
class GoGVertex:
    id: str
    color: str
    group: GroupDescriptor | None
    chunk: BigChunk | None = None
    chunk_class: ChunkClass | None = None

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "color": self.color,
            "group": _descriptor_json(self.group),
        }


@dataclass(frozen=True)
class GoGEdge:
    """Edge with its cyclic edge group and the two boundary injections.

    ``injections[k]`` is the image, written in the vertex generators of
    the defining graph, of the edge-group generator inside the vertex
    group at ``ends[k]``. Loops carry a stable letter.
    """

    ends: tuple[str, str]
    edge_group: GroupDescriptor | None
    injections: tuple[Word, Word] | None
    stable_letter: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]

    def to_json_dict(self) -> dict:
        return {
            "ends": list(self.ends),
            "edge_group": _descriptor_json(self.edge_group),
            "injections": None
            if self.injections is None
            else [w.to_text() for w in self.injections],
            "stable_letter": self.stable_letter,
        }


def _descriptor_json(d: GroupDescriptor | None):
    if d is None:
        return None
    if isinstance(d, CyclicOnGenerator):
        return {"kind": "cyclic_on_generator", "generator": d.generator}
    if isinstance(d, CyclicOnWord):
        return {"kind": "cyclic_on_word", "word": d.word.to_text()}
    if isinstance(d, FreeAbelianPair):
        return {"kind": "free_abelian_pair", "base": d.base, "central": d.central.to_text()}
    if isinstance(d, ChunkParabolic):
        return {"kind": "chunk_parabolic", "vertices": list(d.chunk.vertices)}
    raise TypeError(f"unknown descriptor {d!r}")


@dataclass(frozen=True)
class GraphOfGroups:
    """A graph of groups with deterministic vertex and edge order."""

    vertices: tuple[GoGVertex, ...]
    edges: tuple[GoGEdge, ...]
    graph: LabelledGraph | None = None
    legend: tuple[tuple[str, Word], ...] = ()
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        by_id = {}
        for v in self.vertices:
            if v.id in by_id:
                raise PreconditionError(f"duplicate vertex id {v.id!r}")
            by_id[v.id] = v
        for e in self.edges:
            for end in e.ends:
                if end not in by_id:
                    raise PreconditionError(f"edge end {end!r} is not a vertex")
        object.__setattr__(self, "_by_id", by_id)

    def vertex(self, vid: str) -> GoGVertex:
        return self._by_id[vid]

    def count(self, color: str) -> int:
        return sum(1 for v in self.vertices if v.color == color)

    def loops(self) -> tuple[GoGEdge, ...]:
        return tuple(e for e in self.edges if e.is_loop)

    def base_is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj: dict[str, set[str]] = {v.id: set() for v in self.vertices}
        for e in self.edges:
            adj[e.ends[0]].add(e.ends[1])
            adj[e.ends[1]].add(e.ends[0])
        start = self.vertices[0].id
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_json_dict(self) -> dict:
        return {
            "vertices": [v.to_json_dict() for v in self.vertices],
            "edges": [e.to_json_dict() for e in self.edges],
            "betti": betti_number(self),
        }

    def to_dot(self) -> str:
        """Render in Graphviz format.

        Black vertices are filled black with white text, white vertices
        are unfilled, red vertices are filled red. Loops are annotated
        with their stable letter, red edges with the relation r^m = z.
        """
        lines = ["graph gog {"]
        for v in self.vertices:
            label = v.group.describe() if v.group is not None else v.id
            if v.color == BLACK:
                attrs = f'label="{label}", style=filled, fillcolor=black, fontcolor=white'
            elif v.color == RED:
                attrs = f'label="{label}", style=filled, fillcolor=red'
            else:
                attrs = f'label="{label}"'
            lines.append(f'  "{v.id}" [{attrs}];')
        for e in self.edges:
            attrs = []
            if e.is_loop and e.stable_letter is not None:
                attrs.append(f'label="stable letter {e.stable_letter}"')
            if RED in (self.vertex(e.ends[0]).color, self.vertex(e.ends[1]).color):
                red_end = next(k for k in (0, 1) if self.vertex(e.ends[k]).color == RED)
                desc = self.vertex(e.ends[red_end]).group
                other = self.vertex(e.ends[1 - red_end]).group
                if (
                    isinstance(desc, CyclicOnWord)
                    and isinstance(other, FreeAbelianPair)
                    and e.injections is not None
                ):
                    m = e.injections[red_end].syllable_length() // desc.word.syllable_length()
                    attrs.append(f'label="r^{m} = z"')
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{e.ends[0]}" -- "{e.ends[1]}"{suffix};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def betti_number(gog: GraphOfGroups) -> int:
    """First Betti number of the underlying graph (loops count)."""
    if not gog.base_is_connected():
        raise PreconditionError("graph of groups has a disconnected base")
    return len(gog.edges) - len(gog.vertices) + 1


def _chunk_id(chunk: BigChunk) -> str:
    return "B_" + "_".join(chunk.vertices)


def _build(g: LabelledGraph, with_groups: bool) -> GraphOfGroups:
    if len(g.vertices) < 3:
        raise PreconditionError(
            "the decomposition is defined for graphs on at least 3 vertices;"
            " use the dihedral decomposition for a single edge"
        )
    decomp = big_chunks(g)
    vertices: list[GoGVertex] = []
    edges: list[GoGEdge] = []

    black_ids: list[str] = []
    classes: list[ChunkClass] = []
    for chunk in decomp.chunks:
        kind = classify_chunk(g, chunk)
        classes.append(kind)
        vid = _chunk_id(chunk)
        black_ids.append(vid)
        group: GroupDescriptor | None = None
        if with_groups:
            if kind.kind == CHUNK_TORAL_LEAF:
                base = next(v for v in chunk.vertices if v != kind.tip)
                group = CyclicOnGenerator(base)
            elif kind.kind == CHUNK_BRAIDED_LEAF:
                base = next(v for v in chunk.vertices if v != kind.tip)
                group = FreeAbelianPair(base, alternating(base, kind.tip, kind.label))
            else:
                group = ChunkParabolic(chunk)
        vertices.append(GoGVertex(vid, BLACK, group, chunk, kind))

    for v in decomp.separating:
        vertices.append(
            GoGVertex(f"W_{v}", WHITE, CyclicOnGenerator(v) if with_groups else None)
        )

    red_ids: dict[int, str] = {}
    for i, kind in enumerate(classes):
        if kind.kind != CHUNK_BRAIDED_LEAF:
            continue
        chunk = decomp.chunks[i]
        base = next(v for v in chunk.vertices if v != kind.tip)
        rid = f"R_{base}_{kind.tip}"
        red_ids[i] = rid
        group = CyclicOnWord(Word(((base, 1), (kind.tip, 1)))) if with_groups else None
        vertices.append(GoGVertex(rid, RED, group))

    for v, idxs in decomp.incidence:
        for i in idxs:
            word = Word.generator(v)
            edges.append(
                GoGEdge(
                    (f"W_{v}", black_ids[i]),
                    CyclicOnGenerator(v) if with_groups else None,
                    (word, word) if with_groups else None,
                )
            )

    for i, kind in enumerate(classes):
        if kind.kind != CHUNK_BRAIDED_LEAF:
            continue
        chunk = decomp.chunks[i]
        base = next(v for v in chunk.vertices if v != kind.tip)
        z_word = alternating(base, kind.tip, kind.label)
        edges.append(
            GoGEdge(
                (black_ids[i], red_ids[i]),
                CyclicOnWord(z_word) if with_groups else None,
                (z_word, z_word) if with_groups else None,
            )
        )

    for i, kind in enumerate(classes):
        if kind.kind != CHUNK_TORAL_LEAF:
            continue
        chunk = decomp.chunks[i]
        base = next(v for v in chunk.vertices if v != kind.tip)
        word = Word.generator(base)
        edges.append(
            GoGEdge(
                (black_ids[i], black_ids[i]),
                CyclicOnGenerator(base) if with_groups else None,
                (word, word) if with_groups else None,
                stable_letter=kind.tip,
            )
        )

    return GraphOfGroups(tuple(vertices), tuple(edges), graph=g)


def build_skeleton(g: LabelledGraph) -> GraphOfGroups:
    """The underlying coloured graph of the decomposition, without groups."""
    return _build(g, with_groups=False)


def build_jsj(g: LabelledGraph) -> GraphOfGroups:
    """The JSJ graph of groups of the Artin group on a connected graph, |V| >= 3."""
    return _build(g, with_groups=True)


def collapse_jsj(gog: GraphOfGroups) -> GraphOfGroups:
    """Collapse loops and red edges: one black vertex per chunk, full chunk group.

    Idempotent; the result has only white-black edges over cyclic groups
    on separating vertices.
    """
    vertices: list[GoGVertex] = []
    for v in gog.vertices:
        if v.color == RED:
            continue
        if v.color == BLACK:
            if v.chunk is None:
                raise PreconditionError(
                    "collapse needs chunk data on black vertices"
                )
            group = ChunkParabolic(v.chunk) if v.group is not None else None
            vertices.append(GoGVertex(v.id, BLACK, group, v.chunk, v.chunk_class))
        else:
            vertices.append(v)
    red_ids = {v.id for v in gog.vertices if v.color == RED}
    edges = tuple(
        e
        for e in gog.edges
        if not e.is_loop and not (set(e.ends) & red_ids)
    )
    return GraphOfGroups(tuple(vertices), edges, graph=gog.graph, legend=gog.legend)


def dihedral_jsj(n: int) -> GraphOfGroups:
    """The JSJ decomposition of the dihedral Artin group on label n >= 3.

    Odd n: amalgam <x> *_{x^2 = y^n} <y> with x the length-n alternating
    word and y the product of the generators. Even n = 2m: HNN extension
    of <y> with stable letter x = a conjugating y^m to itself. For n = 2
    the group is Z^2 and no JSJ exists; NoJsjExistsError is raised.
    """
    if n < 2:
        raise PreconditionError("edge labels start at 2")
    if n == 2:
        raise NoJsjExistsError(
            "the label 2 group is free abelian of rank 2 and has no JSJ"
            " decomposition over cyclic subgroups"
        )
    g = LabelledGraph.from_edges([("a", "b", n)])
    if n % 2 == 1:
        vertices = (
            GoGVertex("B_x", BLACK, CyclicOnGenerator("x")),
            GoGVertex("B_y", BLACK, CyclicOnGenerator("y")),
        )
        edges = (
            GoGEdge(
                ("B_x", "B_y"),
                CyclicOnWord(Word.generator("x", 2)),
                (Word.generator("x", 2), Word.generator("y", n)),
            ),
        )
        legend = (
            ("x", alternating("a", "b", n)),
            ("y", Word.from_text("a b")),
        )
    else:
        m = n // 2
        vertices = (GoGVertex("B_y", BLACK, CyclicOnGenerator("y")),)
        edges = (
            GoGEdge(
                ("B_y", "B_y"),
                CyclicOnWord(Word.generator("y", m)),
                (Word.generator("y", m), Word.generator("y", m)),
                stable_letter="x",
            ),
        )
        legend = (
            ("x", Word.generator("a")),
            ("y", Word.from_text("a b")),
        )
    return GraphOfGroups(vertices, edges, graph=g, legend=legend)
