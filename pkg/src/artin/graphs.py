"""Labelled simplicial graphs and their chunk decompositions.

A labelled graph is a finite simple graph with integer edge labels >= 2.
Each graph defines an Artin group: one generator per vertex, and for each
edge {u, v} with label m the relation that the two length-m alternating
words u v u ... and v u v ... are equal.

The central structure here is the decomposition of a connected graph into
big chunks: maximal connected induced subgraphs without separating
vertices. These coincide with the blocks of the graph (biconnected
components, bridges, and isolated vertices), which is how they are
computed; a brute-force maximality oracle in the test suite enforces the
equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    DisconnectedGraphError,
    GraphFormatError,
    GraphTooLargeError,
    PreconditionError,
    WordFormatError,
)
from .words import NAME_RE, Word

CANONICAL_FORM_CAP = 12


@dataclass(frozen=True)
class LabelledGraph:
    """Immutable labelled simple graph.

    ``vertices`` is lexicographically sorted; ``edges`` holds (u, v, label)
    with u < v, sorted. Construct via :meth:`from_edges` or
    :func:`parse_graph`.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]
    _adj: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if not NAME_RE.fullmatch(v):
                raise GraphFormatError(f"bad vertex name {v!r}")
            if v in seen:
                raise GraphFormatError(f"duplicate vertex {v!r}")
            seen.add(v)
        if tuple(sorted(self.vertices)) != self.vertices:
            raise GraphFormatError("vertices must be sorted")
        adj: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        prev = None
        for u, v, m in self.edges:
            if u not in seen or v not in seen:
                raise GraphFormatError(f"edge {u}-{v} on unknown vertex")
            if u == v:
                raise GraphFormatError(f"self loop at {u!r}")
            if u > v:
                raise GraphFormatError(f"edge {u}-{v} not in canonical order")
            if not isinstance(m, int) or m < 2:
                raise GraphFormatError(f"edge {u}-{v} label must be an integer >= 2")
            if (u, v) == prev:
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            if prev is not None and (u, v) < prev:
                raise GraphFormatError("edges must be sorted")
            prev = (u, v)
            adj[u][v] = m
            adj[v][u] = m
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, edges, vertices=()) -> "LabelledGraph":
        """Build from an iterable of (u, v, label); extra isolated vertices allowed."""
        names = set(vertices)
        canon = {}
        for u, v, m in edges:
            names.add(u)
            names.add(v)
            key = (u, v) if u <= v else (v, u)
            if key in canon:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}")
            canon[key] = m
        return cls(
            tuple(sorted(names)),
            tuple((u, v, canon[(u, v)]) for u, v in sorted(canon)),
        )

    # basic queries

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(self._adj[v]))

    def valence(self, v: str) -> int:
        return len(self._adj[v])

    def label(self, u: str, v: str) -> int:
        try:
            return self._adj[u][v]
        except KeyError:
            raise KeyError(f"no edge {u}-{v}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def induced(self, subset) -> "LabelledGraph":
        keep = set(subset)
        missing = keep - set(self.vertices)
        if missing:
            raise PreconditionError(f"not vertices of the graph: {sorted(missing)}")
        return LabelledGraph(
            tuple(sorted(keep)),
            tuple((u, v, m) for u, v, m in self.edges if u in keep and v in keep),
        )

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components as sorted vertex tuples, sorted by first vertex."""
        seen: set[str] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def to_text(self) -> str:
        """Serialize in the line-based graph format (round-trips through parse_graph)."""
        lines = [f"v {v}" for v in self.vertices]
        lines += [f"e {u} {v} {m}" for u, v, m in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> LabelledGraph:
    """Parse the line-based labelled graph format.

    Lines: ``# comment``, blank, ``v NAME``, or ``e NAME NAME LABEL``.
    Edge lines declare their endpoints implicitly; ``v`` lines are only
    needed for isolated vertices. Labels are integers >= 2.
    """
    vertices: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise GraphFormatError("vertex line must be 'v NAME'", lineno)
            if not NAME_RE.fullmatch(parts[1]):
                raise GraphFormatError(f"bad vertex name {parts[1]!r}", lineno)
            vertices.add(parts[1])
        elif parts[0] == "e":
            if len(parts) != 4:
                raise GraphFormatError("edge line must be 'e NAME NAME LABEL'", lineno)
            u, v, raw_label = parts[1], parts[2], parts[3]
            for name in (u, v):
                if not NAME_RE.fullmatch(name):
                    raise GraphFormatError(f"bad vertex name {name!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self loop at {u!r}", lineno)
            try:
                m = int(raw_label)
            except ValueError:
                raise GraphFormatError(f"bad label {raw_label!r}", lineno) from None
            if m < 2:
                raise GraphFormatError(f"label must be >= 2, got {m}", lineno)
            key = (u, v) if u < v else (v, u)
            if key in edges:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}", lineno)
            edges[key] = m
            vertices.add(u)
            vertices.add(v)
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    return LabelledGraph(
        tuple(sorted(vertices)),
        tuple((u, v, edges[(u, v)]) for u, v in sorted(edges)),
    )


# chunk decomposition


@dataclass(frozen=True)
class BigChunk:
    """A maximal connected induced subgraph without separating vertices."""

    vertices: tuple[str, ...]
    graph: LabelledGraph

    def __str__(self) -> str:
        return "{" + ",".join(self.vertices) + "}"


CHUNK_BIG_BIG = "BigBig"
CHUNK_TORAL_LEAF = "ToralLeaf"
CHUNK_BRAIDED_LEAF = "BraidedLeaf"
CHUNK_ODD_LEAF = "OddLeaf"
CHUNK_ODD_NONLEAF = "OddNonLeafEdge"
CHUNK_LABEL2_NONLEAF = "Label2NonLeafEdge"
CHUNK_EVEN_NONLEAF = "EvenNonLeafEdge"


@dataclass(frozen=True)
class ChunkClass:
    """Classification of a chunk inside its ambient graph.

    ``label`` and ``tip`` are set for two-vertex chunks only; ``tip`` is the
    valence-1 endpoint when the chunk is a leaf edge.
    """

    kind: str
    label: int | None = None
    tip: str | None = None

    def __str__(self) -> str:
        if self.kind == CHUNK_BIG_BIG:
            return self.kind
        if self.tip is not None:
            return f"{self.kind}({self.label}, tip={self.tip})"
        return f"{self.kind}({self.label})"


@dataclass(frozen=True)
class BlockDecomposition:
    """Chunks, separating vertices, and their incidence for a connected graph.

    Chunks are sorted by (least vertex, size, vertex tuple). ``incidence``
    pairs each separating vertex with the sorted indexes of the chunks
    containing it.
    """

    graph: LabelledGraph
    chunks: tuple[BigChunk, ...]
    separating: tuple[str, ...]
    incidence: tuple[tuple[str, tuple[int, ...]], ...]

    def chunks_containing(self, v: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.chunks) if v in c.vertices)

    def classes(self) -> tuple[ChunkClass, ...]:
        return tuple(classify_chunk(self.graph, c) for c in self.chunks)

    def to_json_dict(self) -> dict:
        return {
            "chunks": [list(c.vertices) for c in self.chunks],
            "separating": list(self.separating),
            "classes": [str(k) for k in self.classes()],
        }


def separating_vertices(g: LabelledGraph) -> tuple[str, ...]:
    """Vertices whose removal disconnects the graph (or a component of it)."""
    out = []
    base = len(g.components())
    for v in g.vertices:
        rest = [u for u in g.vertices if u != v]
        if rest and len(g.induced(rest).components()) > base - (1 if g.valence(v) == 0 else 0):
            out.append(v)
    return tuple(out)


def _edge_blocks(g: LabelledGraph) -> list[frozenset[str]]:
    """Vertex sets of the blocks, via edge equivalence.

    Two edges meeting at v lie in a common block iff their far endpoints
    are connected in the graph without v. The blocks are the classes of
    the transitive closure, plus singletons for isolated vertices.
    """
    edges = [(u, v) for u, v, _ in g.edges]
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    index_at: dict[str, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(edges):
        index_at[u].append(i)
        index_at[v].append(i)

    for v in g.vertices:
        incident = index_at[v]
        if len(incident) < 2:
            continue
        rest = [u for u in g.vertices if u != v]
        comp_of: dict[str, int] = {}
        for k, comp in enumerate(g.induced(rest).components()):
            for u in comp:
                comp_of[u] = k
        for i, j in combinations(incident, 2):
            far_i = edges[i][0] if edges[i][1] == v else edges[i][1]
            far_j = edges[j][0] if edges[j][1] == v else edges[j][1]
            if comp_of[far_i] == comp_of[far_j]:
                union(i, j)

    groups: dict[int, set[str]] = {}
    for i, (u, v) in enumerate(edges):
        groups.setdefault(find(i), set()).update((u, v))
    blocks = [frozenset(s) for s in groups.values()]
    covered = set().union(*blocks) if blocks else set()
    blocks += [frozenset({v}) for v in g.vertices if v not in covered]
    return blocks


def big_chunks(g: LabelledGraph) -> BlockDecomposition:
    """Decompose a connected graph into big chunks.

    Raises :class:`DisconnectedGraphError` on disconnected input (the
    components are reported on the error).
    """
    if not g.vertices:
        raise PreconditionError("empty graph")
    comps = g.components()
    if len(comps) > 1:
        raise DisconnectedGraphError(comps)
    blocks = _edge_blocks(g)
    ordered = sorted(
        (tuple(sorted(b)) for b in blocks),
        key=lambda t: (t[0], len(t), t),
    )
    chunks = tuple(BigChunk(t, g.induced(t)) for t in ordered)
    count: dict[str, int] = {v: 0 for v in g.vertices}
    for c in chunks:
        for v in c.vertices:
            count[v] += 1
    separating = tuple(v for v in g.vertices if count[v] > 1)
    incidence = tuple(
        (v, tuple(i for i, c in enumerate(chunks) if v in c.vertices))
        for v in separating
    )
    return BlockDecomposition(g, chunks, separating, incidence)


def classify_chunk(g: LabelledGraph, chunk: BigChunk) -> ChunkClass:
    """Classify a chunk of g by size, label parity, and leaf position.

    A two-vertex chunk is a leaf when an endpoint has valence 1 in g; that
    endpoint is the tip. Label 2 leaves are toral (the chunk group is
    Z^2), even labels >= 4 give braided leaves, odd labels odd leaves.
    """
    if len(chunk.vertices) == 1:
        raise PreconditionError("singleton chunk has no classification")
    if len(chunk.vertices) >= 3:
        return ChunkClass(CHUNK_BIG_BIG)
    u, v = chunk.vertices
    m = g.label(u, v)
    tips = [w for w in (u, v) if g.valence(w) == 1]
    if tips:
        tip = tips[-1]
        if m == 2:
            return ChunkClass(CHUNK_TORAL_LEAF, m, tip)
        if m % 2 == 0:
            return ChunkClass(CHUNK_BRAIDED_LEAF, m, tip)
        return ChunkClass(CHUNK_ODD_LEAF, m, tip)
    if m % 2 == 1:
        return ChunkClass(CHUNK_ODD_NONLEAF, m)
    if m == 2:
        return ChunkClass(CHUNK_LABEL2_NONLEAF, m)
    return ChunkClass(CHUNK_EVEN_NONLEAF, m)


def odd_components(g: LabelledGraph) -> tuple[tuple[str, ...], ...]:
    """Components of the subgraph keeping only odd-labelled edges.

    Their number equals the rank of the abelianization of the Artin group
    (generators of an odd edge are identified there).
    """
    odd = LabelledGraph(
        g.vertices,
        tuple((u, v, m) for u, v, m in g.edges if m % 2 == 1),
    )
    return odd.components()


def retract_word(g: LabelledGraph, chunk: BigChunk, w: Word) -> Word:
    """Retract a word in the vertex generators onto a chunk.

    Every vertex maps to the nearest chunk vertex (unique: each component
    hanging off the chunk attaches through one vertex); letters are
    replaced accordingly. The map is checked to send edges to edges with
    the same label or to collapse them, which makes it a group
    retraction onto the chunk's Artin group.
    """
    if not g.is_connected():
        raise DisconnectedGraphError(g.components())
    chunk_set = set(chunk.vertices)
    if not chunk_set <= set(g.vertices):
        raise PreconditionError("chunk does not live in the graph")

    dist: dict[str, dict[str, int]] = {}
    for start in g.vertices:
        d = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if y not in d:
                        d[y] = d[x] + 1
                        nxt.append(y)
            frontier = nxt
        dist[start] = d

    rho: dict[str, str] = {}
    for v in g.vertices:
        if v in chunk_set:
            rho[v] = v
            continue
        best = min(dist[v][c] for c in chunk.vertices)
        nearest = [c for c in chunk.vertices if dist[v][c] == best]
        if len(nearest) != 1:
            raise PreconditionError(
                f"no unique nearest chunk vertex for {v}; not a big chunk"
            )
        rho[v] = nearest[0]

    for u, v, m in g.edges:
        ru, rv = rho[u], rho[v]
        if ru == rv:
            continue
        if not chunk.graph.has_edge(ru, rv) or chunk.graph.label(ru, rv) != m:
            raise PreconditionError(
                f"edge {u}-{v} does not retract; not a big chunk"
            )

    for name, _ in w.letters:
        if name not in rho:
            raise WordFormatError(f"letter {name!r} is not a vertex of the graph")
    return Word(tuple((rho[n], e) for n, e in w.letters))


# canonical form


def _wl_classes(n: int, adj_label) -> list[list[int]]:
    """Partition vertex indexes by iterated neighbourhood refinement.

    Colours start from the sorted multiset of incident labels and refine
    by (own colour, sorted multiset of (edge label, neighbour colour)).
    The refinement is isomorphism-invariant, as is the order of the
    resulting classes.
    """
    sigs = [tuple(sorted(adj_label[i][j] for j in range(n) if adj_label[i][j])) for i in range(n)]
    colors = _rank(sigs)
    while True:
        sigs = [
            (
                colors[i],
                tuple(
                    sorted(
                        (adj_label[i][j], colors[j])
                        for j in range(n)
                        if adj_label[i][j]
                    )
                ),
            )
            for i in range(n)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    return [classes[c] for c in sorted(classes)]


def _rank(sigs):
    order = {s: k for k, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def canonical_form(g: LabelledGraph, cap: int = CANONICAL_FORM_CAP) -> bytes:
    """Canonical byte string: equal for exactly the isomorphic labelled graphs.

    Minimizes the flattened lower-triangle label matrix over vertex
    orderings compatible with the refinement classes, with prefix pruning
    and skipping of interchangeable vertices (pairs whose transposition
    is an automorphism). Capped at ``cap`` vertices.
    """
    n = len(g.vertices)
    if n > cap:
        raise GraphTooLargeError(f"canonical form capped at {cap} vertices, got {n}")
    if n == 0:
        return b"0|"
    names = g.vertices
    idx = {v: i for i, v in enumerate(names)}
    adj = [[0] * n for _ in range(n)]
    for u, v, m in g.edges:
        adj[idx[u]][idx[v]] = m
        adj[idx[v]][idx[u]] = m

    classes = _wl_classes(n, adj)
    class_for_pos: list[int] = []
    for k, cls in enumerate(classes):
        class_for_pos += [k] * len(cls)

    # interchangeable pairs: swapping them fixes the labelled graph
    swap_class = list(range(n))

    def sfind(i):
        while swap_class[i] != i:
            swap_class[i] = swap_class[swap_class[i]]
            i = swap_class[i]
        return i

    for cls in classes:
        for a, b in combinations(cls, 2):
            if all(adj[a][k] == adj[b][k] for k in range(n) if k not in (a, b)):
                swap_class[sfind(a)] = sfind(b)

    best: list[int] | None = None
    order: list[int] = []
    flat: list[int] = []
    placed = [False] * n

    def dfs(pos: int):
        nonlocal best
        if pos == n:
            if best is None or flat < best:
                best = flat.copy()
            return
        seen_swap: set[int] = set()
        for u in classes[class_for_pos[pos]]:
            if placed[u]:
                continue
            root = sfind(u)
            if root in seen_swap:
                continue
            seen_swap.add(root)
            row = [adj[u][w] for w in order]
            flat.extend(row)
            if best is None or flat <= best[: len(flat)]:
                placed[u] = True
                order.append(u)
                dfs(pos + 1)
                order.pop()
                placed[u] = False
            del flat[len(flat) - len(row):]

    dfs(0)
    assert best is not None
    payload = ",".join(str(x) for x in best)
    return f"{n}|{payload}".encode("ascii")
