"""Finite presentations, abelianization, and integer Smith normal form.

The presentation of the fundamental group of a graph of groups follows
the standard recipe: vertex groups contribute disjoint generator copies
and their relators, edges of a spanning tree identify the two images of
the edge-group generator, and every other edge (loops included)
contributes a stable letter t with relator t a t^-1 w^-1 for the two
images a, w. Vertex-group copies are kept duplicated and identified, a
separate simplification step eliminates the identification relators.

All linear algebra is exact over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError, WordFormatError
from .gog import (
    ChunkParabolic,
    CyclicOnGenerator,
    CyclicOnWord,
    FreeAbelianPair,
    GoGVertex,
    GraphOfGroups,
)
from .graphs import LabelledGraph
from .words import NAME_RE, Word, alternating, rename_word


@dataclass(frozen=True)
class Presentation:
    """Finite presentation: generator names and relator words."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for gen in self.generators:
            if not NAME_RE.fullmatch(gen):
                raise WordFormatError(f"bad generator name {gen!r}")
            if gen in seen:
                raise WordFormatError(f"duplicate generator {gen!r}")
            seen.add(gen)
        for rel in self.relators:
            stray = rel.support() - seen
            if stray:
                raise WordFormatError(f"relator uses unknown generators {sorted(stray)}")


def render_presentation(p: Presentation) -> str:
    """Serialize as a ``gen:`` line followed by one ``rel:`` line per relator."""
    lines = ["gen: " + " ".join(p.generators)]
    lines += ["rel: " + r.to_text() for r in p.relators]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    gens: tuple[str, ...] | None = None
    rels: list[Word] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gen:"):
            if gens is not None:
                raise WordFormatError("second gen: line")
            gens = tuple(line[4:].split())
        elif line.startswith("rel:"):
            if gens is None:
                raise WordFormatError("rel: before gen:")
            rels.append(Word.from_text(line[4:]))
        else:
            raise WordFormatError(f"bad presentation line {line!r}")
    if gens is None:
        raise WordFormatError("missing gen: line")
    return Presentation(gens, tuple(rels))


def artin_presentation(g: LabelledGraph) -> Presentation:
    """One generator per vertex; per edge the two alternating words agree."""
    relators = tuple(
        alternating(u, v, m) * alternating(v, u, m).inverse() for u, v, m in g.edges
    )
    return Presentation(g.vertices, relators)


# Smith normal form


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors of an integer matrix, zeros trailing.

    Returns a tuple of length min(rows, cols) with d_1 | d_2 | ... and
    all entries nonnegative. Exact arbitrary-precision arithmetic.

    >>> smith_normal_form([[2, 0], [0, 3]])
    (1, 6)
    """
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for r in rows:
        if len(r) != ncols:
            raise PreconditionError("matrix rows have unequal lengths")
        for x in r:
            if not isinstance(x, int):
                raise PreconditionError("matrix entries must be integers")
    k = min(nrows, ncols)
    if k == 0:
        return ()
    m = rows
    diag: list[int] = []
    t = 0
    while t < k:
        pivot_pos = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                val = abs(m[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot_pos = (i, j)
        if pivot_pos is None:
            break
        pi, pj = pivot_pos
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            if m[t][t] < 0:
                m[t] = [-x for x in m[t]]
            p = m[t][t]
            restart = False
            for i in range(nrows):
                if i != t and m[i][t]:
                    q = m[i][t] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(ncols):
                if j != t and m[t][j]:
                    q = m[t][j] // p
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        restart = True
                        break
            if restart:
                continue
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[offender])]
        diag.append(m[t][t])
        t += 1
    return tuple(diag) + (0,) * (k - len(diag))


@dataclass(frozen=True)
class AbelianShape:
    """Isomorphism type of a finitely generated abelian group."""

    free_rank: int
    torsion: tuple[int, ...]

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "trivial"

    def to_json_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def shapes_equal(a: AbelianShape, b: AbelianShape) -> bool:
    return a == b


def abelianize(p: Presentation) -> AbelianShape:
    """Abelianization of the presented group, via Smith normal form."""
    gens = p.generators
    if not gens:
        return AbelianShape(0, ())
    if not p.relators:
        return AbelianShape(len(gens), ())
    col = {g: i for i, g in enumerate(gens)}
    rows = []
    for rel in p.relators:
        row = [0] * len(gens)
        for name, exp in rel.letters:
            row[col[name]] += exp
        rows.append(row)
    factors = smith_normal_form(rows)
    nonzero = [d for d in factors if d != 0]
    return AbelianShape(len(gens) - len(nonzero), tuple(d for d in nonzero if d > 1))


# fundamental group of a graph of groups


def _fresh(candidate: str, used: set[str]) -> str:
    while candidate in used:
        candidate += "_"
    return candidate


class _LocalGroup:
    """Expansion of one vertex group: renamed generators, relators, embedding."""

    def __init__(self, vertex: GoGVertex, taken: set[str], graph_vertices: set[str]):
        self.vertex = vertex
        self.rename: dict[str, str] = {}
        d = vertex.group
        if d is None:
            raise PreconditionError(
                f"vertex {vertex.id} carries no group; build with groups first"
            )
        if isinstance(d, CyclicOnGenerator):
            raw_gens = [d.generator]
            raw_rels: list[Word] = []
        elif isinstance(d, ChunkParabolic):
            inner = artin_presentation(d.chunk.graph)
            raw_gens = list(inner.generators)
            raw_rels = list(inner.relators)
        elif isinstance(d, FreeAbelianPair):
            z_raw = _fresh("z_" + "_".join(sorted(d.central.support())), graph_vertices)
            self.z_raw = z_raw
            base = Word.generator(d.base)
            z = Word.generator(z_raw)
            raw_gens = [d.base, z_raw]
            raw_rels = [base * z * base.inverse() * z.inverse()]
        elif isinstance(d, CyclicOnWord):
            r_raw = _fresh("r_" + "_".join(n for n, _ in d.word.letters), graph_vertices)
            self.r_raw = r_raw
            raw_gens = [r_raw]
            raw_rels = []
        else:
            raise PreconditionError(f"unknown group descriptor {d!r}")

        for raw in raw_gens:
            final = raw if raw not in taken else _fresh(f"{raw}_{vertex.id}", taken)
            taken.add(final)
            self.rename[raw] = final
        self.generators = [self.rename[raw] for raw in raw_gens]
        self.relators = [rename_word(w, self.rename) for w in raw_rels]

    def embed(self, w: Word) -> Word:
        """Image of a word in the defining generators inside this vertex group."""
        d = self.vertex.group
        if isinstance(d, CyclicOnGenerator):
            if w.support() <= {d.generator}:
                exp = w.exponent_sums().get(d.generator, 0)
                return _single(self.rename[d.generator], exp)
            raise PreconditionError(
                f"{w.to_text()!r} does not lie in the cyclic group on {d.generator}"
            )
        if isinstance(d, ChunkParabolic):
            if w.support() <= set(d.chunk.vertices):
                return rename_word(w, self.rename)
            raise PreconditionError(
                f"{w.to_text()!r} does not lie in the chunk {d.chunk}"
            )
        if isinstance(d, FreeAbelianPair):
            if w.support() <= {d.base}:
                exp = w.exponent_sums().get(d.base, 0)
                return _single(self.rename[d.base], exp)
            k = _power_of(w, d.central)
            if k is not None:
                return _single(self.rename[self.z_raw], k)
            raise PreconditionError(
                f"{w.to_text()!r} does not lie in {d.describe()}"
            )
        if isinstance(d, CyclicOnWord):
            k = _power_of(w, d.word)
            if k is not None:
                return _single(self.rename[self.r_raw], k)
            raise PreconditionError(
                f"{w.to_text()!r} is not a power of {d.word.to_text()}"
            )
        raise PreconditionError(f"unknown group descriptor {d!r}")


def _single(name: str, exp: int) -> Word:
    return Word.generator(name, exp) if exp else Word()


def _power_of(w: Word, base: Word) -> int | None:
    """Exponent k with w = base^k as unit sequences, or None."""
    lw = w.syllable_length()
    lb = base.syllable_length()
    if lw == 0:
        return 0
    if lb == 0 or lw % lb:
        return None
    k = lw // lb
    units = list(w.units())
    if units == list((base ** k).units()):
        return k
    if units == list((base ** (-k)).units()):
        return -k
    return None


def gog_presentation(gog: GraphOfGroups) -> Presentation:
    """Presentation of the fundamental group of a graph of groups.

    Vertex-group generator copies stay duplicated; spanning-tree edges
    contribute identification relators, remaining edges stable letters.
    Generators are sorted; relator order follows vertices then edges.
    """
    if not gog.base_is_connected():
        raise PreconditionError("graph of groups has a disconnected base")

    graph_vertices = set(gog.graph.vertices) if gog.graph is not None else set()
    taken: set[str] = set()
    locals_by_id: dict[str, _LocalGroup] = {}
    for v in gog.vertices:
        locals_by_id[v.id] = _LocalGroup(v, taken, graph_vertices)

    tree_edges: set[int] = set()
    seen = {gog.vertices[0].id}
    frontier = [gog.vertices[0].id]
    while frontier:
        nxt = []
        for vid in frontier:
            for idx, e in enumerate(gog.edges):
                if e.is_loop or idx in tree_edges:
                    continue
                if e.ends[0] == vid and e.ends[1] not in seen:
                    other = e.ends[1]
                elif e.ends[1] == vid and e.ends[0] not in seen:
                    other = e.ends[0]
                else:
                    continue
                tree_edges.add(idx)
                seen.add(other)
                nxt.append(other)
        frontier = nxt

    stable: dict[int, str] = {}
    for idx, e in enumerate(gog.edges):
        if idx in tree_edges:
            continue
        raw = e.stable_letter if e.stable_letter is not None else f"t{idx}"
        final = raw if raw not in taken else _fresh(f"{raw}_loop{idx}", taken)
        taken.add(final)
        stable[idx] = final

    relators: list[Word] = []
    for v in gog.vertices:
        relators += locals_by_id[v.id].relators
    for idx, e in enumerate(gog.edges):
        if e.injections is None:
            raise PreconditionError("edges carry no injections; build with groups first")
        left = locals_by_id[e.ends[0]].embed(e.injections[0])
        right = locals_by_id[e.ends[1]].embed(e.injections[1])
        if idx in tree_edges:
            relators.append(left * right.inverse())
        else:
            t = Word.generator(stable[idx])
            relators.append(t * left * t.inverse() * right.inverse())

    return Presentation(tuple(sorted(taken)), tuple(relators))


def simplify_identifications(p: Presentation) -> Presentation:
    """Eliminate relators identifying one generator with another.

    Repeatedly finds a two-letter relator s^e t^f with |e| = |f| = 1 and
    s distinct from t, substitutes the longer-named generator away, and
    free-reduces. This undoes the duplication in gog_presentation while
    leaving every other relation intact.
    """
    gens = list(p.generators)
    rels = [r.free_reduce() for r in p.relators]
    rels = [r for r in rels if r.letters]
    while True:
        target = None
        for i, r in enumerate(rels):
            if len(r.letters) != 2:
                continue
            (n1, e1), (n2, e2) = r.letters
            if n1 != n2 and abs(e1) == 1 and abs(e2) == 1:
                target = i
                break
        if target is None:
            break
        (n1, e1), (n2, e2) = rels[target].letters
        sign = -e1 * e2
        keep, drop = sorted((n1, n2), key=lambda s: (len(s), s))
        rels.pop(target)
        out = []
        for r in rels:
            letters = tuple(
                (keep, e * sign) if n == drop else (n, e) for n, e in r.letters
            )
            reduced = Word(letters).free_reduce()
            if reduced.letters:
                out.append(reduced)
        rels = out
        gens.remove(drop)
    return Presentation(tuple(gens), tuple(rels))
