"""Computational toolkit for Artin groups defined by labelled graphs.

Chunk decompositions, splittings over cyclic subgroups, JSJ graphs of
groups, finite presentations with exact abelianization, the dihedral
word problem, and certified isomorphism invariants.
"""

from .dihedral import (
    AbelianNormalForm,
    EvenNormalForm,
    GarsideData,
    OddNormalForm,
    as_defining_generators,
    delta_conjugates_generators,
    garside,
    is_central,
    membership_a_z,
    normal_form,
    reduced_words,
    root_bound_search,
    words_equal,
)
from .errors import (
    ArtinError,
    DisconnectedGraphError,
    GraphFormatError,
    GraphTooLargeError,
    NoJsjExistsError,
    PreconditionError,
    WordFormatError,
)
from .gog import (
    BLACK,
    RED,
    WHITE,
    ChunkParabolic,
    CyclicOnGenerator,
    CyclicOnWord,
    FreeAbelianPair,
    GoGEdge,
    GoGVertex,
    GraphOfGroups,
    betti_number,
    build_jsj,
    build_skeleton,
    collapse_jsj,
    dihedral_jsj,
)
from .graphs import (
    BigChunk,
    BlockDecomposition,
    ChunkClass,
    LabelledGraph,
    big_chunks,
    canonical_form,
    classify_chunk,
    odd_components,
    parse_graph,
    retract_word,
    separating_vertices,
)
from .invariants import (
    AcylindricityVerdict,
    CompareVerdict,
    InvariantProfile,
    aut_acylindrically_hyperbolic,
    compare,
    profile,
)
from .presentations import (
    AbelianShape,
    Presentation,
    abelianize,
    artin_presentation,
    gog_presentation,
    parse_presentation,
    render_presentation,
    shapes_equal,
    simplify_identifications,
    smith_normal_form,
)
from .splitting import SplitVerdict, splits_over_cyclic
from .words import Word, alternating

__all__ = [
    "AbelianNormalForm",
    "AbelianShape",
    "AcylindricityVerdict",
    "ArtinError",
    "BLACK",
    "BigChunk",
    "BlockDecomposition",
    "ChunkClass",
    "ChunkParabolic",
    "CompareVerdict",
    "CyclicOnGenerator",
    "CyclicOnWord",
    "DisconnectedGraphError",
    "EvenNormalForm",
    "FreeAbelianPair",
    "GarsideData",
    "GoGEdge",
    "GoGVertex",
    "GraphFormatError",
    "GraphOfGroups",
    "GraphTooLargeError",
    "InvariantProfile",
    "LabelledGraph",
    "NoJsjExistsError",
    "OddNormalForm",
    "Presentation",
    "PreconditionError",
    "RED",
    "SplitVerdict",
    "WHITE",
    "Word",
    "WordFormatError",
    "abelianize",
    "alternating",
    "artin_presentation",
    "as_defining_generators",
    "aut_acylindrically_hyperbolic",
    "betti_number",
    "big_chunks",
    "build_jsj",
    "build_skeleton",
    "canonical_form",
    "classify_chunk",
    "collapse_jsj",
    "compare",
    "delta_conjugates_generators",
    "dihedral_jsj",
    "garside",
    "gog_presentation",
    "is_central",
    "membership_a_z",
    "normal_form",
    "odd_components",
    "parse_graph",
    "parse_presentation",
    "profile",
    "reduced_words",
    "render_presentation",
    "retract_word",
    "root_bound_search",
    "separating_vertices",
    "shapes_equal",
    "simplify_identifications",
    "smith_normal_form",
    "splits_over_cyclic",
    "words_equal",
]
