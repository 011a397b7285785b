"""Harmonic index and diameter of quasi-tree graphs: exact invariants, named
extremal families, isomorphism-free enumeration and exhaustive bound sweeps."""

from .enumeration import (
    CanonicalForm,
    GraphClass,
    canonical_form,
    enumerate_class,
    quasi_trees_via_trees,
)
from .errors import (
    CapacityError,
    DomainError,
    GraphInputError,
    ParseError,
    QtHarmonicError,
    UnsupportedError,
)
from .families import FamilyKind, FamilySpec, U, V, build, closed_form, parse_family
from .formats import decode_graph6, emit_edge_list, encode_graph6, parse_edge_list
from .graph import (
    Graph,
    degree,
    delete_vertex,
    diameter,
    distance_matrix,
    is_connected,
    is_quasi_tree,
    is_tree,
    is_unicyclic,
    min_degree,
    quasi_tree_witnesses,
)
from .invariants import (
    BoundId,
    Status,
    Verdict,
    bound_value,
    degree2_deletion_delta,
    evaluate,
    harmonic_index,
    pendant_deletion_delta,
)
from .verify import (
    LemmaCheckResult,
    VerificationReport,
    check_lemma_f,
    check_lemma_g,
    recognize_named,
    verify_conjecture1,
    verify_theorems,
)

__version__ = "0.1.0"
