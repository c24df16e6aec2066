"""Finite-model toolkit for L-mosaics and bounded join-semilattices.

Structures are explicit operation tables over carriers 0..n-1; element sets
are int bitmasks. The toolkit checks axioms with replayable witnesses,
derives the multivalued operation of a semilattice and extracts the join
back out of an L-mosaic, enumerates both kinds up to isomorphism at small
sizes, verifies the two constructions are mutually inverse, and searches
for structures separating each axiom from the rest.
"""

from .ablation import (
    ABLATABLE_AXIOMS,
    AblationResult,
    BrokenProperty,
    ablate,
    ablate_all,
)
from .axioms import (
    LMOSAIC_AXIOMS,
    MOSAIC_AXIOMS,
    AxiomError,
    CheckReport,
    Verdict,
    check_bjoin,
    check_lmosaic,
    check_mosaic,
)
from .core import (
    MAX_CARRIER,
    BJoinSemilattice,
    Carrier,
    ElemSet,
    LMosaic,
    StructureError,
    elem_set,
    full_set,
    contains,
    hyper,
    left_mul,
    members,
    right_mul,
    set_mul,
    set_size,
)
from .document import (
    FILE_SUFFIX,
    ParseError,
    load_structure,
    parse_structure,
    save_structure,
    serialize_structure,
)
from .enumeration import (
    BOUND_ENV_VAR,
    DEFAULT_BJOIN_BOUND,
    DEFAULT_LMOSAIC_BOUND,
    SEARCH_AXIOMS,
    CanonicalForm,
    bjoin_bound,
    canonical_form,
    enumerate_bjoin,
    enumerate_lmosaic,
    involutions,
    is_isomorphic,
    lmosaic_bound,
    relabel_bjoin,
    relabel_lmosaic,
    search_lmosaics,
)
from .equivalence import (
    Diff,
    FamilyRow,
    FamilySummary,
    StructureDiff,
    diff_bjoin,
    diff_lmosaic,
    hyper_assoc_witness,
    roundtrip_bjoin,
    roundtrip_lmosaic,
    verify_family,
)
from .extraction import (
    InducedOrder,
    JoinWitnessError,
    MultipleWitnesses,
    ZeroWitnesses,
    check_partial_order,
    extract_bjoin,
    extract_join,
    induced_order,
    lub_properties,
)
from .hasse import covering_edges, draw_hasse, emit_hasse, order_relation, render_hasse
from .nakano import nakano
from .report import write_family_report

__version__ = "0.1.0"

__all__ = [
    "ABLATABLE_AXIOMS",
    "AblationResult",
    "AxiomError",
    "BJoinSemilattice",
    "BOUND_ENV_VAR",
    "BrokenProperty",
    "CanonicalForm",
    "Carrier",
    "CheckReport",
    "DEFAULT_BJOIN_BOUND",
    "DEFAULT_LMOSAIC_BOUND",
    "Diff",
    "ElemSet",
    "FamilyRow",
    "FamilySummary",
    "FILE_SUFFIX",
    "InducedOrder",
    "JoinWitnessError",
    "LMOSAIC_AXIOMS",
    "LMosaic",
    "MAX_CARRIER",
    "MOSAIC_AXIOMS",
    "MultipleWitnesses",
    "ParseError",
    "SEARCH_AXIOMS",
    "StructureDiff",
    "StructureError",
    "Verdict",
    "ZeroWitnesses",
    "ablate",
    "ablate_all",
    "bjoin_bound",
    "canonical_form",
    "check_bjoin",
    "check_lmosaic",
    "check_mosaic",
    "check_partial_order",
    "contains",
    "covering_edges",
    "diff_bjoin",
    "diff_lmosaic",
    "draw_hasse",
    "elem_set",
    "emit_hasse",
    "enumerate_bjoin",
    "enumerate_lmosaic",
    "extract_bjoin",
    "extract_join",
    "full_set",
    "hyper",
    "hyper_assoc_witness",
    "induced_order",
    "involutions",
    "is_isomorphic",
    "left_mul",
    "lmosaic_bound",
    "load_structure",
    "lub_properties",
    "members",
    "nakano",
    "order_relation",
    "parse_structure",
    "relabel_bjoin",
    "relabel_lmosaic",
    "render_hasse",
    "right_mul",
    "roundtrip_bjoin",
    "roundtrip_lmosaic",
    "save_structure",
    "search_lmosaics",
    "serialize_structure",
    "set_mul",
    "set_size",
    "verify_family",
    "write_family_report",
]
