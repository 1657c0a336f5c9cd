"""rootforge: exact-arithmetic root systems with Hermitian markings.

Builds finite root systems from Cartan matrices by reflection closure,
attaches Hermitian markings, validates Dynkin Pi-systems and the regular
subalgebras they generate, computes weighted Dynkin diagrams with
Weyl-group normalization, and ships parameterized catalogs of maximal
Hermitian regular subalgebras with inclusion-chain search and tightness
filters.  Everything is exact: integer root coordinates, rational linear
algebra, no floating point.
"""

from .errors import (
    DifferenceIsRoot,
    IncompleteEmbedding,
    InvalidMarking,
    LinearlyDependent,
    MixedLengthUnsupported,
    MultipleNoncompact,
    NonTraceless,
    NotARoot,
    NotFiniteType,
    NotHermitianNode,
    ParameterOutOfRange,
    RootForgeError,
    SearchBudgetExceeded,
    TableValidationError,
    UnsupportedAmbient,
)
from .rootsys import (
    CartanMatrix,
    Root,
    RootSystem,
    build_root_system,
    cartan_integer,
    family_system,
    is_positive,
    reflect,
)
from .hermitian import (
    HermitianMarking,
    RealFormName,
    RootClass,
    SimpleForm,
    classify_root,
    form,
    is_tube_type,
    name_real_form,
    parse_real_form,
    real_rank,
)
from .pisys import (
    PiSystem,
    SubrootSystem,
    WeylWord,
    apply_word,
    apply_word_to_root,
    check_pi_system,
    generate,
    positive_basis,
    rebase_hermitian,
    span_subsystem,
    weyl_equivalent,
)
from .wdd import (
    CorootVector,
    WeightedDiagram,
    coroot_of_weights,
    coroot_vector,
    decompose_diagonal,
    dominate,
    embedding_from_basis,
    push_coroot,
    reflect_weights,
    scale,
    sl2_admissible,
    weights_of,
)
from .catalog import (
    CatalogEntry,
    InclusionChain,
    inclusion_chains,
    is_tight_inclusion,
    maximal_hermitian_regular_subalgebras,
    rank_sum_bound,
    sp_factor_candidates,
    tube_rank_filter,
)

__version__ = "0.1.0"
