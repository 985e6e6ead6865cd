"""Exchange-only universality for families of symmetric-group irreducibles."""
from .errors import (
    BudgetExceeded,
    Degenerate,
    DegreeMismatch,
    ExchangeUnivError,
    HypothesisViolated,
    Inconsistent,
    IndexOutOfRange,
    NotDecreasing,
    ParseError,
    RowBound,
    SingleMember,
    SizeLimit,
    TrivialPartition,
)
from .lr import (
    LRProductSet,
    lr_coefficient,
    lr_expand,
    multi_lr_coefficient,
    no_conjugates_pair,
    product_set,
    weyl_bounds,
)
from .orthogonal import (
    CheckReport,
    Permutation,
    RepMatrix,
    adjacent_matrix,
    alternating_intertwiner,
    jucys_murphy_matrix,
    permutation_matrix,
    verify_structure,
)
from .partitions import Partition, PartitionClass, PartitionFamily, classify, conjugate, parse_partition, partwise_sum
from .schur_weyl import (
    EfficiencyRow,
    PhysicalBasisMap,
    coding_efficiency,
    collective_noise_check,
    efficiency_table,
    isotypic_dimension,
    physical_basis_map,
)
from .tableaux import StandardTableau, dimension, enumerate_standard, tableau_from_content_vector, weyl_dimension
from .universality import (
    MinimalFamilySet,
    UniversalityVerdict,
    ancilla_suggestion,
    cartan_target,
    family_universal,
    minimal_universal_families,
    pair_universal,
    single_universal,
    upward_closed_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
