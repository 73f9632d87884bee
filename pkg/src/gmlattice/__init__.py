"""gmlattice: exact integer lattice arithmetic for Gushel-Mukai fourfold
discriminants.

Decides the K3-surface, twisted-K3 and Hilbert-square association criteria
for labelling discriminants, and produces constructive lattice witnesses
(hyperbolic planes, normal forms, isotropic classes, Pell solutions) for
every positive answer.  All arithmetic uses unbounded integers and exact
rationals; no floating point anywhere.
"""

from .errors import (
    DegenerateLatticeError,
    DomainError,
    GlueObstructionError,
    HypothesisError,
    ImprimitiveFormError,
    InvalidElementError,
    InvalidTwistError,
    LatticeError,
    SquareInputError,
    UnsupportedFormError,
    UnsupportedRankError,
)
from .lattice import (
    GramLattice,
    IsometryResult,
    Sublattice,
    determinant,
    direct_sum,
    enumerate_vectors,
    find_hyperbolic_plane,
    format_gram_text,
    is_isometric_small,
    mukai_sign_reversed,
    orthogonal_complement,
    parse_gram_text,
    saturate,
    signature,
    standard_lattice,
    twist,
)
from .discriminant import (
    DiscriminantData,
    GlueData,
    GlueExtensionReport,
    check_isotropic,
    discriminant_group,
    glue,
    glue_extension_check,
    smith_normal_form,
)
from .pell import PellSolution, cf_sqrt, negative_pell, pell_general, pell_unit
from .forms import BinaryForm, find_prime_1mod4, reduce_form, represents
from .oracle import (
    CounterexampleFamilyReport,
    CounterexampleGeneralReport,
    DivisorReport,
    K3WitnessReport,
    LemmaReport,
    NeronSeveriModel,
    QFormAnalysis,
    admissible,
    classify,
    cond_star2,
    cond_star2_twisted,
    cond_star3,
    counterexample_family,
    counterexample_general,
    dm_isomorphism_check,
    hilb2_criterion,
    hilb2_witness,
    k3_witness,
    labelling_lattice,
    labelling_normal_form,
    lemma_checks,
    qform_rank4,
    twisted_witness,
)

__version__ = "0.1.0"
