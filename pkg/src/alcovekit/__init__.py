"""Exact alcove geometry for affine Weyl groups, Steinberg certificates and Demazure characters."""

from .afweyl import (
    AffineWeight,
    AffineWeylElement,
    AlcoveCertificate,
    LexPoint,
    fold_to_alcove,
    m_contains,
    m_lattice_basis,
    reduced_word_of,
    separating_count,
    translate_affine_weight,
    z_alpha_modulus,
)
from .demchar import (
    CharPoly,
    CharacterCache,
    classical_character,
    demazure_character,
    demazure_step,
    dimension,
    graded_classical_character,
    verify_fusion,
    verify_qsystem,
    weyl_dimension,
)
from .errors import InvalidElementError, LabelError, PreconditionError, UnsupportedError
from .rootsys import (
    AffineLabel,
    FiniteWeylElement,
    RootSystemData,
    apply_word,
    build_root_system,
    coroot_pairing,
    fold_to_dominant,
    inner_product,
)
from .steinberg import (
    SteinbergCertificate,
    WeightDecomposition,
    canonical_decomposition,
    steinberg_certificate,
    validate_decomposition,
    verify_certificate,
)

__version__ = "0.1.0"
