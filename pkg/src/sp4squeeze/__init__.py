"""Two-mode squeezing in Sp(4,R): U(2)-invariant classification of squeezing
transformations, Gaussian variance matrices, and synthesis of passive optics.

Quadrature order is xi = (q1, q2, p1, p2) and the vacuum variance matrix is
1/2 * I throughout.
"""
from .classification import (
    ClassLabel,
    InvariantPair,
    SqueezeVectors,
    canonical_passive,
    canonicalize,
    caves_schumaker_vectors,
    class_from_invariants,
    class_from_traces,
    class_of_positive,
    class_of_vectors,
    classify_symplectic,
    gram_matrix,
    invariants,
    product_class,
    representative_symplectic,
    single_mode_vectors,
    squeeze_symplectic,
    two_mode_character,
)
from .detection import (
    HeterodyneSetting,
    MachZehnderParams,
    WaveplateParams,
    heterodyne_quadrature_vector,
    heterodyne_scan,
    heterodyne_unitary,
    mz_forward,
    mz_synthesize,
    quadrature_variance,
    waveplate_forward,
    waveplate_synthesize,
)
from .errors import InvalidLabelError, NotSymplecticError, NotUnitaryError, Sp4Error
from .gaussian import (
    GaussianState,
    SqueezingVerdict,
    apply_symplectic,
    coherent_state,
    least_eigenvalue,
    squeezed_coherent,
    squeezed_thermal,
    squeezing_verdict,
    thermal_squeeze_threshold,
    thermal_state,
    wavefunction,
)
from .kernels import BACKEND
from .symplectic import (
    GENERATOR_NAMES,
    algebra_element,
    beta_form,
    complex_form,
    embed_u2,
    expm,
    extract_u2,
    generator_matrix,
    is_symplectic,
    polar_decompose,
    quadratic_form_of_generator,
)

__version__ = "0.1.0"
