"""Spin-1/2 representation machinery on real Hilbert spaces.

Real Clifford algebra in an integer Majorana basis, the Pin(3,1) double
cover of the Lorentz group, unitary momentum/angular-momentum/energy
transforms of 4-component real spinor fields, free Dirac time evolution,
and the causal transition kernel.  Every module is built so that the
underlying operator identities are checkable numerically at desk scale.
"""

from .clifford import (
    GammaSet,
    PinElement,
    ThetaBasis,
    anticommutator,
    build_majorana_basis,
    build_theta_basis,
    commutant_certificate,
    expm_real,
    inverse_theta_map,
    is_majorana,
    lambda_of,
    omega_elements,
    spin_plus_element,
    theta_map,
)
from .fields import GridSpec, MajoranaField, PauliField, random_majorana_field, random_pauli_field
from .fourier import (
    apply_dirac_operator,
    energy,
    energy_transform,
    energy_transform_inverse,
    majorana_fourier,
    majorana_fourier_direct,
    majorana_fourier_inverse,
    momentum_kernel,
    pauli_fourier,
    pauli_fourier_inverse,
    project_to_paired_modes,
    s_block_map,
    zeroed_modes,
)
from .hankel import (
    SphericalField,
    SphericalModeField,
    SphericalQuadSpec,
    angular_momentum_check,
    assoc_legendre,
    majorana_hankel,
    majorana_hankel_direct,
    majorana_hankel_inverse,
    majorana_lambda_matrix,
    pauli_hankel,
    pauli_hankel_inverse,
    pauli_spherical_matrix,
    spherical_bessel,
    spherical_harmonic,
    synthesize_majorana_modes,
)
from .poincare import (
    PoincareElement,
    boost_action,
    canonical_rotation_lift,
    causality_scan,
    evolve,
    poincare_apply_config,
    poincare_compose,
    projective_sign_check,
    rotate_z,
    standard_boost,
    transition_operator,
    transition_operator_direct,
    translate,
    wigner_rotation,
)

__version__ = "0.1.0"
