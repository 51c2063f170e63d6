"""Clifford-algebra engine and orientation hidden-variable EPR-Bohm simulator."""

__version__ = "0.1.0"

from .epr import (
    CorrelationEstimate,
    ExperimentConfig,
    Side,
    SweepSpec,
    TrialRecord,
    correlation_raw,
    correlation_standard,
    lambda_stream,
    marginal_average,
    raw_score_alice,
    raw_score_bob,
    sample_lambda,
    sweep,
)
from .frames import (
    AbstractElement,
    HiddenBasis,
    OrientationMixError,
    OrientedFrame,
    abstract_product,
    build_frame,
    combined_identity_check,
    duality_check,
    hidden_basis,
    standard_score,
)
from .hopf import (
    DegenerateAxisError,
    FiberProbe,
    Rotor,
    make_rotor,
    null_limit_probe,
    parallel_transport_check,
    phase_flip_at_pi,
    quaternion_point,
    rotate_vector,
    transition_relation,
)
from .identities import CheckResult, equation_suite, run_identity_checks
from .multivector import (
    DEFAULT_TOL,
    Multivector,
    blade_label,
    contract,
    geometric_product,
    grade_norms,
    grade_of,
    grade_part,
    norm,
    render,
    reversion,
    rotor_exp,
    scalar_part,
    unit_vector,
    wedge,
)
from .seven_sphere import (
    Embedding,
    SevenTrivector,
    build_J,
    embed,
    raw_score_7,
    standard_score_7,
)

__all__ = [
    "AbstractElement",
    "CheckResult",
    "CorrelationEstimate",
    "DEFAULT_TOL",
    "DegenerateAxisError",
    "Embedding",
    "ExperimentConfig",
    "FiberProbe",
    "HiddenBasis",
    "Multivector",
    "OrientationMixError",
    "OrientedFrame",
    "Rotor",
    "SevenTrivector",
    "Side",
    "SweepSpec",
    "TrialRecord",
    "abstract_product",
    "blade_label",
    "build_J",
    "build_frame",
    "combined_identity_check",
    "contract",
    "correlation_raw",
    "correlation_standard",
    "duality_check",
    "embed",
    "equation_suite",
    "geometric_product",
    "grade_norms",
    "grade_of",
    "grade_part",
    "hidden_basis",
    "lambda_stream",
    "make_rotor",
    "marginal_average",
    "norm",
    "null_limit_probe",
    "parallel_transport_check",
    "phase_flip_at_pi",
    "quaternion_point",
    "raw_score_7",
    "raw_score_alice",
    "raw_score_bob",
    "render",
    "reversion",
    "rotate_vector",
    "rotor_exp",
    "run_identity_checks",
    "sample_lambda",
    "scalar_part",
    "standard_score",
    "standard_score_7",
    "sweep",
    "transition_relation",
    "unit_vector",
    "wedge",
    "__version__",
]
