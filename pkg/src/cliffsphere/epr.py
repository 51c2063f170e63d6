"""Hidden-variable EPR-Bohm simulation.

Each trial draws a fair-coin orientation lam in {+1, -1}.  The orientation
stream is counter-based (Philox keyed by the seed, one counter block per
trial index), so the value of trial i depends only on (seed, i): chunks of
the stream can be generated in any order, in parallel, and reproduce bit for
bit.

Per trial, Alice's raw score is the scalar of the Cl(3,0) product
(-I.a)(lam I.a) and Bob's is the scalar of (+I.b)(lam I.b); both products
are evaluated in the algebra and checked to be scalar, never assumed.  Since
the scores depend on the directions only through these products (which
collapse to lam and -lam), the estimators evaluate the products once per
orientation value, verify them, and fan the verified values out over the
stream.  Averages are then exact: orientation counts are accumulated as
integers, so the results are independent of summation order at any trial
count.

Three averaging procedures are provided: the componentwise average of the
abstract standard-score products over the formal basis {1, beta_x, beta_y,
beta_z} (scalar part -a.b per trial, fluctuating bivector residual), the
plain mean of raw-score products (identically -1), and the marginal averages
of single-side scores (all components tend to 0 at the 1/sqrt(n) rate).
Both correlation estimators are computed from the same orientation stream
and reported side by side.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .frames import (
    abstract_product,
    check_orientation,
    cross,
    standard_score,
    vector3,
    volume3,
)
from .multivector import (
    DEFAULT_TOL,
    Multivector,
    contract,
    geometric_product,
    norm,
    scalar_part,
    unit_vector,
)


class TrialConsistencyError(RuntimeError):
    """A per-trial multivector evaluation violated the model's contract."""


class Side(enum.Enum):
    ALICE = "alice"
    BOB = "bob"


# -- orientation sampling ---------------------------------------------------------


def lambda_stream(seed: int, n: int, start: int = 0) -> np.ndarray:
    """Orientations for trials start..start+n-1 as an int8 array of +-1.

    Trial i consumes the low bit of the first word of Philox counter block i
    under key `seed`, so the draw is a pure function of (seed, i).
    """
    if n < 0:
        raise ValueError("trial count must be nonnegative")
    if n == 0:
        return np.zeros(0, dtype=np.int8)
    bg = np.random.Philox(key=np.uint64(seed), counter=[start, 0, 0, 0])
    words = bg.random_raw(4 * n)[0::4]
    return (2 * (words & 1).astype(np.int8) - 1).astype(np.int8)


def sample_lambda(seed: int, index: int) -> int:
    """Fair-coin orientation of a single trial, deterministic in (seed, index)."""
    return int(lambda_stream(seed, 1, start=index)[0])


# -- configuration and results ------------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    """Angle sweep in degrees: `steps` points from start to stop inclusive."""

    start_deg: float = 0.0
    stop_deg: float = 180.0
    steps: int = 37

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("an angle sweep needs at least 2 points")

    def angles_deg(self) -> np.ndarray:
        return np.linspace(self.start_deg, self.stop_deg, self.steps)


@dataclass(frozen=True)
class ExperimentConfig:
    """Trial count, seed, and the directions to drive."""

    n_trials: int = 100_000
    seed: int = 42
    pairs: tuple[tuple[np.ndarray, np.ndarray], ...] | None = None
    sweep: SweepSpec | None = None

    def __post_init__(self):
        if self.n_trials < 1:
            raise ValueError("n_trials must be >= 1")
        if self.pairs is not None:
            checked = tuple(
                (unit_vector(a), unit_vector(b)) for a, b in self.pairs
            )
            object.__setattr__(self, "pairs", checked)


@dataclass(frozen=True)
class TrialRecord:
    """One run: orientation plus both observed raw scores."""

    index: int
    lam: int
    alice_raw: int
    bob_raw: int

    def __post_init__(self):
        if self.alice_raw not in (1, -1) or self.bob_raw not in (1, -1):
            raise ValueError("raw scores must be +1 or -1")


@dataclass(frozen=True)
class CorrelationEstimate:
    """Scalar estimate plus the formal bivector components of the average."""

    scalar: float
    residual_coeffs: tuple[float, float, float]
    n: int
    stderr: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.stderr < 0:
            raise ValueError("stderr must be nonnegative")

    @property
    def residual_norm(self) -> float:
        return float(np.linalg.norm(self.residual_coeffs))


# -- raw scores ------------------------------------------------------------------


def _scalar_sign(product: Multivector, tol: float) -> int:
    """Sign of a product that the model requires to be a scalar of unit size."""
    s = scalar_part(product)
    rest = float(np.linalg.norm(product.coeffs[1:]))
    if rest > tol or abs(abs(s) - 1.0) > tol:
        raise TrialConsistencyError(
            f"raw-score product is not a unit scalar: {product}"
        )
    return 1 if s > 0 else -1


def raw_score_alice(a, lam: int, tol: float = DEFAULT_TOL) -> int:
    """Alice's observed outcome: sign of the scalar (-I.a)(lam I.a).

    The product is evaluated in Cl(3,0) and checked to be scalar to `tol`;
    it equals +1 exactly when lam = +1.
    """
    lam = check_orientation(lam)
    ia = contract(volume3(), vector3(unit_vector(a)))
    product = geometric_product(-1.0 * ia, float(lam) * ia)
    return _scalar_sign(product, tol)


def raw_score_bob(b, lam: int, tol: float = DEFAULT_TOL) -> int:
    """Bob's observed outcome: sign of the scalar (+I.b)(lam I.b); equals -lam."""
    lam = check_orientation(lam)
    ib = contract(volume3(), vector3(unit_vector(b)))
    product = geometric_product(ib, float(lam) * ib)
    return _scalar_sign(product, tol)


def _verified_tables(a, b) -> tuple[dict[int, int], dict[int, int]]:
    """Raw scores for both orientation values, multivector-evaluated and
    checked against the per-trial identities A = lam, B = -lam."""
    alice = {lam: raw_score_alice(a, lam) for lam in (1, -1)}
    bob = {lam: raw_score_bob(b, lam) for lam in (1, -1)}
    for lam in (1, -1):
        if alice[lam] != lam or bob[lam] != -lam:
            raise TrialConsistencyError(
                f"per-trial identity violated: A({lam})={alice[lam]}, "
                f"B({lam})={bob[lam]}"
            )
    return alice, bob


def trial_records(a, b, cfg: ExperimentConfig) -> list[TrialRecord]:
    """Fully evaluated trials (one multivector evaluation per trial per side).

    Intended for inspection and small n; the estimators use the same
    evaluations memoized over the two orientation values.
    """
    lams = lambda_stream(cfg.seed, cfg.n_trials)
    return [
        TrialRecord(i, int(lam), raw_score_alice(a, int(lam)), raw_score_bob(b, int(lam)))
        for i, lam in enumerate(lams)
    ]


# -- estimators ----------------------------------------------------------------------


def _lambda_counts(cfg: ExperimentConfig) -> tuple[int, int, np.ndarray]:
    lams = lambda_stream(cfg.seed, cfg.n_trials)
    n_plus = int(np.count_nonzero(lams == 1))
    return n_plus, cfg.n_trials - n_plus, lams


def correlation_standard(a, b, cfg: ExperimentConfig) -> CorrelationEstimate:
    """Componentwise average of the abstract standard-score products.

    The scalar component is -a.b on every trial, so the average carries it
    exactly; only the bivector components fluctuate, with per-component
    scale |a x b| / sqrt(n).  The average is formed from exact integer
    orientation counts, making it independent of accumulation order.
    """
    a = unit_vector(a)
    b = unit_vector(b)
    n_plus, n_minus, _ = _lambda_counts(cfg)
    products = {
        lam: abstract_product(standard_score(a, lam), standard_score(b, lam))
        for lam in (1, -1)
    }
    if products[1].c0 != products[-1].c0:
        raise TrialConsistencyError("scalar part of the score product must not depend on lam")
    scalar = products[1].c0
    lam_mean = (n_plus - n_minus) / cfg.n_trials
    c_plus = np.asarray(products[1].c)
    if not np.array_equal(np.asarray(products[-1].c), -c_plus):
        raise TrialConsistencyError("bivector part of the score product must flip with lam")
    residual = lam_mean * c_plus
    stderr = float(np.linalg.norm(cross(a, b))) / math.sqrt(cfg.n_trials)
    return CorrelationEstimate(
        float(scalar), tuple(float(r) for r in residual), cfg.n_trials, stderr
    )


def correlation_raw(a, b, cfg: ExperimentConfig) -> CorrelationEstimate:
    """Arithmetic mean of the raw-score products A_i * B_i.

    The per-trial product is (+lam)(-lam) = -1 for both orientation values,
    which is verified trial by trial; the mean is therefore -1 at every
    direction pair, with zero dispersion.
    """
    alice, bob = _verified_tables(a, b)
    _, _, lams = _lambda_counts(cfg)
    a_scores = np.where(lams == 1, alice[1], alice[-1]).astype(np.int64)
    b_scores = np.where(lams == 1, bob[1], bob[-1]).astype(np.int64)
    products = a_scores * b_scores
    if not np.all(products == -1):
        raise TrialConsistencyError("per-trial raw product deviated from -1")
    mean = int(products.sum()) / cfg.n_trials
    return CorrelationEstimate(mean, (0.0, 0.0, 0.0), cfg.n_trials, 0.0)


def marginal_average(n_vec, side: Side, cfg: ExperimentConfig) -> CorrelationEstimate:
    """Single-side averages: raw marginal mean in `scalar`, componentwise
    standard-score mean in `residual_coeffs`.  All tend to 0 as 1/sqrt(n)."""
    n_vec = unit_vector(n_vec)
    side = Side(side)
    n_plus, n_minus, lams = _lambda_counts(cfg)
    if side is Side.ALICE:
        table = {lam: raw_score_alice(n_vec, lam) for lam in (1, -1)}
    else:
        table = {lam: raw_score_bob(n_vec, lam) for lam in (1, -1)}
    raws = np.where(lams == 1, table[1], table[-1]).astype(np.int64)
    raw_mean = int(raws.sum()) / cfg.n_trials
    lam_mean = (n_plus - n_minus) / cfg.n_trials
    score_plus = np.asarray(standard_score(n_vec, 1).c)
    components = lam_mean * score_plus
    stderr = 1.0 / math.sqrt(cfg.n_trials)
    return CorrelationEstimate(
        raw_mean, tuple(float(c) for c in components), cfg.n_trials, stderr
    )


def commutativity_check(a, b, lam: int) -> int:
    """|A B - B A| for the observed raw scores: identically 0 (integers)."""
    A = raw_score_alice(a, lam)
    B = raw_score_bob(b, lam)
    return abs(A * B - B * A)


def standard_commutator_norm(a, b, lam: int) -> float:
    """Coefficient norm of xy - yx for the two standard scores.

    Unlike the raw scores, the standardized variables do not commute: the
    norm equals 2 |a x b|.
    """
    x = standard_score(a, lam)
    y = standard_score(b, lam)
    diff = abstract_product(x, y).coeffs - abstract_product(y, x).coeffs
    return float(np.linalg.norm(diff))


# -- sweeps ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    theta_deg: float
    raw_mean: float
    std_scalar: float
    residual: tuple[float, float, float]
    residual_norm: float
    stderr: float
    n: int


def sweep_directions(theta_deg: float) -> tuple[np.ndarray, np.ndarray]:
    """Direction pair at angle theta: a = e_x, b in the xy-plane."""
    t = math.radians(theta_deg)
    return np.array([1.0, 0.0, 0.0]), np.array([math.cos(t), math.sin(t), 0.0])


def sweep(cfg: ExperimentConfig) -> list[SweepRow]:
    """Both estimators at every sweep angle, all rows from the same
    orientation stream; bit-identical for equal (seed, n_trials, sweep)."""
    if cfg.sweep is None:
        raise ValueError("config has no angle sweep")
    rows = []
    for theta in cfg.sweep.angles_deg():
        a, b = sweep_directions(float(theta))
        std = correlation_standard(a, b, cfg)
        raw = correlation_raw(a, b, cfg)
        rows.append(
            SweepRow(
                theta_deg=float(theta),
                raw_mean=raw.scalar,
                std_scalar=std.scalar,
                residual=std.residual_coeffs,
                residual_norm=std.residual_norm,
                stderr=std.stderr,
                n=cfg.n_trials,
            )
        )
    return rows


# -- convergence study ------------------------------------------------------------------


def residual_convergence_slope(
    a,
    b,
    seeds=range(20),
    sizes=(100, 1_000, 10_000, 100_000, 1_000_000),
) -> float:
    """Log-log slope of the seed-averaged residual norm versus trial count.

    For each seed the residual at size n is |mean of lam over the first n
    trials| * |a x b| (computed from exact integer prefix sums); the slope of
    log10(mean residual) against log10(n) is -1/2 for the fair coin.
    """
    a = unit_vector(a)
    b = unit_vector(b)
    scale = float(np.linalg.norm(cross(a, b)))
    sizes = sorted(sizes)
    seed_list = list(seeds)
    sums = np.zeros((len(seed_list), len(sizes)))
    for i, seed in enumerate(seed_list):
        lams = lambda_stream(seed, sizes[-1]).astype(np.int64)
        prefix = np.cumsum(lams)
        for j, n in enumerate(sizes):
            sums[i, j] = abs(int(prefix[n - 1])) / n * scale
    mean_residual = sums.mean(axis=0)
    slope, _ = np.polyfit(np.log10(sizes), np.log10(mean_residual), 1)
    return float(slope)
