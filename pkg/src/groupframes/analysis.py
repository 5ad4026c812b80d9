"""Coherence, tightness and spectral analysis of the constructed frames.

The group structure makes most quantities computable without ever
forming a Gram matrix: the n inner products attached to the group
elements determine every pairwise inner product.  Gram-based routines
are kept alongside as the model-free reference path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .frames import CyclicFrameSpec, DihedralFrameSpec, FrameMatrix
from .numtheory import difference_vector, find_generator, is_prime, subgroup_of_order

#: Absolute gap below which two inner-product magnitudes are clustered.
CLUSTER_TOL = 1e-7

#: Max-entry residual below which a frame operator counts as tight.
TIGHT_TOL = 1e-9


# ---------------------------------------------------------------------------
# Gram-matrix measurements


def gram(frame: FrameMatrix) -> np.ndarray:
    """Hermitian matrix of pairwise inner products <f_i, f_j>."""
    if not frame.normalized:
        raise ValueError("gram expects a frame with unit-norm columns")
    m = frame.entries
    return m.conj().T @ m


def coherence(frame: FrameMatrix) -> float:
    """Largest |<f_i, f_j>| over distinct columns."""
    if frame.cols < 2:
        raise ValueError("coherence needs at least two columns")
    g = np.abs(gram(frame))
    np.fill_diagonal(g, 0.0)
    return float(g.max())


@dataclass(frozen=True)
class TightnessReport:
    is_tight: bool
    frame_constant: float
    residual: float


def tightness(frame: FrameMatrix) -> TightnessReport:
    """Check M M^* = lambda I; lambda = trace(M M^*) / rows.

    For a unit-norm tight frame the constant is cols / rows.
    """
    m = frame.entries
    op = m @ m.conj().T
    lam = float(np.trace(op).real) / frame.rows
    residual = float(np.abs(op - lam * np.eye(frame.rows)).max())
    return TightnessReport(residual <= TIGHT_TOL, lam, residual)


def frame_potential(frame: FrameMatrix) -> float:
    """Sum of |<f_i, f_j>|^2 over all ordered pairs (tight iff cols^2/rows)."""
    return float((np.abs(gram(frame)) ** 2).sum())


def is_equiangular(frame: FrameMatrix, tol: float = 1e-9) -> bool:
    """True iff all off-diagonal |<f_i, f_j>| agree within tol."""
    if frame.cols < 2:
        raise ValueError("equiangularity needs at least two columns")
    g = np.abs(gram(frame))
    off = g[~np.eye(frame.cols, dtype=bool)]
    return float(off.max() - off.min()) <= tol


# ---------------------------------------------------------------------------
# Group inner-product spectra


def cluster_magnitudes(mags, tol: float = CLUSTER_TOL) -> tuple[tuple[float, int], ...]:
    """Greedy gap clustering of sorted magnitudes.

    A new cluster starts whenever the gap to the previous value exceeds
    ``tol``; each cluster is reported as (mean magnitude, count).
    Deterministic because the input is sorted first.
    """
    values = np.sort(np.asarray(mags, dtype=float))
    if values.size == 0:
        return ()
    clusters = []
    start = 0
    for i in range(1, len(values)):
        if values[i] - values[i - 1] > tol:
            clusters.append((float(values[start:i].mean()), i - start))
            start = i
    clusters.append((float(values[start:].mean()), len(values) - start))
    return tuple(clusters)


@dataclass(frozen=True)
class InnerProductSpectrum:
    """The group inner products c_l and their clustered magnitudes.

    c[l] is the normalized inner product attached to the l-th group
    element (c[0] = 1); alpha[l] = |c[l]|^2; clusters describe the
    distinct magnitudes over l != 0 with their multiplicities.
    """

    c: np.ndarray
    alpha: np.ndarray
    clusters: tuple[tuple[float, int], ...]

    @property
    def coherence(self) -> float:
        return float(np.abs(self.c[1:]).max())

    @property
    def distinct_values(self) -> int:
        return len(self.clusters)


def _exponent_sums(n: int, exponents) -> np.ndarray:
    """sum_k w^(l k) for l = 0..n-1, evaluated exactly as a DFT."""
    indicator = np.zeros(n)
    for e in exponents:
        indicator[e % n] += 1.0
    return np.fft.ifft(indicator) * n


def group_spectrum(spec: CyclicFrameSpec) -> InnerProductSpectrum:
    """Spectrum of the cyclic frame, straight from the exponent sums."""
    c = _exponent_sums(spec.n, spec.exponents) / spec.m
    alpha = np.abs(c) ** 2
    return InnerProductSpectrum(c, alpha, cluster_magnitudes(np.abs(c[1:])))


def prime_group_spectrum(n: int, m: int) -> InnerProductSpectrum:
    """Spectrum of the order-m subgroup construction for prime n."""
    if not is_prime(n):
        raise ValueError(f"n={n} is not prime")
    sub = subgroup_of_order(find_generator(n), m)
    return group_spectrum(CyclicFrameSpec(n, sub.elements))


# ---------------------------------------------------------------------------
# Coherence bounds


def welch_bound(n_cols: int, m_rows: int) -> float:
    """Lower bound sqrt((n-m)/(m(n-1))) on the coherence of n unit vectors."""
    if n_cols <= m_rows or m_rows < 1:
        raise ValueError(f"need cols > rows >= 1, got {n_cols} x {m_rows}")
    return math.sqrt((n_cols - m_rows) / (m_rows * (n_cols - 1)))


def sqrt_r_bound(n_cols: int, m_rows: int, r: int) -> float:
    """Coherence bound sqrt(r) * Welch for a tight frame whose inner
    products take r distinct magnitudes with equal multiplicity."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return math.sqrt(r) * welch_bound(n_cols, m_rows)


def beta_value(m: int, r: int) -> float:
    """The spectral radius sqrt((1/m)(r + 1/m)) shared by the bounds below."""
    return math.sqrt((r + 1 / m) / m)


class R2Branch(Enum):
    """Which of the two r=2 regimes applies (split on n mod 4)."""

    TWO_VALUE = "two-value"  # n = 1 mod 4: two distinct real values
    EQUIANGULAR = "equiangular"  # n = 3 mod 4: Welch-achieving


def r2_exact_coherence(n: int, m: int) -> tuple[float, R2Branch]:
    """Exact coherence of the subgroup construction when r = (n-1)/m = 2.

    For 4 | n-1 the two inner products are (-1 +- sqrt(1+2m))/(2m) and
    the coherence is sqrt((n-m-1/2)/(m(n-1))) + 1/(2m); otherwise the
    frame is equiangular and the coherence equals the Welch bound.
    """
    if m < 1 or n - 1 != 2 * m:
        raise ValueError(f"(n, m)=({n}, {m}) does not have index r=2")
    if (n - 1) % 4 == 0:
        value = math.sqrt((n - m - 0.5) / (m * (n - 1))) + 1 / (2 * m)
        return value, R2Branch.TWO_VALUE
    return welch_bound(n, m), R2Branch.EQUIANGULAR


def r3_coherence_bounds(m: int) -> tuple[float, float]:
    """(upper bound, asymptotic lower bound) for index r=3 frames.

    The lower bound 1/sqrt(m) holds only asymptotically in m and should
    not be asserted for small m.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    upper = (2 * beta_value(m, 3) + 1 / m) / 3
    return upper, 1 / math.sqrt(m)


def coherence_upper_bound(m: int, r: int) -> float:
    """Closed-form coherence bound (1/r)((r-1) beta + 1/m) for any index r."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    return ((r - 1) * beta_value(m, r) + 1 / m) / r


def odd_m_coherence_upper_bound(m: int, r: int) -> float:
    """Sharper coherence bound available exactly when m is odd.

    Odd m forces r even (for odd prime n), so the formula only accepts
    even r.  Always at most coherence_upper_bound(m, r).
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    if r < 2 or r % 2:
        raise ValueError(f"r must be even when m is odd, got r={r}")
    b = beta_value(m, r)
    return math.sqrt((1 / m + (r / 2 - 1) * b) ** 2 + (r / 2) ** 2 * b * b) / r


@dataclass(frozen=True)
class BoundSet:
    """Every closed-form bound that applies to a prime-order (n, m) pair."""

    n: int
    m: int
    r: int
    welch: float
    sqrt_r: float
    beta: float
    general_upper: float
    exact_r2: float | None = None
    r2_branch: R2Branch | None = None
    r3_upper: float | None = None
    r3_asymptotic_lower: float | None = None
    odd_m_upper: float | None = None

    @property
    def best_upper(self) -> float:
        """Tightest applicable closed-form value (exact when r=2)."""
        if self.exact_r2 is not None:
            return self.exact_r2
        if self.odd_m_upper is not None:
            return self.odd_m_upper
        return self.general_upper


def bound_set(n: int, m: int) -> BoundSet:
    """Assemble all applicable bounds for the subgroup construction."""
    if not is_prime(n) or m < 1 or (n - 1) % m:
        raise ValueError(f"need prime n and m | n-1, got (n, m)=({n}, {m})")
    r = (n - 1) // m
    exact = branch = r3u = r3l = oddu = None
    if r == 2:
        exact, branch = r2_exact_coherence(n, m)
    if r == 3:
        r3u, r3l = r3_coherence_bounds(m)
    if m % 2 and r % 2 == 0:
        oddu = odd_m_coherence_upper_bound(m, r)
    return BoundSet(
        n=n,
        m=m,
        r=r,
        welch=welch_bound(n, m),
        sqrt_r=sqrt_r_bound(n, m, r),
        beta=beta_value(m, r),
        general_upper=coherence_upper_bound(m, r),
        exact_r2=exact,
        r2_branch=branch,
        r3_upper=r3u,
        r3_asymptotic_lower=r3l,
        odd_m_upper=oddu,
    )


# ---------------------------------------------------------------------------
# Difference counts <-> squared magnitudes (a DFT pair)


def fourier_pairing(spec: CyclicFrameSpec) -> tuple[np.ndarray, np.ndarray]:
    """Round-trip between difference counts a_t and squared magnitudes.

    Returns (alpha_from_a, a_from_alpha): the squared inner-product
    magnitudes computed from the integer difference counts via
    alpha_l = (1/m^2) sum_t a_t w^(l t), and the counts recovered from
    the directly computed alpha via a_t = (m^2/n) sum_l alpha_l w^(-t l).
    The recovered counts are integers up to rounding error.
    """
    n, m = spec.n, spec.m
    a = np.asarray(difference_vector(n, spec.exponents), dtype=float)
    alpha_from_a = (np.fft.ifft(a) * n).real / m**2
    alpha = np.abs(_exponent_sums(n, spec.exponents) / m) ** 2
    a_from_alpha = np.fft.fft(alpha).real * m**2 / n
    return alpha_from_a, a_from_alpha


# ---------------------------------------------------------------------------
# The DFT of the coset inner products


@dataclass(frozen=True)
class WSpectrum:
    """DFT of the r coset inner products [c_1, c_x, ..., c_(x^(r-1))].

    The first component equals -1/m and every other component has
    magnitude beta = sqrt((1/m)(r + 1/m)); these two facts drive all the
    closed-form coherence bounds.
    """

    n: int
    m: int
    w: np.ndarray

    @property
    def r(self) -> int:
        return len(self.w)


def coset_inner_products(n: int, m: int) -> np.ndarray:
    """[c_1, c_x, ..., c_(x^(r-1))]: one inner product per coset."""
    ctx = find_generator(n)
    sub = subgroup_of_order(ctx, m)
    c = _exponent_sums(n, sub.elements) / m
    reps = [pow(ctx.x, d, n) for d in range(sub.index)]
    return c[reps]


def w_spectrum(n: int, m: int) -> WSpectrum:
    """DFT (with kernel gamma^(+td), gamma = exp(2 pi i / r)) of the coset
    inner products."""
    cc = coset_inner_products(n, m)
    r = len(cc)
    return WSpectrum(n, m, np.fft.ifft(cc) * r)


def r3_product_identity_residual(n: int) -> float:
    """Residual of the 3x3 outer-product identity for index-3 subgroups.

    With c = [c_1, c_x, c_x2] and integer difference counts a, the
    matrix c c^* equals (1/m)[I - diag(c) + P (I + A) C] where C and A
    are circulants of c and a and P swaps the last two coordinates.
    C pairs offset i-j while A pairs offset j-i; the counts enter
    transposed relative to the inner products.
    """
    if not is_prime(n) or (n - 1) % 3:
        raise ValueError(f"n={n} does not give index r=3")
    m = (n - 1) // 3
    ctx = find_generator(n)
    sub = subgroup_of_order(ctx, m)
    cc = coset_inner_products(n, m)
    counts = difference_vector(n, sub.elements)
    a = np.asarray([counts[pow(ctx.x, d, n)] for d in range(3)], dtype=float)
    idx = np.arange(3)
    c_mat = cc[(idx[:, None] - idx[None, :]) % 3]
    a_mat = a[(idx[None, :] - idx[:, None]) % 3]
    p = np.eye(3)[[0, 2, 1]]
    lhs = np.outer(cc, cc.conj())
    rhs = (np.eye(3) - np.diag(cc) + p @ (np.eye(3) + a_mat) @ c_mat) / m
    return float(np.abs(lhs - rhs).max())


# ---------------------------------------------------------------------------
# Dihedral-frame analysis


def dihedral_spectrum(spec: DihedralFrameSpec) -> np.ndarray:
    """Normalized inner products v^* s^a t^b v as an (n, D) array.

    Every pairwise inner product of the dihedral frame equals one of
    these n*D group values, so coherence and distinct-value counts can
    be read off without forming the Dm x Dn matrix.
    """
    from .frames import zadoff_chu

    n, big_d, rt = spec.n, spec.order, spec.twist % spec.n
    w = zadoff_chu(big_d).values
    m = spec.m
    sums = np.empty((big_d, n), dtype=complex)
    t = 1
    for d in range(big_d):
        sums[d] = _exponent_sums(n, [k * t % n for k in spec.exponents])
        t = t * rt % n
    idx = (np.arange(big_d)[:, None] + np.arange(big_d)[None, :]) % big_d
    pair = w.conj()[:, None] * w[idx]  # pair[d, b] = w_d^* w_(d+b)
    return np.einsum("db,da->ab", pair, sums) / (m * big_d)


def dihedral_distinct_count_bound(big_d: int, n: int, m: int) -> int:
    """Cap D (n-1)/m on the number of distinct inner-product values."""
    if m < 1 or (n - 1) % m:
        raise ValueError(f"m={m} must divide n-1={n - 1}")
    return big_d * (n - 1) // m


@dataclass(frozen=True)
class DominanceReport:
    cyclic_coherence: float
    dihedral_coherence: float
    dominated: bool


def dihedral_dominance(
    cyclic: FrameMatrix, dihedral: FrameMatrix, slack: float = 1e-9
) -> DominanceReport:
    """Verify the dihedral frame's coherence never exceeds the cyclic one.

    Both frames must have been built from the same modulus and exponent
    set; the comparison is made on measured Gram coherences.
    """
    for key in ("n", "exponents"):
        if cyclic.provenance.get(key) != dihedral.provenance.get(key):
            raise ValueError(f"frames disagree on {key}: "
                             f"{cyclic.provenance.get(key)} vs {dihedral.provenance.get(key)}")
    mu_cyc = coherence(cyclic)
    mu_dih = coherence(dihedral)
    return DominanceReport(mu_cyc, mu_dih, mu_dih <= mu_cyc + slack)
