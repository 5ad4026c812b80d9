"""Frame constructions: cyclic, general abelian, and generalized dihedral.

Each builder returns a dense complex matrix whose unit-norm columns are
the frame vectors, produced by sweeping a unitary group representation
over a seed vector.  Entries are evaluated with one complex exponential
per entry from an exactly reduced integer exponent, which keeps the
per-entry error at a few ulps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .numtheory import find_generator, is_prime, subgroup_of_order

#: Column norms of a normalized frame must match 1 this tightly.
NORM_TOL = 1e-12


@dataclass
class FrameMatrix:
    """A frame stored as the dense matrix whose columns are the vectors.

    Parameters
    ----------
    entries : np.ndarray
        Complex matrix of shape (rows, cols); column j is the j-th frame
        vector.
    normalized : bool
        Whether every column has unit Euclidean norm.
    provenance : dict
        Construction descriptor (family, parameters, generator, seed...)
        carried through to the on-disk format.
    """

    entries: np.ndarray
    normalized: bool = True
    provenance: dict[str, str] = field(default_factory=dict)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.complex128)
        if self.entries.ndim != 2:
            raise ValueError("frame entries must form a 2-d matrix")
        if not np.isfinite(self.entries).all():
            raise ValueError("frame entries must be finite")
        if self.normalized:
            norms = np.linalg.norm(self.entries, axis=0)
            if np.abs(norms - 1.0).max() > NORM_TOL:
                raise ValueError("columns of a normalized frame must have unit norm")


def _as_distinct_exponents(exponents, n: int) -> tuple[int, ...]:
    exps = tuple(int(e) for e in exponents)
    if len(exps) == 0:
        raise ValueError("need at least one exponent")
    if len({e % n for e in exps}) != len(exps):
        raise ValueError(f"exponents must be distinct modulo {n}")
    if all(e % n == 0 for e in exps):
        raise ValueError("exponent set {0} is rejected: all columns would coincide")
    return exps


@dataclass
class CyclicFrameSpec:
    """Exponent set K for the diagonal generator diag(w^k_1, ..., w^k_m)."""

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")
        self.exponents = _as_distinct_exponents(self.exponents, self.n)

    @property
    def m(self) -> int:
        return len(self.exponents)


def build_cyclic_frame(spec: CyclicFrameSpec) -> FrameMatrix:
    """Frame [v, Uv, ..., U^(n-1) v] for U = diag(w^k_i), v = 1/sqrt(m).

    Entry (i, l) is w^(k_i * l) / sqrt(m) with w = exp(2 pi i / n), so the
    rows are rows k_i of the n x n DFT matrix and the frame is harmonic.
    """
    n, m = spec.n, spec.m
    k = np.asarray(spec.exponents, dtype=np.int64) % n
    reduced = k[:, None] * np.arange(n, dtype=np.int64)[None, :] % n
    entries = np.exp((2j * np.pi / n) * reduced) / math.sqrt(m)
    prov = {
        "family": "cyclic",
        "n": str(n),
        "m": str(m),
        "exponents": ",".join(str(e) for e in spec.exponents),
    }
    return FrameMatrix(entries, normalized=True, provenance=prov)


def build_prime_group_frame(n: int, m: int) -> FrameMatrix:
    """Cyclic frame seeded by the unique order-m subgroup of (Z/nZ)^x.

    This is the prime-order construction: n prime, m | n-1, exponents
    the m-element multiplicative subgroup.  The result is a unit-norm
    tight frame with at most (n-1)/m distinct inner product values.
    """
    if not is_prime(n):
        raise ValueError(f"n={n} is not prime")
    ctx = find_generator(n)
    sub = subgroup_of_order(ctx, m)
    frame = build_cyclic_frame(CyclicFrameSpec(n, sub.elements))
    frame.provenance.update(
        family="prime-cyclic", generator=str(ctx.x), subgroup="true"
    )
    return frame


@dataclass
class AbelianFrameSpec:
    """Direct-product data: factor orders n_j and per-factor exponents.

    ``exponent_lists[j]`` holds the m diagonal exponents of the j-th
    generator; they must be distinct modulo the factor order n_j.
    """

    factor_orders: tuple[int, ...]
    exponent_lists: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.factor_orders = tuple(int(v) for v in self.factor_orders)
        if len(self.factor_orders) == 0:
            raise ValueError("need at least one cyclic factor")
        if any(v < 2 for v in self.factor_orders):
            raise ValueError("factor orders must be at least 2")
        if len(self.exponent_lists) != len(self.factor_orders):
            raise ValueError("one exponent list per factor is required")
        lists = []
        for nj, exps in zip(self.factor_orders, self.exponent_lists):
            lists.append(_as_distinct_exponents(exps, nj))
        self.exponent_lists = tuple(lists)
        if len({len(l) for l in self.exponent_lists}) != 1:
            raise ValueError("all factors must supply the same number of exponents")

    @property
    def m(self) -> int:
        return len(self.exponent_lists[0])

    @property
    def cols(self) -> int:
        return math.prod(self.factor_orders)


def build_abelian_frame(spec: AbelianFrameSpec) -> FrameMatrix:
    """Frame over a direct product of cyclic groups.

    Columns are U_1^a_1 ... U_L^a_L v for all tuples (a_1, ..., a_L) in
    lexicographic order, where U_j = diag(w_j^k_ij) with w_j the n_j-th
    root of unity and v = 1/sqrt(m).  Equivalently a row subset of the
    Kronecker product of the factor DFT matrices, scaled to unit columns.
    """
    m, cols = spec.m, spec.cols
    phase = np.zeros((m, cols))
    stride = cols
    for nj, exps in zip(spec.factor_orders, spec.exponent_lists):
        # a_j sweeps 0..n_j-1 lexicographically with a_1 slowest: each
        # value is held for the product of the later factor orders.
        stride //= nj
        a = (np.arange(cols, dtype=np.int64) // stride) % nj
        k = np.asarray(exps, dtype=np.int64) % nj
        phase += (k[:, None] * a[None, :] % nj) / nj
    entries = np.exp(2j * np.pi * phase) / math.sqrt(m)
    prov = {
        "family": "abelian",
        "orders": ",".join(str(v) for v in spec.factor_orders),
        "m": str(m),
        "exponents": ";".join(
            ",".join(str(e) for e in exps) for exps in spec.exponent_lists
        ),
    }
    return FrameMatrix(entries, normalized=True, provenance=prov)


@dataclass
class ZCSequence:
    """A unit-modulus sequence with exactly zero periodic autocorrelation."""

    values: np.ndarray

    @property
    def length(self) -> int:
        return len(self.values)

    def autocorrelations(self) -> np.ndarray:
        """Periodic autocorrelation at every nonzero shift."""
        w = self.values
        return np.asarray(
            [np.sum(w.conj() * np.roll(w, -b)) for b in range(1, len(w))]
        )


def zadoff_chu(length: int) -> ZCSequence:
    """Zadoff-Chu sequence of the given length.

    w_d = exp(i pi d^2 / D) for even D and exp(i pi d (d+1) / D) for odd
    D, d = 0..D-1.  Constant amplitude, zero autocorrelation.
    """
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    d = np.arange(length, dtype=np.int64)
    if length % 2 == 0:
        num = d * d
    else:
        num = d * (d + 1)
    return ZCSequence(np.exp(1j * np.pi * (num % (2 * length)) / length))


@dataclass
class DihedralFrameSpec:
    """Parameters of the generalized dihedral construction.

    ``twist`` is the conjugation exponent (coprime to n); its
    multiplicative order D modulo n sets the block size.  ``order`` may
    be passed for validation, otherwise it is derived.
    """

    n: int
    twist: int
    exponents: tuple[int, ...]
    order: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")
        if gcd(self.twist, self.n) != 1:
            raise ValueError(f"twist {self.twist} is not coprime to n={self.n}")
        self.exponents = _as_distinct_exponents(self.exponents, self.n)
        d, v = 1, self.twist % self.n
        while v != 1:
            v = v * self.twist % self.n
            d += 1
        if self.order is None:
            self.order = d
        elif self.order != d:
            raise ValueError(
                f"order {self.order} does not match the order {d} of "
                f"{self.twist} modulo {self.n}"
            )

    @property
    def m(self) -> int:
        return len(self.exponents)


def build_dihedral_frame(spec: DihedralFrameSpec) -> FrameMatrix:
    """Frame for the group <s, t | s^n = t^D = 1, t s t^-1 = s^twist>.

    s acts as block-diagonal powers of S = diag(w^(twist^d)) and t as the
    block-diagonal cyclic shift T; the seed vector repeats a Zadoff-Chu
    sequence m times.  Columns are s^a t^b v with a outer (0..n-1) and b
    inner (0..D-1), giving a Dm x Dn matrix with unit-norm columns.
    """
    n, m, rt, big_d = spec.n, spec.m, spec.twist % spec.n, spec.order
    w = zadoff_chu(big_d).values
    # k_row[j, d] = k_j * twist^d mod n: the diagonal of S^(k_j).
    tpow = np.empty(big_d, dtype=np.int64)
    tpow[0] = 1
    for d in range(1, big_d):
        tpow[d] = tpow[d - 1] * rt % n
    k = np.asarray(spec.exponents, dtype=np.int64) % n
    k_row = k[:, None] * tpow[None, :] % n
    # base[j, d, a] = w^(a * k_j * twist^d), the sigma part of each entry.
    reduced = k_row[:, :, None] * np.arange(n, dtype=np.int64)[None, None, :] % n
    base = np.exp((2j * np.pi / n) * reduced)
    # shifted[d, b] = w_(d+b): the tau part, a cyclic shift of the seed.
    idx = (np.arange(big_d)[:, None] + np.arange(big_d)[None, :]) % big_d
    shifted = w[idx]
    entries = np.einsum("jda,db->jdab", base, shifted).reshape(big_d * m, big_d * n)
    entries /= math.sqrt(big_d * m)
    prov = {
        "family": "dihedral",
        "n": str(n),
        "m": str(m),
        "twist": str(rt),
        "D": str(big_d),
        "exponents": ",".join(str(e) for e in spec.exponents),
    }
    return FrameMatrix(entries, normalized=True, provenance=prov)


def dihedral_subgroup_spec(n: int, twist: int, m: int) -> DihedralFrameSpec:
    """Dihedral spec whose exponents are the order-m subgroup of (Z/nZ)^x."""
    if not is_prime(n):
        raise ValueError(f"n={n} is not prime")
    sub = subgroup_of_order(find_generator(n), m)
    return DihedralFrameSpec(n, twist, sub.elements)
