"""Seeded random reference frames for coherence comparisons.

Two ensembles: i.i.d. complex Gaussian matrices with normalized columns,
and partial Fourier matrices with uniformly chosen rows.  Both are
reproducible: the generator is numpy's PCG64 seeded with the spec's
64-bit seed, draws are single-streamed, and the algorithm is recorded in
the frame provenance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frames import CyclicFrameSpec, FrameMatrix, build_cyclic_frame

_PRNG_TAG = f"numpy-pcg64-{np.__version__}"


@dataclass(frozen=True)
class BaselineSpec:
    kind: str  # "gaussian" or "random_fourier"
    n_cols: int
    m_rows: int
    seed: int

    def __post_init__(self):
        if self.kind not in ("gaussian", "random_fourier"):
            raise ValueError(f"unknown baseline kind {self.kind!r}")
        if not self.n_cols > self.m_rows >= 1:
            raise ValueError(
                f"need cols > rows >= 1, got {self.n_cols} x {self.m_rows}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


def gaussian_frame(spec: BaselineSpec) -> FrameMatrix:
    """Columns of an i.i.d. standard complex Gaussian matrix, normalized.

    Entries are (g1 + i g2)/sqrt(2) with g1 drawn first as a full block,
    then g2, so the draw order is part of the contract.
    """
    if spec.kind != "gaussian":
        raise ValueError(f"spec kind is {spec.kind!r}, expected 'gaussian'")
    rng = np.random.default_rng(spec.seed)
    shape = (spec.m_rows, spec.n_cols)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2)
    z /= np.linalg.norm(z, axis=0, keepdims=True)
    prov = {
        "family": "gaussian",
        "n": str(spec.n_cols),
        "m": str(spec.m_rows),
        "seed": str(spec.seed),
        "prng": _PRNG_TAG,
    }
    return FrameMatrix(z, normalized=True, provenance=prov)


def sample_fourier_exponents(spec: BaselineSpec) -> tuple[int, ...]:
    """The m row indices drawn (without replacement, sorted) for a seed."""
    if spec.kind != "random_fourier":
        raise ValueError(f"spec kind is {spec.kind!r}, expected 'random_fourier'")
    rng = np.random.default_rng(spec.seed)
    drawn = np.sort(rng.choice(spec.n_cols, size=spec.m_rows, replace=False))
    return tuple(int(e) for e in drawn)


def random_fourier_frame(spec: BaselineSpec) -> FrameMatrix:
    """Cyclic frame on m exponents sampled without replacement from 0..n-1.

    Equivalent to keeping m uniformly chosen rows of the n x n DFT
    matrix (the all-ones row 0 is eligible).  Tight for any row choice.
    """
    frame = build_cyclic_frame(
        CyclicFrameSpec(spec.n_cols, sample_fourier_exponents(spec))
    )
    frame.provenance.update(family="random-fourier", seed=str(spec.seed), prng=_PRNG_TAG)
    return frame
