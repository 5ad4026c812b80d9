"""Exact arithmetic in the multiplicative group modulo a prime.

Everything in this module is integer arithmetic: primality, primitive
roots, the unique subgroup of each order, coset decompositions,
difference counts and translation degrees.  These are the combinatorial
ingredients behind the frame constructions and their coherence analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd

import numpy as np

# Witnesses making Miller-Rabin exact for all n < 3.3e24 (covers 2**63).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n up to at least 2**63."""
    if n < 2:
        raise ValueError(f"primality is only defined for n >= 2, got {n}")
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        v = pow(a, d, n)
        if v in (1, n - 1):
            continue
        for _ in range(s - 1):
            v = v * v % n
            if v == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine at desk scale)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)^x for prime n."""
    a %= n
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    order = n - 1
    for p in factorize(n - 1):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


@dataclass(frozen=True)
class GroupContext:
    """A prime modulus n together with a generator x of (Z/nZ)^x."""

    n: int
    x: int

    def __post_init__(self):
        if self.n < 3 or not is_prime(self.n):
            raise ValueError(f"modulus must be an odd prime, got {self.n}")
        if not 2 <= self.x <= self.n - 1:
            raise ValueError(f"generator {self.x} out of range for n={self.n}")
        if multiplicative_order(self.x, self.n) != self.n - 1:
            raise ValueError(f"{self.x} does not generate (Z/{self.n}Z)^x")


@lru_cache(maxsize=None)
def find_generator(n: int) -> GroupContext:
    """Smallest primitive root modulo the prime n (deterministic choice)."""
    if not is_prime(n) or n < 3:
        raise ValueError(f"n must be an odd prime, got {n}")
    prime_factors = list(factorize(n - 1))
    for x in range(2, n):
        if all(pow(x, (n - 1) // p, n) != 1 for p in prime_factors):
            return GroupContext(n, x)
    raise AssertionError("every prime has a primitive root")


@dataclass(frozen=True)
class Subgroup:
    """The unique order-m subgroup K of (Z/nZ)^x, elements sorted."""

    context: GroupContext
    elements: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        """Number of cosets r = (n-1)/m."""
        return (self.n - 1) // self.order

    def __post_init__(self):
        n = self.n
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be sorted and distinct")
        if 1 not in self.elements:
            raise ValueError("subgroup must contain 1")
        if (n - 1) % len(self.elements):
            raise ValueError(f"|K|={len(self.elements)} does not divide n-1={n - 1}")
        k = np.asarray(self.elements, dtype=np.int64)
        products = k[:, None] * k[None, :] % n
        if not np.isin(products, k).all():
            raise ValueError("element set is not closed under multiplication")


@lru_cache(maxsize=None)
def subgroup_of_order(ctx: GroupContext, m: int) -> Subgroup:
    """The order-m subgroup, i.e. the nonzero r-th powers with r = (n-1)/m."""
    n = ctx.n
    if m < 1 or (n - 1) % m:
        raise ValueError(f"m={m} must divide n-1={n - 1}")
    r = (n - 1) // m
    k = pow(ctx.x, r, n)
    elems, v = [], 1
    for _ in range(m):
        elems.append(v)
        v = v * k % n
    return Subgroup(ctx, tuple(sorted(elems)))


@dataclass(frozen=True)
class CosetTable:
    """Cosets of K in the fixed order K, xK, x^2 K, ..., x^(r-1) K."""

    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    coset_of: dict[int, int]

    @property
    def r(self) -> int:
        return len(self.cosets)


def coset_table(sub: Subgroup) -> CosetTable:
    """Decompose (Z/nZ)^x into the r cosets of K, indexed by powers of x."""
    n, x, r = sub.n, sub.context.x, sub.index
    cosets = []
    coset_of: dict[int, int] = {}
    rep = 1
    for d in range(r):
        coset = tuple(sorted(rep * k % n for k in sub.elements))
        cosets.append(coset)
        for t in coset:
            coset_of[t] = d
        rep = rep * x % n
    if len(coset_of) != n - 1:
        raise AssertionError("cosets must partition the nonzero residues")
    return CosetTable(sub, tuple(cosets), coset_of)


def difference_vector(n: int, elements) -> list[int]:
    """a[t] = number of ordered pairs of elements whose difference is t mod n.

    Brute force over all pairs; works for any set of distinct residues,
    not just subgroups.
    """
    k = np.asarray(sorted(set(e % n for e in elements)), dtype=np.int64)
    if len(k) != len(list(elements)):
        raise ValueError("elements must be distinct modulo n")
    diffs = (k[:, None] - k[None, :]) % n
    return np.bincount(diffs.ravel(), minlength=n).tolist()


@dataclass(frozen=True)
class DifferenceCounts:
    """Counts a[t] of ordered pairs in K x K differing by t, for t in Z/nZ."""

    subgroup: Subgroup
    a: tuple[int, ...]


def difference_counts(sub: Subgroup) -> DifferenceCounts:
    return DifferenceCounts(sub, tuple(difference_vector(sub.n, sub.elements)))


def is_difference_set(sub: Subgroup) -> bool:
    """True iff every nonzero residue occurs equally often as a difference."""
    a = difference_counts(sub).a
    return len(set(a[1:])) == 1


class _ZeroCoset(Enum):
    ZERO = "zero"


#: Sentinel standing for the singleton {0} in translation-degree queries.
#: Distinct from the integer 0, which indexes the coset K itself.
ZERO_COSET = _ZeroCoset.ZERO


def translation_degree(table: CosetTable, source, target) -> int:
    """Size of (1 + source coset) intersected with the target coset.

    ``source`` and ``target`` are coset indices in 0..r-1, or ZERO_COSET
    for the singleton {0}.  Both being ZERO_COSET is rejected.
    """
    n = table.subgroup.n
    if source is ZERO_COSET and target is ZERO_COSET:
        raise ValueError("at most one of source/target may be the zero sentinel")
    if source is ZERO_COSET:
        # 1 + {0} = {1}, and 1 lies in K, the coset with index 0.
        _check_index(table, target)
        return 1 if target == 0 else 0
    _check_index(table, source)
    shifted = {(1 + t) % n for t in table.cosets[source]}
    if target is ZERO_COSET:
        return 1 if 0 in shifted else 0
    _check_index(table, target)
    return len(shifted & set(table.cosets[target]))


def _check_index(table: CosetTable, d) -> None:
    if not isinstance(d, int) or not 0 <= d < table.r:
        raise ValueError(f"coset index {d!r} out of range 0..{table.r - 1}")


def _translation_matrix(table: CosetTable) -> tuple[list[list[int]], list[int]]:
    """All coset-to-coset translation degrees plus the coset-to-zero column."""
    n, r = table.subgroup.n, table.r
    deg = [[0] * r for _ in range(r)]
    to_zero = [0] * r
    for d1, coset in enumerate(table.cosets):
        for t in coset:
            s = (1 + t) % n
            if s == 0:
                to_zero[d1] += 1
            else:
                deg[d1][table.coset_of[s]] += 1
    return deg, to_zero


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


def verify_translation_identities(sub: Subgroup) -> list[CheckResult]:
    """Evaluate the combinatorial identities that apply to this (n, m, r).

    Returns one named pass/fail record per identity; failures carry a
    witness string instead of raising.
    """
    n, m, r = sub.n, sub.order, sub.index
    table = coset_table(sub)
    deg, to_zero = _translation_matrix(table)
    counts = difference_counts(sub).a
    a_coset = [counts[table.cosets[d][0]] for d in range(r)]
    minus_one_in_k = (n - 1) in sub.elements
    checks: list[CheckResult] = []

    def record(name: str, passed: bool, witness: str = ""):
        checks.append(CheckResult(name, passed, witness))

    # -1 lies in K exactly when m is even; otherwise r is even and -1
    # falls in the middle coset x^(r/2) K.
    if m % 2 == 0:
        record("minus_one_location", minus_one_in_k, f"m={m} even but -1 not in K")
    else:
        ok = (not minus_one_in_k) and r % 2 == 0 and table.coset_of[n - 1] == r // 2
        record("minus_one_location", ok, f"-1 in coset {table.coset_of[n - 1]}, r={r}")

    # a_t equals the translation degree from tK into K, for every coset.
    bad = [d for d in range(r) if a_coset[d] != deg[d][0]]
    record("difference_count_to_k", not bad, f"cosets {bad}" if bad else "")

    if minus_one_in_k:
        # ...and symmetrically from K into tK when -1 is in K.
        bad = [d for d in range(r) if a_coset[d] != deg[0][d]]
        record("difference_count_from_k", not bad, f"cosets {bad}" if bad else "")

        bad = [(i, j) for i in range(r) for j in range(r) if deg[i][j] != deg[j][i]]
        record("translation_symmetry", not bad, f"pairs {bad[:3]}" if bad else "")

    bad = [
        (i, j)
        for i in range(r)
        for j in range(r)
        if deg[i][j] != deg[(r - i) % r][(r - i + j) % r]
    ]
    record("translation_shift", not bad, f"pairs {bad[:3]}" if bad else "")

    bad = [d for d in range(r) if to_zero[d] + sum(deg[d]) != m]
    record("translation_row_sum", not bad, f"cosets {bad}" if bad else "")

    if r == 2:
        if (n - 1) % 4 == 0:
            ok = counts[1] * 2 == m - 2 and counts[sub.context.x] * 2 == m
        else:
            ok = counts[1] == counts[sub.context.x] and counts[1] * 2 == m - 1
        record("r2_difference_counts", ok, f"a_1={counts[1]} a_x={counts[sub.context.x]}")

    if r == 3:
        gap = deg[1][2] - deg[0][0]
        record("r3_unit_gap", gap == 1, f"a_xK,x2K - a_K,K = {gap}")

    return checks
