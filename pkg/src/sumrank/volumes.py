"""Exact sum-rank sphere and ball volumes, plus the log_q-domain bounds on them.

A word of length n = ell*eta over F_{q^m} is split into ell blocks of length
eta; its weight is the sum of the F_q-ranks of the m-by-eta expansion of each
block.  Sphere volumes count words of a given weight and are computed exactly
(big integers) by a block-convolution dynamic program over the per-block
rank-t matrix counts; a direct sum over bounded weight decompositions serves
as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    binomial,
    log_gamma_q,
    logq_int,
    nm_count,
    partitions_iter,
)
from .fields import prime_power

try:  # GMP-backed integers cut the big-table build time severalfold
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

__all__ = [
    "CodeParams",
    "VolumeTable",
    "volume_table",
    "sphere_volume",
    "sphere_volume_direct",
    "ball_volume",
    "sphere_lower_bound_logq",
    "sphere_upper_bound_logq",
]


@dataclass(frozen=True)
class CodeParams:
    """Ambient-space parameters: blocks of length eta over F_{q^m}, ell blocks.

    n = ell*eta is the code length and mu = min(m, eta) the largest possible
    rank of a single block.
    """

    q: int
    m: int
    eta: int
    ell: int

    def __post_init__(self):
        prime_power(self.q)  # raises for non-prime-powers
        if self.m < 1 or self.eta < 1 or self.ell < 1:
            raise ValueError(f"m, eta, ell must be >= 1, got {self}")

    @property
    def n(self) -> int:
        return self.ell * self.eta

    @property
    def mu(self) -> int:
        return min(self.m, self.eta)

    @property
    def space_size(self) -> int:
        """Number of words in the ambient space, q^(m n)."""
        return self.q ** (self.m * self.n)


class VolumeTable:
    """Sphere and ball volumes for all radii 0..radius_max, built in one pass.

    sphere[t] is the number of words of weight exactly t, ball[t] the number
    of weight at most t; both exact integers.
    """

    def __init__(self, params: CodeParams, radius_max: int | None = None):
        top = params.ell * params.mu
        if radius_max is None:
            radius_max = top
        if not 0 <= radius_max <= top:
            raise ValueError(f"radius_max={radius_max} outside [0, {top}]")
        self.params = params
        self.radius_max = radius_max
        block = [_mpz(nm_count(params.eta, params.m, s, params.q)) for s in range(params.mu + 1)]
        vol = [_mpz(1)] + [_mpz(0)] * radius_max
        reach = 0
        for _ in range(params.ell):
            reach = min(reach + params.mu, radius_max)
            nxt = [_mpz(0)] * (radius_max + 1)
            for t in range(reach + 1):
                acc = _mpz(0)
                for s in range(min(params.mu, t) + 1):
                    prev = vol[t - s]
                    if prev:
                        acc += prev * block[s]
                nxt[t] = acc
            vol = nxt
        self._sphere = vol
        self._ball = []
        acc = _mpz(0)
        for v in vol:
            acc += v
            self._ball.append(acc)

    def sphere(self, t: int) -> int:
        if not 0 <= t <= self.radius_max:
            raise ValueError(f"radius t={t} outside [0, {self.radius_max}]")
        return int(self._sphere[t])

    def ball(self, t: int) -> int:
        if not 0 <= t <= self.radius_max:
            raise ValueError(f"radius t={t} outside [0, {self.radius_max}]")
        return int(self._ball[t])


@lru_cache(maxsize=32)
def volume_table(params: CodeParams) -> VolumeTable:
    """Shared full-range VolumeTable for the given parameters."""
    return VolumeTable(params)


def sphere_volume(params: CodeParams, t: int) -> int:
    """Exact number of words of sum-rank weight t (dynamic program)."""
    return volume_table(params).sphere(t)


def ball_volume(params: CodeParams, t: int) -> int:
    """Exact number of words of sum-rank weight at most t."""
    return volume_table(params).ball(t)


def sphere_volume_direct(params: CodeParams, t: int) -> int:
    """Sphere volume as the explicit sum over weight decompositions.

    sum over (t_1..t_ell), 0 <= t_i <= mu, sum t_i = t, of
    prod_i nm_count(eta, m, t_i); independent oracle for sphere_volume.
    """
    if not 0 <= t <= params.ell * params.mu:
        raise ValueError(f"radius t={t} outside [0, {params.ell * params.mu}]")
    block = [nm_count(params.eta, params.m, s, params.q) for s in range(params.mu + 1)]
    total = 0
    for parts in partitions_iter(t, params.ell, params.mu):
        prod = 1
        for s in parts:
            prod *= block[s]
        total += prod
    return total


def sphere_lower_bound_logq(params: CodeParams, t: int) -> float:
    """log_q of the sphere-volume lower bound
    q^{(m + eta - t/ell) t - ell/4} / gamma_q^ell, for t >= 1.

    When ell divides t the quasi-uniform weight decomposition is exact and the
    ell/4 penalty is dropped.
    """
    if not 1 <= t <= params.ell * params.mu:
        raise ValueError(f"radius t={t} outside [1, {params.ell * params.mu}]")
    ell = params.ell
    exponent = (params.m + params.eta - t / ell) * t - ell * log_gamma_q(params.q)
    if t % ell:
        exponent -= ell / 4
    return exponent


def sphere_upper_bound_logq(params: CodeParams, t: int) -> float:
    """log_q of the sphere-volume upper bound
    C(ell + t - 1, ell - 1) * gamma_q^ell * q^{t (m + eta - t/ell)}."""
    if not 0 <= t <= params.ell * params.mu:
        raise ValueError(f"radius t={t} outside [0, {params.ell * params.mu}]")
    ell = params.ell
    return (
        logq_int(binomial(ell + t - 1, ell - 1), params.q)
        + ell * log_gamma_q(params.q)
        + t * (params.m + params.eta - t / ell)
    )
