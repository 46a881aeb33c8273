"""Arbitrary-precision ground truth for the residue arithmetic.

Everything here works on plain Python integers, so it is exact and
independent of the vector arithmetic it is used to check.  Vectors are
sequences in descending-power order: ``vec[0]`` is the coefficient of
``t**m`` and ``vec[-1]`` the constant term.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError

# Small primes used for fast rejection before Miller-Rabin.
_TRIAL_BOUND = 1000


def _sieve(bound: int) -> list[int]:
    flags = bytearray([1]) * bound
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(bound ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytes(len(flags[i * i::i]))
    return [i for i in range(bound) if flags[i]]


_SMALL_PRIMES = _sieve(_TRIAL_BOUND)


@dataclass(frozen=True)
class CanonicalElement:
    """An integer in [0, modulus), the external representation of a residue."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 1:
            raise ParameterError(f"modulus must exceed 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ParameterError(
                f"value {self.value} outside [0, {self.modulus})")


def psi_inverse(vec: Sequence[int], t: int, modulus: int) -> CanonicalElement:
    """Evaluate a coefficient vector at t and reduce into [0, modulus).

    Components may be signed and of any magnitude, so unreduced
    intermediates can be checked exactly.
    """
    if modulus <= 1:
        raise ParameterError(f"modulus must exceed 1, got {modulus}")
    acc = 0
    for comp in vec:
        acc = acc * t + comp
    return CanonicalElement(acc % modulus, modulus)


def congruent(u: Sequence[int], v: Sequence[int], t: int, modulus: int) -> bool:
    """True iff u and v evaluate to the same residue modulo `modulus`."""
    if len(u) != len(v):
        raise ParameterError(
            f"vector length mismatch: {len(u)} vs {len(v)}")
    return psi_inverse(u, t, modulus).value == psi_inverse(v, t, modulus).value


def oracle_modmul(x: CanonicalElement, y: CanonicalElement) -> CanonicalElement:
    """Ground-truth modular multiplication via big-int arithmetic."""
    if x.modulus != y.modulus:
        raise ParameterError(
            f"modulus mismatch: {x.modulus} vs {y.modulus}")
    return CanonicalElement((x.value * y.value) % x.modulus, x.modulus)


def lattice_basis(m_plus_1: int, t: int) -> list[tuple[int, ...]]:
    """Basis vectors of the congruence lattice, in descending-power order.

    Basis vector j represents t**(m-j) - t * t**(m-j-1) (cyclically), so
    each one evaluates to 0 modulo t**(m+1) - 1.
    """
    basis = []
    for j in range(m_plus_1):
        vec = [0] * m_plus_1
        vec[j] = 1
        vec[(j + 1) % m_plus_1] += -t
        basis.append(tuple(vec))
    return basis


def is_probable_prime(n: int, rounds: int = 64,
                      rng: random.Random | None = None) -> bool:
    """Miller-Rabin with uniformly random bases, after trial division.

    Pass a seeded ``random.Random`` for reproducible runs; a fresh one is
    created otherwise.
    """
    if rounds < 1:
        raise ParameterError(f"rounds must be >= 1, got {rounds}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if rng is None:
        rng = random.Random()

    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def modular_inverse(a: int, modulus: int) -> int:
    """Inverse of a modulo `modulus` (extended Euclid oracle)."""
    g, inv = _egcd(a % modulus, modulus)
    if g != 1:
        raise ParameterError(f"{a} is not invertible modulo {modulus}")
    return inv % modulus


def _egcd(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_r, old_s
