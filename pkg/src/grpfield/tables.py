"""Parameter tables and field searches.

Stability rows give, per field degree, the largest word-stable t and the
smallest reduction shift; the density estimator predicts how many fields
of a requested bitlength exist; the searches enumerate actual prime
fields, including the fast ones whose cofactor has Hamming weight 2.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, RangeError, StabilityError
from .oracle import is_probable_prime
from .params import GrpParams, ceil_log2, params_new

# Field degrees m+1 considered by the table generators, in order.
_DEGREES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)


def _log_half_m(m_plus_1: int) -> int:
    return ceil_log2((m_plus_1 - 1) // 2)


def _word_k_max(m_plus_1: int, w: int) -> int:
    """Largest k with ceil(log2(m/2)) + 2k + 5 <= 2w."""
    return (2 * w - 5 - _log_half_m(m_plus_1)) // 2


def _l_min(m_plus_1: int, log_t, q: int) -> int:
    """Smallest l with q*(l-1) >= ceil(log2(m/2)) + log_t + 3.

    log_t may be an int or an exact Fraction (the density estimator uses
    the real-valued bits/m rather than the integer k).
    """
    need = Fraction(_log_half_m(m_plus_1) + 3) + Fraction(log_t)
    return 1 + math.ceil(need / q)


@dataclass(frozen=True)
class StabilityRow:
    """One line of the stable-parameter table for a fixed (w, q)."""

    m_plus_1: int
    k: int
    l_min: int
    c_bound: int  # exclusive power-of-two bound on the cofactor
    max_prime_bits: int


def stability_table(w: int, q: int,
                    m_plus_1_max: int = 17) -> list[StabilityRow]:
    """Stable-parameter rows for each odd prime degree up to the limit."""
    if w < 8 or q < 1:
        raise ParameterError(f"need w >= 8 and q >= 1, got w={w} q={q}")
    rows = []
    for m_plus_1 in _DEGREES:
        if m_plus_1 > m_plus_1_max:
            break
        k = _word_k_max(m_plus_1, w)
        l = _l_min(m_plus_1, k, q)
        if k < 1 or l > k:
            continue  # degree not representable at this word size
        rows.append(StabilityRow(m_plus_1, k, l, 1 << (k - l),
                                 (m_plus_1 - 1) * k))
    return rows


def _iroot(x: int, n: int) -> int:
    """Integer floor of the n-th root of x >= 0."""
    if x < 0:
        raise ParameterError("negative radicand")
    if x == 0:
        return 0
    r = 1 << -(-x.bit_length() // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r ** n > x:
        r -= 1
    return r


def _floor_pow2(e: Fraction) -> int:
    """Exact floor of 2**e for a non-negative rational exponent."""
    if e < 0:
        return 0
    return _iroot(1 << e.numerator, e.denominator)


@dataclass(frozen=True)
class DensityEstimate:
    """Predicted number of fields at one bitlength, for fixed (w, q)."""

    bits: int
    m_plus_1: int
    k_max: int
    log_t_max: float
    l_min: int
    interval_size: int
    p_prime: float
    est_count: float


def estimate_density(bits: int, w: int = 64, q: int = 2,
                     sample_primes: int = 100,
                     rng_seed: int = 0) -> DensityEstimate:
    """Estimate how many fields of the given bitlength are representable.

    The degree is the smallest odd prime whose word-stable t range covers
    the bitlength; the cofactor interval I(c) spans the c values putting
    the characteristic at exactly that bitlength.  The prime probability
    is sampled by scanning c upward from the bottom of the interval until
    `sample_primes` prime characteristics are found.
    """
    if bits < 2 or sample_primes < 1:
        raise ParameterError(
            f"need bits >= 2 and sample_primes >= 1, got {bits}, "
            f"{sample_primes}")
    for m_plus_1 in _DEGREES:
        m = m_plus_1 - 1
        k_max = _word_k_max(m_plus_1, w)
        if k_max >= 1 and m * k_max >= bits:
            break
    else:
        raise RangeError(
            f"no supported degree represents {bits}-bit fields at w={w}")

    log_t = Fraction(bits, m)
    l_min = _l_min(m_plus_1, log_t, q)
    if l_min > k_max:
        raise RangeError(
            f"{bits}-bit fields need l >= {l_min} > k_max = {k_max} "
            f"at w={w}, q={q}")
    c_hi = _floor_pow2(log_t - l_min)
    c_lo = _floor_pow2(Fraction(bits - 1, m) - l_min)
    interval = c_hi - c_lo

    rng = random.Random(rng_seed)
    found = scanned = 0
    c = c_lo + 1
    while found < sample_primes:
        t = (1 << l_min) * c
        p = (t ** m_plus_1 - 1) // (t - 1)
        scanned += 1
        if is_probable_prime(p, 24, rng):
            found += 1
        c += 1
    p_prime = found / scanned
    return DensityEstimate(bits, m_plus_1, k_max, float(log_t), l_min,
                           interval, p_prime, interval * p_prime)


def search_grps(m_plus_1: int, l: int, c_min: int, c_max: int,
                max_results: int = 10, rng_seed: int = 0,
                w: int = 64, q: int = 2) -> list[GrpParams]:
    """Linear scan over cofactors for prime fields, in ascending c order.

    Rejects the whole range up front if the largest candidate t already
    violates a stability inequality.
    """
    if c_min < 1 or c_max < c_min:
        raise ParameterError(
            f"need 1 <= c_min <= c_max, got {c_min}, {c_max}")
    k_hi = ceil_log2((1 << l) * c_max)
    if _log_half_m(m_plus_1) + 2 * k_hi + 5 > 2 * w:
        raise StabilityError(
            f"t up to 2^{k_hi} violates the word-size constraint at w={w}")
    if l < _l_min(m_plus_1, k_hi, q):
        raise StabilityError(
            f"l = {l} below the stability minimum "
            f"{_l_min(m_plus_1, k_hi, q)} for k = {k_hi}, q = {q}")

    rng = random.Random(rng_seed)
    out = []
    for c in range(c_min, c_max + 1):
        try:
            params = params_new(m_plus_1, l, c, w, q, require_prime=False)
        except StabilityError:
            continue  # e.g. c a power of two, which folds into l
        if not params.io_stable:
            continue
        if is_probable_prime(params.p, 64, rng):
            params.prime_checked = True
            out.append(params)
            if len(out) >= max_results:
                break
    return out


def pure_power_scan(l_max: int,
                    rng_seed: int = 0) -> list[tuple[int, int]]:
    """Prime l <= l_max whose degree-l field over t = 2**l has prime p.

    These are the only fields where the cofactor disappears entirely;
    they are rare, which is why the cofactor search exists.
    """
    if l_max > 400:
        raise ParameterError(
            f"l_max capped at 400 for practical primality, got {l_max}")
    rng = random.Random(rng_seed)
    out = []
    candidates = [n for n in range(2, l_max + 1)
                  if all(n % d for d in range(2, int(n ** 0.5) + 1))]
    for l in candidates:
        p = ((1 << (l * l)) - 1) // ((1 << l) - 1)
        if is_probable_prime(p, 64, rng):
            out.append((l, l))
    return out


def hw2_search(bits_target: int, w: int = 64, q: int = 2,
               rng_seed: int = 0) -> list[GrpParams]:
    """Prime fields of exactly bits_target bits with c = 2**e +/- 1.

    Searches the smallest adequate degree only; results are sorted by
    (l, c).  Each result carries the slack_bits diagnostic, the distance
    between its l and the stability minimum.
    """
    for m_plus_1 in _DEGREES:
        m = m_plus_1 - 1
        k_max = _word_k_max(m_plus_1, w)
        if k_max >= 1 and m * k_max >= bits_target:
            break
    else:
        raise RangeError(
            f"no supported degree represents {bits_target}-bit fields")

    rng = random.Random(rng_seed)
    out = []
    seen = set()
    for l in range(1, k_max + 1):
        for e in range(1, k_max - l + 1):
            for c in ((1 << e) - 1, (1 << e) + 1):
                if c < 3 or (l, c) in seen:
                    continue
                seen.add((l, c))
                try:
                    params = params_new(m_plus_1, l, c, w, q,
                                        require_prime=False)
                except StabilityError:
                    continue
                if not params.io_stable or params.bits != bits_target:
                    continue
                if is_probable_prime(params.p, 64, rng):
                    params.prime_checked = True
                    out.append(params)
    out.sort(key=lambda p: (p.l, p.c))
    return out


# Stable column order shared by the CSV and JSON emitters.
_COLUMNS = ("m_plus_1", "k", "l", "c_bound", "bits")


def _row_values(row: StabilityRow) -> tuple[int, ...]:
    return (row.m_plus_1, row.k, row.l_min, row.c_bound, row.max_prime_bits)


def stability_rows_to_csv(rows: list[StabilityRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for row in rows:
        writer.writerow(_row_values(row))
    return buf.getvalue()


def stability_rows_to_json(rows: list[StabilityRow]) -> str:
    return json.dumps([dict(zip(_COLUMNS, _row_values(row)))
                       for row in rows])
