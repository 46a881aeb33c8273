"""Residue multiplication, reduction and auxiliary field operations.

The multiplication step computes each product component from m/2
difference products; reduction divides components by b = 2**l while
staying in the same congruence class modulo t**(m+1) - 1.  A full
modular multiplication is the multiplication step followed by q
reductions, so results carry a b**-q factor: all field arithmetic
happens in the Montgomery domain, where the factor cancels.

Every operation executes the same sequence of primitive operations
regardless of the input values.  Pass an OpCounter to count them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, ZeroInverseError
from .oracle import modular_inverse
from .params import (GrpParams, Residue, WideResidue, canonical_value)


@dataclass
class OpCounter:
    """Counts of primitive operation classes executed."""

    mul: int = 0
    add: int = 0
    shift: int = 0
    mask: int = 0

    def as_dict(self) -> dict[str, int]:
        return {"mul": self.mul, "add": self.add,
                "shift": self.shift, "mask": self.mask}


def _check_slack(r: Residue) -> None:
    p = r.params
    if p.io_stable:
        bound = 1 << (p.k + 2)
        assert all(-bound <= comp <= bound - 2 for comp in r.comps), \
            "component outside additive slack range"


def cvma_mul(x: Residue, y: Residue,
             counter: OpCounter | None = None) -> WideResidue:
    """Multiplication step: m/2 difference products per component.

    The result is congruent to x*y modulo the field characteristic (not
    modulo t**(m+1) - 1: the dropped dot-product term is a multiple of
    the all-ones vector, which vanishes only modulo p).
    """
    params = x.params
    xc = x.comps
    yc = y.comps
    out = []
    if counter is None:
        for pairs in params.cvma_pairs:
            acc = 0
            for sa, sb in pairs:
                acc += (xc[sa] - xc[sb]) * (yc[sb] - yc[sa])
            out.append(acc)
    else:
        for pairs in params.cvma_pairs:
            acc = 0
            first = True
            for sa, sb in pairs:
                counter.add += 2
                counter.mul += 1
                term = (xc[sa] - xc[sb]) * (yc[sb] - yc[sa])
                if first:
                    acc = term
                    first = False
                else:
                    counter.add += 1
                    acc += term
            out.append(acc)
    return WideResidue(tuple(out), params)


def red3(z: WideResidue, counter: OpCounter | None = None,
         use_shift_add: bool | None = None) -> WideResidue:
    """Divide components by b via arithmetic shift plus a cofactor term.

    Component i becomes z_i/b + c*(z_{i+1} mod b), cyclically; floor
    semantics on the shift keep the division exact in the telescoped sum.
    When c = 2**e +/- 1 the cofactor multiply can run as shift-and-add,
    with bit-identical output.
    """
    params = z.params
    if use_shift_add is None:
        use_shift_add = params.c_shift_add is not None
    l = params.l
    mask = params.b - 1
    c = params.c
    zc = z.comps
    n = params.m_plus_1
    out = []
    if use_shift_add:
        e, sign = params.c_shift_add
        for s in range(n):
            low = zc[s - 1] & mask  # s-1 wraps to the constant term
            if counter is not None:
                counter.mask += 1
                counter.shift += 2
                counter.add += 2
            cm = (low << e) + low if sign > 0 else (low << e) - low
            out.append((zc[s] >> l) + cm)
    else:
        for s in range(n):
            low = zc[s - 1] & mask
            if counter is not None:
                counter.mask += 1
                counter.mul += 1
                counter.shift += 1
                counter.add += 1
            out.append((zc[s] >> l) + c * low)
    return WideResidue(tuple(out), params)


def red2(z: WideResidue, counter: OpCounter | None = None) -> WideResidue:
    """Variant of red3 rounding the shifted term up instead of down."""
    params = z.params
    l = params.l
    mask = params.b - 1
    c = params.c
    zc = z.comps
    n = params.m_plus_1
    out = []
    for s in range(n):
        if counter is not None:
            counter.mask += 2
            counter.shift += 1
            counter.mul += 1
            counter.add += 2
        up = (zc[s] + ((-zc[s]) & mask)) >> l
        out.append(up - c * ((-zc[s - 1]) & mask))
    return WideResidue(tuple(out), params)


def v_vector(params: GrpParams, slice_bits: int | None = None) -> tuple[int, ...]:
    """Reduction constants for the general-t path.

    Entry s (descending storage, pairing component s) is
    t0**(m-s) / (t0**(m+1) - 1) mod b, with t0 the least significant
    base-b digit of t.  b defaults to the full word, 2**w.
    """
    if slice_bits is None:
        slice_bits = params.w
    b = 1 << slice_bits
    t0 = params.t % b
    denom = t0 ** params.m_plus_1 - 1
    inv = modular_inverse(denom, b)
    m = params.m_plus_1 - 1
    return tuple((pow(t0, m - s, b) * inv) % b for s in range(params.m_plus_1))


def red1(z: WideResidue, v: tuple[int, ...] | None = None,
         slice_bits: int | None = None,
         counter: OpCounter | None = None) -> WideResidue:
    """General-t reduction: divide components by b = 2**slice_bits.

    Only needs t even; one pass per word slice, applied q times for a
    full reduction.
    """
    params = z.params
    if slice_bits is None:
        slice_bits = params.w
    if v is None:
        v = v_vector(params, slice_bits)
    b = 1 << slice_bits
    mask = b - 1
    t = params.t
    zc = z.comps
    n = params.m_plus_1

    u_prev = 0
    for s in range(n):
        if counter is not None:
            counter.mul += 1
            counter.add += 1
            counter.mask += 2
        u_prev = (u_prev + v[s] * (zc[s] & mask)) & mask
    out = []
    for s in range(n):
        if counter is not None:
            counter.mul += 1
            counter.add += 2
            counter.mask += 1
            counter.shift += 1
        vi = t * u_prev
        u_cur = (vi - zc[s]) & mask
        num = zc[s] + u_cur - vi
        assert num & mask == 0, "inexact division in reduction"
        out.append(num >> slice_bits)
        u_prev = u_cur
    return WideResidue(tuple(out), params)


def modmul(x: Residue, y: Residue,
           counter: OpCounter | None = None) -> Residue:
    """Full modular multiplication: product congruent to x*y*b**-q mod p."""
    z = cvma_mul(x, y, counter)
    for _ in range(x.params.q):
        z = red3(z, counter)
    return Residue(z.comps, x.params)


def modmul_interleaved(x: Residue, y: Residue,
                       counter: OpCounter | None = None) -> Residue:
    """Interleaved multiplication and reduction, same contract as modmul.

    The x components are split into q base-b digits (signed top digit),
    least significant first, with a reduction after each digit pass.
    """
    params = x.params
    n = params.m_plus_1
    l = params.l
    mask = params.b - 1
    q = params.q
    digits = []
    for comp in x.comps:
        row = [(comp >> (l * j)) & mask for j in range(q - 1)]
        row.append(comp >> (l * (q - 1)))
        digits.append(row)
    yc = y.comps
    z = [0] * n
    for j in range(q):
        for s in range(n):
            acc = 0
            for sa, sb in params.cvma_pairs[s]:
                if counter is not None:
                    counter.mul += 1
                    counter.add += 3
                acc += (digits[sa][j] - digits[sb][j]) * (yc[sb] - yc[sa])
            z[s] += acc
        z = list(red3(WideResidue(tuple(z), params), counter).comps)
    return Residue(tuple(z), params)


def add(x: Residue, y: Residue) -> Residue:
    """Componentwise sum; no reduction, the next modmul absorbs the growth."""
    out = Residue(tuple(a + b for a, b in zip(x.comps, y.comps)), x.params)
    _check_slack(out)
    return out


def sub(x: Residue, y: Residue) -> Residue:
    out = Residue(tuple(a - b for a, b in zip(x.comps, y.comps)), x.params)
    _check_slack(out)
    return out


def square(x: Residue, counter: OpCounter | None = None) -> Residue:
    """Same code path as modmul: no common subexpressions to share."""
    return modmul(x, x, counter)


def to_montgomery(r: Residue) -> Residue:
    """Scale by b**q: multiply by the precomputed b**2q residue."""
    return modmul(r, r.params.mont_in)


def from_montgomery(r: Residue) -> Residue:
    return modmul(r, r.params.mont_one)


def invert(x: Residue, counter: OpCounter | None = None) -> Residue:
    """Montgomery-domain inverse by powering to p - 2.

    Fixed square-and-multiply ladder over the bits of p - 2: the
    operation sequence depends only on the field, not on x.
    """
    params = x.params
    if canonical_value(x) == 0:
        raise ZeroInverseError("zero has no inverse")
    e = params.p - 2
    acc = params.mont_r  # Montgomery form of 1
    for i in range(e.bit_length() - 1, -1, -1):
        acc = modmul(acc, acc, counter)
        if (e >> i) & 1:
            acc = modmul(acc, x, counter)
    return acc


def equals(x: Residue, y: Residue) -> bool:
    """Field equality, via the canonical representation."""
    if x.params != y.params:
        raise ParameterError("residues from different fields")
    return canonical_value(x) == canonical_value(y)


def randomize(x: Residue, r: int) -> Residue:
    """Add r times the all-ones vector: same field element, fresh encoding."""
    params = x.params
    if not 0 <= r < params.t - 1:
        raise ParameterError(f"scaling factor {r} outside [0, t-2]")
    out = Residue(tuple(comp + r for comp in x.comps), params)
    _check_slack(out)
    return out


def modmul_trace(params: GrpParams) -> dict[str, int]:
    """Operation-class counts of one modmul, a function of params only."""
    m = params.m_plus_1 - 1
    ctr = OpCounter()
    zeros = Residue((0,) * params.m_plus_1, params)
    modmul(zeros, zeros, ctr)
    assert ctr.mul >= m * params.m_plus_1 // 2
    return ctr.as_dict()
