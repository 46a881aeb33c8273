"""Field parameters and the residue representation.

A field is described by (m+1, l, c, w, q) with t = 2**l * c and
p = t**m + ... + t + 1.  Residue vectors are stored in descending-power
order, matching the oracle module: ``comps[0]`` multiplies t**m.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import NotPrimeError, ParameterError, StabilityError
from .oracle import CanonicalElement, is_probable_prime, psi_inverse

DEFAULT_WORD_BITS = 64
DEFAULT_PRIME_ROUNDS = 64


def _is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def ceil_log2(x: int) -> int:
    """Smallest k with 2**k >= x, for x >= 1."""
    return (x - 1).bit_length()


def mods(x: int, t: int) -> int:
    """Least absolute residue of x modulo even t, in [-t/2, t/2 - 1]."""
    r = x % t
    return r - t if r >= t // 2 else r


def _half_index_pairs(m_plus_1: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Storage-index pairs driving the product formulae.

    Entry s (storage position of output power i = m - s) lists the pairs
    (sa, sb) so that component s of the product accumulates
    (x[sa] - x[sb]) * (y[sb] - y[sa]).  The centre index is i/2 taken
    modulo m+1, which is well defined because m+1 is odd.
    """
    n = m_plus_1
    m = n - 1
    inv2 = pow(2, -1, n)
    table = []
    for s in range(n):
        i = m - s
        h = (i * inv2) % n
        pairs = []
        for j in range(1, m // 2 + 1):
            ea = (h - j) % n
            eb = (h + j) % n
            pairs.append((m - ea, m - eb))
        table.append(tuple(pairs))
    return tuple(table)


class GrpParams:
    """Validated description of one field; immutable after construction.

    Use :func:`params_new` rather than calling the constructor directly.
    """

    def __init__(self, m_plus_1: int, l: int, c: int, w: int, q: int, *,
                 require_prime: bool,
                 prime_rounds: int = DEFAULT_PRIME_ROUNDS,
                 rng: random.Random | None = None) -> None:
        if m_plus_1 < 3 or m_plus_1 % 2 == 0 or not _is_small_prime(m_plus_1):
            raise ParameterError(f"m+1 must be an odd prime >= 3, got {m_plus_1}")
        if l < 1 or c < 1 or w < 8 or q < 1:
            raise ParameterError(
                f"l, c, q must be positive and w >= 8: l={l} c={c} w={w} q={q}")

        self.m_plus_1 = m_plus_1
        self.l = l
        self.c = c
        self.w = w
        self.q = q

        m = m_plus_1 - 1
        self.t = (1 << l) * c
        self.k = ceil_log2(self.t)
        self.b = 1 << l
        self.log_half_m = ceil_log2(m // 2)

        if self.t > (1 << self.k) - 2:
            raise StabilityError(
                f"t = {self.t} exceeds 2^k - 2 = {(1 << self.k) - 2}")
        if self.log_half_m + 2 * self.k + 5 > 2 * w:
            raise StabilityError(
                "word-size constraint violated: "
                f"ceil(log2(m/2)) + 2k + 5 = {self.log_half_m + 2 * self.k + 5}"
                f" > 2w = {2 * w}")
        if self.k <= l or c >= (1 << (self.k - l)):
            raise StabilityError(
                f"cofactor too large: c = {c} must be < 2^(k-l) = 2^{self.k - l}")

        # I/O stability of repeated modmul: q reductions must shrink the
        # product back to reduced size.  Not enforced as an error so toy
        # fields stay constructible; search paths reject unstable triples.
        self.io_stable = self.q * (l - 1) >= self.log_half_m + self.k + 3

        self.p = ((self.t ** m_plus_1) - 1) // (self.t - 1)
        self.ring_modulus = self.t ** m_plus_1 - 1

        self.prime_checked = False
        if require_prime:
            if not is_probable_prime(self.p, prime_rounds, rng):
                raise NotPrimeError(
                    f"phi_{m_plus_1}(2^{l}*{c}) failed {prime_rounds}-round "
                    "Miller-Rabin")
            self.prime_checked = True

        # Per-field constant tables.
        self.cvma_pairs = _half_index_pairs(m_plus_1)
        # c = 2^e + 1 or 2^e - 1 enables a shift-and-add reduction path.
        self.c_shift_add: tuple[int, int] | None = None
        for e in range(1, c.bit_length() + 1):
            if c == (1 << e) + 1:
                self.c_shift_add = (e, 1)
            elif c == (1 << e) - 1:
                self.c_shift_add = (e, -1)

        # Montgomery-domain constants (psi of small canonical values).
        self.mont_in = to_residue(self, pow(self.b, 2 * q, self.p))
        self.mont_one = to_residue(self, 1)
        self.mont_r = to_residue(self, pow(self.b, q, self.p))

    @property
    def bits(self) -> int:
        """Bitlength of the field characteristic."""
        return self.p.bit_length()

    @property
    def slack_bits(self) -> int:
        """How far l sits above the stability minimum (negative if below)."""
        num = self.log_half_m + self.k + 3
        l_min = 1 + -(-num // self.q)
        return self.l - l_min

    def label(self) -> str:
        return f"phi({self.m_plus_1},2^{self.l}*{self.c})"

    def __repr__(self) -> str:
        return f"GrpParams({self.label()}, w={self.w}, q={self.q})"

    def _key(self):
        return (self.m_plus_1, self.l, self.c, self.w, self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrpParams) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


def params_new(m_plus_1: int, l: int, c: int, w: int = DEFAULT_WORD_BITS,
               q: int = 2, require_prime: bool = True,
               rng: random.Random | None = None) -> GrpParams:
    """Build and validate a field description.

    Raises StabilityError naming the violated inequality, NotPrimeError if
    require_prime is set and the characteristic is composite.
    """
    return GrpParams(m_plus_1, l, c, w, q, require_prime=require_prime,
                     rng=rng)


@dataclass(frozen=True)
class Residue:
    """Length-(m+1) vector of signed components, descending powers of t."""

    comps: tuple[int, ...]
    params: GrpParams

    def __post_init__(self) -> None:
        if len(self.comps) != self.params.m_plus_1:
            raise ParameterError(
                f"expected {self.params.m_plus_1} components, "
                f"got {len(self.comps)}")


@dataclass(frozen=True)
class WideResidue:
    """Double-width accumulator vector, output of the multiplication step."""

    comps: tuple[int, ...]
    params: GrpParams


def to_residue(params: GrpParams, x: int) -> Residue:
    """Base-t conversion with least-absolute-residue digits.

    Every component ends up in [-t/2, t/2]; only the constant-term digit
    can reach the upper bound, via the final wrap of the t**(m+1) carry.
    """
    if not 0 <= x < params.ring_modulus:
        raise ParameterError(
            f"value {x} outside [0, t^(m+1) - 1)")
    t = params.t
    digits = []  # ascending
    for _ in range(params.m_plus_1):
        d = mods(x, t)
        digits.append(d)
        x = (x - d) // t
    digits[0] += x  # x in {0, 1}: fold the t^(m+1) carry back onto t^0
    return Residue(tuple(reversed(digits)), params)


def canonical_value(r: Residue | WideResidue) -> int:
    """Evaluate a vector at t and reduce modulo the field characteristic."""
    acc = 0
    t = r.params.t
    for comp in r.comps:
        acc = acc * t + comp
    return acc % r.params.p


def to_canonical(r: Residue | WideResidue) -> CanonicalElement:
    return CanonicalElement(canonical_value(r), r.params.p)


def zero(params: GrpParams) -> Residue:
    return Residue((0,) * params.m_plus_1, params)


def residue_to_json(r: Residue) -> str:
    obj = _params_obj(r.params)
    obj["comps"] = [str(comp) for comp in r.comps]
    return json.dumps(obj)


def residue_from_json(text: str) -> Residue:
    obj = json.loads(text)
    params = _params_from_obj(obj)
    comps = tuple(int(s) for s in obj["comps"])
    return Residue(comps, params)


def params_to_json(params: GrpParams) -> str:
    return json.dumps(_params_obj(params))


def params_from_json(text: str) -> GrpParams:
    return _params_from_obj(json.loads(text))


def _params_obj(params: GrpParams) -> dict:
    return {"m_plus_1": params.m_plus_1, "l": params.l, "c": params.c,
            "w": params.w, "q": params.q}


def _params_from_obj(obj: dict) -> GrpParams:
    return params_new(obj["m_plus_1"], obj["l"], obj["c"], obj["w"],
                      obj["q"], require_prime=False)


def psi(params: GrpParams, x: int) -> Residue:
    """Residue of a canonical field element (x taken modulo p)."""
    return to_residue(params, x % params.p)


def ring_value(r: Residue | WideResidue) -> int:
    """Evaluate a vector modulo t^(m+1) - 1, the embedding ring."""
    return psi_inverse(r.comps, r.params.t, r.params.ring_modulus).value
