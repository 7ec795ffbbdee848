"""Exact arithmetic in the cyclotomic field Q(zeta_24).

Elements are written on the power basis 1, d, d^2, ..., d^7 where
d = zeta_24 is a primitive 24th root of unity with minimal polynomial
d^8 - d^4 + 1, so every product is reduced eagerly via d^8 = d^4 - 1.
The representation is canonical: two elements are equal exactly when
their coefficient vectors are equal.

Internally a value is a vector of eight integers over a single positive
denominator with the gcd of all nine integers equal to 1.  That keeps the
hot loops (polynomial products inside branch expansions) on machine
integers instead of eight separate Fraction objects; the `coeffs`
property exposes the usual tuple of Fractions.

Everything here is immutable and side-effect free, so values may be
shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Scalar = Union[int, Fraction, "CycNum"]

_N_COEFFS = 8


def _normalized(nums: Iterable[int], den: int) -> tuple[tuple[int, ...], int]:
    nums = list(nums)
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            return tuple(nums), den
    return tuple(n // g for n in nums), den // g


class CycNum:
    """An element of Q(zeta_24) in canonical power-basis form."""

    __slots__ = ("nums", "den")

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = (), den: int = 1):
        nums = [0] * _N_COEFFS
        common = den
        fracs = []
        for i, c in enumerate(coeffs):
            if i >= _N_COEFFS:
                raise ValueError("at most 8 power-basis coefficients")
            fracs.append((i, Fraction(c)))
            common = common * fracs[-1][1].denominator // gcd(common, fracs[-1][1].denominator)
        for i, f in fracs:
            nums[i] = f.numerator * (common // f.denominator)
        self.nums, self.den = _normalized(nums, common)

    @classmethod
    def _raw(cls, nums: Iterable[int], den: int) -> CycNum:
        self = object.__new__(cls)
        self.nums, self.den = _normalized(nums, den)
        return self

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients of 1, d, ..., d^7 as Fractions in lowest terms."""
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __bool__(self) -> bool:
        return any(self.nums)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _lift(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.nums[0], self.den))
        return hash((self.nums, self.den))

    def __add__(self, other: Scalar) -> CycNum:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self.den, other.den
        return CycNum._raw(
            (x * db + y * da for x, y in zip(self.nums, other.nums)), da * db
        )

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._raw((-n for n in self.nums), self.den)

    def __sub__(self, other: Scalar) -> CycNum:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self.den, other.den
        return CycNum._raw(
            (x * db - y * da for x, y in zip(self.nums, other.nums)), da * db
        )

    def __rsub__(self, other: Scalar) -> CycNum:
        return (-self).__add__(other)

    def __mul__(self, other: Scalar) -> CycNum:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.nums, other.nums
        prod = [0] * 15
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        # d^(i) = d^(i-4) - d^(i-8) for i >= 8; descending order so the
        # carried d^(i-4) term is itself reduced later in the loop.
        for i in range(14, 7, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                prod[i - 4] += c
                prod[i - 8] -= c
        return CycNum._raw(prod[:8], self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        """Multiplicative inverse, by the extended Euclidean algorithm on
        the representing polynomial and d^8 - d^4 + 1."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_24)")
        a = [Fraction(n, self.den) for n in self.nums]
        s = _poly_half_xgcd(a)
        nums = [0] * _N_COEFFS
        common = 1
        for c in s:
            common = common * c.denominator // gcd(common, c.denominator)
        for i, c in enumerate(s):
            nums[i] = c.numerator * (common // c.denominator)
        return CycNum._raw(nums, common)

    def __truediv__(self, other: Scalar) -> CycNum:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: Scalar) -> CycNum:
        return self.inv().__mul__(other)

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i in range(_N_COEFFS - 1, -1, -1):
            n = self.nums[i]
            if not n:
                continue
            c = Fraction(n, self.den)
            mon = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            if not mon:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CycNum({str(self)!r})"


def _lift(value: Scalar) -> CycNum:
    if isinstance(value, CycNum):
        return value
    if isinstance(value, int):
        return CycNum._raw((value, 0, 0, 0, 0, 0, 0, 0), 1)
    if isinstance(value, Fraction):
        return CycNum._raw((value.numerator, 0, 0, 0, 0, 0, 0, 0), value.denominator)
    return NotImplemented


def rational(value: Union[int, Fraction]) -> CycNum:
    """Embed a rational number into Q(zeta_24)."""
    lifted = _lift(value)
    if lifted is NotImplemented:
        raise TypeError(f"not a rational value: {value!r}")
    return lifted


# ---------------------------------------------------------------------------
# polynomial helpers for inversion (ascending Fraction coefficient lists)

_MINPOLY = [Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(-1),
            Fraction(0), Fraction(0), Fraction(0), Fraction(1)]


def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * inv_lead
        q[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
        _ptrim(a)
        if not a:
            break
    return _ptrim(q), a


def _poly_half_xgcd(a: list[Fraction]) -> list[Fraction]:
    """Return s with s*a = gcd(a, minpoly) = const mod minpoly, scaled so
    that s*a = 1.  The minimal polynomial is irreducible over Q, so the
    gcd of any nonzero a with it is a nonzero constant."""
    r0, r1 = list(_MINPOLY), _ptrim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s2 = list(s0)
        s2 += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s2))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    s2[i + j] -= qc * sc
        s0, s1 = s1, _ptrim(s2)
    if not r1:
        raise ZeroDivisionError("not invertible modulo the minimal polynomial")
    c = r1[0]
    s = [x / c for x in s1]
    s += [Fraction(0)] * (_N_COEFFS - len(s))
    return s[:_N_COEFFS]


# ---------------------------------------------------------------------------
# powers of d and roots of unity

def _build_d_powers() -> tuple[tuple[int, ...], ...]:
    powers = []
    cur = [1, 0, 0, 0, 0, 0, 0, 0]
    for _ in range(24):
        powers.append(tuple(cur))
        cur = [0] + cur
        carry = cur.pop()
        if carry:
            cur[4] += carry
            cur[0] -= carry
    return tuple(powers)


_D_POWERS = _build_d_powers()

ZERO = CycNum()
ONE = CycNum((1,))


def d_power(n: int) -> CycNum:
    """d^n for any integer n (d has multiplicative order 24)."""
    return CycNum._raw(_D_POWERS[n % 24], 1)


def zeta(order: int, power: int = 1) -> CycNum:
    """The root of unity zeta_order^power, for any order dividing 24."""
    if order <= 0 or 24 % order:
        raise ValueError(f"order {order} does not divide 24")
    return d_power((24 // order) * power)


# ---------------------------------------------------------------------------
# Galois automorphisms

@dataclass(frozen=True)
class Automorphism:
    """Field automorphism of Q(zeta_24) sending d to d^exponent.

    Exponents live in (Z/24)^x = {1, 5, 7, 11, 13, 17, 19, 23}; composition
    multiplies exponents.  Rationals are fixed pointwise.
    """

    exponent: int

    def __post_init__(self):
        k = self.exponent % 24
        if gcd(k, 24) != 1:
            raise ValueError(f"exponent {self.exponent} is not a unit mod 24")
        object.__setattr__(self, "exponent", k)

    def __call__(self, value: Scalar) -> CycNum:
        a = _lift(value)
        if a is NotImplemented:
            raise TypeError(f"cannot apply automorphism to {value!r}")
        out = [0] * _N_COEFFS
        k = self.exponent
        for i, n in enumerate(a.nums):
            if n:
                for j, p in enumerate(_D_POWERS[(i * k) % 24]):
                    if p:
                        out[j] += n * p
        return CycNum._raw(out, a.den)

    def __mul__(self, other: Automorphism) -> Automorphism:
        return Automorphism(self.exponent * other.exponent)

    def __str__(self) -> str:
        return f"d -> d^{self.exponent}"


IDENTITY = Automorphism(1)

# The two lifts to Q(zeta_24) of each generator of Gal(Q(zeta_8)/Q);
# the defaults fix zeta_3, so they act trivially on the D-point coordinates.
SIGMA3 = Automorphism(19)       # restricts to zeta_8 -> zeta_8^3
SIGMA3_ALT = Automorphism(11)   # the other lift of the same restriction
SIGMA5 = Automorphism(5)        # restricts to zeta_8 -> zeta_8^5
SIGMA5_ALT = Automorphism(13)
TAU = Automorphism(23)          # complex conjugation; restricts to zeta_8 -> zeta_8^7
CONJ_ZETA3 = Automorphism(17)   # fixes zeta_8, swaps zeta_3 <-> zeta_3^2
