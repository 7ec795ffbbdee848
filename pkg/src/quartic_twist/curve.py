"""The plane quartic x^4 + y^4 + z^4 = 0 over Q(zeta_24).

Homogeneous polynomials, projective points with canonical normalization
(first nonzero coordinate scaled to 1), the catalog of named points used
throughout the verification, and the Galois action on points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .cyclotomic import Automorphism, CycNum, ONE, ZERO, rational, zeta

Triple = tuple[int, int, int]
Coefficient = Union[int, Fraction, CycNum]

AXIS_NAMES = ("X", "Y", "Z")


def _as_cyc(value: Coefficient) -> CycNum:
    if isinstance(value, CycNum):
        return value
    return rational(value)


class HomogPoly:
    """Homogeneous polynomial in X, Y, Z with CycNum coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Triple, Coefficient]):
        clean: dict[Triple, CycNum] = {}
        for exponents, coeff in terms.items():
            i, j, k = exponents
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise ValueError(f"exponents {exponents} do not have degree {degree}")
            c = _as_cyc(coeff)
            if c:
                clean[(i, j, k)] = c
        self.degree = degree
        self.terms = clean

    @classmethod
    def zero(cls, degree: int = 0) -> HomogPoly:
        return cls(degree, {})

    @classmethod
    def monomial(cls, exponents: Triple, coeff: Coefficient = 1) -> HomogPoly:
        return cls(sum(exponents), {exponents: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other: HomogPoly) -> HomogPoly:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        degree = self.degree if self.terms else other.degree
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return HomogPoly(degree, terms)

    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        return self + (-other)

    def __mul__(self, other: Union[HomogPoly, Coefficient]) -> HomogPoly:
        if isinstance(other, (int, Fraction, CycNum)):
            c = _as_cyc(other)
            return HomogPoly(self.degree, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, HomogPoly):
            return NotImplemented
        terms: dict[Triple, CycNum] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                prod = c1 * c2
                terms[e] = terms.get(e, ZERO) + prod
        return HomogPoly(self.degree + other.degree, terms)

    def __rmul__(self, other: Coefficient) -> HomogPoly:
        return self.__mul__(other)

    def __pow__(self, n: int) -> HomogPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = HomogPoly(0, {(0, 0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def partial(self, axis: int) -> HomogPoly:
        terms: dict[Triple, CycNum] = {}
        for e, c in self.terms.items():
            n = e[axis]
            if n:
                shifted = list(e)
                shifted[axis] = n - 1
                terms[tuple(shifted)] = c * n
        return HomogPoly(max(self.degree - 1, 0), terms)

    def evaluate(self, point: ProjPoint) -> CycNum:
        """Value at the normalized representative of the point."""
        coords = point.coords
        powers = []
        for axis in range(3):
            top = max((e[axis] for e in self.terms), default=0)
            row = [ONE]
            for _ in range(top):
                row.append(row[-1] * coords[axis])
            powers.append(row)
        total = ZERO
        for (i, j, k), c in self.terms.items():
            total = total + c * powers[0][i] * powers[1][j] * powers[2][k]
        return total

    def galois(self, sigma: Automorphism) -> HomogPoly:
        """Apply a field automorphism to every coefficient."""
        return HomogPoly(self.degree, {e: sigma(c) for e, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                f"{AXIS_NAMES[a]}^{n}" if n > 1 else AXIS_NAMES[a]
                for a, n in enumerate(e)
                if n
            ) or "1"
            parts.append(f"({c})*{mon}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HomogPoly({self})"


X = HomogPoly.monomial((1, 0, 0))
Y = HomogPoly.monomial((0, 1, 0))
Z = HomogPoly.monomial((0, 0, 1))

CURVE = X ** 4 + Y ** 4 + Z ** 4


class ProjPoint:
    """Projective point with coordinates in Q(zeta_24), stored normalized
    so that the first nonzero coordinate (X, Y, Z order) equals 1."""

    __slots__ = ("coords",)

    def __init__(self, x: Coefficient, y: Coefficient, z: Coefficient):
        raw = (_as_cyc(x), _as_cyc(y), _as_cyc(z))
        for c in raw:
            if c:
                scale = c.inv()
                self.coords = tuple(v * scale for v in raw)
                return
        raise ValueError("projective point needs a nonzero coordinate")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def sort_key(self):
        return tuple((c.nums, c.den) for c in self.coords)

    def galois(self, sigma: Automorphism) -> ProjPoint:
        return ProjPoint(*(sigma(c) for c in self.coords))

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"ProjPoint{self}"


def on_curve(point: ProjPoint) -> bool:
    return not CURVE.evaluate(point)


def curve_is_smooth_at(point: ProjPoint) -> bool:
    return any(CURVE.partial(axis).evaluate(point) for axis in range(3))


def galois_image_point(sigma: Automorphism, point: ProjPoint) -> ProjPoint:
    return point.galois(sigma)


# ---------------------------------------------------------------------------
# named points

def _build_catalog() -> dict[str, ProjPoint]:
    z8 = zeta(8)
    z4 = zeta(4)
    z3 = zeta(3)
    points: dict[str, ProjPoint] = {}
    for i in range(4):
        points[f"A{i}"] = ProjPoint(0, z4 ** i, z8 ** 7)
        points[f"B{i}"] = ProjPoint(z4 ** i, 0, z8 ** 7)
        points[f"C{i}"] = ProjPoint(z8 * z4 ** i, 1, 0)
    # points of tangency of the four rational bitangents, in conjugate pairs
    signs = {"0": (1, 1), "1": (-1, 1), "2": (1, -1), "3": (-1, -1)}
    for label, (sy, sz) in signs.items():
        points[f"T{label}0"] = ProjPoint(1, sy * z3, sz * z3 ** 2)
        points[f"T{label}1"] = ProjPoint(1, sy * z3 ** 2, sz * z3)
    points["E+"] = ProjPoint(1, 0, z8 ** 3)
    points["E-"] = ProjPoint(1, 0, z8 ** 7)
    return points


CATALOG = _build_catalog()

CUSP_NAMES = tuple(f"{family}{i}" for family in "ABC" for i in range(4))
TANGENCY_NAMES = tuple(f"T{i}{j}" for i in range(4) for j in range(2))

CUSP_BY_POINT = {CATALOG[name]: name for name in CUSP_NAMES}

_POINT_NAME: dict[ProjPoint, str] = {}
for _name in CUSP_NAMES + TANGENCY_NAMES + ("E+", "E-"):
    _POINT_NAME.setdefault(CATALOG[_name], _name)


def catalog(name: str) -> ProjPoint:
    try:
        return CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown catalog point {name!r}") from None


def point_name(point: ProjPoint) -> str:
    """Catalog name of a point if it has one, else its coordinates."""
    return _POINT_NAME.get(point, str(point))


# cusp permutations induced by the two Galois generators
SIGMA3_CUSP_TABLE = {
    "A0": "A1", "A1": "A0", "A2": "A3", "A3": "A2",
    "B0": "B1", "B1": "B0", "B2": "B3", "B3": "B2",
    "C0": "C1", "C1": "C0", "C2": "C3", "C3": "C2",
}
SIGMA5_CUSP_TABLE = {
    "A0": "A2", "A1": "A3", "A2": "A0", "A3": "A1",
    "B0": "B2", "B1": "B3", "B2": "B0", "B3": "B1",
    "C0": "C2", "C1": "C3", "C2": "C0", "C3": "C1",
}
IDENTITY_CUSP_TABLE = {name: name for name in CUSP_NAMES}


def cusp_permutation(sigma: Automorphism) -> dict[str, str]:
    """The permutation of the twelve cusps induced by coordinate-wise
    application of sigma.  Raises if some image is not a cusp."""
    table = {}
    for name in CUSP_NAMES:
        image = CATALOG[name].galois(sigma)
        if image not in CUSP_BY_POINT:
            raise ValueError(f"{sigma} does not permute the cusps: {name} -> {image}")
        table[name] = CUSP_BY_POINT[image]
    return table


def quadratic_points() -> tuple[ProjPoint, ...]:
    """The eight points with coordinates in Q(zeta_3): the tangency points
    of the four rational bitangents."""
    return tuple(CATALOG[name] for name in TANGENCY_NAMES)


def is_zeta3_rational(point: ProjPoint) -> bool:
    """Whether the normalized coordinates lie in the subfield Q(zeta_3),
    i.e. are fixed by every automorphism fixing zeta_3."""
    fixers = (Automorphism(7), Automorphism(13), Automorphism(19))
    return all(point.galois(sigma) == point for sigma in fixers)
