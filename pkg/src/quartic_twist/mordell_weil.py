"""The group of divisor classes of the quartic over Q(zeta_8) and its
Galois module structure.

The group is M = (Z/4)^5 + Z/2 with basis e_1..e_6 of cusp-difference
classes.  The dictionary expanding every cusp difference alpha_i, beta_i,
gamma_i in that basis is carried as constant data (it is established by
an external Riemann-Roch computation and is cross-checked here only for
internal consistency); everything downstream - action matrices, fixed
submodules, images, torsor searches - is recomputed from scratch by
brute-force enumeration of all 2048 elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .curve import CUSP_BY_POINT
from .divisors import BASIS_CUSP_SUPPORT, Divisor

MODULI = (4, 4, 4, 4, 4, 2)


class ModElement:
    """Element of (Z/4)^5 + Z/2 in the basis e_1..e_6."""

    __slots__ = ("c",)

    def __init__(self, coords: Iterable[int] = ()):
        coords = tuple(coords)
        if len(coords) > 6:
            raise ValueError("at most 6 coordinates")
        coords = coords + (0,) * (6 - len(coords))
        self.c = tuple(x % m for x, m in zip(coords, MODULI))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModElement):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def __add__(self, other: ModElement) -> ModElement:
        return ModElement(x + y for x, y in zip(self.c, other.c))

    def __neg__(self) -> ModElement:
        return ModElement(-x for x in self.c)

    def __sub__(self, other: ModElement) -> ModElement:
        return ModElement(x - y for x, y in zip(self.c, other.c))

    def __mul__(self, n: int) -> ModElement:
        if not isinstance(n, int):
            return NotImplemented
        return ModElement(n * x for x in self.c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, x in enumerate(self.c):
            if x:
                parts.append(f"e_{i + 1}" if x == 1 else f"{x}e_{i + 1}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ModElement({self.c})"


ZERO_ELEMENT = ModElement()

E_BASIS = tuple(
    ModElement(tuple(1 if j == i else 0 for j in range(6))) for i in range(6)
)


def all_elements() -> Iterator[ModElement]:
    """All 2048 elements, in lexicographic coordinate order."""
    for coords in itertools.product(*(range(m) for m in MODULI)):
        yield ModElement(coords)


class ActionMatrix:
    """6x6 integer matrix acting on M by  m -> rows . m, with row i read
    modulo the modulus of the target coordinate.

    Well-definedness requires the image of the order-2 generator e_6 to be
    killed by 2, i.e. the first five entries of column 6 must be even.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(x % MODULI[i] for x in row) for i, row in enumerate(rows))
        if len(rows) != 6 or any(len(row) != 6 for row in rows):
            raise ValueError("need a 6x6 matrix")
        for i in range(5):
            if rows[i][5] % 2:
                raise ValueError("column 6 must map the order-2 generator to 2-torsion")
        self.rows = rows

    @classmethod
    def identity(cls) -> ActionMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(6)) for i in range(6)))

    @classmethod
    def from_columns(cls, columns: Sequence[ModElement]) -> ActionMatrix:
        return cls(tuple(tuple(col.c[i] for col in columns) for i in range(6)))

    def column(self, j: int) -> ModElement:
        return ModElement(tuple(self.rows[i][j] for i in range(6)))

    def __call__(self, m: ModElement) -> ModElement:
        return ModElement(
            sum(r * x for r, x in zip(row, m.c)) for row in self.rows
        )

    def __mul__(self, other: ActionMatrix) -> ActionMatrix:
        return ActionMatrix(
            tuple(
                tuple(
                    sum(self.rows[i][k] * other.rows[k][j] for k in range(6))
                    for j in range(6)
                )
                for i in range(6)
            )
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ActionMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ActionMatrix({self.rows})"


# matrices of the two Galois generators on the basis e_1..e_6
PRINTED_S3 = ActionMatrix((
    (2, 1, 0, 0, 3, 0),
    (1, 2, 0, 0, 3, 0),
    (1, 1, 3, 2, 0, 2),
    (1, 3, 0, 3, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 1),
))
PRINTED_S5 = ActionMatrix((
    (1, 2, 0, 0, 2, 0),
    (2, 1, 0, 0, 2, 0),
    (2, 2, 3, 0, 0, 0),
    (2, 0, 2, 3, 0, 2),
    (0, 0, 0, 0, 3, 0),
    (0, 0, 0, 0, 0, 1),
))


@dataclass(frozen=True)
class Dictionary:
    """Expansions of the cusp differences alpha_i = [A_i - B_0],
    beta_i = [B_i - B_0], gamma_i = [C_i - B_0] in the basis e_1..e_6."""

    alpha: tuple[ModElement, ModElement, ModElement, ModElement]
    beta: tuple[ModElement, ModElement, ModElement, ModElement]
    gamma: tuple[ModElement, ModElement, ModElement, ModElement]

    def entry(self, cusp: str) -> ModElement:
        family, index = cusp[0], int(cusp[1])
        return {"A": self.alpha, "B": self.beta, "C": self.gamma}[family][index]

    def basis_consistent(self) -> bool:
        """alpha_1, alpha_2, beta_1, beta_2, gamma_1 are the basis vectors
        e_1..e_5 and beta_0 = [B_0 - B_0] = 0."""
        return (
            self.alpha[1] == E_BASIS[0]
            and self.alpha[2] == E_BASIS[1]
            and self.beta[0] == ZERO_ELEMENT
            and self.beta[1] == E_BASIS[2]
            and self.beta[2] == E_BASIS[3]
            and self.gamma[1] == E_BASIS[4]
        )

    def gamma2_consistent(self) -> bool:
        """gamma_2 rearranges the definition
        e_6 = alpha_1 + alpha_2 + beta_1 + beta_2 + gamma_1 + gamma_2."""
        total = (
            self.alpha[1] + self.alpha[2] + self.beta[1] + self.beta[2]
            + self.gamma[1] + self.gamma[2]
        )
        return total == E_BASIS[5]


CUSP_DICTIONARY = Dictionary(
    alpha=(
        ModElement((2, 1, 2, 1, 0, 0)),
        ModElement((1, 0, 0, 0, 0, 0)),
        ModElement((0, 1, 0, 0, 0, 0)),
        ModElement((1, 2, 2, 3, 0, 0)),
    ),
    beta=(
        ModElement((0, 0, 0, 0, 0, 0)),
        ModElement((0, 0, 1, 0, 0, 0)),
        ModElement((0, 0, 0, 1, 0, 0)),
        ModElement((0, 0, 3, 3, 0, 0)),
    ),
    gamma=(
        ModElement((3, 3, 1, 0, 1, 1)),
        ModElement((0, 0, 0, 0, 1, 0)),
        ModElement((3, 3, 3, 3, 3, 1)),
        ModElement((2, 2, 0, 1, 3, 0)),
    ),
)

def perturbed_dictionary(name: str, index: int, delta: int) -> Dictionary:
    """Copy of the standard dictionary with one coordinate bumped."""
    family, i = name.rstrip("0123"), int(name[-1])
    data = {
        "alpha": list(CUSP_DICTIONARY.alpha),
        "beta": list(CUSP_DICTIONARY.beta),
        "gamma": list(CUSP_DICTIONARY.gamma),
    }
    coords = list(data[family][i].c)
    coords[index] += delta
    data[family][i] = ModElement(coords)
    return Dictionary(
        alpha=tuple(data["alpha"]), beta=tuple(data["beta"]), gamma=tuple(data["gamma"])
    )


def cusp_class(
    divisor: Divisor, dictionary: Dictionary = CUSP_DICTIONARY
) -> ModElement:
    """Divisor class of a degree-0 divisor supported on the twelve cusps.

    Writes the divisor as an integer combination of the differences
    [cusp - B_0] and sums the dictionary entries.
    """
    if divisor.degree() != 0:
        raise ValueError("cusp_class needs a degree-0 divisor")
    total = ZERO_ELEMENT
    for point, n in divisor.items():
        name = CUSP_BY_POINT.get(point)
        if name is None:
            raise ValueError(f"support point {point} is not a cusp")
        total = total + n * dictionary.entry(name)
    return total


def derive_action_matrix(
    permutation: Mapping[str, str], dictionary: Dictionary = CUSP_DICTIONARY
) -> ActionMatrix:
    """Matrix of a Galois element from its cusp permutation: permute the
    cusp divisor underlying each basis class and re-expand."""
    columns = []
    for i in range(6):
        support = BASIS_CUSP_SUPPORT[f"e{i + 1}"]
        column = ZERO_ELEMENT
        for cusp, n in support.items():
            column = column + n * dictionary.entry(permutation[cusp])
        columns.append(column)
    return ActionMatrix.from_columns(columns)


def fixed_submodule(matrices: Sequence[ActionMatrix]) -> tuple[ModElement, ...]:
    """All elements fixed by every matrix, by enumeration of all 2048."""
    return tuple(
        m for m in all_elements() if all(s(m) == m for s in matrices)
    )


def image_submodule(s: ActionMatrix) -> frozenset[ModElement]:
    """The image of (s - 1), by enumeration."""
    return frozenset(s(m) - m for m in all_elements())


def two_torsion_multiples() -> frozenset[ModElement]:
    """The subgroup 2M."""
    return frozenset(2 * m for m in all_elements())


def pic1_has_fixed_point(s: ActionMatrix, shift: ModElement) -> bool:
    """Whether the twisted fixed-point equation (s - 1) m = -shift has a
    solution; `shift` is the class of (sigma - 1) applied to the chosen
    degree-1 base point."""
    target = -shift
    return any(s(m) - m == target for m in all_elements())


def subgroup_generated(generators: Iterable[ModElement]) -> frozenset[ModElement]:
    """Closure of a generating set under addition."""
    generators = tuple(generators)
    members = {ZERO_ELEMENT}
    frontier = [ZERO_ELEMENT]
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = current + g
            if nxt not in members:
                members.add(nxt)
                frontier.append(nxt)
    return frozenset(members)


# classes of the certified divisor identities, in e-coordinates
CLASS_D1_MINUS_D0 = ModElement((0, 0, 2, 2, 0, 0))
CLASS_D2_MINUS_D0 = ModElement((2, 2, 2, 2, 0, 0))
CLASS_D3_MINUS_D0 = ModElement((2, 2, 0, 0, 0, 0))
CLASS_E = ModElement((0, 0, 0, 2, 0, 0))

# printed shifts (sigma - 1)[A_0] used by the torsor searches
PRINTED_SHIFTS = {
    "sigma_5": ModElement((2, 0, 2, 3, 0, 0)),
    "sigma_3": ModElement((3, 3, 2, 3, 0, 0)),
    "sigma_3 sigma_5": ModElement((3, 1, 0, 2, 0, 0)),
}
