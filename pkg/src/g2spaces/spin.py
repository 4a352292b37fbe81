"""Spinor representation of the seven-dimensional quadratic space.

Spinors live in the eight-dimensional exterior algebra on three odd
generators (indexed 5, 6, 7) over Q(sqrt 2).  The seven Witt vectors act by
Clifford multiplication: the three lowest as signed left derivatives, the
middle one as a scaled parity, the three highest as left multiplications.
The generating relations are

    act(i) act(j) + act(j) act(i) = (-1)^i delta(i+j, 8) * identity.

All vectors of the quadratic space are given by their seven coordinates in
a Witt basis; B(v_i, v_j) = (-1)^(i+1) delta(i+j, 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat, inverse, kernel, rank
from .scalars import HALF_SQRT2, QExt, qext_sqrt

MASKS = [(), (5,), (6,), (7,), (5, 6), (6, 7), (5, 7), (5, 6, 7)]
_INDEX = {mask: i for i, mask in enumerate(MASKS)}
LABELS = ["1", "e5", "e6", "e7", "e56", "e67", "e57", "e567"]


class SpinError(ValueError):
    """Structural failure in a spinor computation."""


class Spinor:
    """An element of the eight-dimensional spinor module over Q(sqrt 2)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = [QExt.lift(c) for c in parts]
        if len(parts) != 8:
            raise ValueError(f"spinor needs 8 components, got {len(parts)}")
        object.__setattr__(self, "parts", tuple(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Spinor is immutable")

    def __getitem__(self, i) -> QExt:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return 8

    def __add__(self, other):
        return Spinor([a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other):
        return Spinor([a - b for a, b in zip(self.parts, other.parts)])

    def __neg__(self):
        return Spinor([-a for a in self.parts])

    def __mul__(self, c):
        return Spinor([a * c for a in self.parts])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def is_zero(self) -> bool:
        return all(not c for c in self.parts)

    def __repr__(self):
        return f"Spinor({list(self.parts)})"

    def __str__(self):
        terms = []
        for c, name in zip(self.parts, LABELS):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            else:
                terms.append(f"({c})*{name}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list:
        return [c.to_json() for c in self.parts]

    @staticmethod
    def from_json(obj) -> "Spinor":
        return Spinor([QExt.from_json(c) for c in obj])


def _mult_matrix(var: int) -> list[list[QExt]]:
    """Left exterior multiplication by the generator with the given index."""
    m = [[QExt.lift(0)] * 8 for _ in range(8)]
    for j, mask in enumerate(MASKS):
        if var in mask:
            continue
        smaller = sum(1 for e in mask if e < var)
        new = tuple(sorted(mask + (var,)))
        m[_INDEX[new]][j] = QExt.lift((-1) ** smaller)
    return m


def _deriv_matrix(var: int) -> list[list[QExt]]:
    """Left derivative with respect to the generator with the given index."""
    m = [[QExt.lift(0)] * 8 for _ in range(8)]
    for j, mask in enumerate(MASKS):
        if var not in mask:
            continue
        pos = mask.index(var)
        new = tuple(e for e in mask if e != var)
        m[_INDEX[new]][j] = QExt.lift((-1) ** pos)
    return m


def _scaled(mat, c):
    return [[e * c for e in row] for row in mat]


def _parity_matrix() -> list[list[QExt]]:
    m = [[QExt.lift(0)] * 8 for _ in range(8)]
    for j, mask in enumerate(MASKS):
        m[j][j] = QExt.lift((-1) ** len(mask))
    return m


_ACTION = [
    None,
    _scaled(_deriv_matrix(7), QExt.lift(-1)),
    _deriv_matrix(6),
    _scaled(_deriv_matrix(5), QExt.lift(-1)),
    _scaled(_parity_matrix(), HALF_SQRT2),
    _mult_matrix(5),
    _mult_matrix(6),
    _mult_matrix(7),
]


def action_matrix(i: int) -> Mat:
    """The 8x8 matrix of the i-th Witt vector acting on spinors, i in 1..7."""
    if not 1 <= i <= 7:
        raise ValueError(f"generator index must be 1..7, got {i}")
    return Mat(_ACTION[i])


def clifford_act(v, s: Spinor) -> Spinor:
    """Action of the vector with Witt coordinates v on the spinor s."""
    v = list(v)
    if len(v) != 7:
        raise ValueError(f"vector needs 7 Witt coordinates, got {len(v)}")
    out = [QExt.lift(0)] * 8
    for i, c in enumerate(v, start=1):
        if not c:
            continue
        m = _ACTION[i]
        for r in range(8):
            row = m[r]
            acc = out[r]
            for j in range(8):
                if row[j] and s.parts[j]:
                    acc = acc + c * row[j] * s.parts[j]
            out[r] = acc
    return Spinor(out)


# The reference non-isotropic spinor: e56 plus (1/sqrt 2) e7.
P_SPINOR = Spinor([0, 0, 0, HALF_SQRT2, 1, 0, 0, 0])


def hatQ(s: Spinor) -> QExt:
    """The invariant quadratic form on spinors; pure spinors are its zeros."""
    c = s.parts
    return c[0] * c[7] + c[2] * c[6] - c[3] * c[4] - c[5] * c[1]


def hatB(s: Spinor, t: Spinor) -> QExt:
    """The symmetric bilinear form with hatB(s, s) = 2 hatQ(s)."""
    a, b = s.parts, t.parts
    return (
        a[0] * b[7]
        + a[7] * b[0]
        + a[2] * b[6]
        + a[6] * b[2]
        - a[3] * b[4]
        - a[4] * b[3]
        - a[5] * b[1]
        - a[1] * b[5]
    )


def witt_form(u, v) -> QExt:
    """The bilinear form on vectors in Witt coordinates."""
    u, v = list(u), list(v)
    out = QExt.lift(0)
    for i in range(7):
        j = 6 - i
        c = QExt.lift((-1) ** i)
        if u[i] and v[j]:
            out = out + c * u[i] * v[j]
    return out


def witt_quadratic(v) -> QExt:
    """Q(v) = B(v, v) / 2 in Witt coordinates."""
    return witt_form(v, v) / 2


def spinor_embed(triple) -> Spinor:
    """The pure spinor line of an isotropic 3-space, from three spanning vectors.

    The joint kernel of the three Clifford actions must be one-dimensional;
    the canonical kernel generator is returned and checked to lie on the
    spinor conic.
    """
    triple = [list(u) for u in triple]
    if len(triple) != 3:
        raise ValueError("need exactly three spanning vectors")
    rows = []
    for u in triple:
        acc = [[QExt.lift(0)] * 8 for _ in range(8)]
        for i, c in enumerate(u, start=1):
            if not c:
                continue
            m = _ACTION[i]
            for r in range(8):
                for j in range(8):
                    if m[r][j]:
                        acc[r][j] = acc[r][j] + c * m[r][j]
        rows.extend(acc)
    ker = kernel(rows)
    if len(ker) != 1:
        raise SpinError(
            f"joint annihilated space has dimension {len(ker)}, expected 1; "
            "the three vectors must span an isotropic 3-space"
        )
    s = Spinor(ker[0])
    if hatQ(s) != 0:
        raise SpinError(f"embedded spinor {s} is off the conic")
    return s


def annihilator(s: Spinor) -> list[list[QExt]]:
    """The 3-space of vectors whose Clifford action kills the spinor s.

    Returns three Witt-coordinate vectors; raises SpinError when the
    annihilated space is not three-dimensional (s not a pure spinor).
    """
    cols = []
    for i in range(1, 8):
        e = [QExt.lift(0)] * 7
        e[i - 1] = QExt.lift(1)
        cols.append(clifford_act(e, s).parts)
    mat = Mat.from_cols(cols)
    ker = kernel(mat.rows)
    if len(ker) != 3:
        raise SpinError(
            f"annihilated space has dimension {len(ker)}, expected 3; "
            "the spinor is not pure"
        )
    return ker


def invariant_surjection(t: Spinor, p: Spinor = P_SPINOR) -> list[QExt]:
    """Vector part of t in the decomposition t = x0 p + sum_i x_i (v_i p).

    Defined for non-isotropic p; returns the seven Witt coordinates."""
    cols = [list(p.parts)]
    for i in range(1, 8):
        e = [QExt.lift(0)] * 7
        e[i - 1] = QExt.lift(1)
        cols.append(clifford_act(e, p).parts)
    m = Mat.from_cols(cols)
    x = inverse(m) * list(t.parts)
    return x[1:]


@dataclass
class Preimages:
    """Isotropic 3-spaces mapping onto the line of a vector v.

    kind is "isotropic" (one space through v), "split" (two transverse
    spaces, direct sum the orthogonal complement of v), or "irrational"
    (the needed square root of -Q(v) is outside Q(sqrt 2): no spaces).
    """

    kind: str
    spaces: list[list[list[QExt]]]
    lines: list[Spinor]


def preimages(v) -> Preimages:
    """All isotropic 3-spaces whose invariant projection hits the vector v."""
    v = [QExt.lift(c) for c in v]
    q = witt_quadratic(v)
    vp = clifford_act(v, P_SPINOR)
    if q == 0:
        if all(not c for c in v):
            raise ValueError("preimages of the zero vector")
        space = annihilator(vp)
        return Preimages(kind="isotropic", spaces=[space], lines=[vp])
    r = qext_sqrt(-q)
    if r is None:
        return Preimages(kind="irrational", spaces=[], lines=[])
    lines = [r * P_SPINOR + vp, (-r) * P_SPINOR + vp]
    spaces = [annihilator(s) for s in lines]
    combined = [list(u) for u in spaces[0] + spaces[1]]
    assert rank(combined) == 6, "preimage spaces do not span the complement"
    for u in combined:
        assert witt_form(u, v) == 0, "preimage space not orthogonal to v"
    return Preimages(kind="split", spaces=spaces, lines=lines)
