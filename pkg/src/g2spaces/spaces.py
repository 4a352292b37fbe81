"""Seven-dimensional spaces of polynomials and their Wronskian invariants.

A space is stored through its canonical basis: the reduced echelon basis
with respect to coefficients, ordered by increasing degree.  All basis
elements are monic with pairwise distinct degrees.  From the basis the
module derives ramification divisors, divided Wronskians, the dual space,
the invariant bilinear form of a self-dual space, and a rescaled Witt basis
whose pairing matrix is exactly antidiagonal.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .linalg import Mat, inverse, rref, solve
from .polynomials import InexactDivisionError, Poly, exact_div, poly_gcd, wronskian


class SpaceError(ValueError):
    """Structural failure in a space computation."""


class BasePointError(SpaceError):
    """All elements of the space share a root."""


class NotSelfDualError(SpaceError):
    """The span of the divided Wronskian duals differs from the space."""


class DegreePatternError(SpaceError):
    """Basis degrees do not fit the two-parameter exponent pattern."""


class WittGramError(SpaceError):
    """The rescaled hyperbolic basis misses the exact antidiagonal pairing."""


def canonicalize(polys) -> list[Poly]:
    """Canonical monic echelon basis of the span, ascending by degree."""
    polys = [Poly.lift(p) for p in polys]
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    top = max(p.degree for p in polys)
    rows = [[p.coeff(top - j) for j in range(top + 1)] for p in polys]
    red, pivots = rref(rows)
    out = [Poly(list(reversed(red.rows[r]))) for r in range(len(pivots))]
    out.reverse()
    return out


def _witt_pair(i: int, j: int) -> Fraction:
    """Pairing of the i-th and j-th Witt vectors, indices 1-based."""
    if i + j != 8:
        return Fraction(0)
    return Fraction((-1) ** (i + 1))


def witt_scales(m: int, n: int) -> list[Fraction]:
    """Leading coefficients of the standard basis for exponent steps (m, n).

    At (m, n) = (1, 2) these are 1/0!, ..., 1/6!.
    """
    return [
        Fraction(1),
        Fraction(1, m),
        Fraction(1, n * (n - m)),
        Fraction(1, (m + n) * n * m),
        Fraction(1, (2 * m + n) * (m + n) * (2 * m) * m),
        Fraction(1, (m + 2 * n) * (2 * n) * (m + n) * n * (n - m)),
        Fraction(1, (2 * m + 2 * n) * (m + 2 * n) * (2 * m + n) * (m + n) * m * n),
    ]


class PolySpace:
    """A space of polynomials over Q with a canonical echelon basis."""

    def __init__(self, polys):
        basis = canonicalize(polys)
        if not basis:
            raise SpaceError("space has no nonzero elements")
        self.basis = tuple(basis)
        self._cache = {}

    # -- structure --------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.basis)

    def __eq__(self, other):
        if not isinstance(other, PolySpace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"PolySpace(dim={self.dim}, degrees={list(self.degrees)})"

    # -- membership -------------------------------------------------------

    def _coord_solver(self):
        key = "coord_cols"
        if key not in self._cache:
            top = self.basis[-1].degree
            cols = [[p.coeff(i) for i in range(top + 1)] for p in self.basis]
            self._cache[key] = (top, Mat.from_cols(cols))
        return self._cache[key]

    def coords(self, f) -> list[Fraction] | None:
        """Coordinates of f in the canonical basis, or None if f is outside."""
        f = Poly.lift(f)
        top, mat = self._coord_solver()
        if f.degree > top:
            return None
        sol = solve(mat, [f.coeff(i) for i in range(top + 1)])
        return sol[0] if sol else None

    def contains(self, f) -> bool:
        return self.coords(f) is not None

    def element(self, coords) -> Poly:
        """The linear combination of the canonical basis with given coords."""
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        out = Poly.zero()
        for c, p in zip(coords, self.basis):
            out = out + p * c
        return out

    # -- ramification -----------------------------------------------------

    def U(self, k: int) -> Poly:
        """Monic gcd of the Wronskians of all k-subsets of the space."""
        if not 1 <= k <= self.dim:
            raise ValueError(f"k must be in 1..{self.dim}, got {k}")
        key = ("U", k)
        if key not in self._cache:
            g = Poly.zero()
            for subset in combinations(self.basis, k):
                g = poly_gcd(g, wronskian(subset))
                if g == Poly.one():
                    break
            if k == 1 and g != Poly.one():
                raise BasePointError(f"all elements share the factor {g}")
            self._cache[key] = g
        return self._cache[key]

    @property
    def ramification(self) -> tuple[Poly, ...]:
        """The monic divisor sequence T_1, ..., T_{dim-1}.

        With R_i the quotient U_{i+1}/U_i, the i-th entry is R_i/R_{i-1}
        (and R_0 = 1); every division here is exact.
        """
        key = "ramification"
        if key not in self._cache:
            try:
                R = [Poly.one()]
                for i in range(1, self.dim):
                    R.append(exact_div(self.U(i + 1), self.U(i)))
                T = tuple(exact_div(R[i], R[i - 1]) for i in range(1, self.dim))
            except InexactDivisionError as exc:
                raise SpaceError(f"ramification sequence is not multiplicative: {exc}")
            self._cache[key] = T
        return self._cache[key]

    # -- divided Wronskians ----------------------------------------------

    def divided_wronskian(self, polys) -> Poly:
        """Wronskian of k space elements divided by the k-th divisor U_k."""
        polys = [Poly.lift(p) for p in polys]
        if not 1 <= len(polys) <= self.dim:
            raise ValueError(f"expected 1..{self.dim} polynomials, got {len(polys)}")
        for p in polys:
            if not self.contains(p):
                raise SpaceError(f"{p} is not an element of {self!r}")
        return exact_div(wronskian(polys), self.U(len(polys)))

    def top_constant(self) -> Fraction:
        """The constant divided Wronskian of the full canonical basis."""
        key = "top_constant"
        if key not in self._cache:
            w = self.divided_wronskian(self.basis)
            if not w.is_constant():
                raise SpaceError("full divided Wronskian is not constant")
            self._cache[key] = w.coeff(0)
        return self._cache[key]

    def duals(self) -> list[Poly]:
        """Divided Wronskians of the basis with one element omitted.

        The i-th dual omits basis element i; its degree complements the
        omitted degree whenever the space is self-dual.
        """
        key = "duals"
        if key not in self._cache:
            self._cache[key] = [
                self.divided_wronskian(self.basis[:i] + self.basis[i + 1 :])
                for i in range(self.dim)
            ]
        return self._cache[key]

    def is_self_dual(self) -> bool:
        """Whether the duals span the space itself."""
        key = "self_dual"
        if key not in self._cache:
            sd = all(self.contains(d) for d in self.duals())
            if sd:
                T = self.ramification
                assert list(T) == list(reversed(T)), "self-dual space with asymmetric divisors"
            self._cache[key] = sd
        return self._cache[key]

    # -- bilinear form ----------------------------------------------------

    def bilinear_form(self) -> "BilinearForm":
        """The invariant symmetric form of a self-dual space.

        Characterized by pairing basis element k with dual i to
        (-1)^(i-1) * delta_ki times the top constant.
        """
        key = "form"
        if key not in self._cache:
            if not self.is_self_dual():
                raise NotSelfDualError(f"{self!r} is not self-dual")
            w_top = self.top_constant()
            cols = [self.coords(d) for d in self.duals()]
            C = Mat.from_cols(cols)
            D = Mat(
                [
                    [w_top * (-1) ** i if i == j else Fraction(0) for j in range(self.dim)]
                    for i in range(self.dim)
                ]
            )
            G = D * inverse(C)
            for i in range(self.dim):
                for j in range(i):
                    assert G.rows[i][j] == G.rows[j][i], "asymmetric invariant form"
            self._cache[key] = BilinearForm(self, G)
        return self._cache[key]

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"basis": [p.to_json() for p in self.basis]}

    @staticmethod
    def from_json(obj) -> "PolySpace":
        return PolySpace([Poly.from_json(row) for row in obj["basis"]])


class BilinearForm:
    """Symmetric invariant form of a self-dual space, as a Gram matrix."""

    def __init__(self, space: PolySpace, gram: Mat):
        self.space = space
        self.gram = gram

    def __call__(self, f, g) -> Fraction:
        cf = self.space.coords(f)
        cg = self.space.coords(g)
        if cf is None or cg is None:
            raise SpaceError("form arguments must lie in the space")
        out = Fraction(0)
        for i, a in enumerate(cf):
            if a:
                for j, b in enumerate(cg):
                    if b:
                        out += a * b * self.gram.rows[i][j]
        return out

    def is_isotropic(self, f) -> bool:
        return self(f, f) == 0


class WittBasis:
    """Seven polynomials pairing antidiagonally: <i, 8-i> = (-1)^(i+1).

    Leading coefficients follow the standard scales for the space's
    exponent steps (m, n), so the basis doubles as the candidate standard
    basis on monomial-type spaces.
    """

    def __init__(self, space: PolySpace, vectors, a: int, m: int, n: int):
        self.space = space
        self.vectors = tuple(vectors)
        self.a = a
        self.m = m
        self.n = n
        self.scales = witt_scales(m, n)
        self._cache = {}

    def coords(self, f) -> list[Fraction] | None:
        """Coordinates of f in the Witt basis, or None if f is outside."""
        key = "mat"
        if key not in self._cache:
            top = self.space.basis[-1].degree
            cols = [[p.coeff(i) for i in range(top + 1)] for p in self.vectors]
            self._cache[key] = (top, Mat.from_cols(cols))
        top, mat = self._cache[key]
        f = Poly.lift(f)
        if f.degree > top:
            return None
        sol = solve(mat, [f.coeff(i) for i in range(top + 1)])
        return sol[0] if sol else None

    def element(self, coords) -> Poly:
        out = Poly.zero()
        for c, p in zip(coords, self.vectors):
            out = out + p * c
        return out

    @staticmethod
    def pair_coords(x, y) -> Fraction:
        """Pairing of two coordinate vectors in the exact antidiagonal form."""
        out = Fraction(0)
        for i in range(7):
            j = 6 - i
            out += x[i] * y[j] * _witt_pair(i + 1, j + 1)
        return out

    def __repr__(self):
        return f"WittBasis(a={self.a}, m={self.m}, n={self.n})"


def degree_steps(space: PolySpace) -> tuple[int, int, int]:
    """The parameters (a, m, n) of the basis degree pattern.

    Degrees must be a, a+m, a+n, a+m+n, a+2m+n, a+m+2n, a+2m+2n with
    0 < m < n; raises DegreePatternError otherwise.
    """
    degs = list(space.degrees)
    if len(degs) != 7:
        raise DegreePatternError(f"need dimension 7, got {len(degs)}")
    a = degs[0]
    m = degs[1] - a
    n = degs[2] - a
    expect = [a, a + m, a + n, a + m + n, a + 2 * m + n, a + m + 2 * n, a + 2 * m + 2 * n]
    if not 0 < m < n or degs != expect:
        raise DegreePatternError(f"degrees {degs} do not fit steps (m, n) = ({m}, {n})")
    return a, m, n


def witt_basis(space: PolySpace) -> WittBasis:
    """Hyperbolic basis with standard leading scales and exact pairing.

    Pairs off lowest against highest degrees, reducing against earlier
    pairs, then rescales by the standard leading coefficients.  Raises
    WittGramError when the rescaled pairing is not exactly antidiagonal,
    which cannot happen for a space carrying a standard basis.
    """
    B = space.bilinear_form()
    a, m, n = degree_steps(space)
    pool = list(space.basis)
    pairs = []

    def reduce_elt(x):
        for p, q, t in pairs:
            x = x - p * (B(x, q) / t) - q * (B(x, p) / t)
        return x

    for _ in range(3):
        low = reduce_elt(pool.pop(0))
        high = reduce_elt(pool.pop())
        if B(low, low) != 0:
            raise WittGramError(f"degree-{low.degree} vector is not isotropic")
        t = B(low, high)
        if t == 0:
            raise WittGramError(
                f"degenerate pairing between degrees {low.degree} and {high.degree}"
            )
        high = high - low * (B(high, high) / (2 * t))
        pairs.append((low, high, t))
    mid = reduce_elt(pool.pop())
    assert not pool

    monic = [pairs[0][0], pairs[1][0], pairs[2][0], mid, pairs[2][1], pairs[1][1], pairs[0][1]]
    scales = witt_scales(m, n)
    vectors = [p * s for p, s in zip(monic, scales)]
    for i in range(7):
        for j in range(i, 7):
            got = B(vectors[i], vectors[j])
            want = _witt_pair(i + 1, j + 1)
            if got != want:
                raise WittGramError(
                    f"pairing of rescaled vectors ({i + 1}, {j + 1}) is {got}, expected {want}"
                )
    return WittBasis(space, vectors, a, m, n)


def ramification(space: PolySpace) -> tuple[Poly, ...]:
    return space.ramification


def divided_wronskian(space: PolySpace, polys) -> Poly:
    return space.divided_wronskian(polys)


def check_self_dual(space: PolySpace) -> bool:
    return space.is_self_dual()


def bilinear_form(space: PolySpace) -> BilinearForm:
    return space.bilinear_form()


def monomial_space(m: int, n: int, a: int = 0) -> PolySpace:
    """The span of x^(a+e) over the seven standard exponents e for (m, n)."""
    if not 0 < m < n:
        raise ValueError("need 0 < m < n")
    exps = [0, m, n, m + n, 2 * m + n, m + 2 * n, 2 * m + 2 * n]
    return PolySpace([Poly.monomial(a + e) for e in exps])


def degree_window_space() -> PolySpace:
    """All polynomials of degree at most six: the (1, 2) monomial space."""
    return monomial_space(1, 2)
