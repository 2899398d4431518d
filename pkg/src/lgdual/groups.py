"""Finite diagonal subgroups of algebraic tori.

A subgroup G of the rank-N torus is stored through its lattice of logarithms:
the rational vectors v with exp(2 pi i v) in G.  For finite G that lattice
sits between Z^N and Q^N, and group elements are rational vectors taken
modulo 1.  Equality of groups is equality of canonical lattice bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Optional, Sequence

from .errors import DimensionError, EnumerationCapError, RankError
from .linalg import IntMatrix, RatVector, hnf_basis, rank, rat_inverse, snf

DEFAULT_CAP = 10**6


def parse_rational(value) -> Fraction:
    """Read "a/b", "a", or an int.  Floats are refused (they are not exact)."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise ValueError(f"not an exact rational: {value!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def mod1(v: Sequence[Fraction]) -> RatVector:
    """Canonical representative in [0, 1)^N."""
    return tuple(Fraction(x) - (Fraction(x).numerator // Fraction(x).denominator) for x in v)


def _basis_matrix_rows(basis: Sequence[RatVector]) -> list[list[Fraction]]:
    n = len(basis)
    return [[basis[j][i] for j in range(n)] for i in range(n)]


def _rat_det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        k = next((i for i in range(c, n) if a[i][c] != 0), None)
        if k is None:
            return Fraction(0)
        if k != c:
            a[c], a[k] = a[k], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def _triangular_covolume(canon: Sequence[RatVector]) -> Fraction:
    """|det| of a canonical (lower-triangular, positive pivots) full-rank basis."""
    return prod((canon[j][j] for j in range(len(canon))), start=Fraction(1))


def _triangular_contains(canon: Sequence[RatVector], v: Sequence) -> bool:
    n = len(canon)
    rest = [Fraction(x) for x in v]
    for j in range(n):
        c = rest[j] / canon[j][j]
        if c.denominator != 1:
            return False
        if c:
            for i in range(j, n):
                rest[i] -= c * canon[j][i]
    return True


def lattice_coordinates(basis: Sequence[RatVector], v: Sequence) -> RatVector:
    """Coordinates of v in the (full-rank) basis."""
    inv = rat_inverse(_basis_matrix_rows(basis))
    return tuple(sum(a * Fraction(x) for a, x in zip(row, v)) for row in inv)


def lattice_contains(basis: Sequence[RatVector], v: Sequence) -> bool:
    return all(c.denominator == 1 for c in lattice_coordinates(basis, v))


def dual_lattice(basis: Sequence[Sequence], ambient_rank: int) -> tuple[RatVector, ...]:
    """Canonical basis of {u : u.v in Z for every v in the lattice}.

    Computed as the inverse transpose of the basis matrix.
    """
    basis = [tuple(Fraction(x) for x in b) for b in basis]
    if len(basis) != ambient_rank or any(len(b) != ambient_rank for b in basis):
        raise RankError(f"need {ambient_rank} basis vectors of length {ambient_rank}")
    try:
        inv = rat_inverse(_basis_matrix_rows(basis))
    except RankError as exc:
        raise RankError("lattice basis is rank deficient") from exc
    # rows of B^-1 are the columns of (B^-1)^T
    return hnf_basis(inv, ambient_rank)


@dataclass(frozen=True)
class DiagonalGroup:
    """Finite subgroup of (C^*)^N, stored as its canonical lattice of logarithms."""

    ambient_rank: int
    lambda_basis: tuple[RatVector, ...]
    order: int = field(compare=False)

    @classmethod
    def from_lattice(cls, basis: Sequence[Sequence]) -> "DiagonalGroup":
        basis = [tuple(Fraction(x) for x in b) for b in basis]
        n = len(basis[0]) if basis else 0
        if n == 0:
            raise DimensionError("ambient rank must be positive")
        unit = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
        canon = hnf_basis(list(basis) + unit, n)
        # basis spans a sublattice of canon; equal iff the covolumes agree
        if len(basis) != n or abs(_rat_det(_basis_matrix_rows(basis))) != _triangular_covolume(canon):
            raise RankError("lattice does not contain Z^N (group would not be finite or basis is wrong)")
        return cls._from_canonical(canon)

    @classmethod
    def _from_canonical(cls, canon: tuple[RatVector, ...]) -> "DiagonalGroup":
        order = 1 / _triangular_covolume(canon)
        assert order.denominator == 1
        return cls(len(canon), canon, int(order))

    @property
    def generators(self) -> tuple[RatVector, ...]:
        """Non-integral basis vectors reduced mod 1 (together with Z^N they generate the lattice)."""
        return tuple(mod1(b) for b in self.lambda_basis if any(x.denominator != 1 for x in b))

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_rank:
            raise DimensionError(f"element of length {len(v)} in rank {self.ambient_rank}")
        return _triangular_contains(self.lambda_basis, v)

    def relation_matrix(self) -> IntMatrix:
        """Integer matrix whose columns express e_1..e_N in the lattice basis."""
        inv = rat_inverse(_basis_matrix_rows(self.lambda_basis))
        return IntMatrix(inv)


def trivial_group(ambient_rank: int) -> DiagonalGroup:
    return group_from_generators(ambient_rank, [])


def group_from_generators(ambient_rank: int, gens: Sequence[Sequence]) -> DiagonalGroup:
    """The subgroup generated by exp(2 pi i g) for the rational vectors g."""
    if ambient_rank < 1:
        raise DimensionError("ambient rank must be positive")
    vectors = []
    for g in gens:
        if len(g) != ambient_rank:
            raise DimensionError(f"generator {list(g)!r} has length {len(g)}, expected {ambient_rank}")
        vectors.append(tuple(parse_rational(x) for x in g))
    unit = [tuple(Fraction(int(i == j)) for i in range(ambient_rank)) for j in range(ambient_rank)]
    return DiagonalGroup._from_canonical(hnf_basis(unit + vectors, ambient_rank))


def group_equal(g1: DiagonalGroup, g2: DiagonalGroup) -> bool:
    if g1.ambient_rank != g2.ambient_rank:
        raise DimensionError(f"ambient ranks differ: {g1.ambient_rank} vs {g2.ambient_rank}")
    return g1.lambda_basis == g2.lambda_basis


def elementary_divisors(g: DiagonalGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... (each >= 2) of the finite group; product = order."""
    return [d for d in snf(g.relation_matrix()).divisors if d != 1]


def is_subgroup(h: DiagonalGroup, g: DiagonalGroup) -> bool:
    return all(g.contains(b) for b in h.lambda_basis)


def enumerate_elements(g: DiagonalGroup, cap: int = DEFAULT_CAP) -> list[RatVector]:
    """All elements as canonical representatives in [0,1)^N, sorted."""
    if g.order > cap:
        raise EnumerationCapError(g.order, cap)
    dec = snf(g.relation_matrix())
    # U R V = D, so Lambda / Z^N has cyclic generators B U^-1 e_i of order d_i
    uinv = rat_inverse(dec.U.rows)
    n = g.ambient_rank
    lam = g.lambda_basis
    cyc = []
    for i, d in enumerate(dec.divisors):
        if d == 1:
            continue
        col = [uinv[k][i] for k in range(n)]
        vec = tuple(sum(col[k] * lam[k][r] for k in range(n)) for r in range(n))
        cyc.append((d, vec))
    out = set()
    for ks in product(*(range(d) for d, _ in cyc)):
        v = [Fraction(0)] * n
        for k, (_, gen) in zip(ks, cyc):
            if k:
                v = [a + k * b for a, b in zip(v, gen)]
        out.add(mod1(v))
    return sorted(out)


@dataclass(frozen=True)
class KernelGroup:
    """Kernel of a torus homomorphism given by an integer matrix acting on logarithms.

    ``torus_rank`` is the dimension of the identity component; ``finite_divisors``
    are the invariant factors (>= 2) of the component group.  ``lambda_basis`` is
    the canonical lattice of logarithms and is only present for finite kernels.
    """

    ambient_rank: int
    torus_rank: int
    finite_divisors: tuple[int, ...]
    lambda_basis: Optional[tuple[RatVector, ...]]

    @property
    def is_finite(self) -> bool:
        return self.torus_rank == 0

    @property
    def finite_order(self) -> int:
        return prod(self.finite_divisors)

    @property
    def generators(self) -> tuple[RatVector, ...]:
        if self.lambda_basis is None:
            return ()
        return tuple(mod1(b) for b in self.lambda_basis if any(x.denominator != 1 for x in b))

    def as_diagonal_group(self) -> DiagonalGroup:
        if not self.is_finite:
            raise RankError(f"kernel has a torus factor of rank {self.torus_rank}; it is not a finite group")
        return DiagonalGroup.from_lattice(self.lambda_basis)


def kernel_of_character_map(m: IntMatrix) -> KernelGroup:
    """ker of v -> m v on (Q/Z)^cols, i.e. the lattice {v in Q^cols : m v in Z^rows}."""
    dec = snf(m)
    divisors = dec.divisors
    r = len(divisors)
    ncols = m.ncols
    torus_rank = ncols - r
    finite = tuple(d for d in divisors if d != 1)
    basis = None
    if torus_rank == 0:
        # m v in Z  <=>  D V^-1 v in Z  <=>  v in V diag(1/d) Z^cols
        vcols = dec.V.columns()
        basis = hnf_basis([tuple(Fraction(x, divisors[i]) for x in vcols[i]) for i in range(ncols)], ncols)
    assert torus_rank == ncols - rank(m)
    return KernelGroup(ncols, torus_rank, finite, basis)
