"""The dual quotient LG model, Krawitz's dual group, weight vectors, Calabi-Yau test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import PreconditionError, RankError
from .groups import DiagonalGroup, KernelGroup, dual_lattice, kernel_of_character_map
from .linalg import IntMatrix, IntVector, adjugate, det, integer_kernel, rat_inverse, vector_gcd
from .model import CharacterSum, ExponentMatrix, Factorization, QuotientLGModel, factorize


@dataclass(frozen=True)
class DualModel:
    """Data of the dual model: P^T, the dual group, and its factorization P^T = B A^T."""

    source: QuotientLGModel
    factorization: Factorization
    Ptau: IntMatrix
    GT: KernelGroup
    B: IntMatrix
    Atau: IntMatrix


def dualize(model: QuotientLGModel) -> DualModel:
    f = factorize(model)
    gt = kernel_of_character_map(f.Btau)
    return DualModel(model, f, model.P.T, gt, f.Btau.T, f.A.T)


def dual_superpotential(f: Factorization) -> CharacterSum:
    """Dual superpotential restricted to the common torus F(M^T): the rows of A."""
    return CharacterSum("dual-common", f.A.rows)


def dual_as_model(dual: DualModel, prefix: str = "y") -> QuotientLGModel:
    """The dual as a QuotientLGModel (variables indexed by the source monomials).

    Column order is kept as the transpose of P so coordinates stay aligned.
    """
    gt = dual.GT.as_diagonal_group()
    names = tuple(f"{prefix}{j}" for j in range(dual.Ptau.nrows))
    return QuotientLGModel(ExponentMatrix(dual.Ptau, names), gt)


def _square_invertible(p: Union[ExponentMatrix, IntMatrix]) -> IntMatrix:
    m = p.P if isinstance(p, ExponentMatrix) else p
    if not m.is_square():
        raise PreconditionError(f"exponent matrix must be square, got {m.nrows}x{m.ncols}")
    if det(m) == 0:
        raise PreconditionError("exponent matrix is singular over Q")
    return m


def krawitz_dual(p: Union[ExponentMatrix, IntMatrix], g: DiagonalGroup) -> DiagonalGroup:
    """Krawitz's dual group, in logarithmic coordinates of the dual torus.

    An exponent r in Z^N passes the defining condition iff r pairs integrally
    with all of Lambda_G, i.e. r lies in the dual lattice M; the element it
    names has logarithm P^-1 r.  So Lambda_{G^dagger} = P^-1 M.
    """
    m = _square_invertible(p)
    n = m.nrows
    if g.ambient_rank != n:
        raise PreconditionError(f"group of rank {g.ambient_rank} for {n} variables")
    chars = dual_lattice(g.lambda_basis, n)
    pinv = rat_inverse(m.rows)
    images = [tuple(sum(pinv[i][k] * c[k] for k in range(n)) for i in range(n)) for c in chars]
    try:
        return DiagonalGroup.from_lattice(images)
    except RankError as exc:
        raise PreconditionError("W is not invariant under G (P^-1 M does not contain Z^N)") from exc


@dataclass(frozen=True)
class WeightLattice:
    basis: tuple[IntVector, ...]
    rank: int
    generator: Optional[IntVector] = None


def weight_lattice(monomials: CharacterSum) -> WeightLattice:
    """All integer q with q.(c_j - c_k) = 0 for every pair of monomials."""
    chars = monomials.characters
    if not chars:
        raise PreconditionError("no monomials")
    n = monomials.rank
    diffs = [tuple(a - b for a, b in zip(c, chars[0])) for c in chars[1:]]
    if not diffs:
        basis = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    else:
        basis = integer_kernel(IntMatrix(diffs))
    gen = normalize_weight_generator(WeightLattice(basis, len(basis)), monomials) if len(basis) == 1 else None
    return WeightLattice(basis, len(basis), gen)


def normalize_weight_generator(w: WeightLattice, monomials: CharacterSum) -> IntVector:
    """Primitive generator of a rank-1 weight lattice, signed to pair positively with W."""
    if w.rank != 1:
        raise PreconditionError(f"weight lattice has rank {w.rank}, expected 1")
    q = w.basis[0]
    g = vector_gcd(q)
    q = tuple(x // g for x in q)
    pairings = [sum(a * b for a, b in zip(q, c)) for c in monomials.characters]
    if all(x < 0 for x in pairings):
        q = tuple(-x for x in q)
    elif not all(x > 0 for x in pairings):
        lead = next(x for x in q if x)
        if lead < 0:
            q = tuple(-x for x in q)
    return q


@dataclass(frozen=True)
class CyReport:
    square: bool
    invertible: bool
    sign_uniform: bool
    sum_matches_det: bool
    weights_row: Optional[IntVector]
    det: Optional[int]

    @property
    def is_calabi_yau(self) -> bool:
        return self.square and self.invertible and self.sign_uniform and self.sum_matches_det

    def reasons(self) -> list[str]:
        out = []
        if not self.square:
            out.append("exponent matrix is not square")
            return out
        if not self.invertible:
            out.append("exponent matrix is singular")
        if not self.sign_uniform:
            out.append(f"weights row {list(self.weights_row)} is not strictly of one sign")
        if not self.sum_matches_det:
            out.append(f"sum {sum(self.weights_row)} ≠ det {self.det}")
        return out


def is_calabi_yau(p: Union[ExponentMatrix, IntMatrix]) -> CyReport:
    """Evaluate (1..1) adj(P) against det(P); the report says which clause fails."""
    m = p.P if isinstance(p, ExponentMatrix) else p
    if not m.is_square():
        return CyReport(False, False, False, False, None, None)
    d = det(m)
    adj = adjugate(m)
    row = tuple(sum(r[j] for r in adj.rows) for j in range(m.ncols))
    uniform = all(x > 0 for x in row) or all(x < 0 for x in row)
    return CyReport(True, d != 0, uniform, sum(row) == d, row, d)

