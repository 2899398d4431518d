"""Superpotentials, exponent matrices, and quotient Landau-Ginzburg models."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, InvariantViolation, NotInvariantError, ParseError
from .groups import DiagonalGroup, dual_lattice
from .linalg import IntMatrix, IntVector, rat_inverse

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACTOR = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(.*))?\Z", re.S)
_NUMBER = re.compile(r"[+-]?\d+(\.\d*)?\Z")


def _grlex_key(col: IntVector):
    return (sum(col), col)


@dataclass(frozen=True)
class ExponentMatrix:
    """Exponent matrix P of W = sum_j prod_i x_i^P[i][j]; one column per monomial.

    The constructor keeps the column order it is given.  Use :meth:`canonical`
    (or :func:`parse_polynomial`) to get graded-lex descending order.
    """

    P: IntMatrix
    variables: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.P, IntMatrix):
            object.__setattr__(self, "P", IntMatrix(self.P))
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) != self.P.nrows:
            raise DimensionError(f"{len(self.variables)} variable names for {self.P.nrows} rows")
        if len(set(self.variables)) != len(self.variables):
            raise ParseError("variable names must be distinct")
        if any(x < 0 for r in self.P.rows for x in r):
            raise ParseError("exponents must be non-negative")
        cols = self.P.columns()
        if len(set(cols)) != len(cols):
            raise ParseError("duplicate monomial: the monomials of W must be distinct")

    @classmethod
    def canonical(cls, columns: Sequence[Sequence[int]], variables: Sequence[str]) -> "ExponentMatrix":
        cols = sorted((tuple(c) for c in columns), key=_grlex_key, reverse=True)
        if len(set(cols)) != len(cols):
            raise ParseError("duplicate monomial: the monomials of W must be distinct")
        return cls(IntMatrix.from_columns(cols), tuple(variables))

    @property
    def n_vars(self) -> int:
        return self.P.nrows

    @property
    def n_monomials(self) -> int:
        return self.P.ncols

    def columns(self) -> tuple[IntVector, ...]:
        return self.P.columns()

    def unused_variables(self) -> list[str]:
        return [v for v, row in zip(self.variables, self.P.rows) if not any(row)]

    def is_canonical(self) -> bool:
        cols = self.columns()
        return list(cols) == sorted(cols, key=_grlex_key, reverse=True)

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: ExponentMatrix) -> str:
    terms = []
    for col in p.columns():
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(p.variables, col) if e]
        terms.append("*".join(factors) if factors else "1")
    return " + ".join(terms)


def parse_polynomial(text: str, variables: Sequence[str]) -> ExponentMatrix:
    """Parse a sum of coefficient-free monomials such as ``"x0^3*x1 + x1^2*x2"``."""
    variables = tuple(variables)
    if not variables:
        raise ParseError("at least one variable is required")
    for v in variables:
        if not _IDENT.match(v):
            raise ParseError(f"invalid variable name {v!r}")
    index = {v: i for i, v in enumerate(variables)}
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty polynomial")
    columns = []
    for term in compact.split("+"):
        if not term:
            raise ParseError(f"malformed sum in {text!r}: empty term")
        exps = [0] * len(variables)
        for factor in term.split("*"):
            if not factor:
                raise ParseError(f"malformed product in term {term!r}")
            if _NUMBER.match(factor) or factor[0].isdigit() or factor[0] in "-.":
                raise ParseError(f"explicit numeric coefficient {factor!r} in term {term!r}; all coefficients are 1")
            m = _FACTOR.match(factor)
            if not m:
                raise ParseError(f"malformed factor {factor!r}")
            name, power = m.group(1), m.group(2)
            if name not in index:
                raise ParseError(f"unknown variable {name!r}")
            if power is None:
                k = 1
            else:
                if not re.fullmatch(r"-?\d+", power):
                    raise ParseError(f"malformed exponent {power!r} on {name}")
                k = int(power)
                if k <= 0:
                    raise ParseError(f"exponent must be a positive integer, got {k} on {name}")
            exps[index[name]] += k
        columns.append(tuple(exps))
    seen = set()
    for c in columns:
        if c in seen:
            raise ParseError(f"duplicate monomial {format_polynomial(ExponentMatrix(IntMatrix.from_columns([c]), variables))}")
        seen.add(c)
    return ExponentMatrix.canonical(columns, variables)


def is_invariant(p: ExponentMatrix, g: DiagonalGroup) -> bool:
    """True iff every monomial of W is a G-invariant character.

    Pairing is bilinear and Z^N pairs integrally with integer exponents, so
    checking the stored lattice basis is enough.
    """
    if p.n_vars != g.ambient_rank:
        raise DimensionError(f"{p.n_vars} variables but group of rank {g.ambient_rank}")
    return all(
        sum(a * b for a, b in zip(v, col)).denominator == 1
        for v in g.lambda_basis
        for col in p.columns()
    )


@dataclass(frozen=True)
class QuotientLGModel:
    """Presentation (C^{n+1}, W, G) of a quotient LG model; W must be G-invariant."""

    exponents: ExponentMatrix
    group: DiagonalGroup

    def __post_init__(self):
        if not is_invariant(self.exponents, self.group):
            raise NotInvariantError("W is not invariant under G, so it does not descend to the quotient")

    @property
    def P(self) -> IntMatrix:
        return self.exponents.P


@dataclass(frozen=True)
class Factorization:
    """P = A Btau, with the columns of A a canonical basis of the invariant character lattice M."""

    M_basis: tuple[IntVector, ...]
    A: IntMatrix
    Btau: IntMatrix


@dataclass(frozen=True)
class CharacterSum:
    """A sum of characters with coefficient 1, as a sorted multiset of exponent vectors."""

    torus: str
    characters: tuple[IntVector, ...]

    def __post_init__(self):
        chars = tuple(sorted(tuple(int(x) for x in c) for c in self.characters))
        if not chars:
            raise DimensionError("a character sum needs at least one character")
        if len({len(c) for c in chars}) != 1:
            raise DimensionError("characters must all have the same length")
        object.__setattr__(self, "characters", chars)

    @property
    def rank(self) -> int:
        return len(self.characters[0])

    def __len__(self) -> int:
        return len(self.characters)


def factorize(model: QuotientLGModel) -> Factorization:
    p, g = model.P, model.group
    n = g.ambient_rank
    m_basis = dual_lattice(g.lambda_basis, n)
    if any(x.denominator != 1 for b in m_basis for x in b):
        raise InvariantViolation("character lattice of the quotient is not integral")
    cols = tuple(tuple(int(x) for x in b) for b in m_basis)
    a = IntMatrix.from_columns(cols)
    ainv = rat_inverse(a.rows)
    entries = [[sum(ainv[i][k] * p.rows[k][j] for k in range(n)) for j in range(p.ncols)] for i in range(n)]
    if any(Fraction(x).denominator != 1 for r in entries for x in r):
        raise InvariantViolation("A^-1 P is not integral; the model is not G-invariant")
    btau = IntMatrix([[int(x) for x in r] for r in entries])
    if a @ btau != p:
        raise InvariantViolation("A Btau != P")
    return Factorization(cols, a, btau)


def quotient_superpotential(f: Factorization) -> CharacterSum:
    """W_G as characters of the quotient torus: the columns of Btau."""
    return CharacterSum("quotient", f.Btau.columns())
