"""Bundled test corpus: invertible polynomials and their diagonal symmetry groups."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .groups import DiagonalGroup, enumerate_elements, group_from_generators, trivial_group
from .linalg import IntMatrix, det, rat_inverse
from .model import ExponentMatrix, QuotientLGModel, is_invariant, parse_polynomial

MAX_SUBGROUP_ORDER = 81

# (name, variables, polynomial); all square with nonzero determinant
POLYNOMIALS = (
    ("fermat-2-2", "xy", "x^2 + y^2"),
    ("fermat-3-3", "xy", "x^3 + y^3"),
    ("chain-1-2", "xy", "x*y + y^2"),
    ("chain-2-3", "xy", "x^2*y + y^3"),
    ("loop-2-2", "xy", "x^2*y + y^2*x"),
    ("loop-3-3", "xy", "x^3*y + y^3*x"),
    ("fermat-cubic", "xyz", "x^3 + y^3 + z^3"),
    ("loop-cubic", "xyz", "x^2*y + y^2*z + z^2*x"),
    ("chain-cubic", "xyz", "x^2*y + y^2*z + z^3"),
    ("fermat-loop-cubic", "xyz", "x^3 + y^2*z + z^2*y"),
    ("loop-fermat-cubic", "xyz", "x^2*y + y^2*x + z^3"),
    ("fermat-chain-cubic", "xyz", "x^3 + y^2*z + z^3"),
    ("fermat-quadric-3", "xyz", "x^2 + y^2 + z^2"),
    ("fermat-quadric-4", "xyzw", "x^2 + y^2 + z^2 + w^2"),
    ("loop-quartic", "xyzw", "x^3*y + y^3*z + z^3*w + w^3*x"),
    ("chain-quartic", "xyzw", "x^3*y + y^3*z + z^3*w + w^4"),
    ("loop-loop-quartic", "xyzw", "x^3*y + y^3*x + z^3*w + w^3*z"),
    ("loop-loop-4", "xyzw", "x^2*y + y^2*x + z^2*w + w^2*z"),
)


@dataclass(frozen=True)
class CorpusModel:
    name: str
    model: QuotientLGModel


def polynomial(name: str) -> ExponentMatrix:
    for n, variables, text in POLYNOMIALS:
        if n == name:
            return parse_polynomial(text, list(variables))
    raise KeyError(name)


def max_symmetry_group(p: ExponentMatrix) -> DiagonalGroup:
    """All diagonal symmetries of W: {v : P^T v integral} = (P^T)^-1 Z^N."""
    m = p.P
    inv = rat_inverse(m.T.rows)
    return group_from_generators(m.nrows, [tuple(inv[i][j] for i in range(m.nrows)) for j in range(m.ncols)])


def subgroups(g: DiagonalGroup, max_order: int = MAX_SUBGROUP_ORDER) -> list[DiagonalGroup]:
    """Every subgroup of g with order <= max_order, by closing under adjoining elements."""
    elements = enumerate_elements(g)
    start = trivial_group(g.ambient_rank)
    seen = {start.lambda_basis: start}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for e in elements:
                if h.contains(e):
                    continue
                k = group_from_generators(g.ambient_rank, list(h.generators) + [e])
                if k.order <= max_order and k.lambda_basis not in seen:
                    seen[k.lambda_basis] = k
                    nxt.append(k)
        frontier = nxt
    return sorted(seen.values(), key=lambda h: (h.order, h.lambda_basis))


@lru_cache(maxsize=None)
def _polynomial_subgroups(name: str, max_order: int) -> tuple[DiagonalGroup, ...]:
    return tuple(subgroups(max_symmetry_group(polynomial(name)), max_order))


@lru_cache(maxsize=None)
def square_corpus(max_order: int = MAX_SUBGROUP_ORDER) -> tuple[CorpusModel, ...]:
    """Every corpus polynomial paired with every invariant subgroup of order <= max_order."""
    out = []
    for name, _, _ in POLYNOMIALS:
        p = polynomial(name)
        for i, h in enumerate(_polynomial_subgroups(name, max_order)):
            out.append(CorpusModel(f"{name}/G{i}", QuotientLGModel(p, h)))
    return tuple(out)


def calabi_yau_pairs(max_order: int = MAX_SUBGROUP_ORDER) -> list[tuple[CorpusModel, CorpusModel]]:
    """Pairs of distinct CY corpus polynomials of equal rank, for each group both are invariant under."""
    from .duality import is_calabi_yau

    cy = [(n, polynomial(n)) for n, _, _ in POLYNOMIALS if is_calabi_yau(polynomial(n)).is_calabi_yau]
    pairs = []
    for (na, pa), (nb, pb) in combinations(cy, 2):
        if pa.n_vars != pb.n_vars:
            continue
        for i, h in enumerate(_polynomial_subgroups(na, max_order)):
            if is_invariant(pb, h):
                pairs.append(
                    (CorpusModel(f"{na}/G{i}", QuotientLGModel(pa, h)), CorpusModel(f"{nb}/G{i}", QuotientLGModel(pb, h)))
                )
    return pairs


def random_group(rng: random.Random, rank: int = 3, max_order: int = 27) -> DiagonalGroup:
    while True:
        d = rng.choice((2, 3))
        gens = [tuple(Fraction(rng.randrange(d), d) for _ in range(rank)) for _ in range(rng.randint(1, 2))]
        g = group_from_generators(rank, gens)
        if g.order <= max_order:
            return g


def invariant_monomials(g: DiagonalGroup, max_exponent: int = 6) -> list[tuple[int, ...]]:
    pool = []
    for e in product(range(max_exponent + 1), repeat=g.ambient_rank):
        if any(e) and all(sum(Fraction(a) * b for a, b in zip(v, e)).denominator == 1 for v in g.lambda_basis):
            pool.append(e)
    return pool


def random_invariant_pair(rng: random.Random, rank: int = 3) -> tuple[QuotientLGModel, QuotientLGModel]:
    """Two random superpotentials invariant under one random group of order <= 27."""
    g = random_group(rng, rank)
    pool = invariant_monomials(g)
    names = [f"x{i}" for i in range(rank)]
    models = []
    for _ in range(2):
        cols = rng.sample(pool, rng.randint(1, min(5, len(pool))))
        models.append(QuotientLGModel(ExponentMatrix.canonical(cols, names), g))
    return models[0], models[1]


def is_square_invertible(p: ExponentMatrix) -> bool:
    m: IntMatrix = p.P
    return m.is_square() and det(m) != 0
