"""Mechanical checks of the duality theorems, with independent brute-force oracles.

Every verdict is decided by exact arithmetic.  The floating-point evaluations
at random torus points are a sanity layer recorded next to the exact checks;
they never decide a verdict on their own.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .duality import (
    dual_as_model,
    dual_superpotential,
    dualize,
    is_calabi_yau,
    krawitz_dual,
    weight_lattice,
)
from .errors import DomainError, EnumerationCapError, PreconditionError
from .groups import DEFAULT_CAP, DiagonalGroup, enumerate_elements, group_equal, group_from_generators, mod1
from .linalg import IntMatrix, adjugate, det, rat_inverse, snf
from .model import CharacterSum, QuotientLGModel, factorize, is_invariant
from . import serialize as ser

NUMERIC_TOL = 1e-9
NUMERIC_POINTS = 20

CONVENTIONS = (
    "basis of M: column Hermite normal form of the lattice of G-invariant characters",
    "weight generator: primitive, signed to pair positively with every monomial when possible, else first nonzero entry positive",
    "superpotential coefficients fixed to 1; birationality certified by shared A and shared weight lattice",
)


@dataclass
class Certificate:
    theorem: str
    inputs: dict
    witnesses: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values()) and not self.diagnostics

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "inputs": self.inputs,
            "witnesses": self.witnesses,
            "checks": self.checks,
            "diagnostics": self.diagnostics,
            "seed": self.seed,
            "conventions": list(CONVENTIONS),
            "verdict": self.verdict,
        }


# -- numeric sanity layer ----------------------------------------------------


def oracle_numeric_superpotential(chars: CharacterSum, point: Sequence[complex]) -> complex:
    """Sum over characters c of prod_k point[k]**c[k], in floating point."""
    if len(point) != chars.rank:
        raise DomainError(f"point of length {len(point)} for characters of length {chars.rank}")
    if any(z == 0 for z in point):
        raise DomainError("point must lie on the torus (no zero coordinates)")
    total = 0j
    for c in chars.characters:
        term = 1 + 0j
        for z, e in zip(point, c):
            if e:
                term *= complex(z) ** e
        total += term
    return total


def random_torus_point(rng: random.Random, n: int) -> list[complex]:
    return [cmath.exp(2j * math.pi * rng.random()) for _ in range(n)]


def numeric_agreement(a: CharacterSum, b: CharacterSum, rng: random.Random, points: int = NUMERIC_POINTS) -> float:
    """Largest |a(x) - b(x)| over random unit-modulus points."""
    worst = 0.0
    for _ in range(points):
        x = random_torus_point(rng, a.rank)
        worst = max(worst, abs(oracle_numeric_superpotential(a, x) - oracle_numeric_superpotential(b, x)))
    return worst


def numeric_invariance(model_or_p, g: DiagonalGroup, rng: random.Random, points: int = NUMERIC_POINTS) -> bool:
    """Floating-point test of W(g.x) == W(x) for each lattice generator g."""
    p = model_or_p.P if hasattr(model_or_p, "P") else model_or_p
    w = CharacterSum("source", p.columns())
    for v in g.lambda_basis:
        phase = [cmath.exp(2j * math.pi * float(x)) for x in v]
        for _ in range(points):
            x = random_torus_point(rng, g.ambient_rank)
            gx = [a * b for a, b in zip(phase, x)]
            if abs(oracle_numeric_superpotential(w, gx) - oracle_numeric_superpotential(w, x)) >= NUMERIC_TOL:
                return False
    return True


# -- brute-force oracles -----------------------------------------------------


def oracle_kernel_bruteforce(btau: IntMatrix, exponent_bound: int, cap: int = DEFAULT_CAP) -> list[tuple[Fraction, ...]]:
    """All v in (1/d)Z^cols mod 1 with btau v integral, by exhaustive search."""
    d = exponent_bound
    count = d ** btau.ncols
    if count > cap:
        raise EnumerationCapError(count, cap, "kernel candidates")
    rows = btau.rows
    out = []
    for k in product(range(d), repeat=btau.ncols):
        if all(sum(a * x for a, x in zip(r, k)) % d == 0 for r in rows):
            out.append(tuple(Fraction(x, d) for x in k))
    return out


def oracle_krawitz_bruteforce(p: IntMatrix, g: DiagonalGroup, cap: int = DEFAULT_CAP) -> list[tuple[Fraction, ...]]:
    """Elements of Krawitz's dual group straight from its defining condition.

    Every class r in Z^N / P Z^N is tested: r (P^T)^-1 a must be an integer for
    every exponent vector a with g^a in G.  Accepted classes are returned as
    logarithms P^-1 r mod 1.
    """
    if not p.is_square() or det(p) == 0:
        raise PreconditionError("Krawitz duality needs a square invertible exponent matrix")
    n = p.nrows
    dp = det(p)
    count = abs(dp)
    if count > cap:
        raise EnumerationCapError(count, cap, "exponent classes")
    if g.order > cap:
        raise EnumerationCapError(g.order, cap)
    pt = p.T
    # a ranges over P^T lambda for lambda in Lambda_G; representatives plus the relations P^T e_i
    avecs = set(pt.columns())
    for lam in enumerate_elements(g, cap):
        a = pt.apply(lam)
        assert all(x.denominator == 1 for x in a), "W is not G-invariant"
        avecs.add(tuple(int(x) for x in a))
    adj_pt = adjugate(pt)  # (P^T)^-1 = adj(P^T) / det
    dec = snf(p)
    uinv = rat_inverse(dec.U.rows)
    pinv = rat_inverse(p.rows)
    found = set()
    for k in product(*(range(d) for d in dec.divisors)):
        r = [int(sum(uinv[i][j] * k[j] for j in range(n))) for i in range(n)]
        row = [sum(r[i] * adj_pt.rows[i][j] for i in range(n)) for j in range(n)]
        if all(sum(x * y for x, y in zip(row, a)) % dp == 0 for a in avecs):
            found.add(mod1([sum(pinv[i][j] * r[j] for j in range(n)) for i in range(n)]))
    return sorted(found)


# -- theorem checks ----------------------------------------------------------


def _pair_inputs(a: QuotientLGModel, b: QuotientLGModel) -> dict:
    return {"model_a": ser.model_json(a), "model_b": ser.model_json(b)}


def _equal_sups_into(cert: Certificate, a: QuotientLGModel, b: QuotientLGModel, seed: int):
    """Shared part of the pairwise checks.  Returns both factorizations or None on hypothesis failure."""
    na, nb = a.group.ambient_rank, b.group.ambient_rank
    cert.checks["same_ambient_rank"] = na == nb
    if na != nb:
        cert.diagnostics.append(f"ambient ranks differ: {na} vs {nb}")
        return None
    same = group_equal(a.group, b.group)
    cert.checks["groups_equal"] = same
    if not same:
        cert.diagnostics.append("groups differ: the theorem requires the same group G for both models")
        return None
    fa, fb = factorize(a), factorize(b)
    sa, sb = dual_superpotential(fa), dual_superpotential(fb)
    cert.checks["A_equal"] = fa.A == fb.A
    cert.checks["restricted_superpotentials_equal"] = sa == sb
    worst = numeric_agreement(sa, sb, random.Random(seed))
    cert.witnesses.update(
        {
            "group": ser.group_json(a.group),
            "A": ser.matrix_json(fa.A),
            "A_b": ser.matrix_json(fb.A),
            "Btau_a": ser.matrix_json(fa.Btau),
            "Btau_b": ser.matrix_json(fb.Btau),
            "restricted_dual_superpotential": ser.character_sum_json(sa),
            "numeric_sanity": {"agree": worst < NUMERIC_TOL, "points": NUMERIC_POINTS, "tolerance": NUMERIC_TOL},
        }
    )
    if not cert.checks["A_equal"]:
        cert.diagnostics.append("canonical A matrices differ")
    return fa, fb


def verify_equal_sups(a: QuotientLGModel, b: QuotientLGModel, seed: int = 0) -> Certificate:
    """Same G implies equal dual superpotentials on the common torus."""
    cert = Certificate("equal-sups", _pair_inputs(a, b), seed=seed)
    _equal_sups_into(cert, a, b, seed)
    return cert


def _main_into(cert: Certificate, a: QuotientLGModel, b: QuotientLGModel, seed: int):
    facts = _equal_sups_into(cert, a, b, seed)
    if facts is None:
        return None
    fa, fb = facts
    wa = weight_lattice(dual_superpotential(fa))
    wb = weight_lattice(dual_superpotential(fb))
    cert.checks["weight_lattices_equal"] = wa == wb
    if wa != wb:
        cert.diagnostics.append("dual weight lattices differ")
    cert.witnesses["weight_lattice_a"] = ser.weights_json(wa)
    cert.witnesses["weight_lattice_b"] = ser.weights_json(wb)
    cert.witnesses["monomial_counts"] = [a.exponents.n_monomials, b.exponents.n_monomials]
    cert.witnesses["sigma_model"] = {
        "torus_dimension": a.group.ambient_rank,
        "weight_vectors": [list(q) for q in wa.basis],
        "generator": None if wa.generator is None else list(wa.generator),
        "shared_superpotential": [list(c) for c in dual_superpotential(fa).characters],
    }
    return wa


def verify_main(a: QuotientLGModel, b: QuotientLGModel, seed: int = 0) -> Certificate:
    """Same G implies coinciding dual weight vectors and birational hypersurfaces for each q."""
    cert = Certificate("main", _pair_inputs(a, b), seed=seed)
    _main_into(cert, a, b, seed)
    return cert


def verify_cy_corollary(a: QuotientLGModel, b: QuotientLGModel, seed: int = 0) -> Certificate:
    """For Calabi-Yau W, W' sharing G the dual weight vectors form a cyclic group."""
    cert = Certificate("cy-corollary", _pair_inputs(a, b), seed=seed)
    for label, model in (("model_a", a), ("model_b", b)):
        rep = is_calabi_yau(model.exponents)
        cert.checks[f"{label}_calabi_yau"] = rep.is_calabi_yau
        cert.witnesses[f"{label}_cy"] = ser.cy_json(rep)
        if not rep.is_calabi_yau:
            cert.diagnostics.append(f"{label}: not Calabi-Yau: " + "; ".join(rep.reasons()))
    if cert.diagnostics:
        return cert
    w = _main_into(cert, a, b, seed)
    if w is None:
        return cert
    cert.checks["weight_lattice_rank_one"] = w.rank == 1
    if w.rank != 1:
        cert.diagnostics.append(f"dual weight lattice has rank {w.rank}, expected 1")
    else:
        cert.witnesses["q0"] = list(w.generator)
    return cert


def verify_krawitz_equivalence(model: QuotientLGModel, cap: int = DEFAULT_CAP) -> Certificate:
    """Krawitz's dual (closed form and brute force) against ker F(B)."""
    p = model.P
    if not p.is_square() or det(p) == 0:
        raise PreconditionError("Krawitz equivalence needs a square invertible exponent matrix")
    cert = Certificate("krawitz-equivalence", {"model": ser.model_json(model)})
    gt = dualize(model).GT.as_diagonal_group()
    closed = krawitz_dual(p, model.group)
    elements = oracle_krawitz_bruteforce(p, model.group, cap)
    brute = group_from_generators(p.nrows, elements)
    cert.checks["closed_form_equals_GT"] = group_equal(closed, gt)
    cert.checks["bruteforce_equals_GT"] = group_equal(brute, gt)
    cert.checks["bruteforce_is_whole_group"] = len(elements) == gt.order
    cert.witnesses.update(
        {
            "GT": ser.group_json(gt),
            "krawitz_closed_form": ser.group_json(closed),
            "krawitz_bruteforce": ser.group_json(brute),
            "bruteforce_element_count": len(elements),
            "bruteforce_candidates": abs(det(p)),
        }
    )
    for name, ok in cert.checks.items():
        if not ok:
            cert.diagnostics.append(f"{name} failed")
    return cert


def verify_involution(model: QuotientLGModel) -> Certificate:
    """Dualizing twice gives back (P, G); order(G) order(G^T) = |det P|."""
    p = model.P
    if not p.is_square() or det(p) == 0:
        raise PreconditionError("involution check needs a square invertible exponent matrix")
    cert = Certificate("involution", {"model": ser.model_json(model)})
    d1 = dualize(model)
    gt = d1.GT.as_diagonal_group()
    d2 = dualize(dual_as_model(d1))
    gtt = d2.GT.as_diagonal_group()
    cert.checks["P_recovered"] = d2.Ptau == p
    cert.checks["G_recovered"] = group_equal(gtt, model.group)
    cert.checks["order_product"] = model.group.order * gt.order == abs(det(p))
    cert.checks["dual_invariant"] = is_invariant(dual_as_model(d1).exponents, gt)
    cert.witnesses.update({"GT": ser.group_json(gt), "GTT": ser.group_json(gtt), "det": det(p)})
    for name, ok in cert.checks.items():
        if not ok:
            cert.diagnostics.append(f"{name} failed")
    return cert
