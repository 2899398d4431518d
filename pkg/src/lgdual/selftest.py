"""Run every invariant over the bundled corpus and summarize."""

from __future__ import annotations

import random
from collections import defaultdict

from .corpus import calabi_yau_pairs, random_group, random_invariant_pair, square_corpus
from .duality import dualize, krawitz_dual
from .groups import DEFAULT_CAP, elementary_divisors, enumerate_elements, group_equal
from .linalg import det
from .model import is_invariant
from .verify import (
    numeric_invariance,
    oracle_kernel_bruteforce,
    verify_cy_corollary,
    verify_involution,
    verify_krawitz_equivalence,
    verify_main,
)

KERNEL_ORACLE_BUDGET = 10**5
RANDOM_PAIRS = 25


def run_selftest(seed: int = 0, cap: int = DEFAULT_CAP) -> dict:
    counts: dict = defaultdict(lambda: {"passed": 0, "failed": 0, "skipped": 0})
    failures: list[str] = []

    def record(check: str, name: str, ok: bool):
        counts[check]["passed" if ok else "failed"] += 1
        if not ok:
            failures.append(f"{check}: {name}")

    rng = random.Random(seed)
    for cm in square_corpus():
        model = cm.model
        record("krawitz_equivalence", cm.name, verify_krawitz_equivalence(model, cap).passed)
        record("involution", cm.name, verify_involution(model).passed)
        gt = dualize(model).GT.as_diagonal_group()
        record("order_product", cm.name, model.group.order * gt.order == abs(det(model.P)))
        record("closed_form_krawitz", cm.name, group_equal(krawitz_dual(model.exponents, model.group), gt))
        record("numeric_invariance", cm.name, numeric_invariance(model.P, model.group, rng) == is_invariant(model.exponents, model.group))

        bound = max(elementary_divisors(gt), default=1)
        if bound ** gt.ambient_rank > min(cap, KERNEL_ORACLE_BUDGET):
            counts["kernel_oracle"]["skipped"] += 1
        else:
            brute = oracle_kernel_bruteforce(dualize(model).factorization.Btau, bound, cap)
            record("kernel_oracle", cm.name, brute == enumerate_elements(gt, cap))

    for a, b in calabi_yau_pairs():
        record("cy_corollary", f"{a.name} vs {b.name}", verify_cy_corollary(a.model, b.model, seed).passed)

    for i in range(RANDOM_PAIRS):
        a, b = random_invariant_pair(rng)
        record("main_random", f"pair {i}", verify_main(a, b, seed).passed)
        # an unrelated random group is often not a symmetry, so this covers the negative case too
        h = random_group(rng)
        record("numeric_invariance", f"pair {i}", numeric_invariance(a.P, h, rng) == is_invariant(a.exponents, h))

    return {
        "seed": seed,
        "cap": cap,
        "corpus_models": len(square_corpus()),
        "checks": {k: dict(v) for k, v in sorted(counts.items())},
        "failures": failures,
        "verdict": "pass" if not failures else "fail",
    }

