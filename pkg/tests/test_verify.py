import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lgdual.corpus import calabi_yau_pairs, random_invariant_pair, square_corpus
from lgdual.duality import dual_superpotential
from lgdual.errors import DomainError, EnumerationCapError, PreconditionError
from lgdual.groups import group_from_generators
from lgdual.linalg import IntMatrix
from lgdual.model import CharacterSum, ExponentMatrix, QuotientLGModel, factorize, parse_polynomial
from lgdual.serialize import dumps
from lgdual.verify import (
    NUMERIC_TOL,
    numeric_agreement,
    numeric_invariance,
    oracle_kernel_bruteforce,
    oracle_krawitz_bruteforce,
    oracle_numeric_superpotential,
    verify_cy_corollary,
    verify_equal_sups,
    verify_involution,
    verify_krawitz_equivalence,
    verify_main,
)

T = Fraction(1, 3)


class TestOracles:
    def test_kernel_examples(self):
        assert oracle_kernel_bruteforce(IntMatrix.identity(3), 3) == [(0, 0, 0)]
        assert len(oracle_kernel_bruteforce(IntMatrix.diagonal([3, 3, 3]), 3)) == 27
        assert len(oracle_kernel_bruteforce(IntMatrix([[3, 0, 0], [0, 3, 0], [-2, -2, 1]]), 3)) == 9

    def test_kernel_cap(self):
        with pytest.raises(EnumerationCapError):
            oracle_kernel_bruteforce(IntMatrix.identity(3), 10, cap=100)

    def test_krawitz_examples(self, fermat, J, trivial3):
        assert len(oracle_krawitz_bruteforce(fermat.P, J)) == 9
        assert len(oracle_krawitz_bruteforce(fermat.P, trivial3)) == 27
        with pytest.raises(PreconditionError):
            oracle_krawitz_bruteforce(IntMatrix([[1, 2]]), group_from_generators(1, []))
        with pytest.raises(EnumerationCapError):
            oracle_krawitz_bruteforce(fermat.P, J, cap=10)

    def test_numeric_superpotential(self):
        chars = CharacterSum("quotient", [(1, 1, -1)])
        assert oracle_numeric_superpotential(chars, [1, 1, 1]) == 1
        assert abs(oracle_numeric_superpotential(chars, [1j, 1j, -1]) - 1) < NUMERIC_TOL
        with pytest.raises(DomainError):
            oracle_numeric_superpotential(chars, [1, 0, 1])
        with pytest.raises(DomainError):
            oracle_numeric_superpotential(chars, [1, 1])

    def test_numeric_invariance_examples(self, fermat, J):
        rng = random.Random(0)
        assert numeric_invariance(fermat.P, J, rng)
        assert not numeric_invariance(fermat.P, group_from_generators(3, [(Fraction(1, 2), 0, 0)]), rng)

    def test_numeric_agreement_equal_sums(self, fermat_J, loop_J):
        a = dual_superpotential(factorize(fermat_J))
        b = dual_superpotential(factorize(loop_J))
        assert numeric_agreement(a, b, random.Random(3)) < NUMERIC_TOL


class TestEqualSups:
    def test_pass(self, fermat_J, loop_J):
        cert = verify_equal_sups(fermat_J, loop_J)
        assert cert.passed
        assert cert.witnesses["A"] == [[1, 0, 0], [0, 1, 0], [2, 2, 3]]
        assert cert.witnesses["numeric_sanity"]["agree"]

    def test_different_groups(self, fermat, J, models_dir):
        other = QuotientLGModel(fermat, group_from_generators(3, [(T, 2 * T, 0)]))
        cert = verify_equal_sups(QuotientLGModel(fermat, J), other)
        assert not cert.passed
        assert any("groups differ" in d for d in cert.diagnostics)

    def test_rank_mismatch(self, fermat_J):
        b = QuotientLGModel(parse_polynomial("x^3 + y^3", "xy"), group_from_generators(2, []))
        cert = verify_equal_sups(fermat_J, b)
        assert not cert.passed and cert.checks["same_ambient_rank"] is False


class TestMain:
    def test_loop(self, fermat_J, loop_J):
        cert = verify_main(fermat_J, loop_J)
        assert cert.passed
        assert cert.witnesses["weight_lattice_a"]["generator"] == [1, 1, -1]

    def test_different_monomial_counts(self, fermat_J, fermat_xyz, J):
        cert = verify_main(fermat_J, QuotientLGModel(fermat_xyz, J))
        assert cert.passed
        assert cert.witnesses["monomial_counts"] == [3, 4]
        assert cert.witnesses["sigma_model"]["generator"] == [1, 1, -1]

    def test_deterministic(self, fermat_J, loop_J):
        assert dumps(verify_main(fermat_J, loop_J, seed=5).to_json()) == dumps(verify_main(fermat_J, loop_J, seed=5).to_json())

    def test_numeric_layer_never_decides(self, fermat_J, loop_J):
        cert = verify_main(fermat_J, loop_J)
        assert "numeric_sanity" not in cert.checks

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_pairs(self, seed):
        a, b = random_invariant_pair(random.Random(seed))
        cert = verify_main(a, b, seed)
        assert cert.passed, cert.diagnostics
        assert cert.witnesses["numeric_sanity"]["agree"]


class TestCorollary:
    def test_pass(self, fermat_J, loop_J):
        cert = verify_cy_corollary(fermat_J, loop_J)
        assert cert.passed
        assert cert.witnesses["q0"] == [1, 1, -1]

    def test_not_cy(self, fermat_J):
        p = ExponentMatrix(IntMatrix.diagonal([2, 3]), ("x", "y"))
        m = QuotientLGModel(p, group_from_generators(2, []))
        cert = verify_cy_corollary(m, m)
        assert not cert.passed
        assert cert.diagnostics == ["model_a: not Calabi-Yau: sum 5 ≠ det 6", "model_b: not Calabi-Yau: sum 5 ≠ det 6"]

    def test_corpus_pairs(self):
        pairs = calabi_yau_pairs()
        assert pairs
        for a, b in pairs:
            assert verify_cy_corollary(a.model, b.model).passed, (a.name, b.name)


class TestStructural:
    def test_krawitz_fermat(self, fermat_J):
        cert = verify_krawitz_equivalence(fermat_J)
        assert cert.passed
        assert cert.witnesses["bruteforce_element_count"] == 9
        assert cert.witnesses["bruteforce_candidates"] == 27

    def test_krawitz_non_square(self):
        m = QuotientLGModel(parse_polynomial("x0^3*x1 + x1^2*x2", ["x0", "x1", "x2"]), group_from_generators(3, []))
        with pytest.raises(PreconditionError):
            verify_krawitz_equivalence(m)
        with pytest.raises(PreconditionError):
            verify_involution(m)

    def test_involution_examples(self, fermat_J, loop_J):
        assert verify_involution(fermat_J).passed
        assert verify_involution(loop_J).passed

    def test_corpus(self):
        for cm in square_corpus()[::7]:
            assert verify_krawitz_equivalence(cm.model).passed, cm.name
            assert verify_involution(cm.model).passed, cm.name
