"""Forbidden monomials, minor binomials, dual bases, and witnesses."""

import itertools
import math

import numpy as np
import pytest

from agcodes import linalg
from agcodes.codes import (PointEnumeration, build_affine_grassmann,
                           evaluate, theoretical_params)
from agcodes.dual import (SELF_ORTH_EXCEPTIONS, binomials, build_dual_code,
                          char_sum, dual_basis, dual_min_weight_witness,
                          forbidden_monomials, is_forbidden_counts,
                          maximal_nonforbidden, self_orthogonality_check)
from agcodes.errors import InvalidWitnessParams, SizeOutOfRange
from agcodes.field import make_field
from agcodes.monomials import (Rectangle, all_reduced_monomials, full_product,
                               monomial_divides)

GRID = [(ell, ell + lp, r, q)
        for q in (2, 3)
        for ell in (1, 2)
        for lp in range(1, 4)
        if ell <= lp
        for r in range(ell + 1)]


class TestForbiddenMonomials:
    @pytest.mark.parametrize("ell,m,r,q", GRID)
    def test_closed_form_count(self, ell, m, r, q):
        forb = forbidden_monomials(ell, m, r, q)
        expected = sum(math.factorial(i) * math.comb(ell, i)
                       * math.comb(m - ell, i) for i in range(r + 1))
        assert len(forb) == expected
        assert is_forbidden_counts(ell, m, r, q)[0] == expected

    def test_all_divide_full_product(self):
        forb = forbidden_monomials(2, 4, 2, 3)
        full = full_product(Rectangle(2, 2), 3)
        assert all(monomial_divides(mu, full) for mu in forb.monomials)

    def test_membership_protocol(self):
        forb = forbidden_monomials(2, 4, 1, 2)
        full = full_product(Rectangle(2, 2), 2)
        assert full in forb  # size-0 minor contributes full/1
        assert (0, 0, 0, 0) not in forb

    def test_invalid_params(self):
        with pytest.raises(SizeOutOfRange):
            forbidden_monomials(2, 4, 3, 2)


class TestBinomials:
    @pytest.mark.parametrize("ell,m,r,q", [(2, 4, 2, 2), (2, 4, 2, 3),
                                           (2, 5, 2, 3), (2, 4, 2, 4)])
    def test_count_and_shape(self, ell, m, r, q):
        bs = binomials(ell, m, r, q)
        expected = sum((math.factorial(i) - 1) * math.comb(ell, i)
                       * math.comb(m - ell, i) for i in range(r + 1))
        assert len(bs) == expected
        F = make_field(q)
        for b in bs:
            terms = b.poly.sorted_terms()
            assert len(terms) == 2
            coeffs = sorted(c for _, c in terms)
            # two unit-magnitude coefficients: +1 and -sgn(sigma)
            assert all(c in (1, int(F.neg(1))) for c in coeffs)
            assert b.perm != tuple(range(b.minor.size))

    def test_r_below_two_has_no_binomials(self):
        assert binomials(2, 4, 1, 2) == []
        assert binomials(1, 3, 1, 5) == []

    def test_binomials_orthogonal_to_code(self):
        C = build_affine_grassmann(2, 4, 2, 3)
        pe = PointEnumeration(C.rect, C.field)
        for b in binomials(2, 4, 2, 3):
            ev = evaluate(b.poly, pe)
            assert not linalg.matmul(C.generator, ev[:, None], C.field).any()


class TestDualBasis:
    @pytest.mark.parametrize("ell,m,r,q", GRID)
    def test_grid_orthogonality_and_count(self, ell, m, r, q):
        """G_dual . G^T = 0 exactly and |basis| = n - k_r on the whole grid."""
        C = build_affine_grassmann(ell, m, r, q)
        p = theoretical_params(ell, m, r, q)
        basis = dual_basis(ell, m, r, q)
        assert len(basis) == p.n - p.k
        D = build_dual_code(C)  # raises OrthogonalityViolation on any mismatch
        assert D.k == p.n - p.k
        assert not linalg.matmul(D.generator, C.generator.T, C.field).any()

    def test_dual_meta_links_primal(self):
        C = build_affine_grassmann(2, 4, 2, 2)
        D = build_dual_code(C)
        assert D.meta["dual_of"] is C
        assert np.array_equal(D.parity_check(), C.generator)

    def test_rejects_non_agc(self):
        from agcodes.codes import build_reed_muller
        with pytest.raises(ValueError):
            build_dual_code(build_reed_muller(1, 2, 2))


class TestWitnesses:
    @pytest.mark.parametrize("ell,m,r,q", [(1, 2, 1, 3), (2, 4, 1, 3),
                                           (2, 4, 2, 3), (1, 2, 1, 4),
                                           (2, 4, 2, 5)])
    def test_g_weight_three_in_dual(self, ell, m, r, q):
        C = build_affine_grassmann(ell, m, r, q)
        D = build_dual_code(C)
        pe = PointEnumeration(C.rect, C.field)
        g = dual_min_weight_witness(ell, m, r, q, ("g", 1, 2))
        ev = evaluate(g, pe)
        assert int(np.count_nonzero(ev)) == 3
        assert D.contains(ev)

    @pytest.mark.parametrize("ell,m,r", [(1, 3, 1), (2, 4, 1), (2, 4, 2),
                                         (2, 5, 2)])
    def test_h_weight_four_in_dual(self, ell, m, r):
        C = build_affine_grassmann(ell, m, r, 2)
        D = build_dual_code(C)
        pe = PointEnumeration(C.rect, C.field)
        p2 = (1, 2)
        h = dual_min_weight_witness(ell, m, r, 2, ("h", (1, 1), p2))
        ev = evaluate(h, pe)
        assert int(np.count_nonzero(ev)) == 4
        assert D.contains(ev)

    def test_invalid_witness_params(self):
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 2, 2, ("g", 1, 2))  # g needs q > 2
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 2, 3, ("g", 1, 1))  # equal roots
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 2, 3, ("g", 0, 1))  # zero root
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 2, 3, ("h", (1, 1), (1, 2)))
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(1, 2, 1, 2, ("h", (1, 1), (1, 2)))  # l'=1
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 2, 2, ("h", (1, 1), (2, 2)))  # diag
        with pytest.raises(InvalidWitnessParams):
            dual_min_weight_witness(2, 4, 0, 2, ("h", (1, 1), (1, 2)))


def _self_orth_grid():
    grid = []
    for q in (2, 3, 4):
        for ell in range(1, 4):
            for lp in range(ell, 13):
                delta = ell * lp
                if delta * (q - 1) > 12:
                    continue
                for r in range(1, ell + 1):
                    grid.append((ell, ell + lp, r, q))
    return grid


class TestSelfOrthogonality:
    @pytest.mark.parametrize("ell,m,r,q", _self_orth_grid())
    def test_classification_matches_theorem(self, ell, m, r, q):
        res = self_orthogonality_check(ell, m, r, q)
        assert res["selfOrthogonal"] == res["expectedByTheorem"]

    def test_exception_list(self):
        assert SELF_ORTH_EXCEPTIONS == {(1, 2, 1, 2), (1, 2, 1, 3), (1, 3, 1, 2)}
        for (ell, m, r, q) in SELF_ORTH_EXCEPTIONS:
            assert not self_orthogonality_check(ell, m, r, q)["selfOrthogonal"]


class TestCharSum:
    @pytest.mark.parametrize("q,ell,lp", [(2, 2, 2), (3, 1, 2), (4, 1, 2),
                                          (3, 2, 2)])
    def test_dichotomy(self, q, ell, lp):
        """The point sum of a reduced monomial vanishes unless it is the
        full product, where it equals (-1)^delta."""
        F = make_field(q)
        rect = Rectangle(ell, lp)
        pe = PointEnumeration(rect, F)
        full = full_product(rect, q)
        expected_full = int(F.neg(1)) if rect.delta % 2 else 1
        for mu in all_reduced_monomials(rect, q):
            s = char_sum(mu, pe)
            assert s == (expected_full if mu == full else 0)


class TestMaximalNonForbidden:
    def test_count_for_2_4_2_over_f2(self):
        out = maximal_nonforbidden(2, 4, 2, 2)
        assert len(out) == 4

    @pytest.mark.parametrize("ell,m,r,q", [(2, 4, 1, 2), (2, 4, 2, 2),
                                           (2, 4, 2, 3), (1, 3, 1, 3)])
    def test_exhaustive_maximality(self, ell, m, r, q):
        """Every listed monomial is non-forbidden, and every reduced monomial
        strictly above it (in divisibility) is forbidden; conversely every
        maximal non-forbidden monomial is listed."""
        rect = Rectangle(ell, m - ell)
        forb = forbidden_monomials(ell, m, r, q)
        claimed = maximal_nonforbidden(ell, m, r, q)
        nonforb = [mu for mu in all_reduced_monomials(rect, q)
                   if mu not in forb]
        full = full_product(rect, q)

        def strictly_above(mu):
            return [nu for nu in nonforb
                    if nu != mu and monomial_divides(mu, nu)]

        maximal = {mu for mu in nonforb if not strictly_above(mu)}
        assert claimed == maximal
        assert full not in maximal  # the full product itself is forbidden

    def test_needs_positive_level(self):
        with pytest.raises(SizeOutOfRange):
            maximal_nonforbidden(2, 4, 0, 2)
