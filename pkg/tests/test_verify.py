"""Check battery: principal root, grids, bounds, sign-pattern exploration."""

import json
from fractions import Fraction as F

import mpmath
import pytest
from mpmath import mpc, mpf, workprec

from chebsqrt import (
    BadIndex,
    BadRootOrder,
    CapExceeded,
    DiskGrid,
    OnBranchCut,
    Scheme,
    check_coeff_formula,
    check_composition,
    check_disk_bound,
    check_guo_p2,
    check_head,
    check_head_lengths,
    check_monotone_improvement,
    check_mu_bound,
    check_radius_pole,
    check_ratio_identity,
    check_resummation,
    check_sqrt_consistency,
    check_tail_signs,
    check_tail_sum,
    check_uniform_compact,
    check_value_at_one,
    default_suite,
    guo_explore,
    sqrt_principal,
    taylor_coefficients,
    v_iterate,
)
from chebsqrt.verify import _FloatEvaluator

PREC = 256


class TestSqrtPrincipal:
    def test_real_spot_values(self):
        assert sqrt_principal(mpf(0), PREC) == 1
        assert sqrt_principal(mpf(1), PREC) == 0
        assert sqrt_principal(mpf(-3), PREC) == 2

    def test_branch_cut_rejected(self):
        with pytest.raises(OnBranchCut):
            sqrt_principal(mpf("1.5"), PREC)
        with pytest.raises(OnBranchCut):
            sqrt_principal(mpc(2, 0), PREC)

    def test_off_cut_complex_allowed(self):
        w = sqrt_principal(mpc("1.5", "0.1"), PREC)
        assert w.real > 0

    def test_self_consistency_on_grid(self):
        tol = mpf(2) ** (8 - PREC)
        with workprec(PREC + 32):
            for z in DiskGrid(1.0, 6, 12, PREC).points():
                w = sqrt_principal(z, PREC)
                assert abs(w * w - (1 - z)) <= tol
                assert w.real >= 0

    def test_positive_real_part_off_one(self):
        for z in (mpc(0, 1), mpc(-2, 3), mpf("0.999")):
            assert sqrt_principal(z, PREC).real > 0


class TestDiskGrid:
    def test_point_count(self):
        assert len(DiskGrid(1.0, 8, 16, PREC).points()) == 128

    def test_includes_boundary_and_one(self):
        pts = DiskGrid(1.0, 4, 8, PREC).points()
        assert any(z == 1 for z in pts)
        with workprec(PREC):
            assert max(abs(z) for z in pts) == 1

    def test_near_one_exclusion(self):
        pts = DiskGrid(1.0, 4, 8, PREC, exclude_near_one=True).points()
        assert all(z != 1 for z in pts)
        assert len(pts) == 31

    def test_radius_validation(self):
        with pytest.raises(BadIndex):
            DiskGrid(1.5, 4, 8, PREC)
        with pytest.raises(BadIndex):
            DiskGrid(1.0, 0, 8, PREC)


class TestExactChecks:
    @pytest.mark.parametrize("n", [1, 2, 3, 8])
    def test_head_passes(self, n):
        r = check_head(n)
        assert r.status == "pass"
        assert r.samples == n + 1

    def test_tail_signs_passes(self):
        # the n=2 tail is -2/4^m, strictly negative: cross-check the oracle
        cs = taylor_coefficients(v_iterate(2), 16)
        assert all(cs[m] == F(-2, 4**m) for m in range(1, 17))
        assert check_tail_signs(2, 16).status == "pass"
        assert check_tail_signs(3, 16).status == "pass"

    def test_tail_signs_skips_polynomial(self):
        r = check_tail_signs(1, 16)
        assert r.status == "skip"
        assert "polynomial" in r.note

    def test_value_at_one(self):
        assert check_value_at_one(100).status == "pass"

    def test_composition(self):
        assert check_composition().status == "pass"

    def test_mu_bound(self):
        r = check_mu_bound(3000, PREC)
        assert r.status == "pass"
        assert r.worst_case["n"] == 3000  # margin shrinks with n


class TestFloatChecks:
    def test_ratio_identity(self):
        for n in (0, 2, 5, 31):
            assert check_ratio_identity(n, prec=PREC).status == "pass"

    def test_ratio_identity_rejects_bad_sample(self):
        with pytest.raises(BadIndex):
            check_ratio_identity(2, samples=[F(3, 2)], prec=PREC)

    def test_disk_bound_spot_arithmetic(self):
        # |value at 1 - 0| = 1/3 for the 2nd iterate vs 2/sqrt(2 pi)
        with workprec(64):
            assert mpf(1) / 3 < 2 / mpmath.sqrt(2 * mpmath.pi)
            # Newton k=2 iterate at 1 gives 1/4 vs (2/sqrt(pi))/sqrt(3)
            assert mpf(1) / 4 < 2 / mpmath.sqrt(mpmath.pi) / mpmath.sqrt(3)

    def test_disk_bound_passes(self):
        grid = DiskGrid(1.0, 8, 16, PREC)
        assert check_disk_bound(Scheme.v(), 2, grid).status == "pass"
        assert check_disk_bound(Scheme.v(), 17, grid).status == "pass"
        assert check_disk_bound(Scheme.newton(2), 3, grid).status == "pass"
        assert check_disk_bound(Scheme.halley(2), 2, grid).status == "pass"

    def test_disk_bound_rejects_unproved_orders(self):
        grid = DiskGrid(1.0, 4, 8, PREC)
        with pytest.raises(BadRootOrder):
            check_disk_bound(Scheme.newton(3), 2, grid)

    def test_uniform_compact(self):
        r = check_uniform_compact(16, 0.5, PREC)
        assert r.status == "pass"
        r9 = check_uniform_compact(16, 0.9, PREC)
        assert r9.status == "pass"

    def test_contraction_factor_and_decay(self):
        # on the 0.9 disk the contraction factor stays below 0.52, so the
        # sampled sup at 16 steps is >= 10x smaller than at 8 steps
        grid = DiskGrid(0.9, 8, 16, PREC)
        pts = grid.points()
        work = PREC + 64
        with workprec(work):
            ws = [mpmath.sqrt(1 - z) for z in pts]
            q = max(abs((1 - w) / (1 + w)) for w in ws)
            assert q < mpf("0.52")
            sup8 = max(
                abs(_FloatEvaluator(v_iterate(8), work)(z) - w)
                for z, w in zip(pts, ws)
            )
            sup16 = max(
                abs(_FloatEvaluator(v_iterate(16), work)(z) - w)
                for z, w in zip(pts, ws)
            )
            assert sup16 * 10 <= sup8

    def test_monotone_improvement(self):
        assert check_monotone_improvement(12, 0.9, PREC).status == "pass"

    def test_resummation(self):
        assert check_resummation(12, PREC).status == "pass"

    def test_coeff_formula(self):
        assert check_coeff_formula(12, PREC).status == "pass"

    def test_radius_pole(self):
        assert check_radius_pole(24, PREC).status == "pass"

    def test_tail_sum_adaptive(self):
        assert check_tail_sum(10, PREC).status == "pass"


class TestGuoExplorer:
    def test_square_case_reports(self):
        rep = guo_explore(2, "newton", 2, 16)
        assert rep.head_agreement_length >= 4
        assert rep.first_sign_violation is None
        rep = guo_explore(2, "halley", 1, 16)
        assert rep.head_agreement_length >= 3
        assert rep.first_sign_violation is None

    def test_polynomial_iterate_flagged(self):
        # the first Newton step for the cube root is 1 - z/3 exactly
        rep = guo_explore(3, "newton", 1, 8)
        assert rep.is_polynomial
        assert rep.head_agreement_length >= 2
        assert rep.first_sign_violation is None
        assert rep.coeffs_checked == 1
        assert "polynomial" in rep.note

    def test_open_case_is_report_only(self):
        rep = guo_explore(3, "newton", 3, 64)
        assert rep.head_agreement_length >= 8
        assert rep.coeffs_checked == 64
        counts = rep.sign_counts
        assert counts["negative"] + counts["zero"] + counts["positive"] == 64

    def test_validation(self):
        with pytest.raises(BadRootOrder):
            guo_explore(1, "newton", 1, 8)
        with pytest.raises(BadIndex):
            guo_explore(2, "bogus", 1, 8)
        with pytest.raises(BadIndex):
            guo_explore(2, "newton", 0, 8)
        with pytest.raises(CapExceeded):
            guo_explore(2, "newton", 2, 8, max_m=4)

    def test_json_round_trip(self):
        doc = guo_explore(2, "halley", 2, 32).to_json_dict()
        assert json.loads(json.dumps(doc)) == doc
        assert doc["p"] == 2 and doc["scheme"] == "halley"

    def test_square_case_never_violates(self):
        assert check_guo_p2(M=128).status == "pass"

    def test_square_case_first_step_is_clean_too(self):
        # the k=1 Newton iterate is the degree-1 polynomial, so the capped
        # scan sees only its genuinely negative slope coefficient
        rep = guo_explore(2, "newton", 1, 256)
        assert rep.is_polynomial and rep.first_sign_violation is None

    def test_head_lengths(self):
        assert check_head_lengths(M=128).status == "pass"


class TestSuiteRunner:
    def test_default_suite_green_and_deterministic(self):
        first = default_suite(n_max=4, prec=PREC)
        assert all(r.status in ("pass", "skip") for r in first)
        again = default_suite(n_max=4, prec=PREC)
        blob1 = "\n".join(json.dumps(r.to_json_dict()) for r in first)
        blob2 = "\n".join(json.dumps(r.to_json_dict()) for r in again)
        assert blob1 == blob2

    def test_results_carry_sample_counts(self):
        for r in default_suite(n_max=3, prec=PREC):
            assert r.samples >= 0
            assert r.name
