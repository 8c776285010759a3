"""Condition-level law checks, brute-force sweeps, and their agreement."""

import itertools

import pytest

from choquetlike import (
    AggregationInput, AlphaBeta, BOUNDED_SUM, GridSpec, HypothesisViolated,
    IV_PLUS, KernelL, MIN_OP, PLUS, Scalar, ScalarUsual,
    add, brute_force_wd, capacity_battery, check_aggregation,
    check_delta_decomposition, check_jensen_f, check_monotonicity,
    check_wd, classical_kernel, elements_equal, grid_elements,
    kernel_catalog, oracle_crosscheck, scale, scale_for, zero_element,
)

XU = AlphaBeta(0.5, 1.0)
SG = GridSpec("scalar", 4)


def first_weight_kernel(kind="scalar"):
    mul = scale_for(kind)
    return KernelL("ci", lambda x, b1, b2: scale(mul, b1, x), "first-weight")


def squared_gap_kernel():
    return KernelL("cii",
                   lambda x1, x2, b: Scalar(b * (x1.value - x2.value) ** 2),
                   "b-times-squared-gap")


def constant_zero_kernel(kind="scalar"):
    return KernelL("general",
                   lambda x1, x2, b1, b2: zero_element(kind),
                   "constant-zero")


class TestWellDefinedness:
    def test_weight_difference_passes_all_regimes(self):
        kernel = classical_kernel("scalar")
        for n in (2, 3, 4):
            assert check_wd(kernel, PLUS, ScalarUsual(), n, SG).passed

    def test_dissimilarity_kernel_passes(self):
        kernel = kernel_catalog({"family": "b-scale-d", "d": "abs-diff"}, "scalar")
        assert check_wd(kernel, PLUS, ScalarUsual(), 4, SG).passed

    def test_first_weight_fails_with_replayable_witness(self):
        kernel = first_weight_kernel()
        report = check_wd(kernel, PLUS, ScalarUsual(), 2, SG)
        assert not report.passed
        w = report.witness
        lhs = add(PLUS, kernel.evaluate(w["x1"], w["x2"], w["b1"], w["c"]),
                  kernel.evaluate(w["x1"], w["x1"], w["c"], w["b2"]))
        rhs = add(PLUS, kernel.evaluate(w["x1"], w["x2"], w["b1"], w["c_other"]),
                  kernel.evaluate(w["x1"], w["x1"], w["c_other"], w["b2"]))
        assert not elements_equal(lhs, rhs)

    def test_three_input_regime_checks_both_maps(self):
        kernel = classical_kernel("interval")
        assert check_wd(kernel, IV_PLUS, XU, 3, GridSpec("interval", 2)).passed

    def test_cancellation_hypothesis_enforced(self):
        with pytest.raises(HypothesisViolated):
            check_wd(classical_kernel("scalar"), BOUNDED_SUM, ScalarUsual(), 2, SG)


class TestMonotonicity:
    def test_interval_weight_difference_passes(self):
        kernel = classical_kernel("interval")
        report = check_monotonicity(kernel, IV_PLUS, XU, 3, GridSpec("interval", 2))
        assert report.passed

    def test_squared_gap_fails_two_sided_condition(self):
        report = check_monotonicity(squared_gap_kernel(), PLUS, ScalarUsual(), 3, SG)
        assert not report.passed
        w = report.witness
        assert w["condition"] in ("b:lower-pair", "inner-pair")
        assert ScalarUsual().compare(w["value"], w["value_next"]) > 0

    def test_constant_kernel_is_monotone(self):
        assert check_monotonicity(constant_zero_kernel(), PLUS, ScalarUsual(),
                                  3, SG).passed

    def test_compatibility_hypothesis_enforced(self):
        with pytest.raises(HypothesisViolated):
            check_monotonicity(classical_kernel("scalar"), MIN_OP, ScalarUsual(),
                               2, SG)


class TestAggregation:
    def test_weight_difference_aggregates(self):
        assert check_aggregation(classical_kernel("scalar"), PLUS, ScalarUsual(),
                                 3, SG).passed

    def test_squared_delta_fails(self):
        kernel = kernel_catalog({"family": "delta-scale", "delta": "sq-diff"},
                                "scalar")
        report = check_aggregation(kernel, PLUS, ScalarUsual(), 3, SG)
        assert not report.passed

    def test_constant_kernel_fails_boundary(self):
        report = check_aggregation(constant_zero_kernel(), PLUS, ScalarUsual(),
                                   3, SG)
        assert not report.passed
        assert report.witness["failed_condition"] == "one-boundary"

    def test_affine_instance_aggregates(self):
        kernel = kernel_catalog({"family": "affine-F", "C": "scale:0.7",
                                 "D": "scale:0.1"}, "scalar")
        assert check_aggregation(kernel, PLUS, ScalarUsual(), 3, SG).passed


class TestDeltaDecomposition:
    def test_difference_passes(self):
        assert check_delta_decomposition("difference", SG).passed

    def test_square_fails_at_one_half(self):
        report = check_delta_decomposition("sq-diff", SG)
        assert not report.passed
        # Canonical witness: delta(1, 0.5) = 0.25 vs 1 - 0.25 = 0.75.
        assert abs((1 - 0.5) ** 2 - (1.0 - 0.25)) == pytest.approx(0.5)
        w = report.witness
        assert abs(w["lhs"] - w["rhs"]) > 1e-12

    def test_capped_double_fails_despite_unit_boundary(self):
        report = check_delta_decomposition("capped-double", SG)
        assert not report.passed

    def test_non_dissimilarity_rejected(self):
        with pytest.raises(HypothesisViolated):
            check_delta_decomposition(lambda a, b: a + b - a * b, SG)


class TestJensenF:
    def test_affine_passes_with_boundary_conditions(self):
        def F(x, a):
            return Scalar((0.7 * a + 0.1) * x.value)

        report = check_jensen_f(F, PLUS, SG, order=ScalarUsual(), n=3)
        assert report.passed

    def test_square_fails_midpoint_with_canonical_witness(self):
        def F(x, a):
            return Scalar(a * a * x.value)

        report = check_jensen_f(F, PLUS, SG)
        assert not report.passed
        assert report.witness["failed_condition"] == "midpoint"
        # The canonical witness replays: x=1, a=0, b=1.
        lhs = add(PLUS, F(Scalar(1), 0.0), F(Scalar(1), 1.0))
        rhs = add(PLUS, F(Scalar(1), 0.5), F(Scalar(1), 0.5))
        assert lhs.value == pytest.approx(1.0)
        assert rhs.value == pytest.approx(0.5)

    def test_constant_zero_passes_midpoint_fails_one_boundary(self):
        def F(x, a):
            return Scalar(0.0)

        report = check_jensen_f(F, PLUS, SG, n=3)
        assert not report.passed
        assert report.witness["failed_condition"] == "one-boundary"


class TestBruteForceAndOracle:
    def test_brute_wd_catches_first_weight(self):
        report = brute_force_wd(first_weight_kernel(), PLUS, ScalarUsual(), 2, SG)
        assert not report.passed
        assert report.witness["sigma_a"] != report.witness["sigma_b"]

    def test_monotone_pair_generation_is_sound(self):
        # Sample pairs out of the sweep's enumeration scheme directly.
        elems = ScalarUsual().sort(grid_elements(GridSpec("scalar", 2)))
        upsets = {e: elems[i:] for i, e in enumerate(elems)}
        for X in itertools.product(elems, repeat=2):
            for Z in itertools.product(*(upsets[x] for x in X)):
                assert all(ScalarUsual().leq(x, z) for x, z in zip(X, Z))

    def test_oracle_agreement_good_and_bad(self):
        assert oracle_crosscheck(classical_kernel("scalar"), PLUS, ScalarUsual(),
                                 3, GridSpec("scalar", 2)).passed
        assert oracle_crosscheck(first_weight_kernel(), PLUS, ScalarUsual(),
                                 2, SG).passed

    def test_battery_composition(self):
        caps = capacity_battery(3)
        assert len(caps) == 1 + 3 + 3 + 5
        assert all(mu.n == 3 for mu in caps)

    def test_constant_inputs_edge_case(self):
        # Two tied inputs: the smallest nontrivial permutation set.
        from choquetlike import choquet_aggregate, capacity_family
        kernel = first_weight_kernel()
        wd = check_wd(kernel, PLUS, ScalarUsual(), 2, SG)
        mu = capacity_family("uniform-random", 2, seed=44)
        res = choquet_aggregate(
            AggregationInput((Scalar(0.5), Scalar(0.5)), mu, ScalarUsual(), PLUS),
            kernel)
        assert wd.passed == res.consistent  # both fail here


class TestReports:
    def test_json_shape(self):
        report = check_wd(first_weight_kernel(), PLUS, ScalarUsual(), 2, SG)
        payload = report.to_json()
        assert payload["law"] == "wd"
        assert payload["verdict"] == "fail"
        assert payload["witness"] is not None
        assert payload["checked"] > 0

    def test_pass_reports_carry_resolution_note(self):
        report = check_wd(classical_kernel("scalar"), PLUS, ScalarUsual(), 2, SG)
        assert "resolution" in report.detail["note"]
