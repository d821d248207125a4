"""Decision-layer criteria and their certificates."""

import random
from fractions import Fraction

import pytest

from fanoalpha.catalog import builtin_records, lookup
from fanoalpha.stability_criteria import (
    CriterionVerdict,
    TraceLine,
    Verdict,
    alpha_lower_bound_consistency,
    alpha_monotonicity_check,
    divisibility_test,
    fujita_volume_test,
    projective_space_from_top_alpha,
    stability_from_alpha_pair,
    top_alpha_volume_bound,
)


class TestTraceLine:
    def test_false_lines_cannot_exist(self):
        with pytest.raises(ValueError, match="false"):
            TraceLine(1, ">", 2)
        with pytest.raises(ValueError, match="relation"):
            TraceLine(1, "!=", 2)

    def test_json(self):
        line = TraceLine(Fraction(10, 9), ">", 1)
        assert line.to_json() == {"lhs": "10/9", "rel": ">", "rhs": "1"}
        assert line.holds()


class TestFujitaVolume:
    def test_equality_smooth_is_projective_space(self):
        verdict = fujita_volume_test(2, 9, True)
        assert verdict.verdict is Verdict.IS_PROJECTIVE_SPACE
        assert any("smooth" in a for a in verdict.assumptions)

    def test_volume_above_bound_disproves(self):
        verdict = fujita_volume_test(2, 10, True)
        assert verdict.verdict is Verdict.NOT_K_SEMISTABLE
        assert verdict.trace[0].rel == ">"

    def test_below_bound_inconclusive(self):
        assert fujita_volume_test(2, 8, True).verdict is Verdict.INCONCLUSIVE

    def test_equality_without_smoothness(self):
        verdict = fujita_volume_test(2, 9, False)
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert any("not asserted" in a for a in verdict.assumptions)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            fujita_volume_test(0, 1, True)
        with pytest.raises(ValueError):
            fujita_volume_test(2, 0, True)


class TestTopAlphaVolumeBound:
    def test_del_pezzo_equality(self):
        verdict = top_alpha_volume_bound(2, 1, 2)
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.trace == (TraceLine(4, "=", 4),)

    def test_violation_is_inconsistent(self):
        verdict = top_alpha_volume_bound(2, 1, Fraction(3, 2))
        assert verdict.verdict is Verdict.INCONSISTENT_INPUT
        assert verdict.trace == (TraceLine(Fraction(9, 4), "<", 4),)

    def test_projective_space_equality(self):
        verdict = top_alpha_volume_bound(3, 64, Fraction(3, 4))
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.trace == (TraceLine(27, "=", 27),)


class TestProjectiveSpaceFromTopAlpha:
    def test_threshold_case(self):
        verdict = projective_space_from_top_alpha(3, Fraction(3, 4), True, True)
        assert verdict.verdict is Verdict.IS_PROJECTIVE_SPACE

    def test_above_threshold(self):
        verdict = projective_space_from_top_alpha(3, Fraction(4, 5), True, True)
        assert verdict.verdict is Verdict.INCONCLUSIVE

    def test_needs_smoothness(self):
        verdict = projective_space_from_top_alpha(3, Fraction(3, 4), False, True)
        assert verdict.verdict is Verdict.INCONCLUSIVE


class TestStabilityFromAlphaPair:
    def test_combined_equality_is_semistable(self):
        for n in range(2, 21):
            verdict = stability_from_alpha_pair(n, Fraction(1, 2), 1)
            assert verdict.verdict is Verdict.K_SEMISTABLE, n
            assert verdict.trace[-1] == TraceLine(1, "=", 1)

    def test_strict_alpha1_gives_stability(self):
        for n in range(2, 21):
            verdict = stability_from_alpha_pair(n, Fraction(2, 3), 1)
            assert verdict.verdict is Verdict.K_STABLE, n

    def test_combined_above_one_inconclusive(self):
        verdict = stability_from_alpha_pair(2, Fraction(1, 2), Fraction(3, 4))
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.trace[-1] == TraceLine(Fraction(10, 9), ">", 1)

    def test_gate_on_alpha2(self):
        verdict = stability_from_alpha_pair(5, Fraction(1, 2), Fraction(2, 3))
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.trace[0].rel in ("<", "=", "<=")


class TestDivisibility:
    def test_characterization_when_k_divides_n(self):
        verdict = divisibility_test(4, 2, 25, True, True)
        assert verdict.verdict is Verdict.IS_PROJECTIVE_SPACE
        assert TraceLine(625, ">=", 625) in verdict.trace

    def test_open_when_k_does_not_divide_n(self):
        verdict = divisibility_test(3, 2, 16, True, True)
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert any("open question" in a for a in verdict.assumptions)

    def test_divisor_case(self):
        verdict = divisibility_test(2, 1, 3, True, True)
        assert verdict.verdict is Verdict.IS_PROJECTIVE_SPACE

    def test_below_threshold(self):
        verdict = divisibility_test(4, 2, 24, True, True)
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert verdict.trace[0].rel == "<"

    def test_composes_with_fujita(self):
        for n, k, l in [(4, 2, 25), (6, 3, 343), (2, 1, 3), (4, 4, 626)]:
            verdict = divisibility_test(n, k, l, True, True)
            if verdict.verdict is Verdict.IS_PROJECTIVE_SPACE:
                implied = Fraction(l) ** (n // k)
                chained = fujita_volume_test(n, Fraction((n + 1) ** n), True)
                assert implied >= (n + 1) ** n
                assert chained.verdict is Verdict.IS_PROJECTIVE_SPACE


class TestMonotonicity:
    def test_consistent_pair(self):
        verdict = alpha_monotonicity_check(
            {1: (Fraction(1, 2), Fraction(1, 2)), 2: (Fraction(2, 3), Fraction(3, 4))}
        )
        assert verdict.verdict is Verdict.INCONCLUSIVE
        assert not verdict.is_failure

    def test_decreasing_is_inconsistent(self):
        verdict = alpha_monotonicity_check(
            {1: (Fraction(3, 4), Fraction(3, 4)), 2: (Fraction(1, 2), Fraction(1, 2))}
        )
        assert verdict.verdict is Verdict.INCONSISTENT_INPUT

    def test_projective_space_rows(self):
        n = 6
        verdict = alpha_monotonicity_check(
            {k: (Fraction(k, n + 1), Fraction(k, n + 1)) for k in range(1, n + 1)}
        )
        assert not verdict.is_failure

    def test_upper_below_lower(self):
        verdict = alpha_monotonicity_check({1: (Fraction(2), Fraction(1))})
        assert verdict.verdict is Verdict.INCONSISTENT_INPUT

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            alpha_monotonicity_check({})


class TestAlphaLowerBoundConsistency:
    def test_projective_space_equality_consistent(self):
        verdict = alpha_lower_bound_consistency(lookup("P3"))
        assert not verdict.is_failure
        assert not any("flagged" in a for a in verdict.assumptions)

    def test_violation_detected(self):
        record = lookup("P1xP1")
        bad = type(record)(
            name="fabricated",
            n=2,
            vol=8,
            smooth=True,
            k_semistable=True,
            alpha_bounds={1: type(record.alpha_bounds[1])(Fraction(1, 4), Fraction(1, 4), exact=True)},
        )
        verdict = alpha_lower_bound_consistency(bad)
        assert verdict.verdict is Verdict.INCONSISTENT_INPUT
        assert verdict.trace == (TraceLine(Fraction(1, 4), "<", Fraction(1, 3)),)

    def test_p1xp1_strictness_respected(self):
        verdict = alpha_lower_bound_consistency(lookup("P1xP1"))
        assert not verdict.is_failure

    def test_equality_with_realization_flagged_on_non_projective_space(self):
        record = lookup("P1xP1")
        suspicious = type(record)(
            name="suspicious",
            n=2,
            vol=8,
            smooth=True,
            k_semistable=True,
            alpha_bounds={
                2: type(record.alpha_bounds[1])(
                    Fraction(2, 3), Fraction(2, 3), exact=True, realized=True
                )
            },
        )
        verdict = alpha_lower_bound_consistency(suspicious)
        assert not verdict.is_failure  # flagged, never hard-failed
        assert any("flagged" in a for a in verdict.assumptions)

    def test_requires_k_semistable(self):
        record = lookup("dP1")
        neutral = type(record)(name="x", n=2, vol=1, smooth=True, k_semistable=None)
        with pytest.raises(ValueError):
            alpha_lower_bound_consistency(neutral)


class TestCertificateSoundness:
    def test_fuzz_traces_always_true(self):
        rng = random.Random(31337)

        def rational():
            return Fraction(rng.randint(1, 400), rng.randint(1, 40))

        for _ in range(2500):
            n = rng.randint(1, 12)
            verdicts = [
                fujita_volume_test(n, rational(), rng.random() < 0.5),
                top_alpha_volume_bound(n, rational(), rational()),
                projective_space_from_top_alpha(
                    n, rational(), rng.random() < 0.5, rng.random() < 0.5
                ),
                stability_from_alpha_pair(n, rational(), rational()),
                divisibility_test(
                    n, rng.randint(1, n), rational(), rng.random() < 0.5, rng.random() < 0.5
                ),
            ]
            for verdict in verdicts:
                assert isinstance(verdict, CriterionVerdict)
                for line in verdict.trace:
                    assert line.holds()
                if verdict.verdict in (Verdict.K_STABLE, Verdict.IS_PROJECTIVE_SPACE):
                    assert all(line.holds() for line in verdict.trace)

    def test_builtin_records_have_true_traces(self):
        from fanoalpha.catalog import validate_record

        for record in builtin_records():
            verdict = validate_record(record)
            assert all(line.holds() for line in verdict.trace)
