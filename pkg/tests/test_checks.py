"""One test cluster per claim checker: happy paths, downgrade paths, and the
fail payloads that make counterexamples replayable."""

from fractions import Fraction

import pytest

from periwords import checks
from periwords.checks import (
    DEFAULT_SEED,
    FAIL,
    INCONCLUSIVE,
    PASS,
    WINDOWED,
    build_gain_pair,
    check_block_closure,
    check_critical_exhaustive,
    check_dyadic_gain,
    check_factor_bound,
    check_letter_formula,
    check_lexmin_return_words,
    check_occurrence_rigidity,
    check_oracle_equivalence,
    check_peak_average,
    check_peak_periods,
    check_peak_witness,
    check_return_gain,
    check_return_time_bound,
    check_superadditivity,
    check_toeplitz_stages,
    divergence_report,
    return_gain_step,
)
from periwords.errors import InsufficientWindowError
from periwords.factorize import ReturnFactorization, return_factorization
from periwords.periods import period, profile
from periwords.words import (
    HolubParams,
    PeriodicSource,
    fibonacci_source,
    holub_word,
    parse_descriptor,
    thue_morse_source,
)

P22 = HolubParams((2, 2))
FIB = fibonacci_source()
TM = thue_morse_source()


# ---------------------------------------------------------------------------
# anchor peaks


def test_peak_periods_pass():
    rep = check_peak_periods(P22, depth=3)
    assert rep.status == PASS and rep.instances == 3
    assert rep.claim == "big"
    assert [d["expected"] for d in rep.details] == [3, 12, 48]
    assert rep.details[0]["witness"] == "bba"
    assert all(d["sharp"] for d in rep.details)


def test_peak_periods_user_cap_below_prediction_is_inconclusive():
    rep = check_peak_periods(P22, depth=2, cap=2)
    assert rep.status == INCONCLUSIVE
    assert rep.counterexample is None
    assert "cap 2 < predicted 3" in rep.notes


def test_peak_periods_generous_user_cap_still_passes():
    rep = check_peak_periods(P22, depth=2, cap=100)
    assert rep.status == PASS


def test_peak_witness_pass():
    rep = check_peak_witness(HolubParams((2, 3, 4)), depth=3)
    assert rep.status == PASS and rep.instances == 3
    assert rep.details[0]["witness"] == "bba"


def test_peak_average_reports_the_level_one_equality():
    # h at the first anchor coincides with peak/position, so strictness fails
    # there and holds from level 2 on; the checker must say exactly that
    rep = check_peak_average(P22, depth=3)
    assert rep.status == FAIL
    assert rep.counterexample["position"] == 1
    assert rep.counterexample["h"] == rep.counterexample["bound"] == "3/1"
    strict = {d["j"]: d["strict"] for d in rep.details}
    assert strict == {1: False, 2: True, 3: True}


# ---------------------------------------------------------------------------
# structural claims of the construction


def test_block_closure_decodes():
    rep = check_block_closure(P22, depth=3)
    assert rep.status == PASS and rep.instances == 6
    for row in rep.details:
        assert row["decode"] == "a" + "b" * P22.n(row["i"]) + row["last"]


def test_occurrence_rigidity_windowed():
    rep = check_occurrence_rigidity(P22, depth=3, horizon=3_000)
    assert rep.status == WINDOWED
    assert all(row["violations"] == 0 for row in rep.details)
    assert rep.instances > 100  # plenty of occurrences actually checked


def test_letter_formula():
    rep = check_letter_formula(P22, n=2_000)
    assert rep.status == PASS and rep.instances == 2_000


def test_toeplitz_stages_auto_and_explicit():
    rep = check_toeplitz_stages(P22, n=2_000)
    assert rep.status == PASS and rep.params["stage"] == 6  # 4^6-1 >= 2000
    rep = check_toeplitz_stages(P22, n=2_000, stage=2)
    assert rep.status == PASS and rep.instances == 15  # span clamps to 4^2-1


def test_return_time_bound():
    rep = check_return_time_bound(P22, depth=2)
    assert rep.status == WINDOWED
    for row in rep.details:
        assert row["max_gap_seen"] <= row["bound"]
    with pytest.raises(InsufficientWindowError):
        check_return_time_bound(P22, depth=2, horizon=20)


def test_return_time_bound_factor_len_cut():
    full = check_return_time_bound(P22, depth=1)
    cut = check_return_time_bound(P22, depth=1, max_factor_len=1)
    assert cut.instances < full.instances
    assert cut.status == WINDOWED


# ---------------------------------------------------------------------------
# minimal chain claims


def test_lexmin_return_words_fibonacci():
    rep = check_lexmin_return_words(FIB, depth=2)
    assert rep.status == WINDOWED
    assert [d["alpha"] for d in rep.details] == ["a", "aab"]
    assert all(d["lyndon_violations"] == 0 for d in rep.details)


def test_lexmin_return_words_thue_morse():
    rep = check_lexmin_return_words(TM, depth=2, repetition_bound=2)
    assert rep.status == WINDOWED


def test_return_gain_auto_level():
    rep = check_return_gain(FIB, horizon=20_000)
    assert rep.status == WINDOWED
    assert rep.params["kprime"] == 3  # first level with mu > 2*m_1 = 10
    assert "holds" in rep.notes
    for row in rep.details:
        assert row["sum_lp"] >= row["sum_bound"]
        assert Fraction(*map(int, row["gain"].split("/"))) >= Fraction(1, 2)


def test_return_gain_low_level_is_inconclusive():
    rep = check_return_gain(FIB, k=1, kprime=2, horizon=20_000)
    assert rep.status == INCONCLUSIVE
    assert "pick a higher level" in rep.notes


def test_gain_pair_respects_depth_limit():
    with pytest.raises(InsufficientWindowError):
        build_gain_pair(FIB, 1, 20_000, max_depth=2)


def test_gain_step_degenerate_single_constituent():
    # lo == hi: every block is its own only constituent, the exact chain is
    # trivially tight and only the +1/2 corollary is out of reach
    fact = return_factorization(FIB, "aa", 2_000, exponent=2, assert_block_prefix=True)
    rep = return_gain_step(fact, fact, window=4)
    assert rep.status == INCONCLUSIVE
    assert rep.counterexample is None
    for row in rep.details:
        assert row["constituents"] == 1 and row["gain"] == "0/1"


def test_gain_step_rejects_non_refining_boundaries():
    lo = ReturnFactorization("ab", "", ["ab", "ab", "ab"], 6)
    hi = ReturnFactorization("aba", "", ["aba", "bab"], 6)
    rep = return_gain_step(lo, hi, window=1)
    assert rep.status == FAIL
    assert "do not refine" in rep.counterexample["error"]


def test_gain_step_rejects_bordered_block():
    lo = ReturnFactorization("a", "", ["a", "b", "a"], 3)
    hi = ReturnFactorization("aba", "", ["aba"], 3)
    rep = return_gain_step(lo, hi, window=1)
    assert rep.status == FAIL
    assert rep.counterexample["unbordered"] is False


def test_gain_step_window_demand():
    fact = return_factorization(FIB, "aa", 200, exponent=2)
    with pytest.raises(InsufficientWindowError):
        return_gain_step(fact, fact, window=10_000)


# ---------------------------------------------------------------------------
# dyadic claims


def test_dyadic_gain_certified():
    rep = check_dyadic_gain(TM, k=1, kprime=4, repetition_bound=2)
    assert rep.status == WINDOWED
    assert "certified" in rep.notes
    for row in rep.details:
        assert "outcome" not in row
        assert row["period"] * 2 >= 16 and row["period"] >= 4


def test_dyadic_gain_small_gap_is_inconclusive():
    rep = check_dyadic_gain(TM, k=1, kprime=2, repetition_bound=2)
    assert rep.status == INCONCLUSIVE
    assert "level gap too small" in rep.notes


def test_dyadic_gain_estimated_exponent_downgrades():
    # the periodic word has no uniform power bound; the windowed estimate
    # blows up and the guard refuses to conclude anything
    rep = check_dyadic_gain(PeriodicSource("ab"), k=1, kprime=4)
    assert rep.status == INCONCLUSIVE


def test_dyadic_gain_false_certificate_fails_and_replays():
    rep = check_dyadic_gain(PeriodicSource("ab"), k=1, kprime=4, repetition_bound=2)
    assert rep.status == FAIL
    ce = rep.counterexample
    assert ce["op"] == "check_dyadic_gain" and ce["certified"]
    # replay the cited violation from the payload alone
    src = parse_descriptor(ce["word"])
    block = ce["block"]
    assert block in src.prefix(2 ** 4 * (10 + 2))
    assert period(block) == ce["period"]
    assert ce["period"] * ce["e"] < 2 ** 4  # the vouched bound is refuted


# ---------------------------------------------------------------------------
# randomized inequality trials


def test_factor_bound_trials():
    rep = check_factor_bound(trials=400, seed=DEFAULT_SEED)
    assert rep.status == PASS and rep.instances == 400


def test_superadditivity_trials():
    rep = check_superadditivity(trials=400, seed=DEFAULT_SEED)
    assert rep.status == PASS and rep.instances == 400


def test_trials_are_seed_deterministic():
    a = check_factor_bound(trials=50, seed=7).to_json()
    b = check_factor_bound(trials=50, seed=7).to_json()
    assert a == b


# ---------------------------------------------------------------------------
# exhaustive sweeps


def test_critical_exhaustive_small():
    rep = check_critical_exhaustive(maxlen=9)
    assert rep.status == PASS and rep.instances == 2 ** 10 - 2


def test_oracle_equivalence_small():
    rep = check_oracle_equivalence(maxlen=8)
    assert rep.status == PASS
    assert rep.instances == sum(n * 2 ** n for n in range(1, 9))


def test_sweep_guards():
    with pytest.raises(ValueError):
        check_critical_exhaustive(maxlen=13)
    with pytest.raises(ValueError):
        check_oracle_equivalence(alphabet_size=4)


# ---------------------------------------------------------------------------
# divergence trends


def test_divergence_nondecreasing_window():
    rep = divergence_report(FIB, [16, 32, 64, 128, 256])
    assert rep.status == WINDOWED
    assert "not evidence" in rep.notes
    assert [r["i"] for r in rep.details] == [16, 32, 64, 128, 256]


def test_divergence_detects_decrease():
    # the staged word's average oscillates below its anchors, so the trend
    # claim is genuinely false there
    rep = divergence_report(holub_word(P22), [64, 128, 256, 512])
    assert rep.status == FAIL
    assert rep.counterexample["op"] == "profile"
    # replay
    prof = profile(holub_word(P22), n=512)
    i1, i2 = rep.counterexample["from"], rep.counterexample["to"]
    assert prof.h_at(i2) < prof.h_at(i1)


def test_divergence_trend_from_excludes_early_noise():
    rep = divergence_report(holub_word(P22), [64, 128, 256, 512], trend_from=512)
    assert rep.status == WINDOWED  # only one point left in the trend


def test_divergence_capped_checkpoints_are_inconclusive():
    rep = divergence_report(holub_word(P22), [16, 64], cap=2)
    assert rep.status == INCONCLUSIVE
    assert any(r["capped"] for r in rep.details)


def test_divergence_needs_checkpoints():
    with pytest.raises(ValueError):
        divergence_report(FIB, [])


# ---------------------------------------------------------------------------
# report plumbing


def test_report_serialization_keys():
    rep = check_letter_formula(P22, n=50)
    data = rep.to_json()
    assert set(data) == {
        "claim", "params", "instances", "status", "counterexample", "notes", "details",
    }
    assert data["status"] == "pass" and data["counterexample"] is None


def test_fail_reports_always_carry_payload():
    failing = [
        return_gain_step(
            ReturnFactorization("ab", "", ["ab", "ab"], 4),
            ReturnFactorization("aba", "", ["aba"], 4),
            window=1,
        ),
        check_dyadic_gain(PeriodicSource("ab"), k=1, kprime=4, repetition_bound=2),
        check_peak_average(P22, depth=1),
    ]
    for rep in failing:
        assert rep.status == FAIL
        assert rep.counterexample and "op" in rep.counterexample
