"""
Tests for oracle.choosability.cross_check
"""
from unittest.mock import patch

import pytest

import nullstellensatz.configuration as cfg
import nullstellensatz.expansion as ex
import oracle.choosability as ch
from validation import ValidationError

S1_EDGES = [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)]
TRIANGLE = [(0, 1), (1, 2), (2, 0)]


@pytest.fixture(scope='function')
def s1_config():
    return cfg.build_configuration('S1', 5, S1_EDGES, full_degree=[4, 4, 4, 4, 5])


def triangle_config(caps):
    return cfg.build_configuration('triangle', 3, TRIANGLE, explicit_caps=caps)


def test_s1_sampled_passes(s1_config):
    report = ch.cross_check(s1_config, mode=ch.SAMPLED, trials=20000, seed=42)
    assert report.cn_status == ex.REDUCIBLE
    assert report.sizes == (2, 3, 2, 2, 2)
    assert report.asserted
    assert report.oracle.status == ch.NO_COUNTEREXAMPLE
    assert report.passed


def test_s1_sampled_uses_environment_defaults(s1_config):
    env = {'CHOOSE_SAMPLE_TRIALS': '500', 'CHOOSE_SAMPLE_SEED': '3'}
    with patch.dict('os.environ', env):
        report = ch.cross_check(s1_config, mode=ch.SAMPLED)
    assert report.oracle.checked == 500


def test_s1_exhaustive_over_budget(s1_config):
    with pytest.raises(ch.BudgetError):
        ch.cross_check(s1_config)


def test_triangle_inconclusive_reports_oracle():
    report = ch.cross_check(triangle_config([1, 1, 1]))
    assert report.cn_status == ex.INCONCLUSIVE
    assert not report.asserted
    assert report.oracle.status == ch.NOT_CHOOSABLE
    assert report.passed


def test_triangle_bigger_cap_agrees():
    report = ch.cross_check(triangle_config([2, 1, 1]))
    assert report.cn_status == ex.REDUCIBLE
    assert report.oracle.status == ch.CHOOSABLE
    assert report.passed


def test_counterexample_against_reducible_fails(s1_config):
    fake = ch.ChoosabilityVerdict(ch.NOT_CHOOSABLE, ch.SAMPLED, 1,
                                  ch.identical_assignment((2, 3, 2, 2, 2)), 0)
    with patch.object(ch, 'f_choosable_sampled', return_value=fake) as sampled:
        report = ch.cross_check(s1_config, mode=ch.SAMPLED, trials=1, seed=0)
    sampled.assert_called_once()
    assert not report.passed


def test_precomputed_verdict_is_used(s1_config):
    verdict = ex.is_reducible(s1_config)
    with patch.object(ex, 'is_reducible') as recompute:
        report = ch.cross_check(s1_config, mode=ch.SAMPLED, trials=10, seed=1,
                                verdict=verdict)
    recompute.assert_not_called()
    assert report.passed


def test_unknown_mode():
    with pytest.raises(ValidationError, match='mode must be one of'):
        ch.cross_check(triangle_config([1, 1, 1]), mode='guess')
