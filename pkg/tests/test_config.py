import logging

import pytest

from anclab.core.config import Config, _positive_int, _seed
from anclab.core.errors import ConfigError, ParamError, SchemeAssertionError, check
from anclab.core.logger import logger, set_verbose


def test_defaults():
    assert Config.MAX_ENUM_N >= Config.SELFTEST_MAX_N
    assert Config.MATERIALIZE_LIMIT > 0


def test_positive_int_reads_environment(monkeypatch):
    monkeypatch.setenv("ANCLAB_TEST_VALUE", "1_000")
    assert _positive_int("ANCLAB_TEST_VALUE", 5) == 1000
    monkeypatch.delenv("ANCLAB_TEST_VALUE")
    assert _positive_int("ANCLAB_TEST_VALUE", 5) == 5


@pytest.mark.parametrize("raw", ["abc", "0", "-4"])
def test_positive_int_rejects(monkeypatch, raw):
    monkeypatch.setenv("ANCLAB_TEST_VALUE", raw)
    with pytest.raises(ConfigError):
        _positive_int("ANCLAB_TEST_VALUE", 5)


def test_seed_accepts_zero(monkeypatch):
    monkeypatch.setenv("ANCLAB_TEST_SEED", "0")
    assert _seed("ANCLAB_TEST_SEED", 42) == 0
    monkeypatch.delenv("ANCLAB_TEST_SEED")
    assert _seed("ANCLAB_TEST_SEED", 42) == 42


@pytest.mark.parametrize("raw", ["forty-two", "4.2", "-1"])
def test_seed_rejects(monkeypatch, raw):
    monkeypatch.setenv("ANCLAB_TEST_SEED", raw)
    with pytest.raises(ConfigError, match="ANCLAB_TEST_SEED"):
        _seed("ANCLAB_TEST_SEED", 42)


def test_verbose_switches_level():
    set_verbose(True)
    assert logger.level == logging.DEBUG
    set_verbose(False)
    assert logger.level != logging.DEBUG


def test_error_hierarchy():
    assert issubclass(ParamError, ValueError)
    assert issubclass(SchemeAssertionError, AssertionError)
    check(True, "never raised")
    with pytest.raises(SchemeAssertionError, match="bound"):
        check(False, "bound failed")
