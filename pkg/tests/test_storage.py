import asyncio
import math
from types import SimpleNamespace

import numpy as np
import pytest

from domain.chain import ChainParams, build_correlations
from domain.experiments import SETTING2_COLUMNS, SweepTable
from infrastructure.cache import MemoryCacheManager
from infrastructure.config import ConfigurationException
from infrastructure.di import CONFIG_KEYS
from infrastructure.filesystem import CsvTableStorage, KeyValueConfigStorage
from infrastructure.repositories import CachedCorrelationRepository


@pytest.fixture
def config_storage():
    return KeyValueConfigStorage(CONFIG_KEYS)


def test_config_parse(config_storage):
    content = "# sweep\nn = 60\nalpha=a3   # near critical\n\nd-max = 20\n"
    assert config_storage.parse(content) == {"n": "60", "alpha": "a3", "d_max": "20"}


@pytest.mark.parametrize(
    "content",
    ["colour = red\n", "n 60\n", "n =\n", "n = 60\nn = 80\n"],
)
def test_config_parse_errors(config_storage, content):
    with pytest.raises(ConfigurationException):
        config_storage.parse(content)


def test_config_load(config_storage, tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("seed = 7\nn_list = 20,40\n", encoding="utf-8")

    assert asyncio.run(config_storage.load(path)) == {"seed": "7", "n_list": "20,40"}
    with pytest.raises(ConfigurationException):
        asyncio.run(config_storage.load(tmp_path / "missing.cfg"))


def _table():
    table = SweepTable("setting2", SETTING2_COLUMNS)
    table.record({"ell": 1, "delta_E_N": 0.1234567890123456, "E_B_abs": 2.5e-7, "ratio": math.nan})
    table.record({"ell": np.int64(2), "delta_E_N": 1.0, "E_B_abs": -0.0, "ratio": 1 / 3})
    return table


def test_csv_render():
    text = CsvTableStorage(12).render(_table())
    assert text == (
        "ell,delta_E_N,E_B_abs,ratio\n"
        "1,0.123456789012,2.5e-07,nan\n"
        "2,1,-0,0.333333333333\n"
    )


def test_csv_save_is_byte_stable(tmp_path):
    storage = CsvTableStorage()
    first = asyncio.run(storage.save(_table(), tmp_path / "a" / "out.csv"))
    second = asyncio.run(storage.save(_table(), tmp_path / "b.csv"))

    assert first.read_bytes() == second.read_bytes()
    assert b"\r" not in first.read_bytes()


def test_correlation_repository_caches():
    calls = []

    def builder(params):
        calls.append(params)
        return build_correlations(params)

    repo = CachedCorrelationRepository(MemoryCacheManager(), builder=builder)
    params = ChainParams(10, 0.9)

    first = asyncio.run(repo.get(params))
    second = asyncio.run(repo.get(ChainParams(10, 0.9, omega=2.0)))
    assert first is second
    assert len(calls) == 1

    asyncio.run(repo.clear_cache())
    asyncio.run(repo.get(params))
    assert len(calls) == 2


def test_memory_cache_expires_and_deletes(monkeypatch):
    from infrastructure.cache import memory_cache

    now = [100.0]
    monkeypatch.setattr(memory_cache, "time", SimpleNamespace(monotonic=lambda: now[0]))
    cache = MemoryCacheManager(default_ttl=10)

    asyncio.run(cache.set("short", 1))
    asyncio.run(cache.set("kept", 2, ttl=60))
    now[0] += 11
    assert asyncio.run(cache.get("short")) is None
    assert asyncio.run(cache.get("kept")) == 2
    assert len(cache) == 1

    asyncio.run(cache.delete("kept"))
    asyncio.run(cache.delete("missing"))
    assert asyncio.run(cache.get("kept")) is None
    assert len(cache) == 0
