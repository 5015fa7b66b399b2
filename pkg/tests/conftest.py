import pytest


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("ALCOVEKIT_CACHE", str(d))
    return d
