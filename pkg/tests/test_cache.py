import json

from orthoschubert.cache import DiskCache, ENV_CACHE_DIR, key_digest


def test_roundtrip(tmp_path):
    c = DiskCache(tmp_path)
    key = ["k", 1, "x"]
    assert c.get(key) is None
    c.put(key, {"v": [1, 2]})
    assert c.get(key) == {"v": [1, 2]}
    p = c.path(key)
    assert p.parent.name == key_digest(key)[:2]
    assert not list(p.parent.glob(".tmp-*"))


def test_key_mismatch_is_a_miss(tmp_path):
    c = DiskCache(tmp_path)
    key = ["k"]
    c.put(key, 1)
    p = c.path(key)
    p.write_text(json.dumps({"key": ["other"], "value": 2}))
    assert c.get(key) is None


def test_corrupt_file_is_a_miss(tmp_path):
    c = DiskCache(tmp_path)
    c.put(["k"], 1)
    c.path(["k"]).write_text("{")
    assert c.get(["k"]) is None


def test_env(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_CACHE_DIR, str(tmp_path))
    assert DiskCache.from_env().root == tmp_path
    assert DiskCache.from_env(str(tmp_path / "x")).root == tmp_path / "x"
    monkeypatch.delenv(ENV_CACHE_DIR)
    assert DiskCache.from_env() is None
