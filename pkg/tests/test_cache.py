import json
import os
import unittest
from unittest.mock import patch

from brauer_lab import cache_utils, config


class TestCacheKey(unittest.TestCase):
    def test_key_ignores_parameter_order(self):
        a = cache_utils.cache_key("ideal", {"m": 1, "n": 2, "f": 1, "field": "q"})
        b = cache_utils.cache_key("ideal", {"field": "q", "f": 1, "n": 2, "m": 1})
        self.assertEqual(a, b)
        self.assertEqual(len(a), 64)

    def test_key_depends_on_check_and_params(self):
        base = cache_utils.cache_key("ideal", {"m": 1, "n": 2})
        self.assertNotEqual(base, cache_utils.cache_key("duality", {"m": 1, "n": 2}))
        self.assertNotEqual(base, cache_utils.cache_key("ideal", {"m": 1, "n": 3}))

    def test_key_depends_on_code_version(self):
        base = cache_utils.cache_key("ideal", {"m": 1})
        with patch.object(config, "CODE_VERSION", "0.0.0"):
            self.assertNotEqual(base, cache_utils.cache_key("ideal", {"m": 1}))


def test_store_and_reload(cache_file):
    payload = {"check": "basis", "params": {"n": 2}, "pass": True}
    key = cache_utils.cache_key("basis", {"n": 2})
    assert cache_utils.get_cached(cache_file, key) is None
    cache_utils.store_result(cache_file, key, payload)
    assert cache_utils.get_cached(cache_file, key) == payload

    cache_utils.clear_memory_cache()
    assert cache_utils.load_cache(cache_file) == {key: payload}
    assert cache_utils.cached_for_check(cache_file, "basis") == [payload]
    assert cache_utils.cached_for_check(cache_file, "ideal") == []


def test_bad_lines_are_skipped(cache_file):
    good = {"key": "abc", "result": {"check": "basis"}}
    with open(cache_file, "w", encoding="utf-8") as fh:
        fh.write("not json\n\n")
        fh.write(json.dumps({"result": {}}) + "\n")
        fh.write(json.dumps(good) + "\n")
    assert cache_utils.load_cache(cache_file) == {"abc": {"check": "basis"}}


def test_store_creates_missing_directories(tmp_path):
    path = str(tmp_path / "nested" / "dir" / "cache.jsonl")
    cache_utils.clear_memory_cache()
    cache_utils.store_result(path, "k", {"check": "basis"})
    assert os.path.exists(path)
    with open(path, encoding="utf-8") as fh:
        assert json.loads(fh.readline()) == {"key": "k", "result": {"check": "basis"}}
    cache_utils.clear_memory_cache()


def test_missing_file_is_an_empty_cache(cache_file):
    assert cache_utils.load_cache(cache_file) == {}
    assert not os.path.exists(cache_file)


if __name__ == "__main__":
    unittest.main()
