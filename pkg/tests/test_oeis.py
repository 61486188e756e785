"""Offline fixtures, b-file parsing, and the online cache path."""
import io
import urllib.error

import pytest

from weaksort import oeis
from weaksort.class5 import count_indecomposable
from weaksort.recurrence import count_via_recurrence
from weaksort.schroder import enumerate_paths, peak_census


def test_fixture_prefixes():
    assert oeis.fetch("A111279").prefix(9) == (1, 1, 2, 6, 21, 79, 309, 1237, 5026)
    assert oeis.fetch("A006318").prefix(7) == (1, 2, 6, 22, 90, 394, 1806)
    assert oeis.fetch("A026671").prefix(7) == (1, 1, 3, 11, 43, 173, 707)
    assert oeis.fetch("A060693").prefix(6) == (1, 1, 1, 2, 3, 1)


def test_fixtures_agree_with_computed_values():
    shared = oeis.fetch("A111279")
    assert list(shared.terms) == count_via_recurrence("pi1", len(shared.terms) - 1)

    schroder = oeis.fetch("A006318")
    for n in range(8):
        assert schroder.terms[n] == len(enumerate_paths(n))

    indec = oeis.fetch("A026671")
    assert all(
        indec.terms[n] == count_indecomposable(n + 1) for n in range(len(indec.terms))
    )

    triangle = oeis.fetch("A060693")
    flat = list(triangle.terms)
    at = 0
    for n in range(7):
        census = peak_census(n)
        row = flat[at : at + n + 1]
        assert row == [census.get(k, 0) for k in range(n + 1)], n
        at += n + 1


def test_unknown_fixture_id():
    with pytest.raises(KeyError, match="A000000"):
        oeis.fetch("A000000")


def test_malformed_id():
    with pytest.raises(ValueError, match="malformed"):
        oeis.fetch("X123456")
    with pytest.raises(ValueError, match="malformed"):
        oeis.fetch("A12345")


def test_parse_bfile_errors():
    with pytest.raises(ValueError, match="line 2"):
        oeis.parse_bfile("A000001", "0 1\n1 2 3\n")
    with pytest.raises(ValueError, match="not contiguous"):
        oeis.parse_bfile("A000001", "0 1\n2 4\n")
    with pytest.raises(ValueError, match="no terms"):
        oeis.parse_bfile("A000001", "# comment only\n")


def test_parse_bfile_accepts_comments_and_offsets():
    seq = oeis.parse_bfile("A000001", "# header\n3 7\n4 9\n")
    assert seq.offset == 3
    assert seq.terms == (7, 9)


def test_prefix_guard():
    seq = oeis.parse_bfile("A000001", "0 1\n1 2\n")
    with pytest.raises(ValueError, match="only 2 terms"):
        seq.prefix(3)


def test_online_fetch_caches(tmp_path, monkeypatch):
    body = b"0 1\n1 5\n2 25\n"
    calls = []

    class FakeResponse(io.BytesIO):
        def __enter__(self):
            return self

        def __exit__(self, *exc):
            return False

    def fake_urlopen(url, timeout=0):
        calls.append(url)
        return FakeResponse(body)

    monkeypatch.setattr(oeis.urllib.request, "urlopen", fake_urlopen)
    first = oeis.fetch("A000351", source="online", cache_dir=tmp_path)
    assert first.terms == (1, 5, 25)
    assert len(calls) == 1
    # second call reads the cache: no new request, identical result
    second = oeis.fetch("A000351", source="online", cache_dir=tmp_path)
    assert second == first
    assert len(calls) == 1
    assert (tmp_path / "b000351.txt").read_bytes() == body


def test_online_failure_points_to_offline(monkeypatch, tmp_path):
    def failing_urlopen(url, timeout=0):
        raise urllib.error.URLError("unreachable")

    monkeypatch.setattr(oeis.urllib.request, "urlopen", failing_urlopen)
    with pytest.raises(ConnectionError, match="offline"):
        oeis.fetch("A000351", source="online", cache_dir=tmp_path)


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path / "envcache"))
    assert oeis._cache_dir() == tmp_path / "envcache"


def test_bad_source():
    with pytest.raises(ValueError, match="source"):
        oeis.fetch("A006318", source="sometimes")
