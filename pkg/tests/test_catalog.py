from collections import Counter

import pytest

from goldens import M1_N5_T2, M2_N5_12, M2_N6_12
from exsquares.exactmath import DomainError
from exsquares.polyfield import HomogPoly
from exsquares.seeds import DegenerateParameterError
from exsquares.catalog import (UnknownFamilyError, _parse_blocks, cross_check,
                               eval_family, get_family, list_families)
from exsquares.verify import validate_system

IDS = ["n5-method1-deg17", "n5-method2-deg10", "n5-method2-deg30",
       "n6-method2-deg38"]


def test_listing_contains_the_published_records():
    listed = list_families()
    assert listed == sorted(listed)
    assert len(listed) >= 3
    for fid in IDS:
        assert fid in listed


def test_record_metadata():
    rec = get_family("n6-method2-deg38")
    assert (rec.n, rec.kind) == (6, "pq")
    assert all(isinstance(e, HomogPoly) for e in rec.entries)
    assert rec.certificates is None
    ten = get_family("n5-method2-deg10")
    assert ten.certificates is not None and len(ten.certificates) == 5


def test_unknown_id():
    with pytest.raises(UnknownFamilyError):
        get_family("no-such-family")
    with pytest.raises(UnknownFamilyError):
        eval_family("no-such-family", (1, 2))


def test_eval_matches_generated_systems():
    assert sorted(eval_family("n5-method1-deg17", 2).roots) == M1_N5_T2
    assert sorted(eval_family("n5-method2-deg30", (1, 2)).roots) == M2_N5_12
    assert sorted(eval_family("n6-method2-deg38", (1, 2)).roots) == M2_N6_12


def test_eval_reduces_and_validates():
    system = eval_family("n5-method2-deg30", (2, 3))
    assert validate_system(system).ok
    assert system.distinct


def test_deg10_family_repeats_by_design():
    system = eval_family("n5-method2-deg10", (1, 2))
    assert Counter(system.roots) == Counter({127: 2, 161: 2, 175: 1})
    assert not system.distinct
    assert validate_system(system, require_distinct=False).ok
    assert not validate_system(system).ok


def test_eval_rejects_degenerate_points():
    with pytest.raises(DegenerateParameterError):
        eval_family("n5-method1-deg17", 0)  # four entries share a factor t
    with pytest.raises(DegenerateParameterError):
        eval_family("n5-method2-deg30", (1, 1))
    with pytest.raises(DegenerateParameterError):
        eval_family("n6-method2-deg38", (0, 0))


def test_cross_check_every_family():
    for fid in IDS:
        report = cross_check(fid)
        assert report.ok, str(report)
        assert len(report.points) >= 10
        assert str(report) == f"OK ({len(report.points)} points)"


def test_parser_rejects_malformed_tables():
    with pytest.raises(DomainError):
        _parse_blocks("badheader 5 10\n(1, 2)\n")
    with pytest.raises(DomainError):
        _parse_blocks("f 5 10 zz\n(1, 2)\n")
    with pytest.raises(DomainError):
        _parse_blocks("f 5 10 pq\n(1, 2)\n(3, 4)\n")  # wrong tuple count


def test_parser_reads_comments_and_blanks():
    text = "# note\n\nf 2 1 pq\n(1, 0)\n(0, 1)\n\n"
    records = _parse_blocks(text)
    assert list(records) == ["f"]
    assert records["f"].entries == (HomogPoly((1, 0)), HomogPoly((0, 1)))
