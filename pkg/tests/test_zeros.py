"""Zero location, suspects, and the table file format."""

import os

import mpmath as mp
import numpy as np
import pytest

from xistrip.characters import character
from xistrip.momentum import ProductField
from xistrip.xi import DirichletXi
from xistrip.zeros import (
    ZeroRecord,
    ZeroTableFormatError,
    default_zero_table_path,
    find_zeros,
    ingest_zero_table,
    save_zero_table,
)

KNOWN_FIRST = [14.134725141734693, 21.022039638771555, 25.010857580145688]


def test_first_three_riemann_ordinates(riemann):
    scan = find_zeros(10.0, 26.0, riemann)
    assert len(scan.records) == 3
    for record, ref in zip(scan.records, KNOWN_FIRST):
        assert abs(record.ordinate - ref) < 5e-9
        assert record.source == "computed"
        assert record.tolerance <= 1e-8
    assert not scan.suspects


def test_zero_count_to_100(riemann):
    scan = find_zeros(0.0, 100.0, riemann)
    assert len(scan.records) == 29


def test_validation_errors(riemann):
    with pytest.raises(ValueError):
        find_zeros(-1.0, 10.0, riemann)
    with pytest.raises(ValueError):
        find_zeros(10.0, 10.0, riemann)
    with pytest.raises(ValueError):
        find_zeros(0.0, 10.0, riemann, step=0.2)


def test_chi4_zeros_confirmed_by_oracle():
    field = DirichletXi(character(4, 1))
    scan = find_zeros(0.0, 11.0, field)
    assert len(scan.records) == 2
    for record in scan.records:
        # Independent confirmation: |L(1/2 + i gamma, chi_4)| vanishes.
        with mp.workdps(30):
            s = mp.mpc(0.5, record.ordinate)
            l_val = mp.nsum(
                lambda k: (-1) ** k / (2 * k + 1) ** s, [0, mp.inf], method="a"
            )
            assert abs(l_val) < 1e-7
    assert scan.records[0].character == (4, 1)


def test_double_zero_suspect():
    # A squared zero never changes sign; the dip detector must flag it.
    # 20.003 keeps the zero off every step-0.02 grid point.
    field = ProductField.from_ordinates([20.003, 20.003, 14.0, 27.0])
    scan = find_zeros(12.0, 29.0, field, step=0.02)
    assert any(abs(s - 20.003) < 0.05 for s in scan.suspects)
    located = [r.ordinate for r in scan.records]
    assert any(abs(g - 14.0) < 1e-6 for g in located)
    assert any(abs(g - 27.0) < 1e-6 for g in located)
    assert not any(abs(g - 20.003) < 0.5 for g in located)


def test_double_zero_on_grid_point_is_recorded():
    # When the grid lands exactly on the zero, eta evaluates to exact zero
    # and the ordinate is recorded directly (at grid-step tolerance).
    field = ProductField.from_ordinates([20.0, 20.0, 14.0, 27.0])
    scan = find_zeros(12.0, 29.0, field, step=0.02)
    assert any(abs(r.ordinate - 20.0) < 1e-12 for r in scan.records)


def test_close_pair_warning():
    field = ProductField.from_ordinates([30.0, 30.025])
    with pytest.warns(UserWarning, match="closer than twice the scan step"):
        scan = find_zeros(28.0, 32.0, field, step=0.02)
    assert len(scan.records) == 2
    assert scan.warnings  # gap below twice the step


def test_save_and_ingest_round_trip(tmp_path):
    records = [
        ZeroRecord(14.134725141735, "computed", 1e-9, None),
        ZeroRecord(21.022039638772, "computed", 1e-9, None),
    ]
    path = tmp_path / "table.txt"
    save_zero_table(records, path)
    back = ingest_zero_table(path)
    assert len(back) == 2
    for a, b in zip(records, back):
        assert b.ordinate == pytest.approx(a.ordinate, abs=1e-12)
        assert b.source == "ingested"
        assert b.tolerance == pytest.approx(1e-9)
        assert b.character is None


def test_save_character_table_round_trip(tmp_path):
    records = [
        ZeroRecord(6.020948904157, "computed", 1e-9, (4, 1)),
        ZeroRecord(10.243770304322, "computed", 1e-9, (4, 1)),
    ]
    path = tmp_path / "chi4.txt"
    save_zero_table(records, path)
    back = ingest_zero_table(path)
    assert all(r.character == (4, 1) for r in back)


def test_save_rejects_mixed_characters(tmp_path):
    records = [
        ZeroRecord(6.0, "computed", 1e-9, (4, 1)),
        ZeroRecord(8.0, "computed", 1e-9, None),
    ]
    with pytest.raises(ValueError):
        save_zero_table(records, tmp_path / "mixed.txt")


def test_ingest_reports_line_numbers(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# precision=1e-9\n14.13\nnot-a-number\n", encoding="utf-8")
    with pytest.raises(ZeroTableFormatError) as excinfo:
        ingest_zero_table(path)
    assert excinfo.value.line_number == 3


def test_ingest_accepts_crlf_and_comments(tmp_path):
    path = tmp_path / "crlf.txt"
    path.write_bytes(b"# precision=1e-6\r\n# comment\r\n14.1347\r\n21.0220\r\n")
    records = ingest_zero_table(path)
    assert [r.ordinate for r in records] == pytest.approx([14.1347, 21.0220])
    assert records[0].tolerance == pytest.approx(1e-6)


def test_ingest_warns_on_disorder(tmp_path):
    path = tmp_path / "unsorted.txt"
    path.write_text("21.0\n14.1\n", encoding="utf-8")
    with pytest.warns(UserWarning):
        ingest_zero_table(path)


def test_default_table_env_override(tmp_path, monkeypatch):
    path = tmp_path / "mine.txt"
    path.write_text("14.1347\n", encoding="utf-8")
    monkeypatch.setenv("XI_ZERO_TABLE", str(path))
    assert default_zero_table_path() == path


def test_bundled_10k_table(ordinates_10k):
    assert ordinates_10k.size == 10_000
    assert np.all(np.diff(ordinates_10k) > 0.0)
    assert ordinates_10k[0] == pytest.approx(14.134725141735, abs=1e-9)
    # The classic near-degenerate pair around the 6709th zero stays split.
    assert float(np.min(np.diff(ordinates_10k))) > 0.005


def test_bundled_10k_spot_against_mpmath(ordinates_10k):
    for k in (1, 2, 100, 1000, 10000):
        with mp.workdps(20):
            ref = float(mp.zetazero(k).imag)
        assert abs(ordinates_10k[k - 1] - ref) < 5e-3
