"""Shared fixtures: reference fields, bundled zero tables, a seeded RNG."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from xistrip.xi import RiemannXi
from xistrip.zeros import ingest_zero_table

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture(scope="session")
def riemann():
    return RiemannXi()


@pytest.fixture(scope="session")
def table_100_path() -> Path:
    path = DATA_DIR / "riemann_zeros_0100.txt"
    if not path.exists():
        pytest.skip("bundled 100-zero table missing")
    return path


@pytest.fixture(scope="session")
def table_10k_path() -> Path:
    path = DATA_DIR / "riemann_zeros_10k.txt"
    if not path.exists():
        pytest.skip("bundled 10k-zero table missing")
    return path


@pytest.fixture(scope="session")
def ordinates_100(table_100_path) -> np.ndarray:
    records = ingest_zero_table(table_100_path)
    return np.array([r.ordinate for r in records])


@pytest.fixture(scope="session")
def ordinates_10k(table_10k_path) -> np.ndarray:
    records = ingest_zero_table(table_10k_path)
    return np.array([r.ordinate for r in records])


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20260819)
