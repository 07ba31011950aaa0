from __future__ import annotations

from pathlib import Path

import pytest

from meadows import Signature, build_from_signature, enumerate_signatures

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

DESK_BOUND = 64


@pytest.fixture(scope="session")
def sweep():
    """Every meadow of order <= DESK_BOUND, one per isomorphism class."""
    out: list[tuple[Signature, object]] = []
    for n in range(1, DESK_BOUND + 1):
        for sig in enumerate_signatures(n):
            out.append((sig, build_from_signature(sig)))
    return out


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
