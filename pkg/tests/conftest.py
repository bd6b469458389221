from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def brute_rb():
    """Session-cached brute-force rb so the expensive moduli are searched once."""
    from rainbownum import Equation, rainbow_number_brute
    from rainbownum.formulas import RbResult

    cache: dict[tuple[int, Equation], RbResult] = {}

    def compute(n: int, eq: Equation) -> RbResult:
        key = (n, eq)
        if key not in cache:
            cache[key] = rainbow_number_brute(n, eq)
        return cache[key]

    return compute
