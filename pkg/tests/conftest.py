import pytest
from hypothesis import settings

from germcalc.exprparse import VarTable

# Exact-arithmetic reductions can be slow per example; wall-clock deadlines
# only add flakiness here.
settings.register_profile("germcalc", deadline=None)
settings.load_profile("germcalc")


@pytest.fixture
def xy() -> VarTable:
    return VarTable(("x", "y"))


@pytest.fixture
def xyz() -> VarTable:
    return VarTable(("x", "y", "z"))
