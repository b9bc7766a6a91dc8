import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# worked example pair used across modules: a labeled plane tree with three
# improper edges and the increasing tree the bijection sends it to
FIG_LABELED = "5(1(7),3(8,2,6,4))"
FIG_INCREASING = "1(2(5,8,3(6,4)),7)"
FIG_TAGGED = "1(2:x(5:x,8:y,3:x(6:y,4:y)),7:y)"
FIG_WALK = "1 4 4 7 7 2 5 5 3 3 2 1 6 6"


@pytest.fixture
def fig_labeled():
    return FIG_LABELED


@pytest.fixture
def fig_increasing():
    return FIG_INCREASING
