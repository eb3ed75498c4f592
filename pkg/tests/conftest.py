import pytest
from hypothesis import HealthCheck, settings

# first call into a jit kernel may compile; keep hypothesis off the clock
settings.register_profile(
    "meshperm",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("meshperm")


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    from meshperm import _kernels as K

    K.warmup()
