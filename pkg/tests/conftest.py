import pytest

from lfdyn._kernel import available, resolve


@pytest.fixture(params=available())
def kernel(request):
    """Kernel name; black-box tests run once per installed kernel."""
    return request.param


@pytest.fixture(params=available())
def impl(request):
    """Kernel module, for tests that construct kernels directly."""
    return resolve(request.param)
