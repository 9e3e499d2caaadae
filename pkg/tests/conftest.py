import numpy as np
import pytest

from chebdens import primes_upto


@pytest.fixture(scope="session")
def primes_1e4() -> np.ndarray:
    return primes_upto(10**4)


@pytest.fixture(scope="session")
def primes_1e5() -> np.ndarray:
    return primes_upto(10**5)


@pytest.fixture(scope="session")
def primes_1e6() -> np.ndarray:
    return primes_upto(10**6)
