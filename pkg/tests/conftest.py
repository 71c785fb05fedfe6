import pytest

from sgx import corpus_up_to


@pytest.fixture(scope="session")
def corpus2():
    return corpus_up_to(2)


@pytest.fixture(scope="session")
def corpus3():
    return corpus_up_to(3)
