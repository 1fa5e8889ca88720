import pytest

from phonomem import load_embedded, parse_corpus, train


@pytest.fixture(scope="session")
def latin():
    return load_embedded("latin")


@pytest.fixture(scope="session")
def turkish():
    return load_embedded("turkish")


@pytest.fixture(scope="session")
def latin_model(latin):
    return train(latin)


@pytest.fixture(scope="session")
def turkish_model(turkish):
    return train(turkish)


@pytest.fixture(scope="session")
def toy():
    # three-sound language: a vowel and two stops
    return parse_corpus(["ata tad"], source="toy")


@pytest.fixture(scope="session")
def toy_model(toy):
    return train(toy)
