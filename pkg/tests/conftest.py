from pathlib import Path

import pytest

from rasmi import corpus as corpus_mod
from rasmi.converter import Converter
from rasmi.resources import default_config

FIXTURES = Path(__file__).parent / "fixtures"


def load_example_pairs() -> list[tuple[str, str, str]]:
    pairs = []
    for line in (FIXTURES / "examples.tsv").read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        ex_id, informal, formal = line.split("\t")
        pairs.append((ex_id, informal, formal))
    return pairs


EXAMPLE_PAIRS = load_example_pairs()


@pytest.fixture(scope="session")
def config():
    return default_config()


@pytest.fixture(scope="session")
def converter(config):
    return Converter(config)


@pytest.fixture(scope="session")
def example_pairs():
    return EXAMPLE_PAIRS


@pytest.fixture(scope="session")
def fixture_corpus(converter, example_pairs) -> list[corpus_mod.CorpusRecord]:
    """Corpus built by converting every fixture sentence; links come from
    the converter so records validate."""
    records = []
    sources = corpus_mod.SOURCES
    for i, (ex_id, informal, _formal) in enumerate(example_pairs):
        result = converter.convert(informal)
        records.append(corpus_mod.CorpusRecord(
            id=ex_id,
            informal=result.informal_text,
            formal=result.formal_text,
            links=result.links,
            source=sources[i % len(sources)],
            annotator="fixture",
            created_at="2024-01-01T00:00:00+00:00",
            status="confirmed",
            syntactic_change=result.syntactic_change,
        ))
    return records
