"""Loading of the shipped default resources into a ConverterConfig."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from rasmi import lexicon as lexicon_mod
from rasmi import rules as rules_mod
from rasmi.converter import ConverterConfig, VerbLexicon
from rasmi.lexicon import AmbiguityEntry

DATA_PACKAGE = "rasmi.data"


def data_path(name: str) -> Path:
    return Path(str(importlib_resources.files(DATA_PACKAGE).joinpath(name)))


def _read_lines(path: Path) -> list[str]:
    return [ln.strip() for ln in path.read_text(encoding="utf-8").splitlines()
            if ln.strip() and not ln.startswith("#")]


def load_wordlist(path: Path) -> set[str]:
    return set(_read_lines(path))


def load_tanvin_map(path: Path) -> dict[str, str]:
    out = {}
    for ln in _read_lines(path):
        informal, formal = ln.split("\t")
        out[informal] = formal
    return out


def load_ambiguity_table(path: Path) -> dict[str, AmbiguityEntry]:
    grouped: dict[str, list[tuple[str, str, str]]] = {}
    for ln in path.read_text(encoding="utf-8").splitlines():
        if not ln.strip() or ln.startswith("#"):
            continue
        cols = ln.split("\t")
        if not 3 <= len(cols) <= 4:
            raise ValueError(f"{path}: expected 3-4 columns, got {len(cols)}: {ln!r}")
        cols += [""] * (4 - len(cols))
        suffix, template, role, cue = cols
        grouped.setdefault(suffix, []).append((template, role, cue))
    return {s: AmbiguityEntry(s, tuple(cands)) for s, cands in grouped.items()}


def load_coverage(path: Path | None = None) -> list[tuple[str, str, list[str]]]:
    path = path or data_path("coverage.tsv")
    rows = []
    for ln in _read_lines(path):
        item, mechanism, refs = ln.split("\t")
        rows.append((item, mechanism, refs.split(",")))
    return rows


def default_config(data_dir: str | Path | None = None,
                   history: lexicon_mod.Lexicon | None = None) -> ConverterConfig:
    """Build a converter configuration from a data directory (default: shipped)."""
    base = Path(data_dir) if data_dir else None

    def p(name: str) -> Path:
        return (base / name) if base else data_path(name)

    formal_vocab = load_wordlist(p("formal_vocab.txt"))
    ruleset = rules_mod.parse_ruleset(p("rules.rules").read_text(encoding="utf-8"),
                                      formal_vocab)
    return ConverterConfig(
        lexicon=lexicon_mod.load(p("lexicon.tsv")),
        ruleset=ruleset,
        verbs=VerbLexicon.load(p("verbs.tsv")),
        ambiguity=load_ambiguity_table(p("ambiguity.tsv")),
        tanvin_map=load_tanvin_map(p("tanvin.tsv")),
        nouns=load_wordlist(p("nouns.txt")),
        adjectives=load_wordlist(p("adjectives.txt")),
        pronouns=load_wordlist(p("pronouns.txt")),
        names=load_wordlist(p("names.txt")),
        destinations=load_wordlist(p("destinations.txt")),
        idioms=set(_read_lines(p("idioms.txt"))),
        history=history,
    )


@lru_cache(maxsize=1)
def cached_default_config() -> ConverterConfig:
    return default_config()
