import pytest

from rasmi import suggest as sg
from rasmi.alignment import AlignmentLink, side_overlaps, uncovered
from rasmi.corpus import CorpusRecord


def record(rid, informal, formal, links, status="confirmed"):
    return CorpusRecord(rid, informal, formal,
                        [AlignmentLink(tuple(i), tuple(f)) for i, f in links],
                        source="web", annotator="a", status=status,
                        created_at="2024-01-01T00:00:00+00:00")


def identity_links(n):
    return [((i, i + 1), (i, i + 1)) for i in range(n)]


class TestIngest:
    def test_double_ingest_doubles_counts(self):
        r = record("r1", "میخوام برم", "می‌خواهم بروم", identity_links(2))
        h = sg.AlignmentHistory()
        sg.ingest(r, h)
        sg.ingest(r, h)
        assert h.pair_counts[("میخوام", "می‌خواهم")] == 2

    def test_empty_span_links_ignored(self):
        r = record("r1", "الف", "الف ب",
                   [((0, 1), (0, 1)), ((1, 1), (1, 2))])
        h = sg.AlignmentHistory()
        sg.ingest(r, h)
        assert list(h.pair_counts) == [("الف", "الف")]

    def test_contexts_recorded(self):
        r1 = record("r1", "من میخوام برم", "من می‌خواهم بروم", identity_links(3))
        r2 = record("r2", "تو میخوام برم", "تو می‌خواهم بروم", identity_links(3))
        h = sg.AlignmentHistory()
        sg.ingest(r1, h)
        sg.ingest(r2, h)
        assert h.pair_counts[("میخوام", "می‌خواهم")] == 2
        ctx = h.context_index[("میخوام", "می‌خواهم")]
        assert ctx[("من", "برم")] == 1 and ctx[("تو", "برم")] == 1

    def test_invalid_record_rejected(self):
        r = record("r1", "الف", "الف", [((0, 5), (0, 1))])
        with pytest.raises(ValueError):
            sg.ingest(r, sg.AlignmentHistory())


class TestSuggest:
    def test_history_match_scored_by_frequency(self):
        h = sg.AlignmentHistory()
        for _ in range(5):
            sg.ingest(record("r", "میخوام برم", "می‌خواهم بروم", identity_links(2)), h)
        out = sg.suggest(["من", "میخوام"], ["من", "می‌خواهم"], h)
        hist = [s for s in out if s.provenance == "history"]
        assert len(hist) == 1
        assert hist[0].score == 5
        assert hist[0].link == AlignmentLink((1, 2), (1, 2))

    def test_empty_history_diagonal(self):
        out = sg.suggest(["الف", "ب", "پ"], ["ت", "ث", "ج"], sg.AlignmentHistory())
        assert all(s.provenance == "diagonal-fallback" for s in out)
        assert [s.link for s in out] == [AlignmentLink((i, i + 1), (i, i + 1))
                                         for i in range(3)]

    def test_diagonal_uneven_lengths_total(self):
        out = sg.suggest(["الف", "ب"], ["ت", "ث", "ج", "چ"], sg.AlignmentHistory())
        links = [s.link for s in out]
        assert uncovered(links, "informal_span", 2) == []
        assert uncovered(links, "formal_span", 4) == []
        assert side_overlaps(links, "informal_span") == []
        assert side_overlaps(links, "formal_span") == []

    def test_context_breaks_frequency_tie(self):
        h = sg.AlignmentHistory()
        # same informal word aligned to two formal words, 3 times each,
        # but only one pair ever seen with this left neighbor
        for i in range(3):
            sg.ingest(record(f"a{i}", "من کتابو دادم", "من کتاب را دادم",
                             [((0, 1), (0, 1)), ((1, 2), (1, 3)), ((2, 3), (3, 4))]), h)
        for i in range(3):
            sg.ingest(record(f"b{i}", "تو کتابو بردی", "تو کتابی بردی",
                             [((0, 1), (0, 1)), ((1, 2), (1, 2)), ((2, 3), (2, 3))]), h)
        out = sg.suggest(["من", "کتابو", "دادم"], ["من", "کتاب", "را", "کتابی", "دادم"], h)
        chosen = next(s for s in out if s.link.informal_span == (1, 2)
                      and s.provenance == "history")
        assert chosen.link.formal_span == (1, 3)  # context (من, دادم) seen for this pair
        assert chosen.tie_break >= 1

    def test_longest_match_preferred(self):
        h = sg.AlignmentHistory()
        sg.ingest(record("r1", "زنگ زد", "تلفن کرد", [((0, 2), (0, 2))]), h)
        sg.ingest(record("r2", "زنگ اومد", "زنگ آمد", identity_links(2)), h)
        out = sg.suggest(["زنگ", "زد"], ["تلفن", "کرد"], h)
        hist = [s for s in out if s.provenance == "history"]
        assert hist[0].link == AlignmentLink((0, 2), (0, 2))

    def test_deterministic(self):
        h = sg.AlignmentHistory()
        sg.ingest(record("r1", "الف ب", "پ ت", identity_links(2)), h)
        a = sg.suggest(["الف", "ب"], ["پ", "ت"], h)
        b = sg.suggest(["الف", "ب"], ["پ", "ت"], h)
        assert a == b

    def test_empty_inputs_rejected(self):
        with pytest.raises(ValueError):
            sg.suggest([], ["الف"], sg.AlignmentHistory())


class TestSelfConsistency:
    def test_unique_vocabulary_roundtrip(self):
        records = []
        for i in range(50):
            informal = f"غیر{i}الف غیر{i}ب غیر{i}پ"
            formal = f"رسمی{i}الف رسمی{i}ب رسمی{i}پ"
            records.append(record(f"r{i}", informal, formal, identity_links(3)))
        history = sg.rebuild(records)
        for r in records:
            inf, form = r.informal.split(" "), r.formal.split(" ")
            out = sg.suggest(inf, form, history)
            proposed = {s.link for s in out if s.provenance == "history"}
            assert proposed == set(r.links)


class TestHistoryPersistence:
    def test_snapshot_roundtrip(self, tmp_path):
        h = sg.AlignmentHistory()
        sg.ingest(record("r1", "من میخوام برم", "من می‌خواهم بروم", identity_links(3)), h)
        path = tmp_path / "history.json"
        sg.save_history(h, path)
        loaded = sg.load_history(path)
        assert loaded.pair_counts == h.pair_counts
        assert loaded.context_index == h.context_index

    def test_versioned_header_checked(self, tmp_path):
        path = tmp_path / "history.json"
        path.write_text('{"format": "other"}', encoding="utf-8")
        with pytest.raises(sg.HistoryFormatError):
            sg.load_history(path)

    def test_rebuild_equals_incremental(self):
        records = [record(f"r{i}", "میخوام برم", "می‌خواهم بروم", identity_links(2))
                   for i in range(5)]
        incremental = sg.AlignmentHistory()
        for r in records:
            sg.ingest(r, incremental)
        rebuilt = sg.rebuild(records)
        assert rebuilt.pair_counts == incremental.pair_counts
        assert rebuilt.context_index == incremental.context_index

    def test_rebuild_skips_drafts(self):
        records = [record("r1", "الف ب", "پ ت", identity_links(2), status="draft")]
        assert sg.rebuild(records).pair_counts == {}
