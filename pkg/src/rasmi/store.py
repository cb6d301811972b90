"""Single-writer record store with optimistic per-record versioning.

Readers get consistent snapshots; every mutation happens under one lock
and bumps the record's version counter, so a writer holding a stale
version is rejected instead of silently losing an update. The alignment
history used for suggestions is rebuilt from reviewed and confirmed
records and swapped in atomically.
"""

from __future__ import annotations

import threading
from pathlib import Path

from rasmi import corpus as corpus_mod
from rasmi import suggest as suggest_mod
from rasmi.corpus import CorpusRecord, Issue, legal_transition, validate_record


class VersionConflict(Exception):
    def __init__(self, record_id: str, expected: int, actual: int):
        super().__init__(f"record {record_id}: version {expected} is stale (now {actual})")
        self.record_id = record_id
        self.expected = expected
        self.actual = actual


class ValidationFailed(Exception):
    def __init__(self, issues: list[Issue]):
        super().__init__("; ".join(i.message for i in issues))
        self.issues = issues


class RecordStore:
    def __init__(self, path: str | Path | None = None,
                 history_statuses: tuple[str, ...] = ("reviewed", "confirmed")):
        self._lock = threading.Lock()
        self._records: dict[str, CorpusRecord] = {}
        self._path = Path(path) if path else None
        self._history_statuses = history_statuses
        self._history = suggest_mod.AlignmentHistory()
        self._counter = 0
        if self._path and self._path.exists():
            for record in corpus_mod.iter_records(self._path):
                self._records[record.id] = record
            self._refresh_history()

    # -- reads ---------------------------------------------------------------

    def get(self, record_id: str) -> CorpusRecord | None:
        return self._records.get(record_id)

    def list(self, source: str | None = None, status: str | None = None,
             annotator: str | None = None, q: str | None = None) -> list[CorpusRecord]:
        out = []
        for record in self._records.values():
            if source and record.source != source:
                continue
            if status and record.status != status:
                continue
            if annotator and record.annotator != annotator:
                continue
            if q and q not in record.informal and q not in record.formal:
                continue
            out.append(record)
        out.sort(key=lambda r: r.id)
        return out

    @property
    def history(self) -> suggest_mod.AlignmentHistory:
        return self._history

    def next_id(self) -> str:
        with self._lock:
            self._counter += 1
            while f"r{self._counter:06d}" in self._records:
                self._counter += 1
            return f"r{self._counter:06d}"

    # -- writes ---------------------------------------------------------------

    def create(self, record: CorpusRecord) -> CorpusRecord:
        issues = validate_record(record)
        errors = [i for i in issues if i.is_error]
        if errors:
            raise ValidationFailed(errors)
        with self._lock:
            if record.id in self._records:
                raise ValueError(f"record {record.id} already exists")
            record.version = 1
            self._records[record.id] = record
            self._after_write(record)
        return record

    def update(self, record: CorpusRecord, expected_version: int) -> CorpusRecord:
        with self._lock:
            current = self._records.get(record.id)
            if current is None:
                raise KeyError(record.id)
            if current.version != expected_version:
                raise VersionConflict(record.id, expected_version, current.version)
            issues = validate_record(record, prev_status=current.status)
            errors = [i for i in issues if i.is_error]
            if errors:
                raise ValidationFailed(errors)
            record.version = current.version + 1
            self._records[record.id] = record
            self._after_write(record)
        return record

    def set_status(self, record_id: str, status: str) -> CorpusRecord:
        with self._lock:
            current = self._records.get(record_id)
            if current is None:
                raise KeyError(record_id)
            if not legal_transition(current.status, status):
                raise ValidationFailed([Issue(
                    "error", f"illegal status transition {current.status!r} -> {status!r}")])
            current.status = status
            current.version += 1
            self._after_write(current)
        return current

    # -- internals --------------------------------------------------------

    def _after_write(self, record: CorpusRecord) -> None:
        self._refresh_history()
        if self._path:
            self._save()

    def _refresh_history(self) -> None:
        self._history = suggest_mod.rebuild(self._records.values(),
                                            self._history_statuses)

    def _save(self) -> None:
        tmp = self._path.with_suffix(".tmp")
        corpus_mod.save_corpus(sorted(self._records.values(), key=lambda r: r.id), tmp)
        tmp.replace(self._path)
        # history snapshot lives next to the corpus; rebuildable from it
        suggest_mod.save_history(self._history, self._path.with_name("history.json"))

    def records(self) -> list[CorpusRecord]:
        return self.list()
