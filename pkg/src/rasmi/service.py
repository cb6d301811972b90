"""HTTP API for conversion, alignment suggestion, corpus CRUD, statistics
and evaluation: the backend of the annotation front end.

All bodies are UTF-8 JSON. Errors carry machine-readable issue lists:
400 validation, 401 auth, 404 unknown id, 409 version conflict.
Confirming a record requires the leader role.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass

from fastapi import Depends, FastAPI, Header, HTTPException
from fastapi.responses import StreamingResponse
from pydantic import BaseModel

from rasmi import bleu as bleu_mod
from rasmi import corpus as corpus_mod
from rasmi import suggest as suggest_mod
from rasmi import textcore
from rasmi.converter import Converter, ConverterConfig
from rasmi.corpus import CorpusRecord, validate_record
from rasmi.store import RecordStore, ValidationFailed, VersionConflict


@dataclass(frozen=True)
class ApiSession:
    annotator: str
    token: str
    role: str = "annotator"  # "annotator" | "leader"


class ConvertRequest(BaseModel):
    text: str


class SuggestRequest(BaseModel):
    informal: str
    formal: str


class RecordBody(BaseModel):
    id: str | None = None
    informal: str
    formal: str
    links: list[dict] = []
    source: str = "myself"
    status: str = "draft"
    syntactic_change: bool = False
    version: int | None = None


class StatusBody(BaseModel):
    status: str


class EvaluateRequest(BaseModel):
    hyp: list[str]
    ref: list[str]
    min_len: int | None = None
    max_len: int | None = None


def _record_from_body(body: RecordBody, annotator: str,
                      existing: CorpusRecord | None = None) -> CorpusRecord:
    from rasmi.alignment import AlignmentLink
    return CorpusRecord(
        id=body.id or (existing.id if existing else ""),
        informal=textcore.normalize_text(body.informal).text,
        formal=textcore.normalize_text(body.formal).text,
        links=[AlignmentLink.from_json(l) for l in body.links],
        source=body.source,
        annotator=annotator or (existing.annotator if existing else ""),
        created_at=existing.created_at if existing else "",
        status=body.status,
        syntactic_change=body.syntactic_change,
        version=existing.version if existing else 1,
    )


def create_app(store: RecordStore | None = None,
               sessions: dict[str, ApiSession] | None = None,
               config: ConverterConfig | None = None) -> FastAPI:
    if config is None:
        from rasmi.resources import default_config
        config = default_config()
    store = store if store is not None else RecordStore()
    converter = Converter(config)
    sessions = sessions or {}

    app = FastAPI(title="rasmi annotation backend", version="0.1.0")
    app.state.store = store
    app.state.sessions = sessions

    def auth(authorization: str | None = Header(default=None)) -> ApiSession:
        if not authorization or not authorization.startswith("Bearer "):
            raise HTTPException(401, detail={"issues": ["missing bearer token"]})
        token = authorization.removeprefix("Bearer ").strip()
        session = sessions.get(token)
        if session is None:
            raise HTTPException(401, detail={"issues": ["unknown token"]})
        return session

    def _issues_detail(issues) -> dict:
        return {"issues": [{"severity": i.severity, "message": i.message} for i in issues]}

    @app.get("/health")
    def health():
        return {"ok": True}

    @app.post("/convert")
    def convert(body: ConvertRequest, _session: ApiSession = Depends(auth)):
        return converter.convert(body.text).to_json()

    @app.post("/suggest")
    def suggest(body: SuggestRequest, _session: ApiSession = Depends(auth)):
        informal = [t.surface for t in textcore.tokenize(textcore.normalize_text(body.informal))]
        formal = [t.surface for t in textcore.tokenize(textcore.normalize_text(body.formal))]
        if not informal or not formal:
            raise HTTPException(400, detail={"issues": ["both sentences must be non-empty"]})
        suggestions = suggest_mod.suggest(informal, formal, store.history)
        return {"informal_tokens": informal, "formal_tokens": formal,
                "suggestions": [s.to_json() for s in suggestions]}

    @app.post("/records", status_code=201)
    def create_record(body: RecordBody, session: ApiSession = Depends(auth)):
        record = _record_from_body(body, session.annotator)
        if not record.id:
            record.id = store.next_id()
        try:
            created = store.create(record)
        except ValidationFailed as exc:
            raise HTTPException(400, detail=_issues_detail(exc.issues)) from exc
        except ValueError as exc:
            raise HTTPException(409, detail={"issues": [str(exc)]}) from exc
        warnings = [i for i in validate_record(created) if not i.is_error]
        return {"record": created.to_json(), "warnings": _issues_detail(warnings)["issues"]}

    @app.get("/records")
    def list_records(source: str | None = None, status: str | None = None,
                     annotator: str | None = None, q: str | None = None,
                     _session: ApiSession = Depends(auth)):
        records = store.list(source=source, status=status, annotator=annotator, q=q)
        return {"records": [r.to_json() for r in records], "count": len(records)}

    @app.get("/records/{record_id}")
    def get_record(record_id: str, _session: ApiSession = Depends(auth)):
        record = store.get(record_id)
        if record is None:
            raise HTTPException(404, detail={"issues": [f"unknown record {record_id}"]})
        return record.to_json()

    @app.put("/records/{record_id}")
    def update_record(record_id: str, body: RecordBody,
                      session: ApiSession = Depends(auth)):
        existing = store.get(record_id)
        if existing is None:
            raise HTTPException(404, detail={"issues": [f"unknown record {record_id}"]})
        if body.version is None:
            raise HTTPException(400, detail={"issues": ["version is required on update"]})
        record = _record_from_body(body, session.annotator, existing)
        record.id = record_id
        try:
            updated = store.update(record, body.version)
        except VersionConflict as exc:
            raise HTTPException(409, detail={"issues": [str(exc)],
                                             "current_version": exc.actual}) from exc
        except ValidationFailed as exc:
            raise HTTPException(400, detail=_issues_detail(exc.issues)) from exc
        warnings = [i for i in validate_record(updated) if not i.is_error]
        return {"record": updated.to_json(), "warnings": _issues_detail(warnings)["issues"]}

    @app.post("/records/{record_id}/status")
    def set_status(record_id: str, body: StatusBody,
                   session: ApiSession = Depends(auth)):
        if body.status == "confirmed" and session.role != "leader":
            raise HTTPException(401, detail={"issues": ["confirming requires the leader role"]})
        if store.get(record_id) is None:
            raise HTTPException(404, detail={"issues": [f"unknown record {record_id}"]})
        try:
            record = store.set_status(record_id, body.status)
        except ValidationFailed as exc:
            raise HTTPException(400, detail=_issues_detail(exc.issues)) from exc
        return record.to_json()

    @app.get("/stats")
    def stats(_session: ApiSession = Depends(auth)):
        return corpus_mod.compute_stats(store.records()).to_json()

    @app.get("/stats/sources")
    def stats_sources(_session: ApiSession = Depends(auth)):
        dist = corpus_mod.compute_stats(store.records()).source_distribution
        return {"sources": dict(sorted(dist.items())), "total": sum(dist.values())}

    @app.get("/dictionary")
    def dictionary(_session: ApiSession = Depends(auth)):
        lex = corpus_mod.extract_dictionary(store.records())
        buf = io.StringIO()
        for e in lex:
            buf.write(f"{e.informal}\t{e.formal}\t{e.frequency}\t{e.category or ''}\n")
        data = buf.getvalue().encode("utf-8")
        return StreamingResponse(iter([data]), media_type="text/tab-separated-values; charset=utf-8")

    @app.post("/evaluate")
    def evaluate(body: EvaluateRequest, _session: ApiSession = Depends(auth)):
        length_filter = None
        if body.min_len is not None and body.max_len is not None:
            length_filter = (body.min_len, body.max_len)
        cfg = bleu_mod.BleuConfig(length_filter=length_filter)
        try:
            return bleu_mod.evaluate_corpus(body.hyp, body.ref, cfg)
        except ValueError as exc:
            raise HTTPException(400, detail={"issues": [str(exc)]}) from exc

    return app


def load_sessions(path) -> dict[str, ApiSession]:
    """Read a token table: {token: {"annotator": ..., "role": ...}}."""
    doc = json.loads(open(path, encoding="utf-8").read())
    return {token: ApiSession(spec["annotator"], token, spec.get("role", "annotator"))
            for token, spec in doc.items()}
