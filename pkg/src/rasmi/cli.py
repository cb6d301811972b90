"""Command-line interface.

Subcommands: convert, filter, check, stats, extract-dict, eval, serve.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from rasmi import bleu as bleu_mod
from rasmi import corpus as corpus_mod
from rasmi import lexicon as lexicon_mod
from rasmi.converter import Converter
from rasmi.resources import default_config


def _read_lines(path: str | None):
    fh = open(path, encoding="utf-8") if path else sys.stdin
    try:
        for line in fh:
            line = line.rstrip("\n")
            if line:
                yield line
    finally:
        if path:
            fh.close()


def _open_out(path: str | None):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def cmd_convert(args) -> int:
    config = default_config(args.data_dir)
    converter = Converter(config)
    out = _open_out(args.output)
    for line in _read_lines(args.input):
        result = converter.convert(line)
        if args.emit_links or args.emit_trace:
            doc = result.to_json()
            if not args.emit_trace:
                doc.pop("trace")
            if not args.emit_links:
                doc.pop("links")
            out.write(json.dumps(doc, ensure_ascii=False) + "\n")
        else:
            out.write(result.formal_text + "\n")
    if args.output:
        out.close()
    return 0


def cmd_filter(args) -> int:
    lex = lexicon_mod.load(args.lexicon) if args.lexicon else default_config(args.data_dir).lexicon
    accepted = corpus_mod.filter_candidates(
        _read_lines(args.input), lex,
        min_tokens=args.min_tokens, max_tokens=args.max_tokens, min_hits=args.min_hits)
    out = _open_out(args.output)
    for sentence in accepted:
        out.write(sentence + "\n")
    if args.output:
        out.close()
    return 0


def cmd_check(args) -> int:
    bad = 0
    for record in corpus_mod.iter_records(args.input):
        issues = corpus_mod.validate_record(record)
        for issue in issues:
            print(f"{record.id}\t{issue.severity}\t{issue.message}")
        if any(i.is_error for i in issues):
            bad += 1
    print(f"# records with errors: {bad}", file=sys.stderr)
    return 1 if bad else 0


def cmd_stats(args) -> int:
    stats = corpus_mod.compute_stats(corpus_mod.load_corpus(args.input))
    out = _open_out(args.output)
    out.write(json.dumps(stats.to_json(), ensure_ascii=False, indent=2) + "\n")
    if args.output:
        out.close()
    return 0


def cmd_extract_dict(args) -> int:
    lex = corpus_mod.extract_dictionary(corpus_mod.load_corpus(args.input))
    lexicon_mod.save(lex, args.output)
    print(f"wrote {len(lex)} entries to {args.output}", file=sys.stderr)
    return 0


def cmd_eval(args) -> int:
    hyp = list(_read_lines(args.hyp))
    ref = list(_read_lines(args.ref))
    length_filter = None
    if args.min_len is not None and args.max_len is not None:
        length_filter = (args.min_len, args.max_len)
    config = bleu_mod.BleuConfig(length_filter=length_filter)
    report = bleu_mod.evaluate_corpus(hyp, ref, config)
    if args.json:
        print(json.dumps(report, ensure_ascii=False, indent=2))
    else:
        print(f"corpus BLEU: {report['corpus_bleu_pct']}%")
        print(f"pairs scored: {report['pairs_scored']}"
              f" (filtered out: {report['pairs_filtered_out']})")
    if args.report:
        Path(args.report).write_text(
            json.dumps(report, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from rasmi.service import create_app, load_sessions
    from rasmi.store import RecordStore

    store = RecordStore(Path(args.data_dir) / "records.jsonl" if args.data_dir else None)
    sessions = load_sessions(args.sessions) if args.sessions else {}
    app = create_app(store=store, sessions=sessions,
                     config=default_config(args.rules_dir))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rasmi",
                                     description="Informal-to-formal Persian toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert informal lines to formal Persian")
    p.add_argument("--input", help="input file (default: stdin)")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--emit-links", action="store_true", help="emit JSON with alignment links")
    p.add_argument("--emit-trace", action="store_true", help="emit JSON with the rewrite trace")
    p.add_argument("--data-dir", help="override the shipped resource directory")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("filter", help="select informal candidate sentences")
    p.add_argument("--input", help="input file (default: stdin)")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--lexicon", help="informal lexicon TSV (default: shipped)")
    p.add_argument("--data-dir", help="override the shipped resource directory")
    p.add_argument("--min-tokens", type=int, default=corpus_mod.MIN_TOKENS)
    p.add_argument("--max-tokens", type=int, default=corpus_mod.MAX_TOKENS)
    p.add_argument("--min-hits", type=int, default=corpus_mod.MIN_INFORMAL_HITS)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("check", help="validate corpus records")
    p.add_argument("--input", required=True, help="corpus JSONL file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--input", required=True, help="corpus JSONL file")
    p.add_argument("--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("extract-dict", help="extract the dictionary from a corpus")
    p.add_argument("--input", required=True, help="corpus JSONL file")
    p.add_argument("--output", required=True, help="dictionary TSV to write")
    p.set_defaults(func=cmd_extract_dict)

    p = sub.add_parser("eval", help="BLEU-score hypotheses against references")
    p.add_argument("--hyp", required=True, help="hypothesis sentences, one per line")
    p.add_argument("--ref", required=True, help="reference sentences, one per line")
    p.add_argument("--min-len", type=int, help="minimum reference token count")
    p.add_argument("--max-len", type=int, help="maximum reference token count")
    p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    p.add_argument("--report", help="also write the machine-readable report to this file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the annotation backend")
    p.add_argument("--host", default=os.environ.get("RASMI_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(os.environ.get("RASMI_PORT", "8000")))
    p.add_argument("--data-dir", default=os.environ.get("RASMI_DATA_DIR"),
                   help="directory holding records.jsonl and the history snapshot")
    p.add_argument("--rules-dir", default=os.environ.get("RASMI_RESOURCE_DIR"),
                   help="override the shipped resource directory")
    p.add_argument("--sessions", default=os.environ.get("RASMI_SESSIONS"),
                   help="JSON token table for authentication")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
