import json

from rasmi import cli
from rasmi import corpus as cp
from rasmi.alignment import AlignmentLink


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_corpus(tmp_path, records):
    path = tmp_path / "corpus.jsonl"
    cp.save_corpus(records, path)
    return path


def sample_records():
    return [cp.CorpusRecord(
        "r1", "یه کتاب", "یک کتاب",
        [AlignmentLink((0, 1), (0, 1)), AlignmentLink((1, 2), (1, 2))],
        source="web", annotator="a", created_at="2024-01-01T00:00:00+00:00")]


class TestConvert:
    def test_plain_lines(self, tmp_path, capsys):
        inp = tmp_path / "in.txt"
        inp.write_text("یه هندونه وردار\n", encoding="utf-8")
        code, out, _ = run(capsys, "convert", "--input", str(inp))
        assert code == 0
        assert out.strip() == "یک هندوانه بردار"

    def test_emit_links_json(self, tmp_path, capsys):
        inp = tmp_path / "in.txt"
        inp.write_text("یه هندونه وردار\n", encoding="utf-8")
        code, out, _ = run(capsys, "convert", "--input", str(inp), "--emit-links")
        doc = json.loads(out.strip())
        assert doc["formal_text"] == "یک هندوانه بردار"
        assert len(doc["links"]) == 3
        assert "trace" not in doc

    def test_emit_trace(self, tmp_path, capsys):
        inp = tmp_path / "in.txt"
        inp.write_text("چن\n", encoding="utf-8")
        _, out, _ = run(capsys, "convert", "--input", str(inp), "--emit-trace")
        doc = json.loads(out.strip())
        assert any(t["ref"] == "final-d-restore" for t in doc["trace"])


class TestCorpusCommands:
    def test_check_clean(self, tmp_path, capsys):
        path = write_corpus(tmp_path, sample_records())
        code, out, err = run(capsys, "check", "--input", str(path))
        assert code == 0
        assert "errors: 0" in err

    def test_check_reports_issues(self, tmp_path, capsys):
        record = sample_records()[0]
        record.links = [AlignmentLink((0, 9), (0, 1))]
        path = write_corpus(tmp_path, [record])
        code, out, _ = run(capsys, "check", "--input", str(path))
        assert code == 1
        assert "out of bounds" in out

    def test_stats(self, tmp_path, capsys):
        path = write_corpus(tmp_path, sample_records())
        code, out, _ = run(capsys, "stats", "--input", str(path))
        doc = json.loads(out)
        assert doc["record_count"] == 1
        assert doc["dictionary_size"] == 1

    def test_extract_dict(self, tmp_path, capsys):
        path = write_corpus(tmp_path, sample_records())
        out_path = tmp_path / "dict.tsv"
        code, _, err = run(capsys, "extract-dict", "--input", str(path),
                           "--output", str(out_path))
        assert code == 0
        assert "یه\tیک\t1\t" in out_path.read_text(encoding="utf-8")

    def test_filter(self, tmp_path, capsys):
        long_informal = " ".join(["یه"] * 4 + ["واژه"] * 26)
        short = "یه کتاب"
        inp = tmp_path / "cand.txt"
        inp.write_text(long_informal + "\n" + short + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "filter", "--input", str(inp))
        assert out.strip() == long_informal


class TestEval:
    def test_eval_report(self, tmp_path, capsys):
        hyp = tmp_path / "hyp.txt"
        ref = tmp_path / "ref.txt"
        hyp.write_text("الف ب پ ت\n", encoding="utf-8")
        ref.write_text("الف ب پ ت\n", encoding="utf-8")
        code, out, _ = run(capsys, "eval", "--hyp", str(hyp), "--ref", str(ref))
        assert code == 0
        assert "corpus BLEU: 100.0000%" in out

    def test_eval_json_with_filter(self, tmp_path, capsys):
        hyp = tmp_path / "hyp.txt"
        ref = tmp_path / "ref.txt"
        hyp.write_text("الف ب\n" + " ".join(["ت"] * 18) + "\n", encoding="utf-8")
        ref.write_text("الف ب\n" + " ".join(["ت"] * 18) + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "eval", "--hyp", str(hyp), "--ref", str(ref),
                           "--min-len", "15", "--max-len", "25", "--json")
        doc = json.loads(out)
        assert doc["pairs_scored"] == 1
        assert doc["pairs_filtered_out"] == 1

    def test_eval_writes_machine_report_beside_text(self, tmp_path, capsys):
        hyp = tmp_path / "hyp.txt"
        ref = tmp_path / "ref.txt"
        report = tmp_path / "report.json"
        hyp.write_text("الف ب پ ت\n", encoding="utf-8")
        ref.write_text("الف ب پ ت\n", encoding="utf-8")
        code, out, _ = run(capsys, "eval", "--hyp", str(hyp), "--ref", str(ref),
                           "--report", str(report))
        assert "corpus BLEU" in out
        doc = json.loads(report.read_text(encoding="utf-8"))
        assert doc["corpus_bleu_pct"] == "100.0000"
