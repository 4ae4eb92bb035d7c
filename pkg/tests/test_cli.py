import json

import pytest

from frake.cli import main
from frake.preprocess import load_stoplist, tokenize_document


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExtract:
    def test_happy_path(self, capsys, data_dir):
        code, out, _ = run_cli(
            capsys, "extract", str(data_dir / "sample_en.txt"), "--lang", "en", "-k", "10"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["keywords"]) == 10
        for entry in payload["keywords"]:
            assert set(entry) == {"text", "score", "kind"}
            assert entry["kind"] in ("word", "phrase")

    def test_unknown_language_exits_2(self, capsys, data_dir):
        code, _, err = run_cli(capsys, "extract", str(data_dir / "sample_en.txt"), "--lang", "xx")
        assert code == 2
        assert "language" in err

    def test_unreadable_input_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "extract", str(tmp_path / "missing.txt"))
        assert code == 2
        assert "error" in err

    def test_empty_document_exits_0_with_empty_list(self, capsys, tmp_path):
        f = tmp_path / "empty.txt"
        f.write_text("", encoding="utf-8")
        code, out, _ = run_cli(capsys, "extract", str(f))
        assert code == 0
        assert json.loads(out) == {"keywords": []}

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("Graphs of words. Words in graphs."))
        code, out, _ = run_cli(capsys, "extract", "-")
        assert code == 0
        assert json.loads(out)["keywords"]

    def test_byte_identical_reruns(self, capsys, data_dir):
        _, first, _ = run_cli(capsys, "extract", str(data_dir / "sample_en.txt"))
        _, second, _ = run_cli(capsys, "extract", str(data_dir / "sample_en.txt"))
        assert first == second

    def test_k_flag_limits_output(self, capsys, data_dir):
        code, out, _ = run_cli(capsys, "extract", str(data_dir / "sample_en.txt"), "-k", "3")
        assert code == 0
        assert len(json.loads(out)["keywords"]) == 3

    def test_invalid_k_exits_2(self, capsys, data_dir):
        code, _, err = run_cli(capsys, "extract", str(data_dir / "sample_en.txt"), "-k", "0")
        assert code == 2
        assert "k must be" in err

    def test_custom_stoplist_and_lexicon_allow_unknown_language(
        self, capsys, tmp_path, data_dir
    ):
        stop = tmp_path / "stop.txt"
        stop.write_text("och\natt\n", encoding="utf-8")
        lex = tmp_path / "lex.tsv"
        lex.write_text("-ning\tnoun\n", encoding="utf-8")
        doc = tmp_path / "doc.txt"
        doc.write_text("Berakning och matning. Berakning att styra.", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "extract", str(doc), "--lang", "sv",
            "--stoplist", str(stop), "--lexicon", str(lex),
        )
        assert code == 0
        texts = [e["text"] for e in json.loads(out)["keywords"]]
        assert "och" not in texts
        assert "berakning" in texts


class TestEval:
    def test_eval_mini_fixture(self, capsys, data_dir):
        code, out, _ = run_cli(capsys, "eval", str(data_dir / "mini_en"), "-k", "10")
        assert code == 0
        json_part, table_part = out.split("\n\n", 1)
        payload = json.loads(json_part)
        macro = payload["macro"]
        assert all(0.0 <= macro[m] <= 1.0 for m in ("precision", "recall", "f1"))
        assert payload["matcher"] == "stemmed"
        assert "macro" in table_part

    def test_stemmed_matcher_at_least_exact(self, capsys, data_dir):
        def macro_f1(matcher):
            code, out, _ = run_cli(
                capsys, "eval", str(data_dir / "mini_en"), "--matcher", matcher
            )
            assert code == 0
            return json.loads(out.split("\n\n", 1)[0])["macro"]["f1"]

        assert macro_f1("stemmed") >= macro_f1("exact")

    def test_tfidf_extractor(self, capsys, data_dir):
        code, out, _ = run_cli(
            capsys, "eval", str(data_dir / "mini_en"), "--extractor", "tfidf"
        )
        assert code == 0
        assert json.loads(out.split("\n\n", 1)[0])["extractor"] == "tfidf"

    def test_zero_documents_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "eval", str(tmp_path))
        assert code == 2
        assert "error" in err

    def test_jobs_flag(self, capsys, data_dir):
        code, out, _ = run_cli(capsys, "eval", str(data_dir / "mini_en"), "--jobs", "2")
        assert code == 0
        json.loads(out.split("\n\n", 1)[0])


class TestDebug:
    def test_export_files_and_headers(self, capsys, tmp_path, data_dir):
        out_dir = tmp_path / "dbg"
        code, _, _ = run_cli(
            capsys, "debug", str(data_dir / "sample_en.txt"),
            "--debug-export", str(out_dir),
        )
        assert code == 0
        cent = (out_dir / "centralities.csv").read_text(encoding="utf-8").splitlines()
        assert cent[0] == "word,DE,CL,BE,EV,SH,PR,CC,EC"
        feat = (out_dir / "features.csv").read_text(encoding="utf-8").splitlines()
        assert feat[0] == "word,TCase,TPos,TFNorm,TSent,Pos,textural_score"
        assert (out_dir / "edges.tsv").exists()

    def test_edge_count_bound(self, capsys, tmp_path, data_dir):
        out_dir = tmp_path / "dbg"
        text = (data_dir / "sample_en.txt").read_text(encoding="utf-8")
        run_cli(capsys, "debug", str(data_dir / "sample_en.txt"), "--debug-export", str(out_dir))
        doc = tokenize_document(text, load_stoplist("en"))
        edges = (out_dir / "edges.tsv").read_text(encoding="utf-8").splitlines()
        assert len(edges) <= 2 * len(doc.all_words)
        for line in edges:
            assert len(line.split("\t")) == 2

    def test_empty_document_writes_headers_only(self, capsys, tmp_path):
        f = tmp_path / "empty.txt"
        f.write_text(" \n", encoding="utf-8")
        out_dir = tmp_path / "dbg"
        code, _, _ = run_cli(capsys, "debug", str(f), "--debug-export", str(out_dir))
        assert code == 0
        assert (out_dir / "edges.tsv").read_text(encoding="utf-8") == ""
        assert len((out_dir / "centralities.csv").read_text(encoding="utf-8").splitlines()) == 1

    def test_unwritable_directory_exits_2(self, capsys, tmp_path, data_dir):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        code, _, err = run_cli(
            capsys, "debug", str(data_dir / "sample_en.txt"),
            "--debug-export", str(blocker / "sub"),
        )
        assert code == 2
        assert "error" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
