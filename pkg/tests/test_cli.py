import json
import string

import pytest

from lexstat.cli import main

ALPHABET = string.ascii_lowercase


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def corpus_file(tmp_path):
    p = tmp_path / "corpus.txt"
    p.write_text("the cat sat. the cat ran up.\n\nthe dog sat up there.\n")
    return str(p)


@pytest.fixture()
def pangram_corpus(tmp_path):
    p = tmp_path / "pangrams.txt"
    p.write_text("\n\n".join([ALPHABET] * 4) + "\n")
    return str(p)


class TestWords:
    def test_crossword_jambeau(self, capsys, wordlist_path):
        code, out, _ = run(capsys, "words", "crossword", "--wordlist", str(wordlist_path), "--pattern", "...b..u")
        assert code == 0
        assert out.split() == ["jambeau"]

    def test_hangman_json(self, capsys, wordlist_path):
        code, out, _ = run(
            capsys, "words", "hangman", "--wordlist", str(wordlist_path),
            "--pattern", "_e____s", "--missed", "taoin", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 12
        assert doc["words"][0] == "bedbugs" and doc["words"][-1] == "zephyrs"

    def test_contains(self, capsys, wordlist_path):
        code, out, _ = run(capsys, "words", "contains", "--wordlist", str(wordlist_path), "--substring", "mile")
        assert code == 0
        assert "smiles" in out.split()

    def test_missing_wordlist_exit_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "words", "contains", "--wordlist", str(tmp_path / "no.txt"), "--substring", "a")
        assert code == 2
        assert "error" in err

    def test_bad_pattern_exit_1(self, capsys, wordlist_path):
        code, _, err = run(capsys, "words", "crossword", "--wordlist", str(wordlist_path), "--pattern", "..9")
        assert code == 1


class TestConcord:
    def test_sorted_lines(self, capsys, corpus_file):
        code, out, _ = run(capsys, "concord", "--corpus", corpus_file, "--word", "sat", "--json")
        assert code == 0
        doc = json.loads(out)
        assert [d["left_neighbor"] for d in doc] == ["cat", "dog"]

    def test_text_output_one_line_each(self, capsys, corpus_file):
        code, out, _ = run(capsys, "concord", "--corpus", corpus_file, "--word", "the")
        assert code == 0
        assert len(out.splitlines()) == 3

    def test_limit(self, capsys, corpus_file):
        code, out, _ = run(capsys, "concord", "--corpus", corpus_file, "--word", "the", "--limit", "2")
        assert len(out.splitlines()) == 2

    def test_absent_word_ok_empty(self, capsys, corpus_file):
        code, out, _ = run(capsys, "concord", "--corpus", corpus_file, "--word", "zebra")
        assert code == 0 and out == ""


class TestColloc:
    def test_literal_table(self, capsys):
        code, out, _ = run(capsys, "colloc", "--table", "8,1966,141,1012197", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["table"]["c11"] == 8
        assert doc["margins"]["total"] == 1014312
        assert doc["p_two_sided"] == pytest.approx(7.92e-10, rel=0.01)
        assert doc["expected_c11"] == pytest.approx(0.29, abs=0.005)

    def test_corpus_pair(self, capsys, corpus_file):
        code, out, _ = run(capsys, "colloc", "--corpus", corpus_file, "--w1", "the", "--w2", "cat", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["table"]["c11"] == 2

    def test_text_layout(self, capsys):
        code, out, _ = run(capsys, "colloc", "--table", "1,1815,148,1012348")
        assert code == 0
        assert "row sums" in out and "column sums" in out
        assert "p_two_sided:" in out

    def test_malformed_table_exit_1(self, capsys):
        code, _, err = run(capsys, "colloc", "--table", "1,2,3")
        assert code == 1

    def test_missing_inputs_exit_1(self, capsys):
        code, _, _ = run(capsys, "colloc")
        assert code == 1


class TestLettersFreq:
    def test_csv_with_header(self, capsys, pangram_corpus):
        code, out, _ = run(capsys, "letters", "freq", "--corpus", pangram_corpus, "--out", "csv", "--header")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "letter,count,proportion"
        assert len(lines) == 27
        assert lines[1].startswith("a,4,")

    def test_json_totals(self, capsys, pangram_corpus):
        code, out, _ = run(capsys, "letters", "freq", "--corpus", pangram_corpus, "--json")
        doc = json.loads(out)
        assert doc["total"] == 104
        assert doc["counts"]["z"] == 4

    def test_plot_written(self, capsys, pangram_corpus, tmp_path):
        plot = tmp_path / "freqs.png"
        code, _, _ = run(capsys, "letters", "freq", "--corpus", pangram_corpus, "--out", "csv", "--plot", str(plot))
        assert code == 0
        assert plot.exists() and plot.stat().st_size > 0


class TestCoupon:
    def test_expect_uniform(self, capsys):
        code, out, _ = run(capsys, "coupon", "expect", "--uniform", "26")
        assert code == 0
        assert float(out) == pytest.approx(100.215, abs=0.01)

    def test_expect_freqs(self, capsys, carol_freqs_path):
        code, out, _ = run(capsys, "coupon", "expect", "--freqs", str(carol_freqs_path), "--digits", "7")
        assert code == 0
        assert float(out) == pytest.approx(2473.82, abs=0.5)

    def test_expect_needs_exactly_one_source(self, capsys, carol_freqs_path):
        code, _, _ = run(capsys, "coupon", "expect")
        assert code == 1
        code, _, _ = run(capsys, "coupon", "expect", "--uniform", "5", "--freqs", str(carol_freqs_path))
        assert code == 1

    def test_simulate_deterministic(self, capsys):
        args = ("coupon", "simulate", "--uniform", "6", "--reps", "200", "--seed", "9", "--out", "csv")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        assert len(out1.splitlines()) == 200

    def test_simulate_requires_seed(self, capsys):
        code, _, _ = run(capsys, "coupon", "simulate", "--uniform", "6", "--reps", "10")
        assert code == 1


class TestBirthday:
    def test_exact_uniform(self, capsys):
        code, out, _ = run(capsys, "birthday", "expect", "--uniform", "365", "--exact", "--digits", "7")
        assert code == 0
        assert float(out) == pytest.approx(24.61659, abs=0.0001)

    def test_monte_carlo_json(self, capsys):
        code, out, _ = run(
            capsys, "birthday", "expect", "--uniform", "365", "--reps", "20000", "--seed", "1", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "monte-carlo"
        assert abs(doc["expected_draws"] - 24.617) < 5 * doc["std_error"]

    def test_monte_carlo_without_seed_exit_1(self, capsys):
        code, _, _ = run(capsys, "birthday", "expect", "--uniform", "365")
        assert code == 1

    def test_data_file(self, capsys, birthday_path):
        code, out, _ = run(capsys, "birthday", "expect", "--data", str(birthday_path), "--exact", "--digits", "7")
        assert code == 0
        assert float(out) < 24.6166  # nonuniform data repeats sooner than uniform

    def test_malformed_data_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("1,banana\n")
        code, _, err = run(capsys, "birthday", "expect", "--data", str(p), "--exact")
        assert code == 2

    def test_weekdays(self, capsys, birthday_path, tmp_path):
        plot = tmp_path / "days.png"
        code, out, _ = run(
            capsys, "birthday", "weekdays", "--data", str(birthday_path), "--day1", "sunday",
            "--plot", str(plot), "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["weekend_weekday_ratio"] < 0.9
        assert set(doc["means"]) == {
            "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"
        }
        assert plot.exists() and plot.stat().st_size > 0


class TestPangram:
    def test_scan_csv(self, capsys, pangram_corpus):
        code, out, _ = run(
            capsys, "pangram", "scan", "--corpus", pangram_corpus, "--samples", "5", "--seed", "3", "--out", "csv"
        )
        assert code == 0
        assert out.split() == ["26"] * 5

    def test_scan_plot(self, capsys, pangram_corpus, tmp_path):
        plot = tmp_path / "hist.png"
        code, _, _ = run(
            capsys, "pangram", "scan", "--corpus", pangram_corpus, "--samples", "5", "--seed", "3",
            "--plot", str(plot),
        )
        assert code == 0
        assert plot.exists() and plot.stat().st_size > 0

    def test_simulate_deterministic(self, capsys, carol_freqs_path):
        args = (
            "pangram", "simulate", "--freqs", str(carol_freqs_path), "--samples", "100",
            "--seed", "4", "--out", "csv",
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        assert all(int(v) >= 26 for v in out1.split())

    def test_hist_roundtrip(self, capsys, tmp_path):
        sample = tmp_path / "lengths.csv"
        sample.write_text("length\n26\n27\n300\n")
        code, out, _ = run(capsys, "pangram", "hist", "--in", str(sample), "--bin", "250", "--header")
        assert code == 0
        assert out.splitlines() == ["bin_lower,count", "0,2", "250,1"]

    def test_hist_bad_file_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("26\nalpha\n")
        code, _, err = run(capsys, "pangram", "hist", "--in", str(bad))
        assert code == 2
        assert ":2:" in err

    def test_gaps(self, capsys, pangram_corpus):
        code, out, _ = run(capsys, "pangram", "gaps", "--corpus", pangram_corpus, "--letter", "z", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 4
        assert doc["max_gap"] == 26  # z-to-z distance across adjacent alphabet repeats

    def test_missing_letter_corpus_exit_1(self, capsys, tmp_path):
        p = tmp_path / "noq.txt"
        p.write_text("abcdefghijklmnoprstuvwxyz\n")
        code, _, _ = run(capsys, "pangram", "scan", "--corpus", str(p), "--samples", "2", "--seed", "1")
        assert code == 1


class TestTopLevel:
    def test_version(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0
        assert "lexstat" in out

    def test_threads_option_accepted(self, capsys):
        code, out, _ = run(capsys, "--threads", "4", "coupon", "expect", "--uniform", "2")
        assert code == 0
        assert float(out) == pytest.approx(3.0, rel=1e-6)

    def test_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LEXSTAT_THREADS", "2")
        code, out, _ = run(capsys, "coupon", "expect", "--uniform", "2")
        assert code == 0

    def test_unknown_command_exit_1(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1
