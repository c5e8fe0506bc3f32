"""The ``lexstat`` command-line tool.

One command per process; every randomized subcommand takes an explicit
``--seed`` so runs are bit-reproducible.  Output is plain text by default,
``--json`` for a single JSON document, ``--out csv`` for headerless
delimited output (``--header`` adds one), and ``--plot FILE`` renders a
matplotlib figure alongside the delimited output where a report has a
natural picture.

Exit codes: 0 success, 1 usage/argument error, 2 data or format error.
"""

from __future__ import annotations

import json
import os
import sys
from importlib import metadata
from pathlib import Path

import click
import numpy as np

from . import alphastat, collocation, pangram, textio, wordplay
from .concordance import DEFAULT_WIDTH, concordance as build_concordance

try:
    __version__ = metadata.version("lexstat")
except metadata.PackageNotFoundError:  # running from a source tree
    __version__ = "0.0.0"


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _load_corpus(path: str) -> textio.Corpus:
    return textio.Corpus.from_file(path)


def _load_freqs(path: str) -> alphastat.LetterFrequencyTable:
    return alphastat.LetterFrequencyTable.from_csv(path)


def _emit_json(doc) -> None:
    click.echo(json.dumps(doc, indent=2))


_seed_option = click.option("--seed", type=click.IntRange(0), required=True, help="RNG seed (required; no silent entropy).")
_json_option = click.option("--json", "as_json", is_flag=True, help="Emit a single JSON document.")
_digits_option = click.option("--digits", type=click.IntRange(1, 17), default=6, show_default=True, help="Significant digits for numeric text output.")


@click.group()
@click.version_option(__version__, prog_name="lexstat")
@click.option(
    "--threads",
    type=click.IntRange(1),
    default=lambda: int(os.environ.get("LEXSTAT_THREADS", "1")),
    help="Worker cap for internal parallelism (results never depend on it).",
)
@click.pass_context
def cli(ctx, threads):
    """Corpus statistics workbench: wordplay, collocations, pangrams."""
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads


# ---------------------------------------------------------------- words

@cli.group()
def words():
    """Pattern-constrained wordlist search."""


def _emit_words(matches: list[str], as_json: bool) -> None:
    if as_json:
        _emit_json({"count": len(matches), "words": matches})
    else:
        for w in matches:
            click.echo(w)


@words.command()
@click.option("--wordlist", "wordlist_path", required=True, type=click.Path())
@click.option("--pattern", required=True, help='Crossword pattern, e.g. "...b..u" ("." = unknown cell).')
@_json_option
def crossword(wordlist_path, pattern, as_json):
    """Words matching a fixed-letter crossword pattern."""
    wl = textio.load_wordlist(wordlist_path)
    length, fixed = wordplay.parse_crossword_pattern(pattern)
    _emit_words(wordplay.crossword_search(wl, length, fixed), as_json)


@words.command()
@click.option("--wordlist", "wordlist_path", required=True, type=click.Path())
@click.option("--pattern", required=True, help='Hangman pattern, e.g. "_e____s" ("_" = unknown cell).')
@click.option("--missed", default="", help="Letters guessed but absent, e.g. taoin.")
@_json_option
def hangman(wordlist_path, pattern, missed, as_json):
    """Words matching a hangman pattern with missed-letter exclusions.

    Revealed letters are inferred from the pattern and auto-added to the
    excluded set.
    """
    wl = textio.load_wordlist(wordlist_path)
    pat = wordplay.parse_hangman_pattern(pattern, missed)
    _emit_words(wordplay.hangman_search(wl, pat), as_json)


@words.command()
@click.option("--wordlist", "wordlist_path", required=True, type=click.Path())
@click.option("--substring", required=True)
@_json_option
def contains(wordlist_path, substring, as_json):
    """Words containing a substring."""
    wl = textio.load_wordlist(wordlist_path)
    _emit_words(wordplay.substring_search(wl, substring.lower()), as_json)


# ---------------------------------------------------------------- concord

_SORT_MAP = {"left": "left-word", "right": "right-word", "position": "position"}


@cli.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--word", required=True)
@click.option("--width", type=click.IntRange(1), default=DEFAULT_WIDTH, show_default=True)
@click.option("--sort", "sort_key", type=click.Choice(list(_SORT_MAP)), default="left", show_default=True)
@click.option("--limit", type=click.IntRange(1), default=None)
@_json_option
def concord(corpus_path, word, width, sort_key, limit, as_json):
    """KWIC concordance lines for a word, sorted by a neighbor."""
    corpus = _load_corpus(corpus_path)
    lines = build_concordance(corpus, word, width=width, sort=_SORT_MAP[sort_key])
    if limit is not None:
        lines = lines[:limit]
    if as_json:
        _emit_json(
            [
                {
                    "left": ln.left_context,
                    "keyword": ln.keyword,
                    "right": ln.right_context,
                    "left_neighbor": ln.left_neighbor,
                    "right_neighbor": ln.right_neighbor,
                    "offset": ln.source_offset,
                }
                for ln in lines
            ]
        )
    else:
        for ln in lines:
            click.echo(ln.format(width))


# ---------------------------------------------------------------- colloc

def _parse_table(spec: str) -> collocation.ContingencyTable2x2:
    parts = spec.split(",")
    if len(parts) != 4:
        raise click.UsageError("--table needs four counts: c11,c12,c21,c22")
    try:
        cells = [int(p) for p in parts]
    except ValueError:
        raise click.UsageError(f"--table counts must be integers, got {spec!r}")
    try:
        return collocation.ContingencyTable2x2(*cells)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@cli.command()
@click.option("--corpus", "corpus_path", type=click.Path(), default=None)
@click.option("--w1", default=None, help="First word of the ordered bigram.")
@click.option("--w2", default=None, help="Second word of the ordered bigram.")
@click.option("--table", "table_spec", default=None, help="Literal table c11,c12,c21,c22 (bypasses the corpus).")
@_json_option
@_digits_option
def colloc(corpus_path, w1, w2, table_spec, as_json, digits):
    """2x2 contingency table and Fisher's exact test for a word pair."""
    if table_spec is not None:
        table = _parse_table(table_spec)
    else:
        if not (corpus_path and w1 and w2):
            raise click.UsageError("need either --table or --corpus with --w1 and --w2")
        corpus = _load_corpus(corpus_path)
        tokens = [t for t, _ in corpus.tokens]
        table = collocation.bigram_contingency(tokens, w1.lower(), w2.lower())
    result = collocation.fisher_exact(table)
    if as_json:
        _emit_json(
            {
                "table": {"c11": table.c11, "c12": table.c12, "c21": table.c21, "c22": table.c22},
                "margins": {
                    "row1": table.row1,
                    "row2": table.row2,
                    "col1": table.col1,
                    "col2": table.col2,
                    "total": table.total,
                },
                "expected_c11": result.expected_c11,
                "point_prob": result.point_prob,
                "p_left": result.p_left,
                "p_right": result.p_right,
                "p_two_sided": result.p_two_sided,
            }
        )
        return
    l1 = w1 or "w1"
    l2 = w2 or "w2"
    width = max(12, len(l1) + 2)
    rows = [
        ("", l1, f"-{l1}", "row sums"),
        (l2, table.c11, table.c12, table.row1),
        (f"-{l2}", table.c21, table.c22, table.row2),
        ("column sums", table.col1, table.col2, table.total),
    ]
    for row in rows:
        click.echo("".join(f"{str(cell):>{width}}" for cell in row))
    click.echo(f"expected c11: {_fmt(result.expected_c11, digits)}")
    click.echo(f"p_left:       {_fmt(result.p_left, digits)}")
    click.echo(f"p_right:      {_fmt(result.p_right, digits)}")
    click.echo(f"p_two_sided:  {_fmt(result.p_two_sided, digits)}")


# ---------------------------------------------------------------- letters

@cli.group()
def letters():
    """Letter-level statistics."""


@letters.command("freq")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--out", "out_format", type=click.Choice(["csv"]), default=None, help="Delimited output instead of text.")
@click.option("--header", is_flag=True, help="Include a CSV header line.")
@click.option("--plot", "plot_path", type=click.Path(), default=None, help="Also render a bar chart to this file.")
@_json_option
def letters_freq(corpus_path, out_format, header, plot_path, as_json):
    """Per-letter counts and empirical proportions of a corpus."""
    corpus = _load_corpus(corpus_path)
    table = alphastat.letter_frequencies(textio.letters_of(corpus.raw_text))
    if plot_path:
        from . import plots

        plots.save_letter_frequencies(table, plot_path)
    if as_json:
        _emit_json(
            {
                "total": table.total,
                "counts": dict(zip(textio.ALPHABET, table.counts)),
                "proportions": dict(zip(textio.ALPHABET, table.proportions)),
            }
        )
    elif out_format == "csv":
        if header:
            click.echo("letter,count,proportion")
        click.echo(table.to_csv(), nl=False)
    else:
        for i, letter in enumerate(textio.ALPHABET):
            click.echo(f"{letter} {table.counts[i]:>8} {table.proportions[i]:.6f}")
        click.echo(f"total {table.total}")


# ---------------------------------------------------------------- coupon

@cli.group()
def coupon():
    """Coupon-collector expectations and simulation."""


def _probs_from_flags(freqs_path, uniform_n) -> alphastat.ProbabilityVector:
    if (freqs_path is None) == (uniform_n is None):
        raise click.UsageError("need exactly one of --freqs or --uniform")
    if uniform_n is not None:
        return alphastat.ProbabilityVector.uniform(uniform_n)
    table = _load_freqs(freqs_path)
    return alphastat.ProbabilityVector.from_weights(table.counts)


@coupon.command("expect")
@click.option("--freqs", "freqs_path", type=click.Path(), default=None, help="letter,count,proportion CSV.")
@click.option("--uniform", "uniform_n", type=click.IntRange(1), default=None, help="Uniform over N categories.")
@_digits_option
@_json_option
def coupon_expect(freqs_path, uniform_n, digits, as_json):
    """Expected draws to collect every category once (by quadrature)."""
    probs = _probs_from_flags(freqs_path, uniform_n)
    value = alphastat.expected_full_collection(probs)
    if as_json:
        _emit_json({"expected_draws": value, "categories": len(probs)})
    else:
        click.echo(_fmt(value, digits))


@coupon.command("simulate")
@click.option("--freqs", "freqs_path", type=click.Path(), default=None)
@click.option("--uniform", "uniform_n", type=click.IntRange(1), default=None)
@click.option("--reps", type=click.IntRange(1), required=True)
@_seed_option
@click.option("--out", "out_format", type=click.Choice(["csv"]), default=None)
@click.option("--header", is_flag=True)
@_digits_option
@_json_option
def coupon_simulate(freqs_path, uniform_n, reps, seed, out_format, header, digits, as_json):
    """Simulated full-collection draw counts (seeded, reproducible)."""
    probs = _probs_from_flags(freqs_path, uniform_n)
    lengths = alphastat.simulate_full_collection(probs, reps, seed)
    mean = float(lengths.mean())
    se = float(lengths.std(ddof=1) / np.sqrt(reps)) if reps > 1 else float("nan")
    if as_json:
        _emit_json({"reps": reps, "seed": seed, "mean": mean, "std_error": se, "lengths": lengths.tolist()})
    elif out_format == "csv":
        if header:
            click.echo("length")
        for v in lengths:
            click.echo(str(int(v)))
    else:
        click.echo(f"reps {reps}  mean {_fmt(mean, digits)}  std_error {_fmt(se, digits)}")


# ---------------------------------------------------------------- birthday

@cli.group()
def birthday():
    """First-repeat (birthday) expectations over day-of-year data."""


@birthday.command("expect")
@click.option("--uniform", "uniform_n", type=click.IntRange(1), default=None, help="Uniform over N days.")
@click.option("--data", "data_path", type=click.Path(), default=None, help="day,count file for days 1-365.")
@click.option("--reps", type=click.IntRange(1), default=1_000_000, show_default=True)
@click.option("--seed", type=click.IntRange(0), default=None, help="RNG seed (required unless --exact).")
@click.option("--exact", is_flag=True, help="Evaluate the exact product formula instead of Monte Carlo.")
@_digits_option
@_json_option
def birthday_expect(uniform_n, data_path, reps, seed, exact, digits, as_json):
    """Expected draws until a repeated day."""
    if (uniform_n is None) == (data_path is None):
        raise click.UsageError("need exactly one of --uniform or --data")
    if uniform_n is not None:
        probs = alphastat.ProbabilityVector.uniform(uniform_n)
        zero_days = ()
    else:
        day_counts = alphastat.load_day_counts(data_path, allow_zero=True)
        probs = day_counts.probabilities
        zero_days = day_counts.zero_days
        if zero_days:
            click.echo(f"warning: {len(zero_days)} zero-count day(s); they never occur in draws", err=True)
    if exact:
        value = alphastat.exact_first_repeat_expectation(probs)
        if as_json:
            _emit_json({"expected_draws": value, "method": "exact"})
        else:
            click.echo(_fmt(value, digits))
        return
    if seed is None:
        raise click.UsageError("--seed is required for Monte Carlo (or pass --exact)")
    est = alphastat.expected_first_repeat(probs, reps, seed)
    if as_json:
        _emit_json(
            {
                "expected_draws": est.estimate,
                "std_error": est.std_error,
                "reps": est.reps,
                "seed": seed,
                "method": "monte-carlo",
            }
        )
    else:
        click.echo(f"{_fmt(est.estimate, digits)}  std_error {_fmt(est.std_error, digits)}")


@birthday.command("weekdays")
@click.option("--data", "data_path", required=True, type=click.Path())
@click.option("--day1", type=click.Choice(alphastat.WEEKDAY_NAMES), required=True, help="Weekday of day 1 (Jan 1).")
@click.option("--plot", "plot_path", type=click.Path(), default=None, help="Also render the day-of-year scatter to this file.")
@_digits_option
@_json_option
def birthday_weekdays(data_path, day1, plot_path, digits, as_json):
    """Mean daily count per weekday and the weekend/weekday ratio."""
    day_counts = alphastat.load_day_counts(data_path, allow_zero=True)
    summary = alphastat.weekday_summary(day_counts.counts, alphastat.WEEKDAY_NAMES.index(day1))
    if plot_path:
        from . import plots

        plots.save_day_counts(day_counts.counts, plot_path)
    if as_json:
        _emit_json({"means": summary.means, "weekend_weekday_ratio": summary.weekend_weekday_ratio})
    else:
        for name in alphastat.WEEKDAY_NAMES:
            click.echo(f"{name:<9} {_fmt(summary.means[name], digits)}")
        click.echo(f"weekend/weekday ratio: {_fmt(summary.weekend_weekday_ratio, digits)}")


# ---------------------------------------------------------------- pangram

@cli.group("pangram")
def pangram_group():
    """Pangrammatic-window scanning, simulation, and summaries."""


def _emit_lengths(sample: pangram.LengthSample, out_format, header, as_json, digits, extra=None):
    mean = float(sample.lengths.mean())
    if as_json:
        doc = {
            "source": sample.source,
            "seed": sample.seed,
            "n": len(sample),
            "discarded": sample.discarded,
            "mean": mean,
            "lengths": sample.lengths.tolist(),
        }
        if extra:
            doc.update(extra)
        _emit_json(doc)
    elif out_format == "csv":
        if header:
            click.echo("length")
        for v in sample.lengths:
            click.echo(str(int(v)))
    else:
        click.echo(
            f"n {len(sample)}  mean {_fmt(mean, digits)}  min {int(sample.lengths.min())}  "
            f"max {int(sample.lengths.max())}  discarded {sample.discarded}"
        )


@pangram_group.command("scan")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--samples", type=click.IntRange(1), required=True)
@_seed_option
@click.option("--start-mode", type=click.Choice(pangram.START_MODES), default="paragraph", show_default=True)
@click.option("--out", "out_format", type=click.Choice(["csv"]), default=None)
@click.option("--header", is_flag=True)
@click.option("--plot", "plot_path", type=click.Path(), default=None, help="Also render a length histogram to this file.")
@click.option("--bin", "bin_width", type=click.IntRange(1), default=pangram.DEFAULT_BIN_WIDTH, show_default=True, help="Bin width for --plot.")
@_digits_option
@_json_option
def pangram_scan(corpus_path, samples, seed, start_mode, out_format, header, plot_path, bin_width, digits, as_json):
    """Sample pangrammatic-window lengths from a corpus."""
    corpus = _load_corpus(corpus_path)
    sample = pangram.sample_windows(corpus, samples, seed, start_mode=start_mode)
    if plot_path:
        from . import plots

        plots.save_length_histogram(pangram.histogram(sample, bin_width), plot_path)
    _emit_lengths(sample, out_format, header, as_json, digits)


@pangram_group.command("simulate")
@click.option("--freqs", "freqs_path", required=True, type=click.Path())
@click.option("--samples", type=click.IntRange(1), required=True)
@_seed_option
@click.option("--out", "out_format", type=click.Choice(["csv"]), default=None)
@click.option("--header", is_flag=True)
@click.option("--plot", "plot_path", type=click.Path(), default=None)
@click.option("--bin", "bin_width", type=click.IntRange(1), default=pangram.DEFAULT_BIN_WIDTH, show_default=True)
@_digits_option
@_json_option
def pangram_simulate(freqs_path, samples, seed, out_format, header, plot_path, bin_width, digits, as_json):
    """Simulate pangram lengths from i.i.d. letters with given frequencies."""
    table = _load_freqs(freqs_path)
    sample = pangram.simulate_iid(table, samples, seed)
    if plot_path:
        from . import plots

        plots.save_length_histogram(pangram.histogram(sample, bin_width), plot_path)
    _emit_lengths(sample, out_format, header, as_json, digits)


@pangram_group.command("hist")
@click.option("--in", "in_path", required=True, type=click.Path(), help="Sample CSV: one length per line.")
@click.option("--bin", "bin_width", type=click.IntRange(1), default=pangram.DEFAULT_BIN_WIDTH, show_default=True)
@click.option("--header", is_flag=True)
@click.option("--plot", "plot_path", type=click.Path(), default=None)
@_json_option
def pangram_hist(in_path, bin_width, header, plot_path, as_json):
    """Histogram of a length sample, as bin_lower,count lines."""
    lengths = []
    lines = Path(in_path).read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s == "length":  # tolerate our own optional header
            continue
        try:
            lengths.append(int(s))
        except ValueError as exc:
            raise textio.FormatError(f"{in_path}:{lineno}: not an integer length: {line!r}") from exc
    if not lengths:
        raise textio.FormatError(f"{in_path}: no lengths found")
    hist = pangram.histogram(lengths, bin_width)
    if plot_path:
        from . import plots

        plots.save_length_histogram(hist, plot_path)
    if as_json:
        _emit_json({"bin_width": hist.bin_width, "bins": [{"lower": lo, "count": c} for lo, c in hist.bins]})
    else:
        if header:
            click.echo("bin_lower,count")
        for lo, c in hist.bins:
            click.echo(f"{lo},{c}")


@pangram_group.command("gaps")
@click.option("--corpus", "corpus_path", required=True, type=click.Path())
@click.option("--letter", required=True)
@_digits_option
@_json_option
def pangram_gaps(corpus_path, letter, digits, as_json):
    """Occurrence count and gap structure of one letter in a corpus."""
    corpus = _load_corpus(corpus_path)
    seq = textio.letters_of(corpus.raw_text)
    stats = pangram.letter_gap_stats(seq, letter)
    table = alphastat.letter_frequencies(seq)
    p = table.proportions[textio.ALPHABET.index(stats.letter)]
    expected_gap = (1.0 / p) if p > 0 else float("inf")
    ratio = stats.max_gap / expected_gap if p > 0 else float("inf")
    if as_json:
        _emit_json(
            {
                "letter": stats.letter,
                "count": stats.count,
                "max_gap": stats.max_gap,
                "expected_iid_gap": expected_gap,
                "max_gap_ratio": ratio,
                "gaps": list(stats.gaps),
            }
        )
    else:
        click.echo(f"letter {stats.letter}  count {stats.count}  max_gap {stats.max_gap}")
        click.echo(f"expected i.i.d. gap {_fmt(expected_gap, digits)}  max_gap/expected {_fmt(ratio, digits)}")


# ---------------------------------------------------------------- entry

def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except textio.FormatError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
