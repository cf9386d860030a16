"""Command-line interface: index, ask and eval subcommands.

Exit codes: 0 success, 1 malformed question, 2 I/O or parse error.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path

import click

from .config import Config, load_config
from .errors import (EmptyCorpus, HalqaError, LexiconParseError,
                     MalformedQuestion)
from .evaluation import evaluate, load_questions, sweep
from .pipeline import Engine


def _build_config(config_file, **overrides) -> Config:
    base = load_config(config_file) if config_file else Config()
    changes = {k: v for k, v in overrides.items() if v is not None}
    return dataclasses.replace(base, **changes)


def _onoff(_ctx, _param, value):
    if value is None:
        return None
    return value == "on"


_onoff_choice = click.Choice(["on", "off"])


def common_options(fn):
    fn = click.option("--config", "config_file", type=click.Path(exists=True),
                      help="Key = value config file; flags override it.")(fn)
    fn = click.option("--corpus", "corpus_dir", type=click.Path(),
                      help="Directory of UTF-8 .txt documents.")(fn)
    fn = click.option("--technique", type=click.Choice(["paragraph", "document"]),
                      default=None)(fn)
    fn = click.option("--k", "k_paras", type=int, default=None,
                      help="Paragraphs to retrieve (default 5).")(fn)
    fn = click.option("--k-docs", "k_docs", type=int, default=None,
                      help="Documents to retain in the document technique.")(fn)
    fn = click.option("--thesaurus", "use_thesaurus", type=_onoff_choice,
                      callback=_onoff, default=None,
                      help="Synonym/antonym query expansion.")(fn)
    fn = click.option("--advanced", "use_advanced_search", type=_onoff_choice,
                      callback=_onoff, default=None,
                      help="Preceding-sentence lookback search.")(fn)
    return fn


@click.group()
def main():
    """Arabic yes/no question answering over plain-text corpora."""


@main.command("index")
@common_options
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Snapshot path (default: <corpus>/index.json).")
def cmd_index(config_file, out_path, **overrides):
    """Build the corpus index, persist it and print summary statistics."""
    try:
        config = _build_config(config_file, **overrides)
        engine = Engine(config)
        idx = engine.index
        out = Path(out_path) if out_path else Path(config.corpus_dir) / "index.json"
        engine.save_index(out)
    except (OSError, HalqaError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"documents: {idx.n_documents}")
    click.echo(f"paragraphs: {idx.n_paragraphs}")
    click.echo(f"vocabulary: {len(idx.vocabulary)}")
    click.echo(f"snapshot: {out}")


@main.command("ask")
@common_options
@click.option("--index", "index_path", type=click.Path(exists=True),
              default=None, help="Load a persisted index snapshot.")
@click.option("--verbose", is_flag=True, help="Print the full trace.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.argument("question")
def cmd_ask(config_file, index_path, verbose, as_json, question, **overrides):
    """Answer a single هل-question against the corpus."""
    try:
        config = _build_config(config_file, **overrides)
        engine = Engine(config)
        if index_path:
            engine.load_index(index_path)
        result = engine.answer(question)
    except MalformedQuestion as exc:
        click.echo(f"malformed question: {exc}", err=True)
        sys.exit(1)
    except (OSError, HalqaError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)

    if as_json:
        record = result.verdict.to_record()
        if verbose:
            record["trace"] = list(result.verdict.trace)
            record["retrieved"] = [
                {"doc_id": c.doc_id, "para_id": c.para_id, "score": c.score}
                for c in result.retrieved
            ]
        click.echo(json.dumps(record, ensure_ascii=False, sort_keys=True))
        return

    click.echo(result.verdict.answer.value)
    supporting = result.verdict.supporting
    if supporting is not None:
        click.echo(f"supporting: {supporting.sentence.text} "
                   f"[{supporting.sentence.doc_id}#{supporting.sentence.para_id}]")
    if verbose:
        q = result.question
        click.echo(f"parsed: kind={q.kind.value} head={q.head} "
                   f"relation={q.relation} remaining={list(q.remaining)} "
                   f"negated={q.negated}")
        for rep in result.reps.reps:
            click.echo(f"rep[{rep.provenance.value}]: "
                       f"{'~' if rep.negated else ''}{rep.kind.value}"
                       f"({rep.head}, {sorted(rep.relation_roots)}, "
                       f"{list(rep.remaining_roots)})")
        for c in result.retrieved:
            click.echo(f"paragraph {c.doc_id}#{c.para_id}: score={c.score:.6f}")
        for t in result.verdict.trace:
            click.echo(f"candidate {t['doc_id']}#{t['para_id']}"
                       f"s{t['sentence_index']} [{t['provenance']}] "
                       f"span={t['span_rank']}"
                       + (" (advanced)" if t["via_advanced_search"] else ""))


@main.command("eval")
@common_options
@click.option("--json", "as_json", is_flag=True, help="JSON lines output.")
@click.option("--sweep", "sweep_sizes", default=None,
              help="Comma-separated corpus sizes, e.g. 5,10,15,20.")
@click.option("--sweep-all-questions", is_flag=True,
              help="Evaluate every question at every sweep size.")
@click.argument("questions_file", type=click.Path(exists=True))
def cmd_eval(config_file, as_json, sweep_sizes, sweep_all_questions,
             questions_file, **overrides):
    """Evaluate a gold-labeled question file (question<TAB>yes|no)."""
    try:
        config = _build_config(config_file, **overrides)
        questions = load_questions(questions_file)
        if sweep_sizes:
            sizes = [int(s) for s in sweep_sizes.split(",")]
            reports = sweep(config, questions, sizes,
                            all_questions=sweep_all_questions)
        else:
            reports = [evaluate(Engine(config), questions)]
    except (OSError, HalqaError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)

    if as_json:
        for report in reports:
            click.echo(report.to_json_lines(), nl=False)
        return

    for report in reports:
        click.echo(f"corpus size: {report.corpus_size} documents, "
                   f"{len(report.records)} questions")
        width = max((len(r.question) for r in report.records), default=8)
        click.echo(f"{'question':<{width}}\tgold\tpredicted\tcorrect")
        for r in report.records:
            click.echo(f"{r.question:<{width}}\t{r.gold}\t{r.predicted}\t"
                       f"{'1' if r.correct else '0'}")
        pct = float(report.accuracy) * 100
        click.echo(f"accuracy: {report.accuracy} ({pct:.1f}%)")
        click.echo("")


if __name__ == "__main__":
    main()
