"""Batch evaluation over a gold-labeled question file, with the optional
corpus-size sweep."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .config import Config
from .errors import LexiconParseError, MalformedQuestion
from .pipeline import Engine
from .retrieval import build_index


@dataclass(frozen=True)
class QuestionRecord:
    question: str
    gold: str
    predicted: str
    correct: bool


@dataclass(frozen=True)
class EvalReport:
    records: tuple[QuestionRecord, ...]
    corpus_size: int

    @property
    def accuracy(self) -> Fraction:
        if not self.records:
            return Fraction(0)
        return Fraction(sum(r.correct for r in self.records), len(self.records))

    def to_rows(self) -> list[dict]:
        return [
            {"question": r.question, "gold": r.gold, "predicted": r.predicted,
             "correct": r.correct}
            for r in self.records
        ]

    def to_json_lines(self) -> str:
        lines = [json.dumps(row, ensure_ascii=False, sort_keys=True)
                 for row in self.to_rows()]
        summary = {"corpus_size": self.corpus_size,
                   "total": len(self.records),
                   "correct": sum(r.correct for r in self.records),
                   "accuracy": float(self.accuracy)}
        lines.append(json.dumps(summary, ensure_ascii=False, sort_keys=True))
        return "\n".join(lines) + "\n"


def load_questions(path: Path | str) -> list[tuple[str, str]]:
    """Read a TSV of question<TAB>yes|no; # starts a comment."""
    path = Path(path)
    questions = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        row = line.split("#", 1)[0].strip()
        if not row:
            continue
        cols = row.split("\t")
        if len(cols) != 2:
            raise LexiconParseError("expected question<TAB>yes|no", path, lineno)
        gold = cols[1].strip().lower()
        if gold not in ("yes", "no"):
            raise LexiconParseError(f"gold label must be yes or no, got {cols[1]!r}",
                                    path, lineno)
        questions.append((cols[0].strip(), gold))
    return questions


def evaluate(engine: Engine, questions: list[tuple[str, str]]) -> EvalReport:
    """Answer every question; UNKNOWN and malformed questions count as
    incorrect."""
    records = []
    for question, gold in questions:
        try:
            predicted = engine.answer(question).verdict.answer.value
        except MalformedQuestion:
            predicted = "malformed"
        records.append(QuestionRecord(question=question, gold=gold,
                                      predicted=predicted,
                                      correct=predicted == gold))
    return EvalReport(records=tuple(records),
                      corpus_size=engine.index.n_documents)


def sweep(config: Config, questions: list[tuple[str, str]],
          sizes: list[int], all_questions: bool = False) -> list[EvalReport]:
    """Re-run the evaluation with the corpus truncated to its first
    ``size`` documents (file-name order) for each size.

    By default each size gets a cumulative prefix of the question file,
    mirroring the paired documents/questions protocol; all_questions
    evaluates the full set at every size.
    """
    corpus_dir = config.corpus_dir
    files = sorted(Path(corpus_dir).glob("*.txt"))
    reports = []
    for i, size in enumerate(sizes):
        subset = [(f.stem, f.read_text(encoding="utf-8"))
                  for f in files[:size]]
        engine = Engine(config)
        engine.set_index(build_index(subset, engine.lexicons, engine.stemmer))
        if all_questions:
            bucket = questions
        else:
            end = round(len(questions) * (i + 1) / len(sizes))
            bucket = questions[:end]
        reports.append(evaluate(engine, bucket))
    return reports
