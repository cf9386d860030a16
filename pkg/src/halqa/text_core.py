"""Arabic-aware text primitives: normalization, tokenization, lexicons,
paragraph/sentence splitting and negation-particle detection.

Everything here is a pure function over immutable inputs; ``Lexicons`` is
frozen after load.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import LexiconParseError

# Alef variants collapsed to bare Alef.
_ALEF_VARIANTS = re.compile(r"[آأإ]")  # آ أ إ
_TATWEEL = "ـ"

# Harakat/diacritics are treated like punctuation and never survive
# tokenization.
_DIACRITICS = "ً-ْٰ"
_PUNCT = r"?؟!.,،؛;:\"'«»()\[\]{}<>…‐-―\-_/\\*+=|~`^%$#@&"
_TOKEN = re.compile(rf"[^\s{_PUNCT}{_DIACRITICS}]+")

_SENTENCE_TERMINATORS = re.compile(r"[.؟!؛]")
_PARAGRAPH_BREAK = re.compile(r"\n[ \t\r]*\n+")

ARTICLE = "ال"
INTERROGATIVE = "هل"


def normalize(raw: str) -> str:
    """Collapse Alef variants (أ إ آ) to bare Alef and drop tatweel.

    Idempotent; every other character passes through unchanged.
    """
    return _ALEF_VARIANTS.sub("ا", raw).replace(_TATWEEL, "")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int

    def __repr__(self):  # keeps pytest diffs readable for Arabic data
        return f"{self.surface}@{self.position}"


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word tokens with 0-based positions.

    Tokens are maximal runs of non-whitespace, non-punctuation characters;
    punctuation (including ؟ and ?) and diacritics are dropped.
    """
    return [Token(s, i) for i, s in enumerate(_TOKEN.findall(text))]


@dataclass(frozen=True)
class Lexicons:
    """Stopwords, negation particles and the article-exception word list.

    All entries are Alef-normalized on load; the three sets must be
    pairwise disjoint.
    """

    stopwords: frozenset[str] = frozenset()
    negation_particles: frozenset[str] = frozenset()
    article_exceptions: frozenset[str] = frozenset()

    def __post_init__(self):
        overlap = (self.stopwords & self.negation_particles) | (
            self.stopwords & self.article_exceptions
        ) | (self.negation_particles & self.article_exceptions)
        if overlap:
            raise LexiconParseError(
                "lexicon sets must be disjoint, shared entries: "
                + ", ".join(sorted(overlap))
            )

    @classmethod
    def from_files(cls, stopwords: Path, negation: Path,
                   article_exceptions: Path) -> "Lexicons":
        return cls(
            stopwords=frozenset(load_wordlist(stopwords)),
            negation_particles=frozenset(load_wordlist(negation)),
            article_exceptions=frozenset(load_wordlist(article_exceptions)),
        )


def load_wordlist(path: Path | str) -> set[str]:
    """Read a one-word-per-line UTF-8 word list; # starts a comment."""
    words: set[str] = set()
    path = Path(path)
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        if len(entry.split()) != 1:
            raise LexiconParseError("expected one word per line", path, lineno)
        words.add(normalize(entry))
    return words


def remove_stopwords(tokens: Iterable[Token], lex: Lexicons) -> list[Token]:
    """Drop stopword tokens; surviving tokens keep their original positions."""
    return [t for t in tokens if t.surface not in lex.stopwords]


def strip_article(word: str, lex: Lexicons) -> str:
    """Remove a leading ال unless the word is a listed exception."""
    if word.startswith(ARTICLE) and word not in lex.article_exceptions:
        return word[len(ARTICLE):]
    return word


def detect_negation(tokens: Iterable[Token], lex: Lexicons) -> tuple[bool, list[Token]]:
    """Report whether any token is a negation particle and drop them all."""
    kept = []
    negated = False
    for t in tokens:
        if t.surface in lex.negation_particles:
            negated = True
        else:
            kept.append(t)
    return negated, kept


def split_paragraphs(document: str) -> list[str]:
    """Split raw text into paragraphs at blank lines; empty blocks vanish."""
    parts = _PARAGRAPH_BREAK.split(document)
    return [p.strip() for p in parts if p.strip()]


def split_sentences(paragraph: str) -> list[str]:
    """Split a paragraph at the terminators {. ؟ ! ؛}.

    Delimiter-free trailing text forms a final sentence.
    """
    parts = _SENTENCE_TERMINATORS.split(paragraph)
    return [s.strip() for s in parts if s.strip()]
