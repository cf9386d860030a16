"""Corpus indexing and the two paragraph-retrieval techniques.

Paragraph technique: score every paragraph corpus-wide with the passage
similarity formula and keep the top k. Document technique: score whole
documents first, keep the top documents, then rank their paragraphs with
the passage formula (statistics restricted to the retained documents by
default).
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpus
from .morphology import LightStemmer
from .text_core import Lexicons, normalize, remove_stopwords, split_paragraphs, tokenize

INDEX_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Paragraph:
    doc_id: str
    para_id: int
    text: str
    terms: Counter
    pl: int  # non-stop term count


@dataclass(frozen=True)
class Document:
    doc_id: str
    terms: Counter
    max_tf: int


@dataclass(frozen=True)
class Index:
    paragraphs: tuple[Paragraph, ...]
    documents: tuple[Document, ...]
    df_p: dict[str, int]  # term -> paragraphs containing it
    df_d: dict[str, int]  # term -> documents containing it

    @property
    def n_paragraphs(self) -> int:
        return len(self.paragraphs)

    @property
    def n_documents(self) -> int:
        return len(self.documents)

    @property
    def vocabulary(self) -> set[str]:
        return set(self.df_p)


@dataclass(frozen=True)
class Query:
    qtf: Counter       # term -> frequency within the query (pre-dedup)
    ql: int            # non-stop query length
    max_qf: int

    @classmethod
    def from_terms(cls, terms: list[str]) -> "Query":
        qtf = Counter(terms)
        return cls(qtf=qtf, ql=sum(qtf.values()),
                   max_qf=max(qtf.values(), default=0))


@dataclass(frozen=True)
class ScoredCandidate:
    doc_id: str
    score: float
    para_id: int | None = None


def paragraph_terms(text: str, lexicons: Lexicons,
                    stemmer: LightStemmer) -> Counter:
    """Root-term multiset of a paragraph: normalize, tokenize, drop
    stopwords, stem."""
    tokens = remove_stopwords(tokenize(normalize(text)), lexicons)
    return Counter(stemmer.stem(t.surface) for t in tokens)


def build_index(corpus: list[tuple[str, str]], lexicons: Lexicons,
                stemmer: LightStemmer) -> Index:
    """Index a corpus of (doc_id, raw text) pairs.

    Paragraphs with no indexable terms are skipped; a document whose
    paragraphs are all empty is excluded entirely.
    """
    paragraphs: list[Paragraph] = []
    documents: list[Document] = []
    for doc_id, text in sorted(corpus):
        doc_paras = []
        for para_id, para_text in enumerate(split_paragraphs(text)):
            terms = paragraph_terms(para_text, lexicons, stemmer)
            if not terms:
                continue
            doc_paras.append(Paragraph(doc_id=doc_id, para_id=para_id,
                                       text=para_text, terms=terms,
                                       pl=sum(terms.values())))
        if not doc_paras:
            continue
        doc_terms = Counter()
        for p in doc_paras:
            doc_terms.update(p.terms)
        paragraphs.extend(doc_paras)
        documents.append(Document(doc_id=doc_id, terms=doc_terms,
                                  max_tf=max(doc_terms.values())))
    if not documents:
        raise EmptyCorpus("no document yielded an indexable paragraph")
    df_p = Counter()
    for p in paragraphs:
        df_p.update(p.terms.keys())
    df_d = Counter()
    for d in documents:
        df_d.update(d.terms.keys())
    return Index(paragraphs=tuple(paragraphs), documents=tuple(documents),
                 df_p=dict(df_p), df_d=dict(df_d))


def build_index_from_dir(corpus_dir: Path | str, lexicons: Lexicons,
                         stemmer: LightStemmer) -> Index:
    """Index every .txt file in a directory; the stem of the file name is
    the document id."""
    corpus_dir = Path(corpus_dir)
    files = sorted(corpus_dir.glob("*.txt"))
    if not files:
        raise EmptyCorpus(f"no .txt files in {corpus_dir}")
    corpus = [(f.stem, f.read_text(encoding="utf-8")) for f in files]
    return build_index(corpus, lexicons, stemmer)


def _log(x: float, base: float) -> float:
    return math.log(x, base)


def passage_similarity(p: Paragraph, q: Query, idx: Index,
                       log_base: float = 2.0,
                       n_p: int | None = None,
                       df_p: dict[str, int] | None = None) -> float:
    """Passage-query similarity: sum over shared terms of W_p * W_q with
    W_p = (N/n) log((tf+1)/pl) and W_q = (N/n) log((qtf+1)/ql).

    Terms absent from the paragraph or from the corpus contribute 0.
    N and n may be overridden for document-technique re-scoring over a
    restricted paragraph set.
    """
    n_total = idx.n_paragraphs if n_p is None else n_p
    df = idx.df_p if df_p is None else df_p
    score = 0.0
    for term, qtf in q.qtf.items():
        tf = p.terms.get(term)
        if not tf:
            continue
        n = df.get(term)
        if not n:
            continue
        w_p = (n_total / n) * _log((tf + 1) / p.pl, log_base)
        w_q = (n_total / n) * _log((qtf + 1) / q.ql, log_base)
        score += w_p * w_q
    return score


def document_similarity(d: Document, q: Query, idx: Index,
                        log_base: float = 2.0) -> float:
    """Document-query similarity: sum over shared terms of W_dt * W_qt
    with W_dt = (tf/max_tf) log2(N/n) and
    W_qt = (0.5 + 0.5*qtf/max_qf) log2(N/n).

    The query-side normalizer is the query's own maximum term frequency.
    """
    score = 0.0
    for term, qtf in q.qtf.items():
        tf = d.terms.get(term)
        if not tf:
            continue
        n = idx.df_d.get(term)
        if not n:
            continue
        idf = _log(idx.n_documents / n, log_base)
        w_d = (tf / d.max_tf) * idf
        w_q = (0.5 + 0.5 * qtf / q.max_qf) * idf
        score += w_d * w_q
    return score


def paragraph_technique(idx: Index, q: Query, k: int = 5,
                        log_base: float = 2.0) -> list[ScoredCandidate]:
    """Rank all paragraphs corpus-wide; return the top k.

    Ties break by (doc_id, para_id) ascending.
    """
    scored = [ScoredCandidate(doc_id=p.doc_id, para_id=p.para_id,
                              score=passage_similarity(p, q, idx, log_base))
              for p in idx.paragraphs]
    scored.sort(key=lambda c: (-c.score, c.doc_id, c.para_id))
    return scored[:k]


def document_technique(idx: Index, q: Query, k_docs: int = 5, k_paras: int = 5,
                       log_base: float = 2.0,
                       restricted_stats: bool = True) -> list[ScoredCandidate]:
    """Rank documents, keep the top k_docs, then rank their paragraphs.

    With restricted_stats (the default) the passage formula's N and n are
    taken over the retained documents' paragraphs only; otherwise the
    global statistics are reused.
    """
    doc_scores = [ScoredCandidate(doc_id=d.doc_id,
                                  score=document_similarity(d, q, idx, log_base))
                  for d in idx.documents]
    doc_scores.sort(key=lambda c: (-c.score, c.doc_id))
    retained = {c.doc_id for c in doc_scores[:k_docs]}
    paras = [p for p in idx.paragraphs if p.doc_id in retained]
    if restricted_stats:
        n_p = len(paras)
        df_p = Counter()
        for p in paras:
            df_p.update(p.terms.keys())
        df_p = dict(df_p)
    else:
        n_p, df_p = None, None
    scored = [ScoredCandidate(doc_id=p.doc_id, para_id=p.para_id,
                              score=passage_similarity(p, q, idx, log_base,
                                                       n_p=n_p, df_p=df_p))
              for p in paras]
    scored.sort(key=lambda c: (-c.score, c.doc_id, c.para_id))
    return scored[:k_paras]


def paragraphs_by_id(idx: Index) -> dict[tuple[str, int], Paragraph]:
    return {(p.doc_id, p.para_id): p for p in idx.paragraphs}


def save_index(idx: Index, path: Path | str) -> None:
    """Persist an index snapshot as JSON, replacing any existing file
    atomically."""
    path = Path(path)
    payload = {
        "format_version": INDEX_FORMAT_VERSION,
        "paragraphs": [
            {"doc_id": p.doc_id, "para_id": p.para_id, "text": p.text,
             "terms": dict(sorted(p.terms.items())), "pl": p.pl}
            for p in idx.paragraphs
        ],
        "documents": [
            {"doc_id": d.doc_id, "terms": dict(sorted(d.terms.items())),
             "max_tf": d.max_tf}
            for d in idx.documents
        ],
        "df_p": dict(sorted(idx.df_p.items())),
        "df_d": dict(sorted(idx.df_d.items())),
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, ensure_ascii=False)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_index(path: Path | str) -> Index:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    version = payload.get("format_version")
    if version != INDEX_FORMAT_VERSION:
        raise ValueError(f"unsupported index format version: {version}")
    paragraphs = tuple(
        Paragraph(doc_id=p["doc_id"], para_id=p["para_id"], text=p["text"],
                  terms=Counter(p["terms"]), pl=p["pl"])
        for p in payload["paragraphs"]
    )
    documents = tuple(
        Document(doc_id=d["doc_id"], terms=Counter(d["terms"]),
                 max_tf=d["max_tf"])
        for d in payload["documents"]
    )
    return Index(paragraphs=paragraphs, documents=documents,
                 df_p=payload["df_p"], df_d=payload["df_d"])
