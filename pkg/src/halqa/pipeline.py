"""End-to-end engine: load resources once, then answer questions against
an index built (or loaded) from a corpus directory."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .answer_selection import Verdict, select_answer
from .config import Config
from .errors import EmptyCorpus
from .morphology import LightStemmer, Thesaurus, load_thesaurus
from .question_analysis import (ParsedQuestion, RepSet, build_representations,
                                parse_question, preprocess_special_verb,
                                retrieval_term_multiset)
from .retrieval import (Index, Query, ScoredCandidate, build_index_from_dir,
                        document_technique, load_index, paragraph_technique,
                        paragraphs_by_id, save_index)
from .text_core import Lexicons


@dataclass(frozen=True)
class AnswerResult:
    question: ParsedQuestion
    reps: RepSet
    retrieved: tuple[ScoredCandidate, ...]
    verdict: Verdict


class Engine:
    """Question answering pipeline bound to one configuration."""

    def __init__(self, config: Config):
        config.check_files()
        self.config = config
        self.lexicons = Lexicons.from_files(config.stopwords, config.negation,
                                            config.article_exceptions)
        self.stemmer = LightStemmer.from_file(config.stem_overrides)
        self.thesaurus: Thesaurus = load_thesaurus(config.thesaurus)
        self._index: Index | None = None

    @property
    def index(self) -> Index:
        if self._index is None:
            if self.config.corpus_dir is None:
                raise EmptyCorpus("no corpus directory configured")
            self._index = build_index_from_dir(self.config.corpus_dir,
                                               self.lexicons, self.stemmer)
        return self._index

    def set_index(self, index: Index) -> None:
        self._index = index

    def load_index(self, path: Path | str) -> None:
        self._index = load_index(path)

    def save_index(self, path: Path | str) -> None:
        save_index(self.index, path)

    def analyze(self, question: str) -> RepSet:
        parsed = parse_question(question, self.lexicons, self.stemmer)
        parsed = preprocess_special_verb(parsed, self.stemmer)
        return build_representations(parsed, self.thesaurus, self.stemmer,
                                     use_thesaurus=self.config.use_thesaurus)

    def retrieve(self, reps: RepSet) -> list[ScoredCandidate]:
        query = Query.from_terms(retrieval_term_multiset(reps, self.stemmer))
        cfg = self.config
        if cfg.technique == "document":
            return document_technique(
                self.index, query, k_docs=cfg.k_docs, k_paras=cfg.k_paras,
                log_base=cfg.log_base,
                restricted_stats=cfg.doc_technique_stats == "restricted")
        return paragraph_technique(self.index, query, k=cfg.k_paras,
                                   log_base=cfg.log_base)

    def answer(self, question: str) -> AnswerResult:
        reps = self.analyze(question)
        retrieved = self.retrieve(reps)
        by_id = paragraphs_by_id(self.index)
        paragraphs = [(c.doc_id, c.para_id, by_id[(c.doc_id, c.para_id)].text)
                      for c in retrieved]
        verdict = select_answer(
            paragraphs, reps, self.lexicons, self.stemmer,
            strict=self.config.match_strictness == "strict",
            prefer_min_span=self.config.rank_direction == "min",
            use_advanced_search=self.config.use_advanced_search)
        return AnswerResult(question=reps.source, reps=reps,
                            retrieved=tuple(retrieved), verdict=verdict)
