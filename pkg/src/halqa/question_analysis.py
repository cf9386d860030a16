"""Parse هل-questions into nominal/verbal structure and expand them into
logical representations (base, synonym, antonym) with negation tracking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import MalformedQuestion
from .morphology import LightStemmer, PosTag, Thesaurus
from .text_core import (ARTICLE, INTERROGATIVE, Lexicons, Token,
                        detect_negation, normalize, remove_stopwords,
                        strip_article, tokenize)


class SentenceKind(enum.Enum):
    NOMINAL = "N"
    VERBAL = "V"


class Provenance(enum.Enum):
    BASE = "base"
    SYNONYM = "synonym"
    ANTONYM = "antonym"


# Verbs whose root triggers the preposition-rewrite preprocessing step.
SPECIAL_VERB_ROOTS = frozenset({"وصف", "شهر", "ميز"})
_BA = "ب"


@dataclass(frozen=True)
class ParsedQuestion:
    kind: SentenceKind
    head: str                 # exact topic/subject, article-stripped
    relation: str             # comment (nominal) or verb (verbal)
    remaining: tuple[str, ...]
    negated: bool


@dataclass(frozen=True)
class LogicalRep:
    kind: SentenceKind
    negated: bool
    head: str
    relation_roots: frozenset[str]
    remaining_roots: tuple[str, ...]
    provenance: Provenance


@dataclass(frozen=True)
class RepSet:
    reps: tuple[LogicalRep, ...]
    source: ParsedQuestion

    @property
    def base(self) -> LogicalRep:
        return next(r for r in self.reps if r.provenance is Provenance.BASE)


def parse_question(raw: str, lexicons: Lexicons,
                   tagger: LightStemmer) -> ParsedQuestion:
    """Parse a هل-question; raise MalformedQuestion when it has no هل,
    no head or no relation."""
    tokens = tokenize(normalize(raw))
    if not tokens or tokens[0].surface != INTERROGATIVE:
        raise MalformedQuestion("question must start with هل")
    content = remove_stopwords(tokens[1:], lexicons)
    negated, content_no_neg = detect_negation(content, lexicons)
    if not content_no_neg:
        raise MalformedQuestion("question has no content words")

    # Preceding-token lookup keeps negation particles visible so the
    # verb-governor heuristic (e.g. لم يفتح) still fires.
    preceding = {t.position: p.surface
                 for p, t in zip(content, content[1:])}

    first = content_no_neg[0]
    first_tag = tagger.tag(first.surface, preceding.get(first.position))
    if first_tag is PosTag.VERB:
        return _parse_verbal(first, content_no_neg[1:], negated,
                             lexicons, tagger, preceding)
    return _parse_nominal(first, content_no_neg[1:], negated,
                          lexicons, tagger, preceding)


def _parse_verbal(verb: Token, rest: list[Token], negated: bool,
                  lexicons: Lexicons, tagger: LightStemmer,
                  preceding: dict[int, str]) -> ParsedQuestion:
    subject = next(
        (t for t in rest
         if tagger.tag(t.surface, preceding.get(t.position)) is PosTag.NOUN),
        None)
    if subject is None:
        raise MalformedQuestion("verbal question has no subject noun")
    remaining = [strip_article(t.surface, lexicons)
                 for t in rest if t is not subject]
    return ParsedQuestion(
        kind=SentenceKind.VERBAL,
        head=strip_article(subject.surface, lexicons),
        relation=verb.surface,
        remaining=tuple(remaining),
        negated=negated,
    )


def _parse_nominal(topic: Token, rest: list[Token], negated: bool,
                   lexicons: Lexicons, tagger: LightStemmer,
                   preceding: dict[int, str]) -> ParsedQuestion:
    # The comment is the last noun without the definite article.
    comment = None
    for t in rest:
        if t.surface.startswith(ARTICLE) and t.surface not in lexicons.article_exceptions:
            continue
        if tagger.tag(t.surface, preceding.get(t.position)) is PosTag.NOUN:
            comment = t
    if comment is None:
        raise MalformedQuestion("nominal question has no article-free comment noun")
    remaining = [strip_article(t.surface, lexicons)
                 for t in rest if t is not comment]
    return ParsedQuestion(
        kind=SentenceKind.NOMINAL,
        head=strip_article(topic.surface, lexicons),
        relation=comment.surface,
        remaining=tuple(remaining),
        negated=negated,
    )


def preprocess_special_verb(q: ParsedQuestion,
                            stemmer: LightStemmer) -> ParsedQuestion:
    """Rewrite وصف/شهر/ميز-type verbal questions: the verb is replaced by
    the root of the ب-prefixed remaining word, which is consumed."""
    if q.kind is not SentenceKind.VERBAL:
        return q
    if stemmer.stem(q.relation) not in SPECIAL_VERB_ROOTS:
        return q
    for word in q.remaining:
        if word.startswith(_BA) and len(word) > 1:
            rest = tuple(w for w in q.remaining if w != word)
            return replace(q, relation=stemmer.stem(word[len(_BA):]),
                           remaining=rest)
    return q


def _relation_candidates(relation: str, stemmer: LightStemmer,
                         thesaurus_map: dict) -> frozenset[str]:
    # Surface form first, then the root, then any key sharing the root
    # (the stemmer may clip a root differently from the thesaurus
    # author's citation form); first hit wins.
    hits = thesaurus_map.get(relation, frozenset())
    if not hits:
        root = stemmer.stem(relation)
        hits = thesaurus_map.get(root, frozenset())
        if not hits:
            merged: set[str] = set()
            for key, targets in thesaurus_map.items():
                if stemmer.stem(key) == root:
                    merged.update(targets)
            hits = merged
    return frozenset(stemmer.stem(w) for w in hits)


def build_representations(q: ParsedQuestion, thesaurus: Thesaurus,
                          stemmer: LightStemmer,
                          use_thesaurus: bool = True) -> RepSet:
    """Expand a parsed question into its logical representations.

    Always one BASE rep; a SYNONYM rep when the thesaurus knows synonyms
    for the relation word, and an ANTONYM rep (with flipped negation)
    when it knows antonyms.
    """
    remaining_roots = tuple(stemmer.stem(w) for w in q.remaining)

    def rep(roots: frozenset[str], negated: bool,
            provenance: Provenance) -> LogicalRep:
        return LogicalRep(kind=q.kind, negated=negated, head=q.head,
                          relation_roots=roots,
                          remaining_roots=remaining_roots,
                          provenance=provenance)

    reps = [rep(frozenset({stemmer.stem(q.relation)}), q.negated,
                Provenance.BASE)]
    if use_thesaurus:
        synonyms = _relation_candidates(q.relation, stemmer,
                                        thesaurus.synonyms)
        if synonyms:
            reps.append(rep(synonyms, q.negated, Provenance.SYNONYM))
        antonyms = _relation_candidates(q.relation, stemmer,
                                        thesaurus.antonyms)
        if antonyms:
            reps.append(rep(antonyms, not q.negated, Provenance.ANTONYM))
    return RepSet(reps=tuple(reps), source=q)


def retrieval_terms(rs: RepSet, stemmer: LightStemmer) -> list[str]:
    """Deduplicated retrieval query roots from the BASE representation."""
    seen: set[str] = set()
    ordered = []
    for root in retrieval_term_multiset(rs, stemmer):
        if root not in seen:
            seen.add(root)
            ordered.append(root)
    return ordered


def retrieval_term_multiset(rs: RepSet, stemmer: LightStemmer) -> list[str]:
    """Pre-dedup query roots: head root, base relation roots, remaining
    roots. Synonym/antonym roots stay out of the retrieval query."""
    base = rs.base
    return ([stemmer.stem(base.head)]
            + sorted(base.relation_roots)
            + list(base.remaining_roots))
