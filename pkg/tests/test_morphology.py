import random

import pytest
from hypothesis import given, strategies as st

from halqa.errors import EmptyWord, LexiconParseError, ThesaurusConflict
from halqa.morphology import LightStemmer, PosTag, Thesaurus, load_thesaurus

ARABIC_LETTERS = "ابتثجحخدذرزسشصضطظعغفقكلمنهوي"

# Hand-built word -> root table for the bare stripping rules (no
# overrides). A few show the light stemmer's known over-stripping of
# single-letter prefixes (فنانة, الفواكه); they are asserted as-is so a
# rule change is a conscious decision.
RULE_TABLE = [
    ("كسرت", "كسر"), ("كسر", "كسر"), ("وبالباب", "باب"), ("الباب", "باب"),
    ("باب", "باب"), ("حطمت", "حطم"), ("تحطمت", "حطم"), ("فتحطمت", "حطم"),
    ("النافذة", "نافذ"), ("سميرة", "سمير"), ("محمود", "محمود"),
    ("محمد", "محمد"), ("جميل", "جميل"), ("قبيح", "قبيح"),
    ("المدرسة", "مدرس"), ("الامتحان", "امتح"), ("عمان", "عمان"),
    ("يفتح", "فتح"), ("يسافر", "سافر"), ("تزداد", "زداد"),
    ("الاماكن", "اماكن"), ("السياحية", "سياح"), ("الاردن", "اردن"),
    ("الطائرة", "طائر"), ("لوحات", "لوح"), ("كبيرة", "بير"),
    ("صغيرة", "صغير"), ("طويلة", "طويل"), ("قصيرة", "قصير"),
    ("مهندس", "مهندس"), ("مشهور", "مشهور"), ("المستشفى", "مستشفى"),
    ("معلمة", "معلم"), ("نشيطة", "نشيط"), ("موهوبة", "موهوب"),
    ("فنانة", "نان"), ("الزجاج", "زجاج"), ("بالشجاعة", "شجاع"),
    ("الجامعة", "جامع"), ("الرياضيات", "رياض"), ("السلة", "سلة"),
    ("كرة", "كرة"), ("ينجح", "نجح"), ("سريعة", "سريع"),
    ("البطولة", "طول"), ("حزين", "حزين"), ("غني", "غني"), ("ذكي", "ذكي"),
    ("قوي", "قوي"), ("الفواكه", "واك"), ("ليلى", "يلى"), ("ولد", "ولد"),
]


@pytest.mark.parametrize("word,root", RULE_TABLE)
def test_rule_table(word, root):
    assert LightStemmer().stem(word) == root


def test_stem_empty_word():
    with pytest.raises(EmptyWord):
        LightStemmer().stem("")


def test_override_wins_over_rules():
    stemmer = LightStemmer(overrides={"اغلق": "غلق"})
    assert stemmer.stem("اغلق") == "غلق"


@pytest.mark.parametrize("word,root", RULE_TABLE)
def test_stem_idempotent_on_table(word, root):
    stemmer = LightStemmer()
    assert stemmer.stem(root) == root


@given(st.text(alphabet=ARABIC_LETTERS, min_size=1, max_size=10))
def test_stem_idempotent_random(word):
    stemmer = LightStemmer()
    once = stemmer.stem(word)
    assert stemmer.stem(once) == once


def test_stem_idempotent_large_sample():
    rng = random.Random(20240819)
    stemmer = LightStemmer()
    for _ in range(1000):
        word = "".join(rng.choices(ARABIC_LETTERS, k=rng.randint(1, 9)))
        once = stemmer.stem(word)
        assert stemmer.stem(once) == once


@given(st.text(alphabet=ARABIC_LETTERS, min_size=1, max_size=10))
def test_stem_respects_minimum_length(word):
    stem = LightStemmer().stem(word)
    assert len(stem) >= min(3, len(word))
    assert stem


def test_stem_idempotent_over_thesaurus_vocabulary(thesaurus, stemmer):
    vocabulary = set(thesaurus.synonyms) | set(thesaurus.antonyms)
    for targets in list(thesaurus.synonyms.values()) + list(thesaurus.antonyms.values()):
        vocabulary |= targets
    assert vocabulary
    for word in vocabulary:
        once = stemmer.stem(word)
        assert stemmer.stem(once) == once


class TestTagging:
    def test_article_means_noun(self):
        assert LightStemmer().tag("الباب") is PosTag.NOUN

    def test_verb_governor(self):
        assert LightStemmer().tag("يفتح", preceding="لم") is PosTag.VERB

    def test_override(self):
        stemmer = LightStemmer(tag_overrides={"فتح": PosTag.VERB})
        assert stemmer.tag("فتح") is PosTag.VERB

    def test_default_noun(self):
        assert LightStemmer().tag("محمد") is PosTag.NOUN

    def test_deterministic(self):
        stemmer = LightStemmer()
        for word, prec in [("يفتح", "لم"), ("كتاب", None), ("الدار", "في")]:
            assert stemmer.tag(word, prec) is stemmer.tag(word, prec)


def test_override_file_parsing(tmp_path):
    path = tmp_path / "overrides.tsv"
    path.write_text("أغلق\tغلق\tVERB\nكتاب\tكتب\n", encoding="utf-8")
    stemmer = LightStemmer.from_file(path)
    # Alef-normalized key on load
    assert stemmer.stem("اغلق") == "غلق"
    assert stemmer.tag("اغلق") is PosTag.VERB
    assert stemmer.stem("كتاب") == "كتب"


def test_override_file_rejects_bad_rows(tmp_path):
    path = tmp_path / "overrides.tsv"
    path.write_text("كلمة\n", encoding="utf-8")
    with pytest.raises(LexiconParseError) as err:
        LightStemmer.from_file(path)
    assert err.value.line == 1


class TestThesaurus:
    def test_basic_lookup(self, tmp_path):
        path = tmp_path / "t.tsv"
        path.write_text("جميل\tant\tقبيح\n", encoding="utf-8")
        t = load_thesaurus(path)
        assert t.lookup_antonyms("جميل") == {"قبيح"}
        assert t.lookup_synonyms("جميل") == frozenset()
        assert t.lookup_synonyms("غائب") == frozenset()

    def test_duplicate_keys_merge(self, tmp_path):
        path = tmp_path / "t.tsv"
        path.write_text("كلمة\tsyn\tاولى\nكلمة\tsyn\tثانية ثالثة\n",
                        encoding="utf-8")
        t = load_thesaurus(path)
        assert t.lookup_synonyms("كلمة") == {"اولى", "ثانية", "ثالثة"}

    def test_normalized_on_load(self, tmp_path):
        path = tmp_path / "t.tsv"
        path.write_text("فتح\tant\tأغلق\n", encoding="utf-8")
        assert load_thesaurus(path).lookup_antonyms("فتح") == {"اغلق"}

    def test_conflict_rejected(self, tmp_path):
        path = tmp_path / "t.tsv"
        path.write_text("كلمة\tsyn\tاخرى\nكلمة\tant\tاخرى\n", encoding="utf-8")
        with pytest.raises(ThesaurusConflict):
            load_thesaurus(path)

    def test_parse_error_carries_line(self, tmp_path):
        path = tmp_path / "t.tsv"
        path.write_text("جميل\tant\tقبيح\nخطأ هنا\n", encoding="utf-8")
        with pytest.raises(LexiconParseError) as err:
            load_thesaurus(path)
        assert err.value.line == 2

    def test_round_trip(self, thesaurus, tmp_path):
        path = tmp_path / "round.tsv"
        rows = [f"{w}\tsyn\t{' '.join(sorted(t))}"
                for w, t in sorted(thesaurus.synonyms.items())]
        rows += [f"{w}\tant\t{' '.join(sorted(t))}"
                 for w, t in sorted(thesaurus.antonyms.items())]
        path.write_text("\n".join(rows) + "\n", encoding="utf-8")
        again = load_thesaurus(path)
        assert again.synonyms == thesaurus.synonyms
        assert again.antonyms == thesaurus.antonyms
