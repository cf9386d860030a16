"""Runtime configuration: lexicon locations, retrieval technique and the
behavior switches exposed for evaluation experiments."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from importlib import resources
from pathlib import Path

from .errors import LexiconParseError


def default_data_path(name: str) -> Path:
    return Path(resources.files("halqa").joinpath("data", name))


@dataclass(frozen=True)
class Config:
    corpus_dir: Path | None = None
    stopwords: Path = None
    negation: Path = None
    article_exceptions: Path = None
    thesaurus: Path = None
    stem_overrides: Path = None
    technique: str = "paragraph"        # paragraph | document
    k_paras: int = 5
    k_docs: int = 5
    use_thesaurus: bool = True
    use_advanced_search: bool = True
    log_base: float = 2.0
    rank_direction: str = "min"         # min | max span wins
    match_strictness: str = "strict"    # strict | lenient
    doc_technique_stats: str = "restricted"  # restricted | global

    def __post_init__(self):
        defaults = {
            "stopwords": "stopwords.txt",
            "negation": "negation.txt",
            "article_exceptions": "alef_lam.txt",
            "thesaurus": "thesaurus.tsv",
            "stem_overrides": "stem_overrides.tsv",
        }
        for name, filename in defaults.items():
            if getattr(self, name) is None:
                object.__setattr__(self, name, default_data_path(filename))
            else:
                object.__setattr__(self, name, Path(getattr(self, name)))
        if self.corpus_dir is not None:
            object.__setattr__(self, "corpus_dir", Path(self.corpus_dir))
        if self.k_paras < 1 or self.k_docs < 1:
            raise ValueError("k_paras and k_docs must be >= 1")
        if self.technique not in ("paragraph", "document"):
            raise ValueError(f"unknown technique: {self.technique}")
        if self.rank_direction not in ("min", "max"):
            raise ValueError(f"unknown rank_direction: {self.rank_direction}")
        if self.match_strictness not in ("strict", "lenient"):
            raise ValueError(f"unknown match_strictness: {self.match_strictness}")
        if self.doc_technique_stats not in ("restricted", "global"):
            raise ValueError(f"unknown doc_technique_stats: {self.doc_technique_stats}")

    def check_files(self) -> None:
        """Verify every referenced lexicon file exists."""
        for name in ("stopwords", "negation", "article_exceptions",
                     "thesaurus", "stem_overrides"):
            path = getattr(self, name)
            if not path.is_file():
                raise FileNotFoundError(f"{name} file not found: {path}")


_BOOL_FIELDS = {"use_thesaurus", "use_advanced_search"}
_INT_FIELDS = {"k_paras", "k_docs"}
_FLOAT_FIELDS = {"log_base"}
_PATH_FIELDS = {"corpus_dir", "stopwords", "negation", "article_exceptions",
                "thesaurus", "stem_overrides"}


def load_config(path: Path | str) -> Config:
    """Parse a key = value config file (UTF-8, # comments)."""
    path = Path(path)
    known = {f.name for f in fields(Config)}
    values = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        row = line.split("#", 1)[0].strip()
        if not row:
            continue
        if "=" not in row:
            raise LexiconParseError("expected key = value", path, lineno)
        key, _, value = row.partition("=")
        key, value = key.strip(), value.strip()
        if key not in known:
            raise LexiconParseError(f"unknown config key {key!r}", path, lineno)
        if key in _BOOL_FIELDS:
            if value.lower() not in ("on", "off", "true", "false"):
                raise LexiconParseError(f"expected on/off for {key}", path, lineno)
            values[key] = value.lower() in ("on", "true")
        elif key in _INT_FIELDS:
            values[key] = int(value)
        elif key in _FLOAT_FIELDS:
            values[key] = float(value)
        elif key in _PATH_FIELDS:
            # Relative paths resolve against the config file's directory.
            values[key] = (path.parent / value).resolve()
        else:
            values[key] = value
    return Config(**values)
