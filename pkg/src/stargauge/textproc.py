"""Text normalization: tokens, stopword removal, n-grams.

A token is a maximal run of two or more Unicode letters/digits; every
other character (punctuation, underscore, whitespace, emoji) separates.
Single-character fragments are dropped by construction, so "deagan's"
yields just "deagan". Stopwords are removed *before* bigram generation,
which means a phrase like "not good" contributes no bigram when "not" is
stopped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

# \w minus underscore = Unicode letters and digits
_TOKEN_RE = re.compile(r"[^\W_]{2,}")


@lru_cache(maxsize=1)
def builtin_stopwords() -> frozenset[str]:
    """The classic 318-entry English list shipped as stopwords_en.txt."""
    text = resources.files("stargauge").joinpath("stopwords_en.txt").read_text("utf-8")
    return frozenset(w for w in text.splitlines() if w)


@dataclass(frozen=True)
class TokenizerConfig:
    lowercase: bool = True
    ngram_min: int = 1
    ngram_max: int = 2
    stopwords: frozenset[str] = field(default_factory=builtin_stopwords)

    def __post_init__(self):
        if not (1 <= self.ngram_min <= self.ngram_max <= 2):
            raise ValueError(
                f"supported n-gram range is 1..2, got ({self.ngram_min}, {self.ngram_max})"
            )


def tokenize(text: str, cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    if cfg.lowercase:
        text = text.lower()
    return _TOKEN_RE.findall(text)


def remove_stopwords(tokens: list[str], cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    stop = cfg.stopwords
    return [t for t in tokens if t not in stop]


def ngrams(tokens: list[str], cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Unigrams in order, then adjacent bigrams joined by one space."""
    terms: list[str] = []
    if cfg.ngram_min == 1:
        terms.extend(tokens)
    if cfg.ngram_max == 2:
        terms.extend(f"{a} {b}" for a, b in zip(tokens, tokens[1:]))
    return terms


def terms(text: str, cfg: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Full pipeline: tokenize, stop, n-grams."""
    return ngrams(remove_stopwords(tokenize(text, cfg), cfg), cfg)
