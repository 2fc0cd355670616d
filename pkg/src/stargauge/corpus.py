"""Corpus statistics, deterministic splitting, balanced resampling.

Splitting is one global Fisher-Yates shuffle of the row indices under the
seed, then prefix assignment: the first ``val_size`` shuffled rows become
the validation set, the next ``test_size`` the test set, the remainder
the training pool. Validation and test therefore roughly follow the raw
(imbalanced) label distribution rather than being stratified.

Balancing draws ``per_class`` rows per star from the training pool,
without replacement when the class is large enough, with replacement (and
a warning) otherwise, then shuffles the combined result.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from . import prepared, textproc
from .rng import SplitMix64

log = logging.getLogger(__name__)

STAR_LABELS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class ClassHistogram:
    counts: dict[int, int]
    percentages: dict[int, float]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "percentages": {str(k): v for k, v in sorted(self.percentages.items())},
        }


@dataclass(frozen=True)
class SplitSpec:
    val_size: int
    test_size: int
    train_per_class: int
    seed: int

    def __post_init__(self):
        if self.val_size < 0 or self.test_size < 0:
            raise ValueError("val_size and test_size must be non-negative")
        if self.train_per_class < 1:
            raise ValueError("train_per_class must be >= 1")


@dataclass(frozen=True)
class TokenLengthStats:
    thresholds: tuple[int, ...]
    fractions: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "thresholds": list(self.thresholds),
            "fractions": list(self.fractions),
        }


def class_distribution(corpus_path) -> ClassHistogram:
    counts = {s: 0 for s in STAR_LABELS}
    total = 0
    for stars in prepared.iter_labels(corpus_path):
        counts[stars] += 1
        total += 1
    if total == 0:
        raise ValueError(f"corpus is empty: {corpus_path}")
    percentages = {s: counts[s] / total for s in STAR_LABELS}
    return ClassHistogram(counts=counts, percentages=percentages)


def token_length_stats(
    corpus_path,
    thresholds: tuple[int, ...] = (128, 256),
    cfg: textproc.TokenizerConfig = textproc.TokenizerConfig(),
) -> TokenLengthStats:
    """Fraction of reviews at or under each token-count threshold.

    Counts use the package tokenizer before stopword removal.
    """
    if any(b <= a for a, b in zip(thresholds, thresholds[1:])) or not thresholds:
        raise ValueError("thresholds must be non-empty and strictly increasing")
    at_or_under = [0] * len(thresholds)
    total = 0
    for _, text in prepared.iter_rows(corpus_path):
        n_tokens = len(textproc.tokenize(text, cfg))
        total += 1
        for i, thr in enumerate(thresholds):
            if n_tokens <= thr:
                at_or_under[i] += 1
    if total == 0:
        raise ValueError(f"corpus is empty: {corpus_path}")
    return TokenLengthStats(
        thresholds=tuple(thresholds),
        fractions=tuple(c / total for c in at_or_under),
    )


def split(corpus_path, spec: SplitSpec, out_dir) -> dict[str, Path]:
    """Partition the corpus into train_pool / val / test files.

    Rows are written in shuffled order within each output. Returns the
    three paths keyed by split name.
    """
    offsets, _ = prepared.scan_offsets(corpus_path)
    n = len(offsets)
    if spec.val_size + spec.test_size >= n:
        raise ValueError(
            f"corpus has {n} rows, cannot hold out val={spec.val_size} + test={spec.test_size}"
        )
    order = list(range(n))
    SplitMix64(spec.seed).shuffle(order)
    val_idx = order[: spec.val_size]
    test_idx = order[spec.val_size: spec.val_size + spec.test_size]
    pool_idx = order[spec.val_size + spec.test_size:]

    out_dir = Path(out_dir)
    paths = {
        "train_pool": out_dir / "train_pool.tsv",
        "val": out_dir / "val.tsv",
        "test": out_dir / "test.tsv",
    }
    prepared.copy_rows_by_offset(corpus_path, [offsets[i] for i in val_idx], paths["val"])
    prepared.copy_rows_by_offset(corpus_path, [offsets[i] for i in test_idx], paths["test"])
    prepared.copy_rows_by_offset(corpus_path, [offsets[i] for i in pool_idx], paths["train_pool"])
    log.info("split: %d val / %d test / %d train pool", len(val_idx), len(test_idx), len(pool_idx))
    return paths


def balance(train_pool_path, per_class: int, seed: int, out_path) -> Path:
    """Resample the pool to exactly per_class rows per star.

    Classes are drawn in ascending star order from one seeded stream,
    then the combined 5 * per_class rows are shuffled by the same stream.
    A class smaller than per_class falls back to drawing with
    replacement; the duplication is logged as a warning.
    """
    if per_class < 1:
        raise ValueError("per_class must be >= 1")
    offsets, labels = prepared.scan_offsets(train_pool_path)
    by_class: dict[int, list[int]] = {s: [] for s in STAR_LABELS}
    for off, stars in zip(offsets, labels):
        by_class[stars].append(off)

    rng = SplitMix64(seed)
    chosen: list[int] = []
    for stars in STAR_LABELS:
        pool = by_class[stars]
        if not pool:
            raise ValueError(f"training pool has no rows for star {stars}")
        if len(pool) >= per_class:
            chosen.extend(rng.sample_without_replacement(pool, per_class))
        else:
            log.warning(
                "star %d has %d rows < per_class=%d; sampling with replacement",
                stars, len(pool), per_class,
            )
            chosen.extend(rng.sample_with_replacement(pool, per_class))
    rng.shuffle(chosen)
    prepared.copy_rows_by_offset(train_pool_path, chosen, out_path)
    return Path(out_path)
