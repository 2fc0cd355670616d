"""Yelp-dump ingestion: filter businesses to restaurants, join reviews.

Both inputs are JSON-lines files in the Yelp Open Dataset layout. The
join is two streaming passes: pass one collects restaurant business ids
into a set (memory bounded by the business count, ~10^5), pass two
streams reviews and keeps the ones pointing at that set. Malformed lines
are counted and skipped, never fatal: multi-gigabyte dumps routinely
contain stray garbage and the stats surface the damage.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass

from . import prepared

log = logging.getLogger(__name__)

RESTAURANT_CATEGORY = "restaurants"


@dataclass(frozen=True)
class BusinessRecord:
    business_id: str
    categories: tuple[str, ...]


@dataclass(frozen=True)
class ReviewRecord:
    review_id: str
    business_id: str
    text: str
    stars: int


@dataclass
class IngestStats:
    businesses_seen: int = 0
    restaurants_kept: int = 0
    reviews_seen: int = 0
    reviews_kept: int = 0
    malformed_lines: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def parse_business_line(line: str) -> BusinessRecord | None:
    """One business.json line -> record, or None when malformed.

    categories may arrive as a comma-separated string, a string array,
    or null; null and missing both mean "no categories".
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        return None
    if not isinstance(obj, dict):
        return None
    business_id = obj.get("business_id")
    if not isinstance(business_id, str) or not business_id:
        return None
    raw = obj.get("categories")
    if raw is None:
        categories: tuple[str, ...] = ()
    elif isinstance(raw, str):
        categories = tuple(c.strip() for c in raw.split(",") if c.strip())
    elif isinstance(raw, list):
        cleaned = []
        for item in raw:
            if not isinstance(item, str):
                return None
            if item.strip():
                cleaned.append(item.strip())
        categories = tuple(cleaned)
    else:
        return None
    return BusinessRecord(business_id=business_id, categories=categories)


def is_restaurant(b: BusinessRecord) -> bool:
    """True iff some category equals "restaurants" case-insensitively.

    Exact token equality on the split categories, not substring match:
    a "Restaurant Supply Store" category must not qualify.
    """
    return any(c.strip().lower() == RESTAURANT_CATEGORY for c in b.categories)


def parse_review_line(line: str) -> ReviewRecord | None:
    """One review.json line -> record, or None when malformed.

    Stars arrive as JSON numbers (the dump uses floats like 5.0); only
    integral values in 1..5 are accepted.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        return None
    if not isinstance(obj, dict):
        return None
    review_id = obj.get("review_id")
    business_id = obj.get("business_id")
    text = obj.get("text")
    stars = obj.get("stars")
    if not isinstance(review_id, str) or not review_id:
        return None
    if not isinstance(business_id, str) or not business_id:
        return None
    if not isinstance(text, str):
        return None
    if isinstance(stars, bool) or not isinstance(stars, (int, float)):
        return None
    if isinstance(stars, float):
        if not stars.is_integer():
            return None
        stars = int(stars)
    if stars not in (1, 2, 3, 4, 5):
        return None
    return ReviewRecord(review_id=review_id, business_id=business_id, text=text, stars=stars)


def collect_restaurant_ids(business_path, stats: IngestStats) -> set[str]:
    """Pass 1. Every physical line counts as seen; parse failures as malformed."""
    ids: set[str] = set()
    with open(business_path, "r", encoding="utf-8") as f:
        for line in f:
            stats.businesses_seen += 1
            record = parse_business_line(line)
            if record is None:
                stats.malformed_lines += 1
                continue
            if is_restaurant(record):
                ids.add(record.business_id)
    stats.restaurants_kept = len(ids)
    return ids


def extract_corpus(business_path, review_path, out_path) -> IngestStats:
    """Two-pass join; writes the prepared-corpus file, returns stats.

    reviews_seen counts every physical line of the review file, so
    kept + dropped + malformed = seen holds exactly. Output order equals
    review-file order, making reruns byte-identical.
    """
    stats = IngestStats()
    restaurant_ids = collect_restaurant_ids(business_path, stats)
    log.info("pass 1 done: %d restaurants among %d businesses",
             stats.restaurants_kept, stats.businesses_seen)

    def kept_rows():
        with open(review_path, "r", encoding="utf-8") as f:
            for line in f:
                stats.reviews_seen += 1
                record = parse_review_line(line)
                if record is None:
                    stats.malformed_lines += 1
                    continue
                if record.business_id in restaurant_ids:
                    stats.reviews_kept += 1
                    yield record.stars, record.text

    prepared.write_rows(out_path, kept_rows())
    log.info("pass 2 done: kept %d of %d reviews", stats.reviews_kept, stats.reviews_seen)
    return stats
