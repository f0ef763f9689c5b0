from collections.abc import Mapping
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set

from . import NormalizationPolicy, PostRecord

DEFAULT_POLICY = NormalizationPolicy()


def normalize_tags(
    tags: Iterable[str], policy: Optional[NormalizationPolicy] = None
) -> List[str]:
    """Canonicalize a list of raw tags.

    Trimming and case folding follow the policy, zero-length tags are dropped when
    ``policy.drop_empty`` is set and duplicates are removed keeping the first
    occurrence.

    Args:
        tags (Iterable[str]): raw tag strings
        policy (NormalizationPolicy, optional): defaults to case-fold, trim, drop empty

    Returns:
        List[str]: normalized tags in first-occurrence order
    """
    policy = policy or DEFAULT_POLICY

    normalized = list()
    seen = set()
    for tag in tags:
        if policy.trim_whitespace:
            tag = tag.strip()
        if policy.case_fold:
            tag = tag.casefold()
        if policy.drop_empty and tag == "":
            continue
        if tag in seen:
            continue
        seen.add(tag)
        normalized.append(tag)
    return normalized


class ItemTagSets(Mapping):
    """Mapping from distinct URL to the set of its normalized tags.

    Iteration follows sorted URL order. Instances can be merged in any order:
    the union is commutative and associative.
    """

    def __init__(self, items: Optional[Dict[str, Iterable[str]]] = None):
        self._items: Dict[str, Set[str]] = dict()
        for url, tags in (items or {}).items():
            self.add(url, tags)

    def add(self, url: str, tags: Iterable[str]):
        url = url.strip()
        if not url:
            raise ValueError("Cannot add an item with an empty url.")
        self._items.setdefault(url, set()).update(tags)

    def merge(self, other: "ItemTagSets") -> "ItemTagSets":
        merged = ItemTagSets()
        for source in (self, other):
            for url, tags in source.items():
                merged.add(url, tags)
        return merged

    def tag_universe(self) -> Set[str]:
        universe = set()
        for tags in self._items.values():
            universe.update(tags)
        return universe

    def __getitem__(self, url: str) -> FrozenSet[str]:
        return frozenset(self._items[url])

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._items))

    def __len__(self) -> int:
        return len(self._items)

    def __repr__(self) -> str:
        return f"ItemTagSets(urls={len(self)}, tags={len(self.tag_universe())})"


def aggregate_by_url(
    records: Iterable[PostRecord],
    policy: Optional[NormalizationPolicy] = None,
) -> ItemTagSets:
    """Union the normalized tags of all records sharing a URL.

    URLs are compared as opaque strings after trimming. Records without tags still
    register their URL. Memory grows with distinct URLs and tags only: records are
    consumed one at a time.

    Args:
        records (Iterable[PostRecord]): record stream, in any order
        policy (NormalizationPolicy, optional): tag normalization policy

    Returns:
        ItemTagSets: the per-URL tag sets
    """
    items = ItemTagSets()
    for record in records:
        items.add(record.url, normalize_tags(record.tags, policy))
    return items
