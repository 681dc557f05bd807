"""Catalog-level invariant reports.

Each report aggregates one invariant over a catalog of codes into
(key -> count) rows whose key shapes match the published table layouts,
so desk runs and full-catalog runs diff mechanically.  Expensive
aggregations cache per-code invariants next to the catalog file, guarded
by a content digest.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .designs import design_certificate, independence_number, is_systematic, st_set, sts_of
from .equivalence import automorphism_group
from .gf2 import kernel, rank
from .profiles import clp
from .switching import minimal_i_components
from .words import BinaryCode

REPORT_TABLES = (
    "aut-orders",
    "rank-kernel",
    "sts-occurrence",
    "st-sizes",
    "independence",
    "clp",
    "components",
    "sym-fixed",
)

# invariants persisted in the sidecar cache, keyed by report needs
_CACHED_FIELDS = ("rank", "kernel_size", "st_size", "independence",
                  "systematic", "clp", "aut_order", "sym_order",
                  "sym_fixed", "components", "st_classes")


@dataclass
class Report:
    table: str
    rows: list[tuple[str, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"table": self.table, "rows": [[k, c] for k, c in self.rows]}


@dataclass
class CatalogRecord:
    """One catalog entry with lazily computed, persistable invariants."""

    index: int
    code: BinaryCode
    cache: dict = field(default_factory=dict)

    def get(self, key: str):
        if key not in self.cache:
            self.cache[key] = self._compute(key)
        return self.cache[key]

    def _compute(self, key: str):
        code = self.code
        if key == "rank":
            return rank(code)
        if key == "kernel_size":
            return len(kernel(code))
        if key == "st_size":
            return len(st_set(code))
        if key == "independence":
            return independence_number(st_set(code))
        if key == "systematic":
            return is_systematic(code)
        if key == "clp":
            return ",".join(str(k) for k in clp(code).kappa_prime)
        if key in ("aut_order", "sym_order", "sym_fixed"):
            rep = automorphism_group(code)
            self.cache.setdefault("aut_order", rep.order)
            self.cache.setdefault("sym_order", rep.symmetry_order)
            self.cache.setdefault("sym_fixed", rep.coordinate_fixed_count)
            return self.cache[key]
        if key == "components":
            return [_orbit_notation(minimal_i_components(code, c).sizes)
                    for c in range(1, code.n + 1)]
        if key == "st_classes":
            return sorted(_sts_class_digests(code))
        raise KeyError(key)


def _orbit_notation(sizes) -> str:
    multi = Counter(sizes)
    return "".join(f"{g}^{a}" for g, a in sorted(multi.items()))


def catalog_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_cache(path: Path) -> dict:
    cache_path = path.with_suffix(path.suffix + ".invcache.json")
    if not cache_path.exists():
        return {}
    try:
        data = json.loads(cache_path.read_text())
    except json.JSONDecodeError:
        return {}
    if data.get("digest") != catalog_digest(path):
        return {}
    return data.get("records", {})


def save_cache(path: Path, records: dict) -> None:
    cache_path = path.with_suffix(path.suffix + ".invcache.json")
    cache_path.write_text(json.dumps({"digest": catalog_digest(path),
                                      "records": records}, indent=0))


def basic_invariants(code: BinaryCode) -> dict:
    from .words import is_perfect, is_self_complementary, min_distance

    ker = kernel(code)
    st = st_set(code)
    return {
        "size": len(code),
        "n": code.n,
        "min_distance": min_distance(code) if len(code) >= 2 else None,
        "perfect": is_perfect(code),
        "self_complementary": is_self_complementary(code),
        "rank": rank(code),
        "kernel_size": len(ker),
        "st_size": len(st),
        "independence": independence_number(st),
        "systematic": is_systematic(code) if len(code) & (len(code) - 1) == 0 else None,
    }


def catalog_records(codes: list[BinaryCode], path: Path | None = None) -> list[CatalogRecord]:
    """Wrap catalog codes, warm-started from the sidecar cache if valid."""
    cached = load_cache(path) if path is not None else {}
    records = []
    for i, code in enumerate(codes):
        entry = cached.get(str(i), {})
        records.append(CatalogRecord(i, code, dict(entry)))
    return records


def save_records(records: list[CatalogRecord], path: Path) -> None:
    save_cache(path, {str(r.index): r.cache for r in records})


def report(codes, table: str,
           sts_index_map: dict[str, str] | None = None) -> Report:
    """Aggregate one invariant over the catalog.

    ``codes`` may be plain codes or CatalogRecord objects (the latter
    reuse and fill their invariant caches).  ``sts_index_map``
    optionally maps triple-system certificate digests to external
    catalog labels for the sts-occurrence table; without it the digests
    themselves are the keys.
    """
    if table not in REPORT_TABLES:
        raise ValueError(f"unknown table {table!r}; choose from {REPORT_TABLES}")
    records = [c if isinstance(c, CatalogRecord) else CatalogRecord(i, c)
               for i, c in enumerate(codes)]
    counter: Counter = Counter()
    if table == "aut-orders":
        for r in records:
            counter[str(r.get("aut_order"))] += 1
    elif table == "rank-kernel":
        for r in records:
            counter[f"{r.get('rank')}/{r.get('kernel_size')}"] += 1
    elif table == "st-sizes":
        for r in records:
            counter[str(len(r.get("st_classes")))] += 1
    elif table == "sts-occurrence":
        for r in records:
            for digest in r.get("st_classes"):
                key = (sts_index_map or {}).get(digest, digest)
                counter[key] += 1
    elif table == "independence":
        for r in records:
            counter[str(r.get("independence"))] += 1
    elif table == "clp":
        for r in records:
            counter[r.get("clp")] += 1
    elif table == "components":
        for r in records:
            for notation in r.get("components"):
                counter[notation] += 1
    elif table == "sym-fixed":
        for r in records:
            counter[str(r.get("sym_fixed"))] += 1
    rows = sorted(counter.items(), key=_row_key)
    return Report(table, rows)


def _row_key(item):
    key = item[0]
    try:
        return (0, int(key.split("/")[0]), key)
    except ValueError:
        return (1, 0, key)


def _sts_class_digests(code: BinaryCode) -> set[str]:
    digests = set()
    seen_blocks = set()
    for x in code.words:
        sts = sts_of(code, x)
        if sts.blocks in seen_blocks:
            continue
        seen_blocks.add(sts.blocks)
        digests.add(design_certificate(sts.v, sts.blocks).hexdigest)
    return digests
