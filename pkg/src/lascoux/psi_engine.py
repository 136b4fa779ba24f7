"""Lascoux coefficients psi_I.

For a strictly increasing J = (j_0, ..., j_r) of non-negative integers:

    psi_{{i}} = 2^i
    (r+1) psi_J = 2 * sum_l psi_{J with j_l lowered by one}
                  + (psi_{(j_1, ..., j_r)} if j_0 == 0 else 0)

where l runs over every position whose decrement keeps J strictly
increasing and non-negative (position 0 included when j_0 >= 1).
psi of the empty set is 1.

Sets are keyed internally by bitmask: lowering an element or dropping 0
both produce a numerically smaller mask, which gives a free topological
order for the bottom-up :func:`dense_psi_table`.
"""
from __future__ import annotations

import json
import logging
import operator
import threading
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CacheFormatError, InvalidIndexSet, NonIntegerPsi, UndefinedExtension

log = logging.getLogger(__name__)


class IndexSet(tuple):
    """Strictly increasing tuple of non-negative ints."""

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        if isinstance(elements, IndexSet):
            return elements
        try:
            elems = tuple(operator.index(e) for e in elements)
        except TypeError as exc:
            raise InvalidIndexSet(f"index set entries must be integers: {elements!r}") from exc
        for k, e in enumerate(elems):
            if e < 0:
                raise InvalidIndexSet(f"negative entry {e} in {list(elems)}")
            if k and e <= elems[k - 1]:
                raise InvalidIndexSet(f"entries not strictly increasing: {list(elems)}")
        return super().__new__(cls, elems)

    @classmethod
    def from_mask(cls, mask: int) -> "IndexSet":
        return tuple.__new__(cls, _bits(mask))

    @classmethod
    def prefix(cls, n: int) -> "IndexSet":
        """[n] = (0, 1, ..., n-1)."""
        return tuple.__new__(cls, range(n))

    @property
    def mask(self) -> int:
        m = 0
        for e in self:
            m |= 1 << e
        return m

    def complement(self, n: int) -> "IndexSet":
        """[n] minus this set; callers check containment first."""
        mine = set(self)
        return tuple.__new__(IndexSet, (k for k in range(n) if k not in mine))

    def issubset_of_prefix(self, n: int) -> bool:
        return not self or self[-1] < n

    def __repr__(self) -> str:
        return f"IndexSet({list(self)})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _children(mask: int) -> tuple[list[int], int]:
    """Masks the recursion for ``mask`` depends on: (decrements, drop-zero or 0)."""
    dec = []
    prev = -1
    for b in _bits(mask):
        if b - 1 > prev:
            dec.append(mask ^ (3 << (b - 1)))
        prev = b
    return dec, (mask ^ 1) if mask & 1 else 0


def _combine(mask: int, size: int, dec_vals, drop_val) -> int:
    total = 2 * sum(dec_vals) + drop_val
    q, rem = divmod(total, size)
    if rem:
        raise NonIntegerPsi(
            f"{size} does not divide {total} for {list(IndexSet.from_mask(mask))}"
        )
    return q


def psi_empty() -> int:
    return 1


class PsiTable:
    """Memoized psi values, safe to share between threads.

    ``hits`` and ``misses`` count top-level :meth:`psi` lookups.
    """

    def __init__(self):
        self._values: dict[int, int] = {}
        self._lock = threading.RLock()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, index_set) -> bool:
        return IndexSet(index_set).mask in self._values

    def get(self, index_set):
        return self._values.get(IndexSet(index_set).mask)

    def psi(self, index_set) -> int:
        I = IndexSet(index_set)
        if not I:
            return psi_empty()
        mask = I.mask
        with self._lock:
            v = self._values.get(mask)
            if v is not None:
                self.hits += 1
                return v
            self.misses += 1
            return self._fill(mask)

    def _fill(self, root: int) -> int:
        values = self._values
        stack = [root]
        while stack:
            mask = stack[-1]
            if mask in values:
                stack.pop()
                continue
            if mask & (mask - 1) == 0:
                values[mask] = 1 << (mask.bit_length() - 1)
                stack.pop()
                continue
            dec, drop = _children(mask)
            missing = [c for c in dec if c not in values]
            if drop and drop not in values:
                missing.append(drop)
            if missing:
                stack.extend(missing)
                continue
            values[mask] = _combine(
                mask,
                bin(mask).count("1"),
                (values[c] for c in dec),
                values[drop] if drop else 0,
            )
            stack.pop()
        return values[root]

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self.hits = self.misses = 0

    def seed(self, index_set, value: int) -> None:
        """Insert a value without computing it (used when loading a cache)."""
        I = IndexSet(index_set)
        if not I:
            if value != psi_empty():
                raise ValueError("psi of the empty set is 1")
            return
        with self._lock:
            self._values[I.mask] = int(value)

    def entries(self) -> list[tuple[IndexSet, int]]:
        """All stored (set, value) pairs, ordered by bitmask."""
        with self._lock:
            items = sorted(self._values.items())
        return [(IndexSet.from_mask(m), v) for m, v in items]

    def audit(self) -> list[IndexSet]:
        """Sets whose stored value disagrees with a fresh recomputation."""
        fresh = PsiTable()
        return [I for I, v in self.entries() if fresh.psi(I) != v]

    def nonpositive(self) -> list[IndexSet]:
        bad = [I for I, v in self.entries() if v <= 0]
        if bad:
            log.warning("psi not positive on %d sets, first %s", len(bad), list(bad[0]))
        return bad


default_table = PsiTable()


def psi(index_set, table: PsiTable | None = None) -> int:
    """Lascoux coefficient of ``index_set`` (1 for the empty set)."""
    return (table if table is not None else default_table).psi(index_set)


def dense_psi_table(width: int) -> list[int]:
    """psi of every subset of [width], as a list indexed by bitmask.

    Bottom-up and independent of :class:`PsiTable`; suited to bulk queries
    such as psi of every complement [n] minus I with n <= width.  Memory
    and time grow as 2^width (width 22 takes a few seconds).
    """
    values = [0] * (1 << width)
    values[0] = psi_empty()
    for mask in range(1, 1 << width):
        if mask & (mask - 1) == 0:
            values[mask] = mask
            continue
        total = 0
        size = 0
        prev = -1
        rest = mask
        while rest:
            low = rest & -rest
            b = low.bit_length() - 1
            if b - 1 > prev:
                total += values[mask ^ (3 << (b - 1))]
            prev = b
            size += 1
            rest ^= low
        total *= 2
        if mask & 1:
            total += values[mask ^ 1]
        q, rem = divmod(total, size)
        if rem:
            raise NonIntegerPsi(f"{size} does not divide {total} for mask {mask:#x}")
        values[mask] = q
    return values


def psi_ext_pair(a: int, b: int, *, allow_half: bool = False, table: PsiTable | None = None):
    """psi_{a,b} for a, b >= -1 under the extended two-index conventions.

    0 <= a < b uses psi({a, b}); psi_{a,a} = 0; psi_{a,b} = -psi_{b,a};
    psi_{-1,a} = -psi_{a,-1} = 2^(a-1).  The a = 0 case of the last rule is
    the non-integer 1/2 and is refused unless ``allow_half`` is set.
    """
    if a < -1 or b < -1 or (a, b) == (-1, -1):
        raise UndefinedExtension(f"psi_ext_pair({a}, {b}) is outside the conventions")
    if a == b:
        return 0
    if a > b:
        return -psi_ext_pair(b, a, allow_half=allow_half, table=table)
    if a == -1:
        if b == 0:
            if not allow_half:
                raise UndefinedExtension("psi_{-1,0} = 1/2 is not an integer")
            return Fraction(1, 2)
        return 1 << (b - 1)
    return psi((a, b), table)


def load_cache(path, table: PsiTable | None = None) -> int:
    """Seed ``table`` from a JSON-lines cache file; return the record count.

    Each line is ``{"set": [int, ...], "psi": "<decimal>"}``.  Any malformed
    line aborts with :class:`CacheFormatError` naming the line number.
    """
    table = table if table is not None else default_table
    path = Path(path)
    count = 0
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                elems = rec["set"]
                value = rec["psi"]
                if not isinstance(elems, list) or not isinstance(value, str):
                    raise TypeError("expected a list 'set' and a string 'psi'")
                table.seed(IndexSet(elems), int(value))
            except (ValueError, KeyError, TypeError) as exc:
                raise CacheFormatError(path, lineno, str(exc)) from exc
            count += 1
    return count


def _cache_record(I: IndexSet, value: int) -> str:
    return json.dumps({"set": list(I), "psi": str(value)}, separators=(", ", ": "))


def iter_cache_records(table: PsiTable) -> Iterator[str]:
    for I, v in table.entries():
        yield _cache_record(I, v)


def append_cache(path, table: PsiTable | None = None) -> int:
    """Append entries of ``table`` missing from the cache file; return how many."""
    table = table if table is not None else default_table
    path = Path(path)
    present: set[int] = set()
    if path.exists():
        scratch = PsiTable()
        load_cache(path, scratch)
        present = {I.mask for I, _ in scratch.entries()}
    new = [(I, v) for I, v in table.entries() if I.mask not in present]
    if new:
        with path.open("a", encoding="utf-8") as fh:
            for I, v in new:
                fh.write(_cache_record(I, v) + "\n")
    return len(new)
