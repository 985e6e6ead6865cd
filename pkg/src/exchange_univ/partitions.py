"""Integer partitions: parsing, conjugation, classification and part-wise sums."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence

from .errors import NotDecreasing, ParseError, RowBound

TRIVIAL_ROW = "trivial-row"
TRIVIAL_COLUMN = "trivial-column"
SHALLOW_HOOK = "shallow-hook"
DEEP_HOOK = "deep-hook"
PROPER = "proper"

_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    Ordering is lexicographic on the parts.
    """

    parts: tuple[int, ...]
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise NotDecreasing(f"parts must be weakly decreasing: {list(parts)}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Zero-based part access; parts past the end read as 0."""
        if i < 0:
            return self.parts[i]
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def part(self, i: int) -> int:
        """One-based part access (``part(1)`` is the first row), 0 beyond the length."""
        return self[i - 1] if i >= 1 else 0

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    @cached_property
    def conjugate(self) -> "Partition":
        return conjugate(self)

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate

    def cells(self) -> Iterator[tuple[int, int]]:
        """Zero-based (row, col) pairs in row-major order."""
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other.parts, self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


EMPTY = Partition(())


def parse_partition(text: str, sort: bool = False) -> Partition:
    """Parse ``[3,2,2]`` or exponent forms such as ``[2,1^3]``.

    Whitespace is ignored. Rising parts raise :class:`NotDecreasing` unless ``sort`` is set.
    """
    compact = re.sub(r"\s+", "", text)
    if not (compact.startswith("[") and compact.endswith("]")):
        raise ParseError(f"expected a bracketed partition, got {text!r}")
    body = compact[1:-1]
    parts: list[int] = []
    if body:
        for term in body.split(","):
            m = _TERM.match(term)
            if not m:
                raise ParseError(f"malformed term {term!r} in {text!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) is not None else 1
            if value == 0:
                raise ParseError(f"zero part in {text!r}")
            parts.extend([value] * count)
    if sort:
        parts.sort(reverse=True)
    elif any(a < b for a, b in zip(parts, parts[1:])):
        raise NotDecreasing(f"parts rise in {text!r}; pass sort=True to normalize")
    return Partition(tuple(parts))


def as_partition(p: Partition | Sequence[int] | str) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return parse_partition(p)
    return Partition(tuple(p))


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: part i counts the rows of length at least i."""
    if not p.parts:
        return EMPTY
    return Partition(tuple(sum(1 for x in p.parts if x >= i) for i in range(1, p.parts[0] + 1)))


def diagonal_length(p: Partition) -> int:
    """Number of cells on the main diagonal (side of the Durfee square)."""
    return sum(1 for i, x in enumerate(p.parts, start=1) if x >= i)


def hook_arm(p: Partition) -> int | None:
    """Return r when p == [n-r, 1^r] with 0 < r < n-1, else None."""
    n = p.size
    if len(p) < 2 or p[1] != 1:
        return None
    r = len(p) - 1
    return r if 0 < r < n - 1 else None


def is_hook(p: Partition) -> bool:
    return hook_arm(p) is not None


def is_proper(p: Partition) -> bool:
    return p[1] > 1


def is_trivial(p: Partition) -> bool:
    """One-dimensional representation: a single row or a single column (or empty)."""
    return len(p) <= 1 or p.cols == 1


@dataclass(frozen=True)
class PartitionClass:
    kind: str
    self_conjugate: bool
    rows: int
    cols: int
    diagonal_length: int

    @property
    def is_hook(self) -> bool:
        return self.kind in (SHALLOW_HOOK, DEEP_HOOK)


def classify(p: Partition) -> PartitionClass:
    n = p.size
    r = hook_arm(p)
    if is_proper(p):
        kind = PROPER
    elif r is not None:
        kind = SHALLOW_HOOK if r in (1, n - 2) else DEEP_HOOK
    elif len(p) <= 1:
        kind = TRIVIAL_ROW
    else:
        kind = TRIVIAL_COLUMN
    return PartitionClass(
        kind=kind,
        self_conjugate=p.is_self_conjugate(),
        rows=p.rows,
        cols=p.cols,
        diagonal_length=diagonal_length(p),
    )


def partwise_sum(p: Partition, q: Partition) -> Partition:
    return Partition(tuple(a + b for a, b in zip_longest(p.parts, q.parts, fillvalue=0)))


def partitions_of(n: int, max_rows: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order ([n] first)."""
    out: list[Partition] = []
    limit_rows = n if max_rows is None else max_rows

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if len(acc) == limit_rows:
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n if max_part is None else max_part, [])
    return out


class PartitionFamily:
    """An ordered list of partitions whose semantics are multiset-level.

    Equality and hashing compare the sorted members. ``d`` bounds the row count of
    every member; it defaults to the largest row count present.
    """

    __slots__ = ("members", "d")

    def __init__(self, members: Iterable[Partition | Sequence[int] | str], d: int | None = None):
        ms = tuple(as_partition(m) for m in members)
        rows = max((m.rows for m in ms), default=0)
        if d is None:
            d = rows
        if rows > d:
            bad = next(m for m in ms if m.rows > d)
            raise RowBound(f"member {bad} has {bad.rows} rows, more than d={d}")
        self.members = ms
        self.d = d

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "PartitionFamily":
        """Semicolon-separated partition literals, e.g. ``"[2,1];[2,2]"``."""
        chunks = [c for c in text.split(";") if c.strip()]
        if not chunks:
            raise ParseError(f"empty family: {text!r}")
        return cls([parse_partition(c) for c in chunks], d=d)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Partition:
        return self.members[i]

    def sorted_key(self) -> tuple[Partition, ...]:
        return tuple(sorted(self.members))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionFamily):
            return NotImplemented
        return self.sorted_key() == other.sorted_key()

    def __hash__(self) -> int:
        return hash(self.sorted_key())

    def __repr__(self) -> str:
        return f"PartitionFamily({str(self)!r}, d={self.d})"

    def __str__(self) -> str:
        return ";".join(str(m) for m in self.members)

    @property
    def total_size(self) -> int:
        return sum(m.size for m in self.members)

    def conjugate(self) -> "PartitionFamily":
        return PartitionFamily([m.conjugate for m in self.members], d=max(self.d, max((m.cols for m in self.members), default=0)))

    def multiset_self_conjugate(self) -> bool:
        """True iff the multiset of members equals the multiset of their conjugates."""
        return Counter(self.members) == Counter(m.conjugate for m in self.members)

    def members_self_conjugate(self) -> bool:
        """True iff every member is self-conjugate.

        This is the ordered notion: some ordering of the family equals its member-wise
        conjugate exactly when each member is its own conjugate.
        """
        return all(m.is_self_conjugate() for m in self.members)

    def with_member(self, p: Partition) -> "PartitionFamily":
        return PartitionFamily(self.members + (p,), d=max(self.d, p.rows))

    def without(self, index: int) -> "PartitionFamily":
        return PartitionFamily(self.members[:index] + self.members[index + 1:], d=self.d)

    def to_json(self) -> list[list[int]]:
        return [m.to_json() for m in self.members]
