"""Standard and semistandard Young tableaux: enumeration, counting and contents."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, Inconsistent, SizeLimit
from .partitions import Partition, as_partition

DEFAULT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class StandardTableau:
    """A filling of a Young diagram by 1..n increasing along rows and down columns.

    ``rows`` holds the entries row by row. Construction validates standardness.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))  # raises if rows grow
        flat = sorted(x for r in rows for x in r)
        if flat != list(range(1, shape.size + 1)):
            raise ValueError(f"entries must be 1..{shape.size} exactly once: {rows}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] >= x:
                    raise ValueError(f"row {r + 1} not increasing in {rows}")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c + 1} not increasing in {rows}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "StandardTableau":
        return cls(tuple(tuple(r) for r in rows))

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return self.shape.size

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def _check(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"entry {k} outside 1..{self.n}")

    def row_of(self, k: int) -> int:
        """One-based row holding k."""
        self._check(k)
        return self._positions[k][0] + 1

    def col_of(self, k: int) -> int:
        """One-based column holding k."""
        self._check(k)
        return self._positions[k][1] + 1

    def content(self, k: int) -> int:
        self._check(k)
        r, c = self._positions[k]
        return c - r

    def axial_distance(self, i: int, j: int) -> int:
        return self.content(j) - self.content(i)

    @cached_property
    def content_vector(self) -> tuple[int, ...]:
        return tuple(self.content(k) for k in range(1, self.n + 1))

    @cached_property
    def row_word(self) -> tuple[int, ...]:
        """Zero-based row index of 1, 2, ..., n."""
        return tuple(self._positions[k][0] for k in range(1, self.n + 1))

    def inversions(self) -> int:
        """Pairs i < j with k_i placed in a lower row than k_j."""
        w = self.row_word
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def transpose(self) -> "StandardTableau":
        cols = self.shape.conjugate
        return StandardTableau(tuple(tuple(self.rows[r][c] for r in range(cols[c])) for c in range(len(cols))))

    def swap(self, i: int) -> "StandardTableau | None":
        """Exchange i and i+1; None when the result is not standard."""
        (r1, c1), (r2, c2) = self._positions[i], self._positions[i + 1]
        if r1 == r2 or c1 == c2:
            return None
        rows = [list(r) for r in self.rows]
        rows[r1][c1], rows[r2][c2] = i + 1, i
        return StandardTableau(tuple(tuple(r) for r in rows))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


def canonical_key(t: StandardTableau) -> tuple[int, ...]:
    """Sort key placing tableaux in canonical basis order.

    Tableaux are ordered by the row-index word of 1..n, largest word first. With this
    order the [2,1] basis is ([[1,3],[2]], [[1,2],[3]]).
    """
    return tuple(-x for x in t.row_word)


@lru_cache(maxsize=512)
def _enumerate(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    out: list[StandardTableau] = []
    n = sum(parts)

    def rec(shape: list[int], k: int, fill: dict[tuple[int, int], int]) -> None:
        if k == 0:
            rows = tuple(tuple(fill[(r, c)] for c in range(parts[r])) for r in range(len(parts)))
            out.append(StandardTableau(rows))
            return
        for r in range(len(shape)):
            length = shape[r]
            if length and (r + 1 == len(shape) or shape[r + 1] < length):
                shape[r] -= 1
                fill[(r, length - 1)] = k
                rec(shape, k - 1, fill)
                shape[r] += 1

    rec(list(parts), n, {})
    out.sort(key=canonical_key)
    return tuple(out)


def enumerate_standard(shape: Partition | Sequence[int], cap: int = DEFAULT_ENUMERATION_CAP) -> list[StandardTableau]:
    """All standard tableaux of ``shape`` in canonical order."""
    shape = as_partition(shape)
    if shape.size > cap:
        raise SizeLimit(f"shape {shape} has {shape.size} cells, above the enumeration cap {cap}")
    return list(_enumerate(shape.parts))


def hook_lengths(shape: Partition) -> list[int]:
    conj = shape.conjugate
    return [shape[r] - c + conj[c] - r - 1 for r, c in shape.cells()]


def dimension(shape: Partition | Sequence[int]) -> int:
    """Number of standard tableaux, by the hook-length formula."""
    shape = as_partition(shape)
    return factorial(shape.size) // prod(hook_lengths(shape))


def weyl_dimension(shape: Partition | Sequence[int], d: int) -> int:
    """Number of semistandard tableaux with entries in 1..d."""
    shape = as_partition(shape)
    if shape.rows > d:
        return 0
    num = prod(d + c - r for r, c in shape.cells())
    return num // prod(hook_lengths(shape))


def tableau_from_content_vector(cv: Sequence[int]) -> StandardTableau:
    """Rebuild the unique standard tableau with the given content vector.

    Each k goes into the one addable cell lying on diagonal ``cv[k-1]``.
    """
    rows: list[list[int]] = []
    for k, x in enumerate(cv, start=1):
        placed = False
        for r in range(len(rows) + 1):
            length = len(rows[r]) if r < len(rows) else 0
            addable = r == 0 or len(rows[r - 1]) > length
            if addable and length - r == x:
                if r == len(rows):
                    rows.append([])
                rows[r].append(k)
                placed = True
                break
        if not placed:
            raise Inconsistent(f"no addable cell of content {x} for entry {k} in content vector {tuple(cv)}")
    return StandardTableau(tuple(tuple(r) for r in rows))
