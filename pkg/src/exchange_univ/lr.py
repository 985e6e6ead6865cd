"""Littlewood-Richardson coefficients, iterated products and Weyl bounds."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import HypothesisViolated, SizeLimit
from .partitions import Partition, PartitionFamily, as_partition, partitions_of

DEFAULT_LR_CAP = 30


@dataclass(frozen=True)
class SkewShape:
    """Cells of ``outer`` not in ``inner``."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} does not fit inside {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(len(self.outer)) for c in range(self.inner[r], self.outer[r])]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


def is_lattice_word(word: Iterable[int]) -> bool:
    """Every prefix holds at least as many j's as (j+1)'s."""
    counts: dict[int, int] = defaultdict(int)
    for x in word:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> list[dict[tuple[int, int], int]]:
    """All LR tableaux of shape nu/lam and weight mu (as cell -> entry maps)."""
    out: list[dict[tuple[int, int], int]] = []
    _search(lam, mu, nu, lambda fill: out.append(dict(fill)))
    return out


def _search(lam: Partition, mu: Partition, nu: Partition, emit) -> None:
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return
    # reverse reading order: rows top to bottom, right to left inside a row
    order = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    k = len(mu)
    counts = [0] * (k + 1)
    fill: dict[tuple[int, int], int] = {}

    def rec(pos: int) -> None:
        if pos == len(order):
            emit(fill)
            return
        r, c = order[pos]
        hi = k
        right = fill.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if r > 0 and c >= lam[r - 1]:
            lo = fill[(r - 1, c)] + 1
        # an entry in row r of an LR tableau never exceeds r + 1
        hi = min(hi, r + 1)
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            fill[(r, c)] = v
            rec(pos + 1)
            del fill[(r, c)]
            counts[v] -= 1

    rec(0)


@lru_cache(maxsize=200_000)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    box = [0]

    def bump(_fill) -> None:
        box[0] += 1

    _search(Partition(lam), Partition(mu), Partition(nu), bump)
    return box[0]


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR tableaux of shape nu/lam and weight mu."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if nu.size != lam.size + mu.size:
        return 0
    # c^nu_{lam,mu} is symmetric in lam and mu; the larger inner shape leaves fewer cells to fill
    if mu.size > lam.size:
        lam, mu = mu, lam
    return _lr(lam.parts, mu.parts, nu.parts)


@lru_cache(maxsize=50_000)
def _expand(lam: tuple[int, ...], mu: tuple[int, ...], max_rows: int | None) -> tuple[tuple[Partition, int], ...]:
    l, m = Partition(lam), Partition(mu)
    n = l.size + m.size
    rows = len(lam) + len(mu)
    if max_rows is not None:
        rows = min(rows, max_rows)
    out = []
    for nu in partitions_of(n, max_rows=rows, max_part=l.cols + m.cols):
        if nu.contains(l) and nu.contains(m):
            c = lr_coefficient(l, m, nu)
            if c:
                out.append((nu, c))
    return tuple(out)


def lr_expand(lam, mu, max_rows: int | None = None, cap: int = DEFAULT_LR_CAP) -> dict[Partition, int]:
    """Support of the product lam * mu with multiplicities, optionally restricted to at most max_rows rows."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size + mu.size > cap:
        raise SizeLimit(f"product of total size {lam.size + mu.size} exceeds the LR cap {cap}")
    if mu.size > lam.size or (mu.size == lam.size and mu > lam):
        lam, mu = mu, lam
    return dict(_expand(lam.parts, mu.parts, max_rows))


def _multi_expand(members: Sequence[Partition], max_rows: int | None, cap: int) -> dict[Partition, int]:
    if not members:
        return {Partition(()): 1}
    total = sum(m.size for m in members)
    if total > cap:
        raise SizeLimit(f"family of total size {total} exceeds the LR cap {cap}")
    current: dict[Partition, int] = {members[0]: 1}
    if max_rows is not None and members[0].rows > max_rows:
        return {}
    for mu in members[1:]:
        nxt: dict[Partition, int] = defaultdict(int)
        for kappa, a in current.items():
            for rho, b in lr_expand(kappa, mu, max_rows=max_rows, cap=cap).items():
                nxt[rho] += a * b
        current = dict(nxt)
    return current


@lru_cache(maxsize=20_000)
def _multi_expand_cached(members: tuple[tuple[int, ...], ...], max_rows: int | None, cap: int) -> tuple[tuple[Partition, int], ...]:
    return tuple(_multi_expand([Partition(m) for m in members], max_rows, cap).items())


def multi_lr_expand(members: Iterable, max_rows: int | None = None, cap: int = DEFAULT_LR_CAP,
                    memo: bool = True) -> dict[Partition, int]:
    """Iterated product of the members.

    With ``max_rows`` set, intermediate products with more rows are dropped. This is
    exact for the final rows-bounded support because every constituent of a product
    contains each factor, so row counts never shrink.
    """
    ms = [as_partition(m) for m in members]
    if not memo:
        return _multi_expand(ms, max_rows, cap)
    key = tuple(sorted((m.parts for m in ms), reverse=True))
    return dict(_multi_expand_cached(key, max_rows, cap))


def multi_lr_coefficient(family: PartitionFamily | Iterable, nu, cap: int = DEFAULT_LR_CAP) -> int:
    nu = as_partition(nu)
    members = list(family.members if isinstance(family, PartitionFamily) else family)
    if sum(as_partition(m).size for m in members) != nu.size:
        return 0
    return multi_lr_expand(members, max_rows=nu.rows, cap=cap).get(nu, 0)


def _sort_key(p: Partition) -> tuple[int, ...]:
    return tuple(-x for x in p.parts)


@dataclass(frozen=True)
class LRProductSet:
    family: PartitionFamily
    d: int
    members: tuple[Partition, ...]
    coefficients: Mapping[Partition, int]

    def __contains__(self, nu: Partition) -> bool:
        return nu in self.coefficients

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "d": self.d,
            "members": [{"parts": nu.to_json(), "coefficient": self.coefficients[nu]} for nu in self.members],
        }


def product_set(family: PartitionFamily, d: int, cap: int = DEFAULT_LR_CAP) -> LRProductSet:
    """All nu with at most d rows occurring in the iterated product of the family."""
    coeffs = multi_lr_expand(family.members, max_rows=d, cap=cap)
    coeffs = {nu: c for nu, c in coeffs.items() if nu.rows <= d and c > 0}
    members = tuple(sorted(coeffs, key=_sort_key))
    return LRProductSet(family, d, members, coeffs)


def weyl_bounds(lam, mu, d: int) -> list[tuple[int, int]]:
    """Per-row bounds (lower_k, upper_k), k = 1..d, on any nu with at most d rows in lam * mu."""
    lam, mu = as_partition(lam), as_partition(mu)
    out = []
    for k in range(1, d + 1):
        lower = max(lam.part(i) + mu.part(k + d - i) for i in range(k, d + 1))
        upper = min(lam.part(i) + mu.part(k + 1 - i) for i in range(1, k + 1))
        out.append((lower, upper))
    return out


def anti_diagonal_max(lam: Partition, mu: Partition, d: int) -> int:
    """max over i + j = d + 1 of lam_i + mu_j."""
    return max(lam.part(i) + mu.part(d + 1 - i) for i in range(1, d + 1))


def no_conjugates_pair(lam, mu, d: int) -> bool:
    """For self-conjugate lam and mu: whether the rows-bounded product avoids conjugate pairs."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not (lam.is_self_conjugate() and mu.is_self_conjugate()):
        raise HypothesisViolated(f"both partitions must be self-conjugate, got {lam} and {mu}")
    return anti_diagonal_max(lam, mu, d) > d
