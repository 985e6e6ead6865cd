"""Decision procedures for exchange-only universality of partition families."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .errors import BudgetExceeded, RowBound, SingleMember, TrivialPartition
from .lr import DEFAULT_LR_CAP, anti_diagonal_max, product_set
from .orthogonal import CheckReport
from .partitions import Partition, PartitionFamily, as_partition, is_hook, is_proper, is_trivial, partitions_of, partwise_sum
from .tableaux import dimension

UNIVERSAL = "universal"
NOT_UNIVERSAL = "not-universal"

# rule identifiers recorded in verdict traces
R_SINGLE = "single-partition"
R_TWO_ROWS = "two-row-bound"
R_PAIR = "pair-arithmetic"
R_PAIR_HOOK = "pair-hook-condition"
R_PAIR_CONJ = "pair-conjugate-condition"
R_SMALL_DIM = "small-product-dimension"
R_HOOK = "hook-in-product"
R_NON_SELF_CONJ = "non-self-conjugate"
R_MANY = "many-members"
R_LARGE = "large-total-size"
R_SCAN = "product-set-scan"
R_CARTAN = "cartan-target"


@dataclass(frozen=True)
class UniversalityVerdict:
    decision: str
    d: int
    rule_trace: tuple[tuple[str, str], ...]
    witness_partitions: tuple[Partition, ...] | None = None

    @property
    def universal(self) -> bool:
        return self.decision == UNIVERSAL

    @property
    def rules(self) -> list[str]:
        return [r for r, _ in self.rule_trace]

    def to_json(self) -> dict:
        out = {
            "decision": self.decision,
            "d": self.d,
            "rule_trace": [{"rule": r, "reason": why} for r, why in self.rule_trace],
        }
        if self.witness_partitions is not None:
            out["witness_partitions"] = [w.to_json() for w in self.witness_partitions]
        return out


class _Trace:
    def __init__(self, d: int):
        self.d = d
        self.steps: list[tuple[str, str]] = []

    def note(self, rule: str, reason: str) -> "_Trace":
        self.steps.append((rule, reason))
        return self

    def done(self, universal: bool, witnesses: Iterable[Partition] | None = None) -> UniversalityVerdict:
        w = tuple(witnesses) if witnesses is not None else None
        return UniversalityVerdict(UNIVERSAL if universal else NOT_UNIVERSAL, self.d, tuple(self.steps), w)


def is_nontrivial(p: Partition) -> bool:
    return p.size > 0 and not is_trivial(p)


def single_universal_bool(mu: Partition) -> bool:
    m = mu.size
    if mu[1] > 1 and mu != mu.conjugate:
        return True
    if mu == Partition.of(2, 2):
        return True
    return len(mu) <= 1 or mu.cols == 1 or mu == Partition((m - 1, 1)) or mu == Partition((2,) + (1,) * (m - 2))


def single_universal(mu: Partition | Sequence[int]) -> UniversalityVerdict:
    """Universality of a single partition on itself."""
    mu = as_partition(mu)
    if mu.size == 0:
        raise ValueError("the empty partition has no universality question")
    ok = single_universal_bool(mu)
    if ok:
        if mu[1] > 1 and mu != mu.conjugate:
            why = f"{mu} is proper and differs from its conjugate"
        elif mu == Partition.of(2, 2):
            why = "[2,2] carries a two-dimensional representation"
        else:
            why = f"{mu} is one-dimensional or a shallow hook of its size"
    elif mu.is_self_conjugate():
        why = f"{mu} is self-conjugate so its image preserves a bilinear form"
    else:
        why = f"{mu} is a deep hook, whose image is an orthogonal group"
    return _Trace(mu.rows).note(R_SINGLE, why).done(ok)


def _validate(members: Sequence[Partition], d: int) -> None:
    for m in members:
        if not is_nontrivial(m):
            raise TrivialPartition(f"{m} is one-dimensional; families must consist of nontrivial partitions")
        if m.rows > d:
            raise RowBound(f"{m} has {m.rows} rows, more than d={d}")


def pair_universal(lam, mu, d: int, witnesses: bool = False) -> UniversalityVerdict:
    """Closed-form decision for a two-member family."""
    lam, mu = as_partition(lam), as_partition(mu)
    _validate([lam, mu], d)
    return _pair(lam, mu, d, _Trace(d), DEFAULT_LR_CAP if witnesses else -1)


def _pair(lam: Partition, mu: Partition, d: int, tr: _Trace, cap: int = DEFAULT_LR_CAP) -> UniversalityVerdict:
    tr.note(R_PAIR, f"two-member family ({lam},{mu}) at d={d}")
    ok = True
    if max(lam[1], mu[1]) == 1:
        total = lam.rows + mu.rows
        if total <= d + 1:
            ok = False
            tr.note(R_PAIR_HOOK, f"both are hooks and their row counts sum to {total} <= d+1 = {d + 1}, so the product holds a hook")
        else:
            tr.note(R_PAIR_HOOK, f"both are hooks but their row counts sum to {total} > d+1, so no hook appears")
    if lam.is_self_conjugate() and mu.is_self_conjugate():
        m = anti_diagonal_max(lam, mu, d)
        if m <= d:
            ok = False
            tr.note(R_PAIR_CONJ, f"self-conjugate family and the anti-diagonal maximum {m} <= d, so conjugates appear in the product set")
        else:
            tr.note(R_PAIR_CONJ, f"self-conjugate family but the anti-diagonal maximum {m} > d, so no conjugates appear")
    return tr.done(ok, None if ok else _witnesses([lam, mu], d, cap))


def _witnesses(members: Sequence[Partition], d: int, cap: int) -> tuple[Partition, ...] | None:
    """Blocking partitions from the product set, when it is small enough to compute."""
    if cap < 0 or sum(m.size for m in members) > cap:
        return None
    return tuple(scan_product_set(members, d, cap=cap)[1])


def hooks_by_arithmetic(members: Sequence[Partition], d: int) -> bool:
    """Whether the rows-bounded product of nontrivial members contains a hook."""
    return max(m[1] for m in members) == 1 and sum(m.rows for m in members) < len(members) + d


def family_self_conjugate(members: Sequence[Partition]) -> bool:
    """Member-wise self-conjugacy, the notion used by the decision procedures."""
    return all(m.is_self_conjugate() for m in members)


def scan_product_set(members: Sequence[Partition], d: int, cap: int = DEFAULT_LR_CAP) -> tuple[bool, list[Partition], str]:
    """Literal check on the rows-bounded product set: (universal, blocking partitions, reason)."""
    fam = PartitionFamily(members, d=d)
    pset = product_set(fam, d, cap=cap)
    hooks = [nu for nu in pset if is_hook(nu)]
    conj: list[Partition] = []
    if family_self_conjugate(members):
        conj = [nu for nu in pset if nu.is_self_conjugate() or nu.conjugate in pset]
    blockers = sorted(set(hooks) | set(conj), reverse=True)
    if hooks:
        why = f"product set holds hooks {', '.join(map(str, hooks))}"
        if conj:
            why += f" and conjugates {', '.join(map(str, conj))}"
        return False, blockers, why
    if not family_self_conjugate(members):
        return True, [], f"{len(pset)} partitions, no hooks, family not self-conjugate"
    if conj:
        return False, blockers, f"self-conjugate family and product set holds conjugates {', '.join(map(str, conj))}"
    return True, [], f"{len(pset)} partitions, no hooks and no conjugates"


def family_universal(family: PartitionFamily | Iterable, d: int | None = None, cap: int = DEFAULT_LR_CAP,
                     witnesses: bool = True) -> UniversalityVerdict:
    """Decide d-universality, trying cheap arithmetic rules before scanning the product set.

    Negative verdicts list blocking partitions of the product set unless ``witnesses`` is off.
    """
    wcap = cap if witnesses else -1
    if not isinstance(family, PartitionFamily):
        family = PartitionFamily(list(family), d=d)
    if d is None:
        d = family.d
    members = list(family.members)
    if not members:
        raise ValueError("empty family")
    _validate(members, d)
    tr = _Trace(d)
    n_members = len(members)
    if n_members == 1:
        v = single_universal(members[0])
        return UniversalityVerdict(v.decision, d, v.rule_trace, None)
    if d <= 2:
        return tr.note(R_TWO_ROWS, "families of at most two rows are always universal").done(True)
    if n_members == 2:
        return _pair(members[0], members[1], d, tr, wcap)
    dims = 1
    for m in members:
        dims *= dimension(m)
    if dims <= 2:
        return tr.note(R_SMALL_DIM, f"product dimension {dims} <= 2").done(True)
    if hooks_by_arithmetic(members, d):
        rows = sum(m.rows for m in members)
        tr.note(R_HOOK, f"all members are hooks with {rows} rows in total < N + d = {n_members + d}")
        return tr.done(False, _witnesses(members, d, wcap))
    tr.note(R_HOOK, "no hook can appear in the product set")
    if not family_self_conjugate(members):
        return tr.note(R_NON_SELF_CONJ, "some member differs from its conjugate").done(True)
    if 3 * n_members > d * d:
        return tr.note(R_MANY, f"N = {n_members} exceeds d^2/3").done(True)
    total = family.total_size
    if total > d * d:
        return tr.note(R_LARGE, f"total size {total} > d^2 = {d * d}").done(True)
    ok, blockers, why = scan_product_set(members, d, cap=cap)
    tr.note(R_SCAN, why)
    return tr.done(ok, None if ok else blockers)


def is_universal(members: Sequence[Partition], d: int) -> bool:
    return family_universal(PartitionFamily(members, d=d), d, witnesses=False).universal


@dataclass(frozen=True)
class MinimalFamilySet:
    d: int
    families: tuple[tuple[Partition, ...], ...]
    checked: int = 0

    def __len__(self) -> int:
        return len(self.families)

    def __contains__(self, fam) -> bool:
        return tuple(sorted(as_partition(m) for m in fam)) in set(tuple(sorted(f)) for f in self.families)

    def to_json(self) -> dict:
        return {"d": self.d, "families": [[m.to_json() for m in f] for f in self.families]}


def self_conjugate_candidates(d: int) -> list[Partition]:
    """Nontrivial self-conjugate partitions with at most d rows, smallest first."""
    out = []
    for n in range(3, d * d + 1):
        for p in partitions_of(n, max_rows=d, max_part=d):
            if p.is_self_conjugate() and is_nontrivial(p):
                out.append(p)
    return sorted(out, key=lambda p: (p.size, p.parts))


def _family_key(f: Sequence[Partition]) -> tuple:
    return (len(f), tuple((m.size, m.parts) for m in f))


def minimal_universal_families(d: int, time_budget_ms: int | None = 300_000) -> MinimalFamilySet:
    """Minimal d-universal families of several nontrivial self-conjugate partitions.

    A family is minimal when it is universal and every subfamily one member smaller is
    not. By upward closure that is the same as no universal subfamily of two or more.
    The search climbs one member at a time and stops once every family at a level is universal.
    """
    start = time.monotonic()
    cands = self_conjugate_candidates(d)
    rank = {p: i for i, p in enumerate(cands)}
    minimal: list[tuple[Partition, ...]] = []
    checked = 0

    def sort_f(f: Iterable[Partition]) -> tuple[Partition, ...]:
        return tuple(sorted(f, key=lambda p: rank[p]))

    def budget() -> None:
        if time_budget_ms is not None and (time.monotonic() - start) * 1000 > time_budget_ms:
            raise BudgetExceeded(f"minimal family search for d={d} exceeded {time_budget_ms} ms")

    level = [sort_f(f) for f in combinations_with_replacement(cands, 2)]
    while level:
        non_universal: set[tuple[Partition, ...]] = set()
        for f in level:
            budget()
            checked += 1
            if is_universal(list(f), d):
                minimal.append(f)
            else:
                non_universal.add(f)
        nxt: set[tuple[Partition, ...]] = set()
        for f in non_universal:
            top = rank[f[-1]]
            for c in cands[top:]:
                g = sort_f(f + (c,))
                if g in nxt:
                    continue
                if all(sort_f(g[:i] + g[i + 1:]) in non_universal for i in range(len(g))):
                    nxt.add(g)
        level = sorted(nxt, key=_family_key)
    return MinimalFamilySet(d, tuple(sorted(minimal, key=_family_key)), checked)


ANCILLA_CANDIDATES = (Partition.of(2), Partition.of(2, 2), Partition.of(3, 2))


def _ancilla_works(members: Sequence[Partition], anc: Partition, d: int) -> bool:
    if d < anc.rows:
        return False
    if is_trivial(anc):
        # a one-row ancilla breaks self-conjugacy; it suffices once a proper member rules out hooks
        return any(is_proper(m) for m in members)
    return is_universal(list(members) + [anc], d)


def ancilla_suggestion(family: PartitionFamily | Iterable, d: int | None = None) -> Partition:
    """Smallest of [2], [2,2], [3,2] whose addition makes the family universal."""
    if not isinstance(family, PartitionFamily):
        family = PartitionFamily(list(family), d=d)
    if d is None:
        d = max(family.d, 2)
    members = list(family.members)
    _validate(members, d)
    for anc in ANCILLA_CANDIDATES:
        if _ancilla_works(members, anc, d):
            return anc
    raise AssertionError("[3,2] always renders a family universal")


def cartan_target(family: PartitionFamily | Iterable) -> tuple[Partition, UniversalityVerdict]:
    """Part-wise sum of the members together with the verdict for universality on it."""
    members = list(family.members if isinstance(family, PartitionFamily) else (as_partition(m) for m in family))
    if len(members) < 2:
        raise SingleMember("the Cartan target needs at least two members")
    for m in members:
        if not is_nontrivial(m):
            raise TrivialPartition(f"{m} is one-dimensional")
    nu = members[0]
    for m in members[1:]:
        nu = partwise_sum(nu, m)
    proper = is_proper(nu)
    distinct = nu != nu.conjugate or not family_self_conjugate(members)
    tr = _Trace(nu.rows)
    tr.note(R_CARTAN, f"part-wise sum {nu}: proper={proper}, differs from conjugate or family not self-conjugate={distinct}")
    return nu, tr.done(proper and distinct)


def upward_closed_check(family: PartitionFamily | Iterable, d: int) -> CheckReport:
    """If some subfamily of two or more members is universal, the family must be too."""
    members = list(family.members if isinstance(family, PartitionFamily) else (as_partition(m) for m in family))
    whole = is_universal(members, d)
    violations = 0
    witness = ""
    if not whole:
        for k in range(2, len(members)):
            for idx in combinations(range(len(members)), k):
                sub = [members[i] for i in idx]
                if is_universal(sub, d):
                    violations += 1
                    witness = witness or ";".join(map(str, sub))
    details = f"family universal={whole}" + (f"; universal subfamily {witness}" if witness else "")
    return CheckReport("upward-closure", violations == 0, float(violations), 0.0, details)
