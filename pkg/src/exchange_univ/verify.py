"""Property sweeps shared by the ``verify`` command and the test suite."""
from __future__ import annotations

import random
from typing import Iterator

from .lr import lr_coefficient, lr_expand, no_conjugates_pair, product_set, weyl_bounds
from .orthogonal import CheckReport, verify_structure
from .partitions import Partition, PartitionFamily, is_hook, partitions_of, partwise_sum
from .tableaux import dimension, weyl_dimension
from .universality import hooks_by_arithmetic, is_nontrivial, is_universal, pair_universal, scan_product_set


def _count(name: str, violations: list, checked: int) -> CheckReport:
    shown = "; ".join(map(str, violations[:5]))
    details = f"{checked} cases checked" + (f"; first violations: {shown}" if violations else "")
    return CheckReport(name, not violations, float(len(violations)), 0.0, details)


def all_partitions(max_size: int, min_size: int = 0, max_rows: int | None = None) -> list[Partition]:
    return [p for n in range(min_size, max_size + 1) for p in partitions_of(n, max_rows=max_rows)]


def lr_triples(max_size: int) -> Iterator[tuple[Partition, Partition, dict[Partition, int]]]:
    """Every (lam, mu) with |lam| + |mu| <= max_size together with its full expansion."""
    for n in range(max_size + 1):
        for a in range(n + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(n - a):
                    yield lam, mu, lr_expand(lam, mu, cap=max(max_size, 1))


def lr_symmetry_sweep(max_size: int) -> CheckReport:
    """c(lam, mu; nu) = c(mu, lam; nu) = c(lam', mu'; nu') over every triple up to max_size."""
    bad, checked = [], 0
    for lam, mu, expansion in lr_triples(max_size):
        swapped = lr_expand(mu, lam, cap=max(max_size, 1))
        conj = lr_expand(lam.conjugate, mu.conjugate, cap=max(max_size, 1))
        for nu in partitions_of(lam.size + mu.size):
            c = expansion.get(nu, 0)
            checked += 1
            if c != swapped.get(nu, 0) or c != conj.get(nu.conjugate, 0):
                bad.append((str(lam), str(mu), str(nu)))
    return _count("lr-symmetry", bad, checked)


def lr_support_sweep(max_size: int) -> CheckReport:
    """Every constituent contains both factors."""
    bad, checked = [], 0
    for lam, mu, expansion in lr_triples(max_size):
        for nu in expansion:
            checked += 1
            if not (nu.contains(lam) and nu.contains(mu)):
                bad.append((str(lam), str(mu), str(nu)))
    return _count("lr-support-bound", bad, checked)


def cartan_sweep(max_size: int, samples: int | None = None, seed: int = 0) -> CheckReport:
    """c(lam, mu; lam + mu) = 1, exhaustively or on a seeded random sample of pairs."""
    pairs = [(lam, mu) for n in range(max_size + 1) for a in range(n + 1)
             for lam in partitions_of(a) for mu in partitions_of(n - a)]
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)
    bad = [(str(l), str(m)) for l, m in pairs if lr_coefficient(l, m, partwise_sum(l, m)) != 1]
    return _count("lr-cartan", bad, len(pairs))


def weyl_bounds_sweep(max_size: int) -> CheckReport:
    """Every nu with exactly d rows in lam * mu obeys the Weyl bounds at that d."""
    bad, checked = [], 0
    for lam, mu, expansion in lr_triples(max_size):
        for nu in expansion:
            d = nu.rows
            if lam.rows > d or mu.rows > d or d == 0:
                continue
            checked += 1
            for k, (lo, hi) in enumerate(weyl_bounds(lam, mu, d), start=1):
                if not lo <= nu.part(k) <= hi:
                    bad.append((str(lam), str(mu), str(nu), k))
                    break
    return _count("weyl-bounds", bad, checked)


def schur_weyl_identity(max_n: int, ds=(2, 3, 4)) -> CheckReport:
    """sum over lam of dim(lam) * weyl_dim(lam, d) equals d**n."""
    bad, checked = [], 0
    for d in ds:
        for n in range(1, max_n + 1):
            checked += 1
            total = sum(dimension(l) * weyl_dimension(l, d) for l in partitions_of(n, max_rows=d))
            if total != d**n:
                bad.append((n, d, total))
    return _count("schur-weyl-dimension", bad, checked)


def nontrivial_pairs(max_total: int, d: int) -> Iterator[tuple[Partition, Partition]]:
    ps = [p for p in all_partitions(max_total, 3, max_rows=d) if is_nontrivial(p)]
    for i, a in enumerate(ps):
        for b in ps[i:]:
            if a.size + b.size <= max_total:
                yield a, b


def pair_cross_validation(max_total: int, ds=(3, 4)) -> CheckReport:
    """Closed-form pair decision against a literal scan of the product set."""
    bad, checked = [], 0
    for d in ds:
        for a, b in nontrivial_pairs(max_total, d):
            checked += 1
            arith = pair_universal(a, b, d).universal
            scanned, _, _ = scan_product_set([a, b], d)
            if arith != scanned:
                bad.append((str(a), str(b), d))
    return _count("pair-cross-validation", bad, checked)


def hook_arithmetic_sweep(max_total: int, ds=(3, 4)) -> CheckReport:
    bad, checked = [], 0
    for d in ds:
        for a, b in nontrivial_pairs(max_total, d):
            checked += 1
            literal = any(is_hook(nu) for nu in product_set(PartitionFamily([a, b], d=d), d))
            if literal != hooks_by_arithmetic([a, b], d):
                bad.append((str(a), str(b), d))
    return _count("hook-arithmetic", bad, checked)


def no_conjugates_sweep(max_total: int, ds=(3, 4)) -> CheckReport:
    bad, checked = [], 0
    for d in ds:
        for a, b in nontrivial_pairs(max_total, d):
            if not (a.is_self_conjugate() and b.is_self_conjugate()):
                continue
            checked += 1
            pset = product_set(PartitionFamily([a, b], d=d), d)
            literal = not any(nu.is_self_conjugate() or nu.conjugate in pset for nu in pset)
            if literal != no_conjugates_pair(a, b, d):
                bad.append((str(a), str(b), d))
    return _count("no-conjugates-arithmetic", bad, checked)


def families_up_to(max_total: int, d: int, min_members: int = 2) -> list[tuple[Partition, ...]]:
    """Sorted multisets of nontrivial partitions with at most d rows and bounded total size."""
    parts = sorted((p for p in all_partitions(max_total, 3, max_rows=d) if is_nontrivial(p)),
                   key=lambda p: (p.size, p.parts))
    out: list[tuple[Partition, ...]] = []

    def rec(start: int, acc: list[Partition], total: int) -> None:
        if len(acc) >= min_members:
            out.append(tuple(acc))
        for i in range(start, len(parts)):
            p = parts[i]
            if total + p.size > max_total:
                break
            acc.append(p)
            rec(i, acc, total + p.size)
            acc.pop()

    rec(0, [], 0)
    return out


def upward_closure_sweep(max_total: int, d: int) -> CheckReport:
    """No non-universal family may contain a universal subfamily of two or more members.

    Checking subfamilies one member smaller suffices, because the sweep covers them too.
    Verdicts come from a literal product-set scan, and the engine must agree with it.
    """
    fams = families_up_to(max_total, d)
    literal = {f: scan_product_set(list(f), d)[0] for f in fams}
    bad = []
    for f, ok in literal.items():
        if ok != is_universal(list(f), d):
            bad.append(("engine disagrees", ";".join(map(str, f))))
        if not ok and len(f) > 2:
            for i in range(len(f)):
                if literal[f[:i] + f[i + 1:]]:
                    bad.append(("closure", ";".join(map(str, f))))
                    break
    return _count("upward-closure", bad, len(fams))


def run_verification(max_n: int, tol: float = 1e-9, seed: int = 0) -> list[CheckReport]:
    """All sweeps at the given scale, sorted by check name."""
    reports: list[CheckReport] = []
    for p in all_partitions(max_n, 1):
        for r in verify_structure(p, tol=tol, product_tol=10 * tol, cap=max(max_n, 1)):
            reports.append(CheckReport(f"{r.name}{p}", r.passed, r.max_violation, r.tolerance, r.details))
    reports.append(lr_symmetry_sweep(max_n))
    reports.append(lr_support_sweep(max_n))
    reports.append(cartan_sweep(max_n, samples=200, seed=seed))
    reports.append(weyl_bounds_sweep(max_n))
    reports.append(schur_weyl_identity(max_n))
    reports.append(pair_cross_validation(max_n))
    reports.append(hook_arithmetic_sweep(max_n))
    reports.append(no_conjugates_sweep(max_n))
    reports.append(upward_closure_sweep(max_n, 3))
    return sorted(reports, key=lambda r: r.name)
