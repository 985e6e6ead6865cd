"""Command-line front end.

Exit codes: 0 success (or universal), 1 internal error or failed verification,
2 rejected input, 3 not universal.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ExchangeUnivError
from .lr import lr_coefficient, lr_expand, product_set
from .orthogonal import (
    Permutation,
    adjacent_matrix,
    alternating_intertwiner,
    jucys_murphy_matrix,
    permutation_matrix,
)
from .partitions import PartitionFamily, classify, parse_partition
from .schur_weyl import collective_noise_check, efficiency_table, physical_basis_map
from .tableaux import dimension, enumerate_standard
from .universality import ancilla_suggestion, cartan_target, family_universal, minimal_universal_families
from .verify import run_verification

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_REJECTED = 2
EXIT_NOT_UNIVERSAL = 3

log = logging.getLogger("exchange_univ")


@dataclass(frozen=True)
class CliConfig:
    tolerance: float = 1e-9
    enumeration_cap: int = 20
    lr_cap: int = 30
    output: str = "text"
    time_budget_ms: int = 300_000
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.tolerance < 1e-3:
            raise ValueError(f"tolerance {self.tolerance} must lie in (0, 1e-3)")
        for name in ("enumeration_cap", "lr_cap", "time_budget_ms"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be text or json, not {self.output!r}")

    @property
    def json(self) -> bool:
        return self.output == "json"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep usage errors on exit code 2 without a traceback
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_REJECTED)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="exchange-univ", description="Exchange-only universality of partition families.")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--tol", type=float, default=1e-9, help="numerical tolerance")
    p.add_argument("--enumeration-cap", type=int, default=20)
    p.add_argument("--lr-cap", type=int, default=30)
    p.add_argument("--time-budget-ms", type=int, default=300_000)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    p.add_argument("--sort", action="store_true", help="accept partitions with rising parts by sorting them")
    p.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **k: _add(*a, parents=[common], **k)  # type: ignore[method-assign]

    for name in ("dim", "conj", "classify"):
        s = sub.add_parser(name)
        s.add_argument("partition")
    s = sub.add_parser("lr")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("nu", nargs="?")
    for name in ("product-set", "universal", "ancilla"):
        s = sub.add_parser(name)
        s.add_argument("--family", required=True, help='semicolon-separated, e.g. "[2,1];[2,1]"')
        s.add_argument("--d", type=int, required=name == "product-set")
    s = sub.add_parser("cartan")
    s.add_argument("--family", required=True)
    s = sub.add_parser("minimal-families")
    s.add_argument("--d", type=int, required=True)
    s = sub.add_parser("efficiency-table")
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=13)
    s.add_argument("--d", default="2,3,4", help="comma-separated list")
    s = sub.add_parser("repn")
    s.add_argument("partition")
    s.add_argument("--perm", help="cycle notation, e.g. (1 3)(2 4)")
    s.add_argument("--jm", type=int)
    s.add_argument("--intertwiner", action="store_true")
    s.add_argument("--precision", type=int, default=6)
    s = sub.add_parser("basis-map")
    s.add_argument("partition")
    s = sub.add_parser("verify")
    s.add_argument("--max-n", type=int, default=6)
    return p


def _emit(cfg: CliConfig, payload, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload))
    else:
        print(text)


def _matrix_text(entries: np.ndarray, precision: int) -> str:
    return np.array2string(entries, precision=precision, suppress_small=True, max_line_width=200)


def _family(args, cfg: CliConfig) -> PartitionFamily:
    fam = PartitionFamily.parse(args.family)
    d = getattr(args, "d", None)
    return PartitionFamily(fam.members, d=d) if d is not None else fam


def _cmd(args, cfg: CliConfig) -> int:
    part = lambda text: parse_partition(text, sort=args.sort)  # noqa: E731
    cmd = args.command

    if cmd == "dim":
        lam = part(args.partition)
        d = dimension(lam)
        _emit(cfg, {"partition": lam.to_json(), "dimension": d}, str(d))
    elif cmd == "conj":
        lam = part(args.partition)
        _emit(cfg, {"partition": lam.to_json(), "conjugate": lam.conjugate.to_json()}, str(lam.conjugate))
    elif cmd == "classify":
        c = classify(part(args.partition))
        payload = {"kind": c.kind, "self_conjugate": c.self_conjugate, "rows": c.rows,
                   "cols": c.cols, "diagonal_length": c.diagonal_length}
        _emit(cfg, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
    elif cmd == "lr":
        lam, mu = part(args.lam), part(args.mu)
        if args.nu is not None:
            c = lr_coefficient(lam, mu, part(args.nu))
            _emit(cfg, {"coefficient": c}, str(c))
        else:
            exp = lr_expand(lam, mu, cap=cfg.lr_cap)
            mapping = {str(nu): c for nu, c in sorted(exp.items(), key=lambda kv: kv[0], reverse=True)}
            print(json.dumps({"expansion": mapping} if cfg.json else mapping))
    elif cmd == "product-set":
        fam = _family(args, cfg)
        ps = product_set(fam, args.d, cap=cfg.lr_cap)
        _emit(cfg, ps.to_json(), "\n".join(f"{nu} {ps.coefficients[nu]}" for nu in ps.members))
    elif cmd == "universal":
        fam = _family(args, cfg)
        v = family_universal(fam, fam.d, cap=cfg.lr_cap)
        lines = [f"{v.decision} (d={v.d})"] + [f"  {r}: {why}" for r, why in v.rule_trace]
        if v.witness_partitions:
            lines.append("  witnesses: " + ", ".join(map(str, v.witness_partitions)))
        payload = {"family": fam.to_json(), **v.to_json()}
        _emit(cfg, payload, "\n".join(lines))
        return EXIT_OK if v.universal else EXIT_NOT_UNIVERSAL
    elif cmd == "minimal-families":
        res = minimal_universal_families(args.d, time_budget_ms=cfg.time_budget_ms)
        text = "\n".join("(" + ",".join(map(str, f)) + ")" for f in res.families)
        _emit(cfg, res.to_json(), text)
    elif cmd == "efficiency-table":
        ds = [int(x) for x in args.d.split(",") if x.strip()]
        rows = efficiency_table(range(args.n_min, args.n_max + 1), ds)
        if cfg.json:
            print(json.dumps({"rows": [r.to_json() for r in rows]}))
        else:
            print(f"{'n':>3} {'d':>2} {'partition':<14} {'D':>7} {'E':>5}")
            for r in rows:
                print(f"{r.n:>3} {r.d:>2} {str(r.best_partition):<14} {r.dim:>7} {r.efficiency:>5.2f}")
    elif cmd == "repn":
        lam = part(args.partition)
        basis = enumerate_standard(lam, cap=cfg.enumeration_cap)
        mats: dict[str, np.ndarray] = {}
        if args.perm is not None:
            perm = Permutation.parse_cycles(args.perm, lam.size)
            mats[f"perm {args.perm}"] = permutation_matrix(lam, perm, cfg.enumeration_cap).entries
        if args.jm is not None:
            mats[f"jm {args.jm}"] = jucys_murphy_matrix(lam, args.jm, cfg.enumeration_cap).entries
        if args.intertwiner:
            mats["intertwiner"] = alternating_intertwiner(lam, cfg.enumeration_cap).entries
        if not mats:
            for i in range(1, lam.size):
                mats[f"s{i}"] = adjacent_matrix(lam, i, cfg.enumeration_cap).entries
        payload = {"shape": lam.to_json(), "basis": [t.to_json() for t in basis],
                   "matrices": {k: v.tolist() for k, v in mats.items()}}
        text = "basis: " + " ".join(map(str, basis)) + "\n" + "\n".join(
            f"{k}:\n{_matrix_text(v, args.precision)}" for k, v in mats.items())
        _emit(cfg, payload, text)
    elif cmd == "basis-map":
        bmap = physical_basis_map(part(args.partition))
        check = collective_noise_check(bmap, cfg.tolerance)
        lines = []
        for (a, m) in sorted(bmap.vectors, key=lambda k: (-k[1], k[0])):
            terms = " ".join(f"{c:+.6f}|{k}>" for k, c in bmap.terms(a, m))
            lines.append(f"{bmap.tableaux[a]} m={m}: {terms}")
        lines.append(f"collective bit flip: {'pass' if check.passed else 'FAIL'}")
        _emit(cfg, {**bmap.to_json(), "collective_noise": check.to_json()}, "\n".join(lines))
    elif cmd == "ancilla":
        fam = _family(args, cfg)
        anc = ancilla_suggestion(fam, fam.d)
        _emit(cfg, {"family": fam.to_json(), "d": fam.d, "ancilla": anc.to_json()}, str(anc))
    elif cmd == "cartan":
        fam = _family(args, cfg)
        nu, v = cartan_target(fam)
        _emit(cfg, {"family": fam.to_json(), "target": nu.to_json(), **v.to_json()}, f"{nu} {v.decision}")
    elif cmd == "verify":
        if args.max_n > cfg.enumeration_cap:
            raise ExchangeUnivError(f"--max-n {args.max_n} exceeds the enumeration cap {cfg.enumeration_cap}")
        reports = run_verification(args.max_n, tol=cfg.tolerance, seed=cfg.seed)
        failed = [r for r in reports if not r.passed]
        if cfg.json:
            print(json.dumps({"passed": not failed, "checks": [r.to_json() for r in reports]}))
        else:
            for r in reports:
                print(f"{'PASS' if r.passed else 'FAIL'} {r.name} max_violation={r.max_violation:.3g} tol={r.tolerance:.3g} {r.details}")
            print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
        return EXIT_INTERNAL if failed else EXIT_OK
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        cfg = CliConfig(tolerance=args.tol, enumeration_cap=args.enumeration_cap, lr_cap=args.lr_cap,
                        output="json" if args.json else "text", time_budget_ms=args.time_budget_ms, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    try:
        return _cmd(args, cfg)
    except ExchangeUnivError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except Exception:  # noqa: BLE001
        log.exception("internal error")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
