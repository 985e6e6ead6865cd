"""Coding efficiency, isotypic bookkeeping and explicit qubit-basis images of tableaux."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import Degenerate, DegreeMismatch, SizeLimit
from .lr import multi_lr_coefficient
from .orthogonal import CheckReport, adjacent_matrix
from .partitions import Partition, PartitionFamily, as_partition, partitions_of
from .tableaux import StandardTableau, dimension, enumerate_standard
from .universality import single_universal_bool

MAX_QUBITS = 10
NULL_SPACE_THRESHOLD = 1e-8


def coding_efficiency(d: int, lam: Partition | Sequence[int]) -> float:
    """log_d(dim lam) / |lam|: logical information carried per physical d-state system."""
    lam = as_partition(lam)
    if lam.size == 0:
        raise ValueError("efficiency of the empty partition is undefined")
    return math.log(dimension(lam)) / math.log(d) / lam.size


@dataclass(frozen=True)
class EfficiencyRow:
    n: int
    d: int
    best_partition: Partition
    dim: int
    efficiency: float

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "partition": self.best_partition.to_json(),
                "dim": self.dim, "efficiency": self.efficiency}


def best_encoding(n: int, d: int) -> EfficiencyRow:
    """Largest-dimension partition of n with at most d rows that is universal on itself.

    A shape and its conjugate always tie, so ties are broken by conjugate class: each
    class is represented by its lexicographically larger member, the smallest (most
    balanced) representative wins, and within that class the representative itself.
    """
    candidates = [lam for lam in partitions_of(n, max_rows=d) if single_universal_bool(lam)]
    best_dim = max(dimension(lam) for lam in candidates)  # [n] is always admissible

    def tie_key(lam: Partition) -> tuple:
        rep = max(lam, lam.conjugate)
        return rep, lam != rep

    best = min((lam for lam in candidates if dimension(lam) == best_dim), key=tie_key)
    return EfficiencyRow(n, d, best, best_dim, coding_efficiency(d, best))


def efficiency_table(n_range: Iterable[int], d_list: Iterable[int]) -> list[EfficiencyRow]:
    d_list = list(d_list)
    rows = []
    for n in n_range:
        if n > 20:
            raise SizeLimit(f"n={n} is above the supported table range")
        for d in d_list:
            rows.append(best_encoding(n, d))
    return rows


def isotypic_dimension(family: PartitionFamily | Iterable, nu: Partition | Sequence[int]) -> int:
    """Product of member dimensions times the iterated LR coefficient."""
    members = list(family.members if isinstance(family, PartitionFamily) else (as_partition(m) for m in family))
    nu = as_partition(nu)
    if sum(m.size for m in members) != nu.size:
        raise DegreeMismatch(f"{nu} has size {nu.size}, family has total size {sum(m.size for m in members)}")
    dims = math.prod(dimension(m) for m in members)
    return dims * multi_lr_coefficient(members, nu)


# --- qubit register helpers -------------------------------------------------
# Computational basis state b1 b2 ... bn has index int("b1...bn", 2): qubit 1 is most significant.


def bitstring(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def swap_qubits(v: np.ndarray, i: int, n: int) -> np.ndarray:
    """Exchange physical positions i and i+1 (one-based)."""
    t = v.reshape((2,) * n)
    return np.swapaxes(t, i - 1, i).reshape(-1)


def sz_diagonal(n: int) -> np.ndarray:
    ones = np.array([bin(k).count("1") for k in range(2**n)])
    return (n - 2 * ones) / 2.0


def lower(v: np.ndarray, n: int) -> np.ndarray:
    """Collective lowering: the sum over positions of the 0 -> 1 flip."""
    out = np.zeros_like(v)
    idx = np.arange(2**n)
    for pos in range(n):
        bit = 1 << (n - 1 - pos)
        zero = (idx & bit) == 0
        out[idx[zero] | bit] += v[zero]
    return out


def flip_all(v: np.ndarray) -> np.ndarray:
    """Global bit flip: index k goes to its complement, which reverses the vector."""
    return v[::-1].copy()


def _restricted_jm(n: int, k: int, states: np.ndarray) -> np.ndarray:
    """Matrix of sum_{i<k} swap(i, k) on the span of the given basis states."""
    pos = {int(s): a for a, s in enumerate(states)}
    m = np.zeros((len(states), len(states)))
    for a, s in enumerate(states):
        bits = list(bitstring(int(s), n))
        for i in range(1, k):
            b = bits.copy()
            b[i - 1], b[k - 1] = b[k - 1], b[i - 1]
            m[pos[int("".join(b), 2)], a] += 1.0
    return m


@dataclass
class PhysicalBasisMap:
    shape: Partition
    n: int
    tableaux: tuple[StandardTableau, ...]
    weights: tuple[Fraction, ...]
    vectors: dict[tuple[int, Fraction], np.ndarray]

    def vector(self, t: StandardTableau | int, m) -> np.ndarray:
        idx = t if isinstance(t, int) else self.tableaux.index(t)
        return self.vectors[(idx, Fraction(m))]

    def terms(self, t, m, tol: float = 1e-12) -> list[tuple[str, float]]:
        v = self.vector(t, m)
        return [(bitstring(k, self.n), float(v[k])) for k in np.flatnonzero(np.abs(v) > tol)]

    def to_json(self) -> dict:
        out = []
        for (idx, m), v in sorted(self.vectors.items(), key=lambda kv: (-kv[0][1], kv[0][0])):
            out.append({
                "tableau": self.tableaux[idx].to_json(),
                "weight": str(m),
                "terms": [{"ket": k, "coefficient": c} for k, c in self.terms(idx, m)],
            })
        return {"shape": self.shape.to_json(), "n": self.n, "vectors": out}


def physical_basis_map(shape: Partition | Sequence[int]) -> PhysicalBasisMap:
    """Images of tableau-by-weight basis vectors in the qubit computational basis.

    The first canonical tableau at the highest weight is the joint eigenvector of the
    Jucys-Murphy operators with its content vector, inside the highest-weight sector.
    Its phase makes the smallest nonzero basis state's coefficient positive. Other
    tableaux follow from the orthogonal-form action of adjacent swaps. Nonnegative
    weights come from collective lowering and negative ones from the global bit flip.
    """
    shape = as_partition(shape)
    n = shape.size
    if shape.rows > 2:
        raise DegreeMismatch(f"{shape} has more than two rows; only qubit registers are supported")
    if n > MAX_QUBITS:
        raise SizeLimit(f"{n} qubits exceeds the limit of {MAX_QUBITS}")
    if n == 0:
        raise ValueError("empty shape")
    tabs = tuple(enumerate_standard(shape))
    index = {t: a for a, t in enumerate(tabs)}
    ones = shape[1]
    top = Fraction(shape[0] - shape[1], 2)

    states = np.array([k for k in range(2**n) if bin(k).count("1") == ones])
    first = tabs[0]
    blocks = [_restricted_jm(n, k, states) - first.content(k) * np.eye(len(states)) for k in range(2, n + 1)]
    if blocks:
        stacked = np.vstack(blocks)
        _, sing, vt = np.linalg.svd(stacked)
        sing = np.concatenate([sing, np.zeros(vt.shape[0] - len(sing))])
        null = vt[sing < NULL_SPACE_THRESHOLD]
    else:
        null = np.ones((1, 1))
    if null.shape[0] != 1:
        raise Degenerate(f"highest-weight solution space for {shape} has dimension {null.shape[0]}")
    sub = null[0]
    lead = np.flatnonzero(np.abs(sub) > 1e-12)[0]
    sub = sub / np.linalg.norm(sub) * np.sign(sub[lead])
    v0 = np.zeros(2**n)
    v0[states] = sub

    highest: dict[int, np.ndarray] = {0: v0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        t = tabs[a]
        for i in range(1, n):
            s = t.swap(i)
            if s is None or index[s] in highest:
                continue
            dist = t.axial_distance(i, i + 1)
            v = highest[a]
            highest[index[s]] = (swap_qubits(v, i, n) - v / dist) / math.sqrt(1 - 1 / dist**2)
            queue.append(index[s])
    if len(highest) != len(tabs):
        raise Degenerate(f"propagation reached {len(highest)} of {len(tabs)} tableaux for {shape}")

    weights = tuple(top - k for k in range(int(2 * top) + 1))
    vectors: dict[tuple[int, Fraction], np.ndarray] = {}
    for a in range(len(tabs)):
        v = highest[a]
        for m in weights:
            if m < 0:
                break
            vectors[(a, m)] = v
            if m > 0:
                w = lower(v, n)
                v = w / np.linalg.norm(w)
        for m in weights:
            if m < 0:
                vectors[(a, m)] = flip_all(vectors[(a, -m)])
    return PhysicalBasisMap(shape, n, tabs, weights, vectors)


def basis_map_checks(bmap: PhysicalBasisMap, tol: float = 1e-9) -> list[CheckReport]:
    """Orthonormality, swap equivariance and S_z eigenvalues of a basis map."""
    n = bmap.n
    keys = sorted(bmap.vectors, key=lambda k: (k[1], k[0]))
    mat = np.array([bmap.vectors[k] for k in keys])
    gram = mat @ mat.T
    reports = [CheckReport.measure("orthonormality", float(np.max(np.abs(gram - np.eye(len(keys))))), tol)]
    equiv = 0.0
    for i in range(1, n):
        rho = adjacent_matrix(bmap.shape, i).entries if n > 1 else None
        for m in bmap.weights:
            for a in range(len(bmap.tableaux)):
                lhs = swap_qubits(bmap.vectors[(a, m)], i, n)
                rhs = sum(rho[b, a] * bmap.vectors[(b, m)] for b in range(len(bmap.tableaux)))
                equiv = max(equiv, float(np.max(np.abs(lhs - rhs))))
    reports.append(CheckReport.measure("swap-equivariance", equiv, tol))
    sz = sz_diagonal(n)
    eig = max(float(np.max(np.abs(sz * v - float(m) * v))) for (_, m), v in bmap.vectors.items())
    reports.append(CheckReport.measure("sz-eigenvalue", eig, 1e-12))
    return reports


def collective_noise_check(bmap: PhysicalBasisMap, tol: float = 1e-9) -> CheckReport:
    """The global bit flip must send (T, m) to +-(T, -m) with one sign for every T."""
    worst = 0.0
    signs: dict[Fraction, set[int]] = {}
    for (a, m), v in bmap.vectors.items():
        flipped = flip_all(v)
        target = bmap.vectors[(a, -m)]
        overlap = float(flipped @ target)
        sign = 1 if overlap >= 0 else -1
        signs.setdefault(m, set()).add(sign)
        worst = max(worst, float(np.max(np.abs(flipped - sign * target))))
    mixed = [str(m) for m, s in signs.items() if len(s) > 1]
    if mixed:
        worst = max(worst, 1.0)
    details = "sign differs across tableaux at weights " + ", ".join(mixed) if mixed else "logical index preserved"
    return CheckReport.measure("collective-bit-flip", worst, tol, details)
