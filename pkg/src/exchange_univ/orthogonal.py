"""Young's orthogonal form, Jucys-Murphy elements and the alternating intertwiner."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DegreeMismatch, IndexOutOfRange, ParseError, SizeLimit
from .partitions import Partition, as_partition, diagonal_length
from .tableaux import DEFAULT_ENUMERATION_CAP, StandardTableau, enumerate_standard

DEFAULT_TOL = 1e-9
PRODUCT_TOL = 1e-8


@dataclass(frozen=True)
class RepMatrix:
    """A dense real matrix over canonical tableau bases.

    ``basis`` indexes the columns (domain). ``codomain`` indexes the rows and equals
    ``basis`` except for the intertwiner between a shape and its conjugate.
    """

    shape_label: Partition
    basis: tuple[StandardTableau, ...]
    entries: np.ndarray
    codomain: tuple[StandardTableau, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rows_basis(self) -> tuple[StandardTableau, ...]:
        return self.codomain if self.codomain is not None else self.basis

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.shape_label, other.basis, self.entries @ other.entries, self.codomain)

    def to_json(self) -> dict:
        return {
            "shape": self.shape_label.to_json(),
            "basis": [t.to_json() for t in self.basis],
            "row_basis": [t.to_json() for t in self.rows_basis],
            "entries": self.entries.tolist(),
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    max_violation: float
    tolerance: float
    details: str = ""

    @classmethod
    def measure(cls, name: str, violation: float, tolerance: float, details: str = "") -> "CheckReport":
        return cls(name, bool(violation <= tolerance), float(violation), tolerance, details)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_violation": self.max_violation,
            "tolerance": self.tolerance,
            "details": self.details,
        }


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored in one-line form: ``images[k-1]`` is the image of k.

    Composition follows functions: ``(p * q)(k) = p(q(k))``.
    """

    images: tuple[int, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "n", len(images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            if any(not 1 <= x <= n for x in cyc):
                raise DegreeMismatch(f"cycle {tuple(cyc)} leaves 1..{n}")
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def parse_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``(1 3)(2 4)`` or ``(1,2,3)``; ``()`` is the identity."""
        compact = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", compact):
            raise ParseError(f"malformed cycle notation {text!r}")
        cycles = [[int(x) for x in re.split(r"[\s,]+", body.strip()) if x] for body in re.findall(r"\(([^)]*)\)", compact)]
        return cls.from_cycles([c for c in cycles if c], n)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        """Product s_{w1} s_{w2} ... of adjacent transpositions."""
        p = cls.identity(n)
        for i in word:
            p = p * cls.transposition(i, i + 1, n)
        return p

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> "Permutation":
        return cls.from_cycles([(a, b)], n)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise DegreeMismatch(f"degrees {self.n} and {other.n} differ")
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def reduced_word(self) -> list[int]:
        """A word j1..jk with self = s_j1 s_j2 ... s_jk, from bubble sorting the one-line form."""
        arr = list(self.images)
        swaps: list[int] = []
        changed = True
        while changed:
            changed = False
            for j in range(len(arr) - 1):
                if arr[j] > arr[j + 1]:
                    arr[j], arr[j + 1] = arr[j + 1], arr[j]
                    swaps.append(j + 1)
                    changed = True
        # self * s_{a1} * ... * s_{ak} = id, hence self = s_{ak} ... s_{a1}
        return swaps[::-1]

    def sign(self) -> int:
        return -1 if len(self.reduced_word()) % 2 else 1


def _basis(shape: Partition, cap: int) -> tuple[StandardTableau, ...]:
    return tuple(enumerate_standard(shape, cap=cap))


@lru_cache(maxsize=4096)
def _adjacent(parts: tuple[int, ...], i: int) -> np.ndarray:
    basis = _enumerate_cached(parts)
    index = {t: k for k, t in enumerate(basis)}
    q = np.zeros((len(basis), len(basis)))
    for col, t in enumerate(basis):
        d = t.axial_distance(i, i + 1)
        q[col, col] = 1.0 / d
        s = t.swap(i)
        if s is not None:
            q[index[s], col] = np.sqrt(1.0 - 1.0 / d**2)
    q.setflags(write=False)
    return q


def _enumerate_cached(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    return tuple(enumerate_standard(Partition(parts), cap=max(DEFAULT_ENUMERATION_CAP, sum(parts))))


def adjacent_matrix(shape: Partition | Sequence[int], i: int, cap: int = DEFAULT_ENUMERATION_CAP) -> RepMatrix:
    """Matrix of the transposition (i, i+1); entry [S, T] is the coefficient of S in the image of T."""
    shape = as_partition(shape)
    if not 1 <= i < shape.size:
        raise IndexOutOfRange(f"generator index {i} outside 1..{shape.size - 1}")
    basis = _basis(shape, cap)
    return RepMatrix(shape, basis, _adjacent(shape.parts, i).copy())


def permutation_matrix(shape: Partition | Sequence[int], s: Permutation, cap: int = DEFAULT_ENUMERATION_CAP) -> RepMatrix:
    shape = as_partition(shape)
    if s.n != shape.size:
        raise DegreeMismatch(f"permutation of degree {s.n} applied to shape of size {shape.size}")
    basis = _basis(shape, cap)
    m = np.eye(len(basis))
    for j in s.reduced_word():
        m = m @ _adjacent(shape.parts, j)
    return RepMatrix(shape, basis, m)


def jucys_murphy_matrix(shape: Partition | Sequence[int], k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> RepMatrix:
    """Sum of the transposition matrices (i k) over i < k."""
    shape = as_partition(shape)
    n = shape.size
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"index {k} outside 1..{n}")
    basis = _basis(shape, cap)
    total = np.zeros((len(basis), len(basis)))
    for i in range(1, k):
        total += permutation_matrix(shape, Permutation.transposition(i, k, n), cap).entries
    return RepMatrix(shape, basis, total)


def alternating_intertwiner(shape: Partition | Sequence[int], cap: int = DEFAULT_ENUMERATION_CAP) -> RepMatrix:
    """The map sending T to w(T) T', with w(T) the parity of row-word inversions."""
    shape = as_partition(shape)
    basis = _basis(shape, cap)
    target = _basis(shape.conjugate, cap)
    index = {t: k for k, t in enumerate(target)}
    m = np.zeros((len(target), len(basis)))
    for col, t in enumerate(basis):
        m[index[t.transpose()], col] = t.sign()
    return RepMatrix(shape, basis, m, codomain=target)


def _maxabs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def intertwiner_symmetric_expected(shape: Partition) -> bool:
    """Symmetry rule: M is symmetric exactly when 4 divides |shape| - b(shape)."""
    return (shape.size - diagonal_length(shape)) % 4 == 0


def verify_structure(
    shape: Partition | Sequence[int],
    tol: float = DEFAULT_TOL,
    product_tol: float = PRODUCT_TOL,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[CheckReport]:
    """Numerical checks of the structural identities satisfied by the orthogonal form."""
    shape = as_partition(shape)
    if shape.size > cap:
        raise SizeLimit(f"shape {shape} exceeds the enumeration cap {cap}")
    n = shape.size
    dim = len(_basis(shape, cap))
    eye = np.eye(dim)
    gens = [adjacent_matrix(shape, i, cap).entries for i in range(1, n)]
    reports: list[CheckReport] = []

    reports.append(CheckReport.measure(
        "generator-orthogonality", max((_maxabs(q.T @ q - eye) for q in gens), default=0.0), tol))
    reports.append(CheckReport.measure(
        "generator-involution", max((_maxabs(q @ q - eye) for q in gens), default=0.0), tol))
    reports.append(CheckReport.measure(
        "generator-symmetry", max((_maxabs(q - q.T) for q in gens), default=0.0), tol))
    braid = [_maxabs(a @ b @ a - b @ a @ b) for a, b in zip(gens, gens[1:])]
    reports.append(CheckReport.measure("braid-relation", max(braid, default=0.0), product_tol))
    far = [_maxabs(gens[i] @ gens[j] - gens[j] @ gens[i]) for i in range(len(gens)) for j in range(i + 2, len(gens))]
    reports.append(CheckReport.measure("distant-commutation", max(far, default=0.0), product_tol))

    basis = _basis(shape, cap)
    jms = [jucys_murphy_matrix(shape, k, cap).entries for k in range(1, n + 1)]
    jm_viol = 0.0
    for k, x in enumerate(jms, start=1):
        expected = np.diag([float(t.content(k)) for t in basis])
        jm_viol = max(jm_viol, _maxabs(x - expected))
    reports.append(CheckReport.measure("jucys-murphy-contents", jm_viol, tol))
    comm = [_maxabs(a @ b - b @ a) for a, b in combinations(jms, 2)]
    reports.append(CheckReport.measure("jucys-murphy-commute", max(comm, default=0.0), tol))

    m = alternating_intertwiner(shape, cap).entries
    conj = shape.conjugate
    gens_conj = [adjacent_matrix(conj, i, cap).entries for i in range(1, n)]
    rel = [_maxabs(m @ q - (-qc) @ m) for q, qc in zip(gens, gens_conj)]
    reports.append(CheckReport.measure("intertwiner-conjugation", max(rel, default=0.0), product_tol))

    if shape.is_self_conjugate():
        sym = intertwiner_symmetric_expected(shape)
        sign = 1.0 if sym else -1.0
        reports.append(CheckReport.measure(
            "intertwiner-symmetry-rule", _maxabs(m - sign * m.T), tol,
            f"expected {'symmetric' if sym else 'antisymmetric'} ((|shape| - b) = {n - diagonal_length(shape)})"))

    if shape.is_self_conjugate():
        transp = [permutation_matrix(shape, Permutation.transposition(a, b, n), cap).entries
                  for a, b in combinations(range(1, n + 1), 2)]
        samples = [x - y for x, y in combinations(transp, 2)]
        samples += [x @ y - y @ x for x, y in combinations(transp, 2)]
        osp = max((_maxabs(x.T @ m + m @ x) for x in samples), default=0.0)
        reports.append(CheckReport.measure("osp-membership", osp, product_tol, f"{len(samples)} sample elements"))
        if dim == 2:
            paulis = [np.array([[0, 1], [1, 0]], dtype=complex),
                      np.array([[0, -1j], [1j, 0]]),
                      np.array([[1, 0], [0, -1]], dtype=complex)]
            pv = max(_maxabs(p.T @ m + m @ p) for p in paulis)
            reports.append(CheckReport.measure("pauli-span", pv, tol))
    return reports
