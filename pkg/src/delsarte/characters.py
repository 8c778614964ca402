"""Characters of the covering Fermat threefold that survive the quotient.

For a Delsarte threefold with exponent matrix ``A`` and ``d = |det A|`` the
relevant characters are the vectors ``alpha`` in ``(Z/d)^5`` with

* every entry nonzero,
* entries summing to 0 mod d,
* ``sum_i a_ij alpha_i == 0 (mod d)`` for each column ``j``.

Each such ``alpha`` indexes one summand of the middle cohomology of the
quotient (one-dimensional summands are assumed, matching the Hodge counts).
Entries are stored as representatives in ``[1, d-1]``, so the norm is simply
``sum(entries) / d - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

import numpy as np

from .arith import cyclic_subgroup
from .core import DelsarteThreefold
from .errors import CapacityError, DomainError, IntegrityError
from .linalg import IntMatrix, KernelModN, adjugate, kernel_mod

DEFAULT_CAP = 2**25
_CHUNK = 1 << 16
# products of two residues must fit in int64
_INT64_SAFE = 2**31


@dataclass(frozen=True)
class CharacterVector:
    entries: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        d = int(self.modulus)
        e = tuple(int(v) % d for v in self.entries)
        if any(v == 0 for v in e):
            raise DomainError(f"character entries must be nonzero mod {d}: {self.entries}")
        if sum(e) % d:
            raise DomainError(f"character entries must sum to 0 mod {d}: {self.entries}")
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "modulus", d)

    @property
    def norm(self) -> int:
        return norm(self)

    def scale(self, t: int) -> CharacterVector:
        return CharacterVector(tuple(t * v for v in self.entries), self.modulus)

    __rmul__ = scale

    def __neg__(self) -> CharacterVector:
        return self.scale(-1)


def norm(a: CharacterVector) -> int:
    """Sum of the fractional parts entries/d, minus one; lies in {0, 1, 2, 3}."""
    s = sum(a.entries)
    assert s % a.modulus == 0
    return s // a.modulus - 1


def character_kernel(x: DelsarteThreefold) -> KernelModN:
    """Solution group of the defining congruences, sum condition included.

    The columns of ``A`` give one congruence each; a row of ones appended to
    ``A^T`` encodes the zero-sum condition.
    """
    rows = x.matrix.transpose().rows + ((1,) * 5,)
    return kernel_mod(IntMatrix(rows), x.d)


@dataclass
class CharSet:
    modulus: int
    count: int
    graded_counts: tuple[int, int, int, int]
    members: Optional[np.ndarray] = None

    def __iter__(self) -> Iterator[CharacterVector]:
        if self.members is None:
            raise ValueError("members were not retained; enumerate with keep=True")
        for row in self.members:
            yield CharacterVector(tuple(int(v) for v in row), self.modulus)

    def summary(self) -> dict:
        return {"modulus": self.modulus, "count": self.count,
                "graded_counts": list(self.graded_counts)}


def iter_aset_chunks(x: DelsarteThreefold, cap: int = DEFAULT_CAP) -> Iterator[np.ndarray]:
    """Stream members as (k, 5) arrays of representatives in [1, d-1].

    Raises CapacityError before any work when the solution group is larger
    than ``cap``.
    """
    kernel = character_kernel(x)
    if kernel.order > cap:
        raise CapacityError(
            f"character group has order {kernel.order}, above cap {cap}", kernel.order)
    d = x.d
    dtype = np.int64 if d < _INT64_SAFE else object
    gens = np.array(kernel.generators, dtype=dtype).reshape(len(kernel.orders), 5)
    orders = list(kernel.orders)
    total = kernel.order
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        acc = np.zeros((len(idx), 5), dtype=dtype)
        for g, o in zip(gens, orders):
            c = (idx % o).astype(dtype)
            idx = idx // o
            acc = (acc + c[:, None] * g[None, :]) % d
        keep = np.all(acc != 0, axis=1)
        if keep.any():
            yield acc[keep]


def enumerate_aset(x: DelsarteThreefold, cap: int = DEFAULT_CAP, keep: bool = True) -> CharSet:
    """Enumerate the character set, counting members by norm.

    With ``keep=False`` members are streamed and discarded so memory stays
    flat for large groups.
    """
    d = x.d
    graded = [0, 0, 0, 0]
    kept = []
    for chunk in iter_aset_chunks(x, cap):
        norms = chunk.sum(axis=1) // d - 1
        for k in range(4):
            graded[k] += int(np.count_nonzero(norms == k))
        if keep:
            kept.append(chunk)
    members = None
    if keep:
        members = np.concatenate(kept) if kept else np.zeros((0, 5), dtype=np.int64)
    return CharSet(d, sum(graded), tuple(graded), members)


def alpha0_closed_form(x: DelsarteThreefold) -> Optional[CharacterVector]:
    """The candidate ``d * (A^T)^{-1} (1, ..., 1)``.

    It satisfies every congruence and, for Calabi-Yau weights, its entries sum
    to exactly d. Returns None when some entry falls outside ``[1, d-1]``.
    """
    at = x.matrix.transpose()
    sign = 1 if x.det > 0 else -1
    v = [sign * c for c in adjugate(at).apply([1] * 5)]
    d = x.d
    if any(not 0 < c < d for c in v) or sum(v) != d:
        return None
    return CharacterVector(tuple(v), d)


def find_alpha0(x: DelsarteThreefold, cap: int = DEFAULT_CAP) -> CharacterVector:
    """The unique character of norm 0.

    When the character group fits under ``cap`` the whole set is scanned and
    uniqueness is checked. Above the cap the closed form is used and checked
    against the congruences instead.
    """
    if not x.is_calabi_yau:
        raise IntegrityError(
            f"input is not a Calabi-Yau Delsarte threefold: sum of weights "
            f"{sum(x.weights.weights)} != m = {x.degree}")
    d = x.d
    try:
        zeros = [c[c.sum(axis=1) == d] for c in iter_aset_chunks(x, cap)]
    except CapacityError:
        a0 = alpha0_closed_form(x)
        if a0 is None or not is_member(x, a0.entries):
            raise IntegrityError("input is not a Calabi-Yau Delsarte threefold: "
                                 "no norm-zero character found") from None
        return a0
    found = np.concatenate(zeros) if zeros else np.zeros((0, 5), dtype=np.int64)
    if len(found) != 1:
        raise IntegrityError(
            f"input is not a Calabi-Yau Delsarte threefold: {len(found)} norm-zero characters")
    return CharacterVector(tuple(int(v) for v in found[0]), d)


def is_member(x: DelsarteThreefold, entries: Sequence[int]) -> bool:
    d = x.d
    if len(entries) != 5 or any(v % d == 0 for v in entries) or sum(entries) % d:
        return False
    return all(v % d == 0 for v in x.matrix.transpose().apply(list(entries)))


def aH_bruteforce(a: CharacterVector, p_class: int) -> int:
    """Sum of ||t a|| over the cyclic group H generated by p_class mod d."""
    d = a.modulus
    if gcd(p_class, d) != 1:
        raise DomainError(f"{p_class} is not a unit modulo {d}")
    return sum(norm(a.scale(t)) for t in cyclic_subgroup(p_class, d))


def orbit_sums(members: np.ndarray, d: int, p: int) -> tuple[np.ndarray, int]:
    """A_H for every row of ``members`` at once, together with f = |H|."""
    h = cyclic_subgroup(p, d)
    dtype = np.int64 if d < _INT64_SAFE else object
    m = np.asarray(members, dtype=dtype)
    total = np.zeros(len(m), dtype=dtype)
    for t in h:
        total += ((m * t) % d).sum(axis=1) // d - 1
    return total, len(h)


def newton_low_slope_count(x: DelsarteThreefold, p: int, cap: int = DEFAULT_CAP) -> int:
    """Number of characters whose Newton slope A_H(alpha)/f is below 1.

    Brute force over the whole character set; used as the oracle for the
    height computation.
    """
    cs = enumerate_aset(x, cap)
    if cs.count == 0:
        return 0
    sums, f = orbit_sums(cs.members, x.d, p)
    return int(np.count_nonzero(sums < f))


def low_slope_members(x: DelsarteThreefold, p: int, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """The characters counted by ``newton_low_slope_count``."""
    cs = enumerate_aset(x, cap)
    if cs.count == 0:
        return set()
    sums, f = orbit_sums(cs.members, x.d, p)
    return {tuple(int(v) for v in row) for row in cs.members[sums < f]}
