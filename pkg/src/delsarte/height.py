"""Height of the formal group of a Calabi-Yau threefold of Delsarte type.

The pipeline is

1. find the norm-zero character ``alpha_0`` (mod d),
2. reduce it to a primitive vector ``alpha_A = alpha_0 / e`` modulo
   ``d_A = d / e`` where ``e = gcd(alpha_0, d)``,
3. walk the orbit ``p^i alpha_A`` (mod d_A) for ``0 <= i < f_A`` where
   ``f_A`` is the order of p mod d_A.

The height is finite exactly when every orbit norm is at most 1, and then it
equals ``f_A``. Since the test only sees ``p mod d_A``, the whole answer is a
function on the unit group mod d_A, tabulated by :func:`spectrum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Optional, Sequence

from .arith import euler_phi, multiplicative_order, units
from .characters import DEFAULT_CAP, CharacterVector, find_alpha0
from .core import DelsarteThreefold, validate
from .errors import DomainError, IntegrityError

INFINITE = math.inf
REPRESENTATIVES = 3


@dataclass(frozen=True)
class ReducedCharacter:
    e: int
    d_A: int
    alpha_A: tuple[int, ...]

    def __post_init__(self):
        if self.d_A < 3:
            raise IntegrityError(f"reduced modulus must be at least 3, got {self.d_A}")
        if sum(self.alpha_A) != self.d_A or any(not 0 < a < self.d_A for a in self.alpha_A):
            raise IntegrityError(f"alpha_A = {self.alpha_A} is not a norm-zero character mod {self.d_A}")
        if gcd(self.d_A, *self.alpha_A) != 1:
            raise IntegrityError(f"alpha_A = {self.alpha_A} is not primitive mod {self.d_A}")

    def norm_at(self, t: int) -> int:
        """||t alpha_A|| computed modulo d_A."""
        n = self.d_A
        return sum((t * a) % n for a in self.alpha_A) // n - 1


@dataclass(frozen=True)
class HeightResult:
    """Outcome of the orbit test for one residue class.

    ``norms`` lists ``||t^i alpha_A||`` for ``i = 0, 1, ...``: the full orbit
    (first entry 0, the rest 1) when the height is finite, and up to and
    including the first norm >= 2 when it is infinite.
    """

    residue: int
    d_A: int
    order: int
    norms: tuple[int, ...]
    h: Optional[int] = None

    @property
    def finite(self) -> bool:
        return self.h is not None

    @property
    def height(self) -> float | int:
        return self.h if self.h is not None else INFINITE

    @property
    def failing_index(self) -> Optional[int]:
        return None if self.finite else len(self.norms) - 1

    @property
    def failing_norm(self) -> Optional[int]:
        return None if self.finite else self.norms[-1]

    def to_dict(self) -> dict:
        out = {"outcome": "finite" if self.finite else "infinite",
               "residue": self.residue, "d_A": self.d_A, "f_A": self.order}
        if self.finite:
            out["h"] = self.h
            out["witness"] = {"norms": list(self.norms)}
        else:
            out["witness"] = {"index": self.failing_index, "norm": self.failing_norm}
        return out


def reduce_alpha0(a0: CharacterVector) -> ReducedCharacter:
    """Divide out ``e = gcd(alpha_0, d)``."""
    if a0.norm != 0:
        raise DomainError(f"alpha_0 must have norm 0, got {a0.norm}")
    d = a0.modulus
    e = gcd(d, *a0.entries)
    return ReducedCharacter(e, d // e, tuple(v // e for v in a0.entries))


def shortcut(t: int, d_A: int) -> Optional[float | int]:
    """Height decided without the orbit walk, if possible.

    ``t == 1`` gives height 1; a power of t equal to -1 forces infinite
    height. Anything else returns None.
    """
    t %= d_A
    if t == 1:
        return 1
    x = t
    while x != 1:
        if x == d_A - 1:
            return INFINITE
        x = x * t % d_A
    return None


def height_class(t: int, rc: ReducedCharacter) -> HeightResult:
    """Run the orbit test for the residue class t mod d_A."""
    n = rc.d_A
    t %= n
    if gcd(t, n) != 1:
        raise DomainError(f"{t} is not a unit modulo {n}")
    norms = [rc.norm_at(1)]
    x = t
    while x != 1:
        k = rc.norm_at(x)
        norms.append(k)
        if k >= 2:
            return HeightResult(t, n, multiplicative_order(t, n), tuple(norms))
        x = x * t % n
    return HeightResult(t, n, len(norms), tuple(norms), len(norms))


def reduced_character(x: DelsarteThreefold, cap: int = DEFAULT_CAP) -> ReducedCharacter:
    return reduce_alpha0(find_alpha0(x, cap))


def height(x: DelsarteThreefold, p: int, cap: int = DEFAULT_CAP,
           rc: Optional[ReducedCharacter] = None) -> HeightResult:
    """Height of the formal group of the threefold in characteristic p.

    Raises DomainError naming the violated conditions when p is not
    admissible for ``x``.
    """
    report = validate(x, p)
    if not report.ok:
        raise DomainError("; ".join(report.violations))
    if rc is None:
        rc = reduced_character(x, cap)
    return height_class(p, rc)


@dataclass(frozen=True)
class ResidueSpectrum:
    """Height of every unit residue class modulo d_A."""

    d_A: int
    alpha_A: tuple[int, ...]
    classes: Mapping[int, HeightResult] = field(compare=False, repr=False)

    @property
    def phi(self) -> int:
        return len(self.classes)

    @property
    def heights(self) -> dict[int, float | int]:
        return {t: r.height for t, r in sorted(self.classes.items())}

    @property
    def grouped(self) -> dict[float | int, list[int]]:
        """Height -> sorted residues, ordered by height with infinity last."""
        groups: dict[float | int, list[int]] = {}
        for t in sorted(self.classes):
            groups.setdefault(self.classes[t].height, []).append(t)
        return dict(sorted(groups.items()))

    @property
    def finite_heights(self) -> set[int]:
        return {h for h in self.grouped if h != INFINITE}

    def counts(self) -> dict[float | int, int]:
        return {h: len(ts) for h, ts in self.grouped.items()}

    def __eq__(self, other):
        if not isinstance(other, ResidueSpectrum):
            return NotImplemented
        return (self.d_A, self.alpha_A, self.heights) == (other.d_A, other.alpha_A, other.heights)

    def to_dict(self, full: bool = True) -> dict:
        groups = []
        for h, ts in self.grouped.items():
            g = {"height": "inf" if h == INFINITE else h, "count": len(ts),
                 "representatives": ts[:REPRESENTATIVES]}
            if full:
                g["residues"] = ts
            groups.append(g)
        return {"d_A": self.d_A, "alpha_A": list(self.alpha_A), "phi": self.phi, "groups": groups}

    @classmethod
    def from_dict(cls, doc: Mapping) -> ResidueSpectrum:
        """Rebuild from :meth:`to_dict` output, re-deriving and checking every class."""
        rc = ReducedCharacter(1, int(doc["d_A"]), tuple(doc["alpha_A"]))
        fresh = spectrum(rc)
        stored = {}
        for g in doc["groups"]:
            h = INFINITE if g["height"] == "inf" else int(g["height"])
            for t in g["residues"]:
                stored[int(t)] = h
        if stored != fresh.heights:
            raise IntegrityError(f"stored spectrum for d_A = {rc.d_A} disagrees with recomputation")
        return fresh


def spectrum(rc: ReducedCharacter) -> ResidueSpectrum:
    """Evaluate :func:`height_class` on every unit modulo d_A."""
    classes = {t: height_class(t, rc) for t in units(rc.d_A)}
    assert len(classes) == euler_phi(rc.d_A)
    return ResidueSpectrum(rc.d_A, rc.alpha_A, classes)


def format_height(h: float | int) -> str:
    return "inf" if h == INFINITE else str(h)


def spectrum_for(x: DelsarteThreefold, cap: int = DEFAULT_CAP) -> ResidueSpectrum:
    return spectrum(reduced_character(x, cap))


def heights_for_primes(x: DelsarteThreefold, primes: Sequence[int]) -> dict[int, HeightResult]:
    rc = reduced_character(x)
    return {p: height(x, p, rc=rc) for p in primes}
