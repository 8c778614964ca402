"""Weight-system catalogs and the persisted height atlas.

Two families are catalogued:

* Fermat type: ``x_0^{m/q_0} + ... + x_4^{m/q_4}``. The Calabi-Yau weight
  systems with every ``q_i | m`` are the solutions of
  ``1/n_0 + ... + 1/n_4 = 1``; there are 147 of them.
* Quasi-diagonal type: ``x_0^{m_0} x_1 + x_1^{m_1} + x_2^{m_2} + x_3^{m_3} +
  x_4^{m_4}``. Writing ``c = 1 - 1/m_0`` the degree identities become
  ``1/m_0 + c/m_1 + 1/m_2 + 1/m_3 + 1/m_4 = 1``. A sum of three unit
  fractions that stays below 1 is at most 41/42, so ``min(m_0, m_1) <= 83``. Fixing
  the smaller of the two leaves a four-term equation with known numerators,
  which a descending search solves exhaustively.

Quasi-diagonal weights are catalogued with the weights listed in
nondecreasing order and the chain on the first two coordinates; this gives
137 weight systems. The looser normalization that only sorts ``q_2, q_3,
q_4`` is available as ``normalization="chain"``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .core import FERMAT, QUASI_DIAGONAL, DelsarteThreefold, WeightSystem, from_fermat, from_quasidiagonal
from .errors import AtlasFormatError, DomainError
from .height import INFINITE, ReducedCharacter, ResidueSpectrum, format_height, reduce_alpha0, spectrum
from .characters import alpha0_closed_form, find_alpha0, is_member

ATLAS_VERSION = 1
ATLAS_DIR_ENV = "DELSARTE_ATLAS_DIR"

FERMAT_FINITE_HEIGHTS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20, 21, 22, 42)
QUASIDIAGONAL_FINITE_HEIGHTS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20,
                                21, 22, 23, 24, 27, 28, 30, 41, 42, 46, 82)

# (h11, h12) of the crepant resolution, as reported in the literature
REFERENCE_HODGE = {
    (FERMAT, (1, 1, 1, 1, 1)): (1, 101),
    (FERMAT, (1, 1, 1, 1, 4)): (1, 149),
    (FERMAT, (2, 21, 138, 322, 483)): (143, 143),
    (FERMAT, (1, 42, 258, 602, 903)): (251, 251),
    (QUASI_DIAGONAL, (1, 1, 12, 28, 42)): (11, 491),
}


def _descending_unit_sums(target: Fraction, numerators: Sequence[Fraction],
                          bound: Optional[Fraction] = None) -> Iterator[list[tuple[Fraction, int]]]:
    """Solutions of ``sum n_k / x_k = target`` with every ``x_k >= 2``.

    Terms are produced in nonincreasing order of value, which bounds each
    denominator: the next term is at least target / (terms left) and at most
    the previous term.
    """
    k = len(numerators)
    if k == 0 or target <= 0:
        return
    tried = set()
    for idx, n in enumerate(numerators):
        if n in tried:
            continue
        tried.add(n)
        rest = numerators[:idx] + numerators[idx + 1:]
        if k == 1:
            x = n / target
            if x.denominator == 1 and x >= 2 and (bound is None or target <= bound):
                yield [(n, int(x))]
            continue
        lo = 2 if bound is None else max(2, floor(n / bound))
        hi = floor(k * n / target)
        for x in range(lo, hi + 1):
            v = n / x
            if bound is not None and v > bound:
                continue
            if v >= target:
                continue
            for tail in _descending_unit_sums(target - v, rest, v):
                yield [(n, x)] + tail


def fermat_exponent_tuples() -> list[tuple[int, ...]]:
    """Sorted tuples (n_0 <= ... <= n_4) with sum of reciprocals 1."""
    out = {tuple(sorted(x for _, x in sol))
           for sol in _descending_unit_sums(Fraction(1), [Fraction(1)] * 5)}
    return sorted(out)


def enumerate_fermat_weights() -> list[WeightSystem]:
    """All 147 Calabi-Yau weight systems of Fermat type, ordered by (m, Q)."""
    out = set()
    for ns in fermat_exponent_tuples():
        m = lcm(*ns)
        out.add(WeightSystem(tuple(sorted(m // n for n in ns)), m))
    return sorted(out, key=lambda w: (w.degree, w.weights))


def quasidiagonal_exponent_tuples() -> set[tuple[int, ...]]:
    """Every (m_0, ..., m_4), m_i >= 2, solving the quasi-diagonal degree identities.

    ``m_2 <= m_3 <= m_4``; the chain coordinates 0 and 1 are kept apart.
    """
    one = Fraction(1)
    sols = set()
    for small in range(2, 84):
        c = 1 - Fraction(1, small)
        for sol in _descending_unit_sums(c, [c, one, one, one]):
            other = next(x for n, x in sol if n == c)
            units = sorted(x for n, x in sol if n == one)
            sols.add((small, other, *units))   # m_0 = small
            sols.add((other, small, *units))   # m_1 = small (the equation is symmetric)
    return {s for s in sols if _quasi_weights(s) is not None}


def _quasi_weights(exps: Sequence[int]) -> Optional[WeightSystem]:
    m0, m1, m2, m3, m4 = exps
    fr = [(1 - Fraction(1, m1)) / m0, Fraction(1, m1), Fraction(1, m2), Fraction(1, m3), Fraction(1, m4)]
    if sum(fr) != 1:
        return None
    m = lcm(*(f.denominator for f in fr))
    return WeightSystem(tuple(int(f * m) for f in fr), m)


@dataclass
class WeightRecord:
    weight_system: WeightSystem
    family: str
    d_A: int
    alpha_A: tuple[int, ...]
    exponents: Optional[tuple[int, ...]] = None
    reference_hodge: Optional[tuple[int, int]] = None

    @property
    def weights(self) -> tuple[int, ...]:
        return self.weight_system.weights

    @property
    def degree(self) -> int:
        return self.weight_system.degree

    def threefold(self) -> DelsarteThreefold:
        if self.family == FERMAT:
            return from_fermat(self.weight_system, self.reference_hodge)
        return from_quasidiagonal(self.weight_system, self.exponents, self.reference_hodge)

    def reduced(self) -> ReducedCharacter:
        """The reduced character; ``e`` is recovered from the threefold's d."""
        return ReducedCharacter(self.threefold().d // self.d_A, self.d_A, self.alpha_A)

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "degree": self.degree,
            "family": self.family,
            "exponents": list(self.exponents) if self.exponents else None,
            "d_A": self.d_A,
            "alpha_A": list(self.alpha_A),
            "reference_hodge": list(self.reference_hodge) if self.reference_hodge else None,
        }

    @classmethod
    def from_dict(cls, doc) -> WeightRecord:
        hodge = doc.get("reference_hodge")
        exps = doc.get("exponents")
        return cls(WeightSystem(tuple(doc["weights"]), int(doc["degree"])), doc["family"],
                   int(doc["d_A"]), tuple(doc["alpha_A"]),
                   tuple(exps) if exps else None, tuple(hodge) if hodge else None)


def make_record(x: DelsarteThreefold, exponents=None, exhaustive: bool = False) -> WeightRecord:
    """Record for a constructed threefold.

    By default the norm-zero character comes from its closed form (checked
    against the congruences); ``exhaustive=True`` scans the character set.
    """
    a0 = None if exhaustive else alpha0_closed_form(x)
    if a0 is None or not is_member(x, a0.entries):
        a0 = find_alpha0(x)
    rc = reduce_alpha0(a0)
    hodge = x.reference_hodge or REFERENCE_HODGE.get((x.family, x.weights.weights))
    return WeightRecord(x.weights, x.family, rc.d_A, rc.alpha_A,
                        tuple(exponents) if exponents else None, hodge)


def fermat_records() -> list[WeightRecord]:
    return [make_record(from_fermat(w)) for w in enumerate_fermat_weights()]


def enumerate_quasidiagonal_weights(normalization: str = "sorted") -> list[WeightRecord]:
    """Quasi-diagonal weight systems, one record per weight system.

    ``"sorted"`` keeps the weight systems whose weights are nondecreasing
    with the chain on coordinates 0 and 1 (137 records). ``"chain"`` keeps
    every weight system up to permuting coordinates 2-4; when several exponent
    tuples give the same weights the lexicographically smallest is kept.
    """
    if normalization not in ("sorted", "chain"):
        raise DomainError(f"unknown normalization {normalization!r}")
    best: dict[tuple[int, ...], tuple[WeightSystem, tuple[int, ...]]] = {}
    for exps in quasidiagonal_exponent_tuples():
        ws = _quasi_weights(exps)
        q = ws.weights
        # coordinates 2-4 ordered by weight, exponents permuted alongside
        tail = sorted(zip(q[2:], exps[2:]))
        q = (q[0], q[1], *(w for w, _ in tail))
        exps = (exps[0], exps[1], *(e for _, e in tail))
        if not WeightSystem(q, ws.degree).is_well_formed:
            continue
        if normalization == "sorted" and list(q) != sorted(q):
            continue
        if q not in best or exps < best[q][1]:
            best[q] = (WeightSystem(q, ws.degree), exps)
    out = [make_record(from_quasidiagonal(ws, exps), exps) for ws, exps in best.values()]
    return sorted(out, key=lambda r: (r.degree, r.weights))


@dataclass
class HeightAtlas:
    family: str
    records: list[WeightRecord]
    spectra: list[ResidueSpectrum] = field(default_factory=list)

    @property
    def finite_heights(self) -> list[int]:
        return sorted(set().union(*(s.finite_heights for s in self.spectra)))

    def to_dict(self) -> dict:
        return {
            "version": ATLAS_VERSION,
            "family": self.family,
            "records": [dict(r.to_dict(), spectrum=s.to_dict())
                        for r, s in zip(self.records, self.spectra)],
            "finite_heights": self.finite_heights,
        }

    def __eq__(self, other):
        if not isinstance(other, HeightAtlas):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def _bare(r: WeightRecord) -> ReducedCharacter:
    # spectra depend only on (d_A, alpha_A)
    return ReducedCharacter(1, r.d_A, r.alpha_A)


def build_atlas(records: Sequence[WeightRecord], family: str) -> HeightAtlas:
    spectra = [spectrum(_bare(r)) for r in records]
    return HeightAtlas(family, list(records), spectra)


def classify_finite_heights(records: Iterable[WeightRecord]) -> list[int]:
    """Union of the finite heights over every unit class of every record.

    Iterating over units mod d_A instead of primes is exact: every unit class
    contains admissible primes.
    """
    seen: dict[tuple, set[int]] = {}
    out: set[int] = set()
    for r in records:
        key = (r.d_A, tuple(sorted(r.alpha_A)))
        if key not in seen:
            seen[key] = spectrum(_bare(r)).finite_heights
        out |= seen[key]
    return sorted(out)


def mirror_obstruction_flag(h, h11: int, h12: int) -> bool:
    """True when a finite height exceeds min(h11 + 1, h12 + 1).

    In that case no group of symplectic automorphisms yields a mirror partner
    through a crepant resolution of the quotient.
    """
    if h is None or h == INFINITE:
        return False
    return h > min(h11 + 1, h12 + 1)


def atlas_json(atlas: HeightAtlas) -> str:
    return json.dumps(atlas.to_dict(), indent=1, sort_keys=True) + "\n"


def save_atlas(atlas: HeightAtlas, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(atlas_json(atlas))
    return path


def load_atlas(path) -> HeightAtlas:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AtlasFormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    try:
        if doc["version"] != ATLAS_VERSION:
            raise AtlasFormatError(f"{path}: unsupported atlas version {doc['version']}")
        records = [WeightRecord.from_dict(r) for r in doc["records"]]
        spectra = [ResidueSpectrum.from_dict(r["spectrum"]) for r in doc["records"]]
        atlas = HeightAtlas(doc["family"], records, spectra)
    except (KeyError, TypeError, ValueError) as exc:
        raise AtlasFormatError(f"{path}: malformed atlas: {exc!r}") from exc
    if atlas.finite_heights != doc["finite_heights"]:
        raise AtlasFormatError(f"{path}: finite_heights does not match the stored spectra")
    return atlas


def diff_atlases(a: HeightAtlas, b: HeightAtlas) -> list[str]:
    """Human-readable differences; empty when the atlases agree."""
    out = []
    if a.family != b.family:
        out.append(f"family: {a.family} != {b.family}")
    ka = {(r.family, r.weights): (r, s) for r, s in zip(a.records, a.spectra)}
    kb = {(r.family, r.weights): (r, s) for r, s in zip(b.records, b.spectra)}
    for k in sorted(ka.keys() - kb.keys()):
        out.append(f"only in first: {k[0]} {k[1]}")
    for k in sorted(kb.keys() - ka.keys()):
        out.append(f"only in second: {k[0]} {k[1]}")
    for k in sorted(ka.keys() & kb.keys()):
        (ra, sa), (rb, sb) = ka[k], kb[k]
        if ra.to_dict() != rb.to_dict():
            out.append(f"record differs: {k[0]} {k[1]}")
        elif sa != sb:
            ha, hb = sa.heights, sb.heights
            changed = [t for t in ha if ha[t] != hb.get(t)]
            out.append(f"spectrum differs: {k[0]} {k[1]} at residues {changed[:5]}")
    return out


def spectra_csv(atlas: HeightAtlas) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "weights", "m", "d_A", "residue", "height"])
    for r, s in zip(atlas.records, atlas.spectra):
        wt = " ".join(map(str, r.weights))
        for t, h in s.heights.items():
            w.writerow([r.family, wt, r.degree, r.d_A, t, format_height(h)])
    return buf.getvalue()


def catalog_records(family: str, normalization: str = "sorted") -> list[WeightRecord]:
    family = family.lower()
    if family == "fermat":
        return fermat_records()
    if family in ("quasidiagonal", "quasi-diagonal"):
        return enumerate_quasidiagonal_weights(normalization)
    raise DomainError(f"unknown family {family!r}; expected 'fermat' or 'quasidiagonal'")


def default_atlas_path(family: str) -> Path:
    base = Path(os.environ.get(ATLAS_DIR_ENV, "."))
    return base / f"atlas-{family.lower()}.json"
