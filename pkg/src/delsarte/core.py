"""Weight systems and Delsarte exponent matrices.

A weighted Delsarte threefold is the hypersurface in P^4(q_0, ..., q_4) cut
out by five monomials, one per row of a 5x5 exponent matrix ``A``::

    sum_i  x_0^{a_i0} x_1^{a_i1} ... x_4^{a_i4} = 0

Only the combinatorial data is modelled. Quasi-smoothness of the hypersurface
is assumed, never checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Mapping, Optional, Sequence

from .arith import is_prime
from .errors import AtlasFormatError, ConstructionError
from .linalg import IntMatrix, adjugate, as_matrix, determinant

FERMAT = "Fermat"
GENERAL = "General"
QUASI_DIAGONAL = "QuasiDiagonalChain"

QUASI_SMOOTH_DISCLAIMER = (
    "quasi-smoothness is not checked; results assume the hypersurface is quasi-smooth"
)

# row -> column of the extra linear factor, for the chain/loop shapes
SHAPES: dict[str, dict[int, int]] = {
    "x0^m0*x1": {0: 1},
    "x0^m0*x2": {0: 2},
    "x1^m1*x2": {1: 2},
    "x3*x4^m4": {4: 3},
    "loop(0,1)": {0: 1, 1: 0},
    "loop(0,2)": {0: 2, 2: 0},
    "loop(0,1,2)": {0: 1, 1: 2, 2: 0},
}


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``(q_0, ..., q_4)`` and a degree ``m``."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        w = tuple(int(q) for q in self.weights)
        if len(w) != 5:
            raise ConstructionError(f"expected 5 weights, got {len(w)}")
        if any(q < 1 for q in w):
            raise ConstructionError(f"weights must be positive: {w}")
        if self.degree < 1:
            raise ConstructionError(f"degree must be positive: {self.degree}")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "degree", int(self.degree))

    @classmethod
    def calabi_yau(cls, weights: Sequence[int]) -> WeightSystem:
        """Weight system whose degree is the sum of the weights."""
        return cls(tuple(weights), sum(weights))

    @property
    def is_calabi_yau(self) -> bool:
        return sum(self.weights) == self.degree

    def well_formed_defects(self) -> list[tuple[int, int]]:
        """Pairs (i, g) where the weights other than q_i share the factor g > 1."""
        w = self.weights
        out = []
        for i in range(5):
            g = gcd(*(w[:i] + w[i + 1:]))
            if g != 1:
                out.append((i, g))
        return out

    @property
    def is_well_formed(self) -> bool:
        return not self.well_formed_defects()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DelsarteThreefold:
    weights: WeightSystem
    matrix: IntMatrix
    family: str = GENERAL
    reference_hodge: Optional[tuple[int, int]] = field(default=None, compare=False)

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape != (5, 5):
            raise ConstructionError(f"exponent matrix must be 5x5, got {m.shape}")
        object.__setattr__(self, "matrix", m)
        if self.reference_hodge is not None:
            h11, h12 = self.reference_hodge
            object.__setattr__(self, "reference_hodge", (int(h11), int(h12)))

    @property
    def degree(self) -> int:
        return self.weights.degree

    @cached_property
    def det(self) -> int:
        return determinant(self.matrix)

    @property
    def d(self) -> int:
        """|det A|, the degree of the covering Fermat threefold."""
        return abs(self.det)

    @property
    def is_calabi_yau(self) -> bool:
        return self.weights.is_calabi_yau

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights.weights),
            "degree": self.degree,
            "matrix": self.matrix.tolist(),
            "family": self.family,
            "reference_hodge": list(self.reference_hodge) if self.reference_hodge else None,
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> DelsarteThreefold:
        try:
            ws = WeightSystem(tuple(doc["weights"]), doc["degree"])
            hodge = doc.get("reference_hodge")
            return cls(ws, as_matrix(doc["matrix"]), doc.get("family", GENERAL),
                       tuple(hodge) if hodge else None)
        except (KeyError, TypeError, ValueError) as exc:
            raise AtlasFormatError(f"malformed threefold document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> DelsarteThreefold:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise AtlasFormatError(f"line {exc.lineno}: {exc.msg}") from exc
        return cls.from_dict(doc)


def validate(x: DelsarteThreefold, p: Optional[int] = None) -> ValidationReport:
    """Check the matrix conditions (i)-(iv), well-formedness and, given p, p-compatibility.

    Matrix validity does not depend on p; the p-dependent clauses of (i) and
    (ii) are only checked when p is supplied.
    """
    a = x.matrix
    q = x.weights.weights
    m = x.degree
    bad = []
    for i in range(5):
        for j in range(5):
            if a[i, j] < 0:
                bad.append(f"(i) negative entry a[{i}][{j}] = {a[i, j]}")
    for i in range(5):
        s = sum(q[j] * a[i, j] for j in range(5))
        if s != m:
            bad.append(f"(iii) row {i} has weighted degree {s} != m = {m}")
    for j in range(5):
        if all(a[i, j] != 0 for i in range(5)):
            bad.append(f"(iv) column {j} has no zero entry")
    if x.det == 0:
        bad.append("(ii) det A = 0")
    for i, g in x.weights.well_formed_defects():
        bad.append(f"weights not well-formed: gcd of weights omitting q_{i} is {g}")
    if p is not None:
        if not is_prime(p):
            bad.append(f"p = {p} is not prime")
        else:
            for i in range(5):
                for j in range(5):
                    if a[i, j] > 0 and a[i, j] % p == 0:
                        bad.append(f"(i) p divides nonzero entry a[{i}][{j}] = {a[i, j]}")
            if x.det % p == 0:
                bad.append(f"(ii) p divides det A = {x.det}")
            if m % p == 0:
                bad.append(f"p divides m = {m}")
            for i, qi in enumerate(q):
                if qi % p == 0:
                    bad.append(f"p divides q_{i} = {qi}")
    notes = (QUASI_SMOOTH_DISCLAIMER,) if x.family == GENERAL else ()
    return ValidationReport(tuple(bad), notes)


def from_fermat(q: WeightSystem | Sequence[int], reference_hodge=None) -> DelsarteThreefold:
    """Diagonal threefold x_0^{m/q_0} + ... + x_4^{m/q_4}.

    A bare weight tuple is read as a Calabi-Yau weight system.
    """
    if not isinstance(q, WeightSystem):
        q = WeightSystem.calabi_yau(q)
    m = q.degree
    for i, qi in enumerate(q.weights):
        if m % qi:
            raise ConstructionError(f"not Fermat-realizable: q_{i} = {qi} does not divide m = {m}")
    return DelsarteThreefold(q, IntMatrix.diagonal([m // qi for qi in q.weights]), FERMAT,
                             reference_hodge)


def from_quasidiagonal(q: WeightSystem | Sequence[int], exponents: Optional[Sequence[int]] = None,
                       reference_hodge=None) -> DelsarteThreefold:
    """Threefold x_0^{m_0} x_1 + x_1^{m_1} + x_2^{m_2} + x_3^{m_3} + x_4^{m_4}.

    Exponents are inferred from the weights when omitted.
    """
    if not isinstance(q, WeightSystem):
        q = WeightSystem.calabi_yau(q)
    return from_links(q, {0: 1}, exponents, reference_hodge)


def from_links(q: WeightSystem | Sequence[int], links: Mapping[int, int],
               exponents: Optional[Sequence[int]] = None, reference_hodge=None) -> DelsarteThreefold:
    """Chain/loop threefold: row i is x_i^{m_i}, times x_j when ``links[i] == j``.

    Covers every shape in ``SHAPES``. The degree identity
    ``q_i m_i + q_{links[i]} = m`` (or ``q_i m_i = m`` for unlinked rows) must
    hold exactly.
    """
    if not isinstance(q, WeightSystem):
        q = WeightSystem.calabi_yau(q)
    w, m = q.weights, q.degree
    links = dict(links)
    if any(not (0 <= i < 5 and 0 <= j < 5 and i != j) for i, j in links.items()):
        raise ConstructionError(f"invalid links {links}")
    if exponents is None:
        exponents = []
        for i in range(5):
            rest = m - (w[links[i]] if i in links else 0)
            if rest <= 0 or rest % w[i]:
                raise ConstructionError(f"no integral exponent for row {i} with weights {w}, m = {m}")
            exponents.append(rest // w[i])
    exponents = [int(e) for e in exponents]
    if len(exponents) != 5 or any(e < 1 for e in exponents):
        raise ConstructionError(f"need five positive exponents, got {exponents}")
    rows = []
    for i in range(5):
        row = [0] * 5
        row[i] = exponents[i]
        if i in links:
            row[links[i]] += 1
        s = sum(wj * aj for wj, aj in zip(w, row))
        if s != m:
            raise ConstructionError(f"degree identity fails in row {i}: weighted degree {s} != m = {m}")
        rows.append(tuple(row))
    if links == {0: 1}:
        family = QUASI_DIAGONAL
    else:
        family = f"{QUASI_DIAGONAL}({','.join(f'{i}->{j}' for i, j in sorted(links.items()))})"
    return DelsarteThreefold(q, IntMatrix(tuple(rows)), family, reference_hodge)


def weights_for_matrix(a) -> WeightSystem:
    """The primitive weight system making every row of ``a`` homogeneous of one degree.

    Solves ``A q = m (1, ..., 1)`` over the rationals; raises when the
    solution is not strictly positive.
    """
    a = as_matrix(a)
    det = determinant(a)
    if det == 0:
        raise ConstructionError("singular exponent matrix")
    # A^{-1} 1 is proportional to adj(A) 1 with sign det
    raw = [v if det > 0 else -v for v in adjugate(a).apply([1] * a.ncols)]
    if any(v <= 0 for v in raw):
        raise ConstructionError(f"exponent matrix admits no positive weights: {raw}")
    g = gcd(*raw)
    q = tuple(v // g for v in raw)
    degrees = {sum(qj * aij for qj, aij in zip(q, row)) for row in a.rows}
    assert len(degrees) == 1
    return WeightSystem(q, degrees.pop())


def links_from_exponents(exponents: Sequence[int], links: Mapping[int, int]) -> DelsarteThreefold:
    """Build a chain/loop threefold from exponents alone, deriving its weights."""
    rows = []
    for i, e in enumerate(exponents):
        row = [0] * 5
        row[i] = e
        if i in links:
            row[links[i]] += 1
        rows.append(row)
    ws = weights_for_matrix(rows)
    return from_links(ws, links, exponents)
