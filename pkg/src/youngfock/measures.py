"""Weights of Schur / Virasoro / M-Virasoro measures and brute-force
correlation functions of the induced point process.

Measure parameters are Miwa coordinates: ``x`` with generating function
exp(sum_k x_k t**k) for the complete-homogeneous sequence.  Weights are
ring elements, not probabilities; nothing here enforces positivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping

from .fock import FockVector, vacuum
from .operators import (
    BosonFamily,
    KerovParams,
    MVirasoroFamily,
    VirasoroFamily,
    VirasoroParams,
    exp_raising,
)
from .partitions import HalfInt, Partition, contains_particle, partitions_up_to
from .rings import Scalar, divexact, is_zero, scalar_to_json, series_exp


@dataclass
class MiwaParams:
    """Finite maps k -> coefficient for the two parameter sets."""

    x: Dict[int, Scalar] = field(default_factory=dict)
    y: Dict[int, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        self.x = {int(k): v for k, v in self.x.items() if not is_zero(v)}
        self.y = {int(k): v for k, v in self.y.items() if not is_zero(v)}
        for k in list(self.x) + list(self.y):
            if k < 1:
                raise ValueError(f"Miwa index {k} must be >= 1")


@dataclass
class MeasureSpec:
    """What to tabulate: the measure kind, its parameters, and the degree
    bound of the table."""

    kind: str  # "schur" | "virasoro" | "m-virasoro"
    params: MiwaParams
    kerov: KerovParams = field(default_factory=KerovParams)
    truncation: int = 0
    m_order: int = 2
    gamma: Scalar = Fraction(0)  # extra knob for the m-virasoro kind only

    def __post_init__(self):
        if self.kind not in ("schur", "virasoro", "m-virasoro"):
            raise ValueError(f"unknown measure kind {self.kind!r}")
        if self.truncation < 0:
            raise ValueError("truncation must be >= 0")


@dataclass
class WeightTable:
    """Unnormalized weights of every diagram up to the degree bound."""

    kind: str
    degree: int
    weights: Dict[Partition, Scalar]
    z_trunc: Scalar

    def normalized(self, lam: Partition) -> Scalar:
        return divexact(self.weights[lam], self.z_trunc)

    def partitions(self) -> List[Partition]:
        return partitions_up_to(self.degree)

    def to_json(self):
        rows = []
        for lam in self.partitions():
            w = self.weights[lam]
            row = {"partition": lam.to_json(), "weight": scalar_to_json(w)}
            try:
                row["normalized"] = scalar_to_json(self.normalized(lam))
            except (ValueError, ZeroDivisionError):
                row["normalized"] = None
            rows.append(row)
        return {"kind": self.kind, "degree": self.degree,
                "z_trunc": scalar_to_json(self.z_trunc), "weights": rows}

    def to_csv_rows(self) -> List[List[str]]:
        out = [["partition", "weight", "normalized"]]
        for row in self.to_json()["weights"]:
            norm = row["normalized"]
            out.append([
                str(row["partition"]),
                _flat(row["weight"]),
                _flat(norm) if norm is not None else "",
            ])
        return out


def _flat(value) -> str:
    if isinstance(value, dict):
        return "poly:" + ";".join(value["poly"])
    return str(value)


# ---------------------------------------------------------------------------
# Schur side
# ---------------------------------------------------------------------------

def complete_homogeneous(x: Mapping[int, Scalar], order: int) -> List[Scalar]:
    """Coefficients s_0..s_order of exp(sum_k x_k t**k)."""
    a: List[Scalar] = [Fraction(0)] * (order + 1)
    for k, c in x.items():
        if k <= order:
            a[k] = c
    return series_exp(a, order)


def _det(matrix: List[List[Scalar]]) -> Scalar:
    """Division-free determinant by memoized first-row expansion."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    memo: Dict[Tuple[int, ...], Scalar] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> Scalar:
        if row == n:
            return Fraction(1)
        key = cols
        got = memo.get(key)
        if got is not None:
            return got
        total: Scalar = Fraction(0)
        sign = 1
        for i, c in enumerate(cols):
            entry = matrix[row][c]
            if not is_zero(entry):
                sub = minor(row + 1, cols[:i] + cols[i + 1:])
                total = total + sign * entry * sub
            sign = -sign
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def schur_polynomial(lam: Partition, x: Mapping[int, Scalar]) -> Scalar:
    """s_lam in Miwa coordinates: det[s_(lam_i - i + j)] over the
    complete-homogeneous sequence."""
    rows = len(lam)
    if rows == 0:
        return Fraction(1)
    order = lam.part(1) + rows - 1
    h = complete_homogeneous(x, order)

    def entry(i: int, j: int) -> Scalar:
        idx = lam.part(i) - i + j
        if idx < 0:
            return Fraction(0)
        return h[idx]

    matrix = [[entry(i, j) for j in range(1, rows + 1)] for i in range(1, rows + 1)]
    return _det(matrix)


def schur_weight(lam: Partition, p: MiwaParams) -> Scalar:
    """Unnormalized product weight s_lam(x) * s_lam(y)."""
    return schur_polynomial(lam, p.x) * schur_polynomial(lam, p.y)


def schur_weight_by_operators(lam: Partition, p: MiwaParams) -> Scalar:
    """Same weight through the boson exponential; independent route."""
    fam = BosonFamily()
    ket = exp_raising(p.x, fam, vacuum(), lam.size)
    bra = exp_raising(p.y, fam, vacuum(), lam.size)
    return ket.coefficient_of_partition(lam) * bra.coefficient_of_partition(lam)


def cauchy_normalizer(p: MiwaParams, degree: int) -> Scalar:
    """Truncation of exp(sum_k k*x_k*y_k): the closed-form normalizer.

    Computed as a power series graded by diagram size, then summed, so it
    agrees exactly with the truncated weight sum of the Schur table.
    """
    a: List[Scalar] = [Fraction(0)] * (degree + 1)
    for k, cx in p.x.items():
        if k <= degree and k in p.y:
            a[k] = k * cx * p.y[k]
    coeffs = series_exp(a, degree)
    total: Scalar = Fraction(0)
    for c in coeffs:
        total = total + c
    return total


# ---------------------------------------------------------------------------
# table builders
# ---------------------------------------------------------------------------

def _table_from_factors(kind: str, degree: int, ket: FockVector, bra: FockVector) -> WeightTable:
    weights: Dict[Partition, Scalar] = {}
    total: Scalar = Fraction(0)
    for lam in partitions_up_to(degree):
        w = ket.coefficient_of_partition(lam) * bra.coefficient_of_partition(lam)
        weights[lam] = w
        total = total + w
    return WeightTable(kind=kind, degree=degree, weights=weights, z_trunc=total)


def schur_weight_table(spec: MeasureSpec) -> WeightTable:
    if spec.kind != "schur":
        raise ValueError("spec.kind must be schur")
    degree = spec.truncation
    weights = {lam: schur_weight(lam, spec.params) for lam in partitions_up_to(degree)}
    total: Scalar = Fraction(0)
    for w in weights.values():
        total = total + w
    return WeightTable(kind="schur", degree=degree, weights=weights, z_trunc=total)


def virasoro_weight_table(spec: MeasureSpec) -> WeightTable:
    """Weights <lam|exp(sum x_k L_{-k})|vac> <vac|exp(sum y_k L_k)|lam>.

    The ket side runs at (alpha=z, gamma=0) and the bra side at
    (alpha=w, gamma=0): the parametrization in which the per-jump factor
    is uniformly (z + position + k/2) across all mode lengths.
    """
    if spec.kind != "virasoro":
        raise ValueError("spec.kind must be virasoro")
    degree = spec.truncation
    ket_fam = VirasoroFamily(VirasoroParams(alpha=spec.kerov.z, gamma=Fraction(0)))
    bra_fam = VirasoroFamily(VirasoroParams(alpha=spec.kerov.w, gamma=Fraction(0))).adjoint()
    ket = exp_raising(spec.params.x, ket_fam, vacuum(), degree)
    bra = exp_raising(spec.params.y, bra_fam, vacuum(), degree)
    return _table_from_factors("virasoro", degree, ket, bra)


def m_virasoro_weight_table(spec: MeasureSpec) -> WeightTable:
    if spec.kind != "m-virasoro":
        raise ValueError("spec.kind must be m-virasoro")
    degree = spec.truncation
    ket_fam = MVirasoroFamily(spec.m_order, VirasoroParams(alpha=spec.kerov.z, gamma=spec.gamma))
    bra_fam = MVirasoroFamily(spec.m_order, VirasoroParams(alpha=spec.kerov.w, gamma=spec.gamma)).adjoint()
    ket = exp_raising(spec.params.x, ket_fam, vacuum(), degree)
    bra = exp_raising(spec.params.y, bra_fam, vacuum(), degree)
    return _table_from_factors("m-virasoro", degree, ket, bra)


def weight_table(spec: MeasureSpec) -> WeightTable:
    if spec.kind == "schur":
        return schur_weight_table(spec)
    if spec.kind == "virasoro":
        return virasoro_weight_table(spec)
    return m_virasoro_weight_table(spec)


# ---------------------------------------------------------------------------
# correlations
# ---------------------------------------------------------------------------

def correlation(points: Iterable[HalfInt], table: WeightTable) -> Scalar:
    """Probability that every listed position is occupied, within the
    truncated table: sum of normalized weights over matching diagrams."""
    pts = list(points)
    total: Scalar = Fraction(0)
    for lam in table.partitions():
        if all(contains_particle(lam, x) for x in pts):
            total = total + table.weights[lam]
    return divexact(total, table.z_trunc)
