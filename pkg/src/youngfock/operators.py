"""Operator families on the diagram Fock space.

Box-weight ladder operators (``kerov_*``), their rim-hook generalization,
oscillator-quadratic operators (``virasoro``), the M-fold generalization
(``m_virasoro``), truncated exponentials of raising operators, and a
commutator test harness.

Frozen conventions, each pinned by a low-degree oracle and exercised by
the test suite:

* Parameter map between the box-weight and oscillator pictures:
  ``alpha = (z + w) / 2`` and ``gamma = (w - z) / 2``.  The sign of gamma
  is forced by requiring the k = 1 raising mode to act on the empty
  diagram with coefficient z (the opposite sign gives w).

* The mode-(-k) raising operator moves one particle k steps right with
  coefficient ``(alpha - gamma*k) + start + k/2``; the mode-(+k)
  lowering operator moves one particle k steps left with coefficient
  ``(alpha + gamma*k) + start - k/2`` (start = coordinate before the
  jump), times the sign (-1)**(height-1) carried by the wedge.

* Zero mode: ``virasoro(0)`` acts as ``(alpha_c**2 - gamma**2)/2 +
  degree`` where ``alpha_c = alpha + charge``.  The halved constant is
  the unique choice consistent with the bracket
  [L_1, L_-1] = 2 L_0 and with the box-weight diagonal z*w + 2|lam|.

* The zero boson mode inside quadratic operators acts as alpha plus the
  sector charge, which makes the jump coefficients charge-independent.

* Rim-hook ladder operators at length r match the oscillator modes with
  ``alpha = r(z+w)/2`` up to the overall scalar r:
  ``virasoro(-r) = r * rimhook_kerov(r, "raise")`` and likewise for
  lowering.

* M-fold quadratic sums run over ordered index tuples weighted 1/M!
  (equivalently multisets weighted by inverse multiplicity factorials);
  this is the unique weighting that reproduces ``virasoro`` at M = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .fock import FockVector, MayaState, boson_moves, vacuum
from .partitions import (
    Partition,
    addable_boxes,
    add_box,
    partitions_of,
    remove_box,
    removable_boxes,
    rim_hooks_addable,
    rim_hooks_removable,
)
from .rings import Poly, Scalar, is_zero, scalar_to_json


@dataclass(frozen=True)
class KerovParams:
    z: Scalar = Fraction(0)
    w: Scalar = Fraction(0)


@dataclass(frozen=True)
class VirasoroParams:
    alpha: Scalar = Fraction(0)
    gamma: Scalar = Fraction(0)


def virasoro_params_from_kerov(p: KerovParams) -> VirasoroParams:
    """alpha = (z+w)/2, gamma = (w-z)/2; gamma's sign frozen by the k=1 oracle."""
    half = Fraction(1, 2)
    return VirasoroParams(alpha=(p.z + p.w) * half, gamma=(p.w - p.z) * half)


def virasoro_params_for_rimhook(p: KerovParams, r: int) -> VirasoroParams:
    """Parameters matching length-r hook operators: alpha scales with r."""
    half = Fraction(1, 2)
    return VirasoroParams(alpha=(p.z + p.w) * Fraction(r, 2), gamma=(p.w - p.z) * half)


def rimhook_scale(r: int) -> int:
    """virasoro(-r) = rimhook_scale(r) * rimhook_kerov(r, "raise") under
    virasoro_params_for_rimhook; frozen by the degree <= 2 oracle run."""
    return r


# ---------------------------------------------------------------------------
# box-weight ladder operators
# ---------------------------------------------------------------------------

def kerov_U(p: KerovParams, v: FockVector) -> FockVector:
    """Add one box with weight z + content."""
    def act(state: MayaState):
        lam = state.to_partition()
        return [
            (MayaState.from_partition(add_box(lam, b)), p.z + b.content)
            for b in addable_boxes(lam)
        ]
    return v.linear_apply(act)


def kerov_D(p: KerovParams, v: FockVector) -> FockVector:
    """Remove one box with weight w + content."""
    def act(state: MayaState):
        lam = state.to_partition()
        return [
            (MayaState.from_partition(remove_box(lam, b)), p.w + b.content)
            for b in removable_boxes(lam)
        ]
    return v.linear_apply(act)


def kerov_L(p: KerovParams, v: FockVector) -> FockVector:
    """Diagonal operator z*w + 2|lam|."""
    def act(state: MayaState):
        lam = state.to_partition()
        return [(state, p.z * p.w + 2 * lam.size)]
    return v.linear_apply(act)


def _hook_sign(height: int) -> int:
    return -1 if (height - 1) % 2 else 1


def _diagonal_hook_constant(r: int, p: KerovParams) -> Scalar:
    # sum over the r vacuum jumps of (z + u)(w + u); pinned by requiring
    # [D_r, U_r] to equal the diagonal operator on the vacuum.
    total: Scalar = Fraction(0)
    for j in range(1, r + 1):
        u = Fraction(1, 2) + Fraction(1 - 2 * j, 2 * r)
        total = total + (p.z + u) * (p.w + u)
    return total


def rimhook_kerov(r: int, direction: str, p: KerovParams, v: FockVector) -> FockVector:
    """Length-r hook ladder operators as induced particle jumps.

    Raising jumps a particle from coordinate x to x + r with weight
    z + x/r + 1/2; lowering jumps to x - r with weight w + x/r - 1/2;
    both pick up the wedge sign (-1)**(height-1).  The diagonal member
    acts by 2|lam|/r plus a constant fixed so that it equals
    [lowering, raising]; the naive per-particle sum over the infinite
    sea diverges and the commutator pins its finite part.
    """
    if r < 1:
        raise ValueError("hook length must be positive")
    if direction == "raise":
        def act(state: MayaState):
            lam = state.to_partition()
            out = []
            for mv in rim_hooks_addable(lam, r):
                coeff = p.z + mv.start.as_fraction() / r + Fraction(1, 2)
                out.append((MayaState.from_partition(mv.result), coeff * _hook_sign(mv.height)))
            return out
    elif direction == "lower":
        def act(state: MayaState):
            lam = state.to_partition()
            out = []
            for mv in rim_hooks_removable(lam, r):
                coeff = p.w + mv.start.as_fraction() / r - Fraction(1, 2)
                out.append((MayaState.from_partition(mv.result), coeff * _hook_sign(mv.height)))
            return out
    elif direction == "diagonal":
        const = _diagonal_hook_constant(r, p)
        def act(state: MayaState):
            lam = state.to_partition()
            return [(state, const + Fraction(2 * lam.size, r))]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return v.linear_apply(act)


# ---------------------------------------------------------------------------
# oscillator-quadratic operators
# ---------------------------------------------------------------------------

def _norm_scalar(a: Scalar) -> Scalar:
    if isinstance(a, Poly):
        return a
    return Fraction(a)


def _acc(acc: Dict[MayaState, Scalar], state: MayaState, coeff: Scalar) -> None:
    cur = acc.get(state)
    cur = coeff if cur is None else cur + coeff
    if is_zero(cur):
        acc.pop(state, None)
    else:
        acc[state] = cur


def _sorted_items(acc: Dict[MayaState, Scalar]) -> Tuple[Tuple[MayaState, Scalar], ...]:
    return tuple((s, acc[s]) for s in sorted(acc, key=MayaState.sort_key))


@lru_cache(maxsize=None)
def _virasoro_state(k: int, alpha: Scalar, gamma: Scalar, state: MayaState):
    """Mode-k action on one basis state, from the quadratic boson sum."""
    d = state.degree
    a0 = alpha + state.charge
    acc: Dict[MayaState, Scalar] = {}
    if k == 0:
        _acc(acc, state, (a0 * a0 - gamma * gamma) * Fraction(1, 2))
        for j in range(1, d + 1):
            for s1, sign1 in boson_moves(j, state):
                for s2, sign2 in boson_moves(-j, s1):
                    _acc(acc, s2, Fraction(sign1 * sign2))
        return _sorted_items(acc)
    # linear part: the modified term plus the two zero-mode pairings
    lead = gamma * k + a0
    for s1, sign in boson_moves(k, state):
        _acc(acc, s1, lead * sign)
    half = Fraction(1, 2)
    for j in range(k - d, d + 1):
        m = k - j
        if j == 0 or m == 0:
            continue
        first, second = (m, j) if (j < 0 < m) else (j, m)  # annihilator first
        for s1, sign1 in boson_moves(first, state):
            for s2, sign2 in boson_moves(second, s1):
                _acc(acc, s2, half * Fraction(sign1 * sign2))
    return _sorted_items(acc)


def virasoro(k: int, p: VirasoroParams, v: FockVector, trunc: int) -> FockVector:
    """Oscillator mode: gamma*k*a_k plus half the normally ordered
    quadratic sum; the zero mode uses the halved constant (see module
    docstring).  Exact; ``trunc`` must cover degree(v) + |k|.
    """
    if trunc < v.degree() + abs(k):
        raise ValueError(
            f"truncation {trunc} insufficient for degree {v.degree()} + |{k}|"
        )
    alpha, gamma = _norm_scalar(p.alpha), _norm_scalar(p.gamma)
    return v.linear_apply(lambda s: _virasoro_state(k, alpha, gamma, s))


def _descending_tuples(length: int, total: int, bound: int, pos_budget: int, cap: int):
    """Descending integer tuples in [-bound, cap] summing to total, with
    the positive entries summing to at most pos_budget."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for head in range(min(cap, bound), -bound - 1, -1):
        rest = total - head
        # remaining entries are each <= head and >= -bound
        if rest > head * (length - 1) or rest < -bound * (length - 1):
            continue
        budget = pos_budget - max(head, 0)
        if budget < 0:
            continue
        for tail in _descending_tuples(length - 1, rest, bound, budget, head):
            yield (head,) + tail


@lru_cache(maxsize=None)
def _m_virasoro_state(order: int, k: int, alpha: Scalar, gamma: Scalar, state: MayaState):
    d = state.degree
    a0 = alpha + state.charge
    acc: Dict[MayaState, Scalar] = {}
    if k != 0:
        for s1, sign in boson_moves(k, state):
            _acc(acc, s1, gamma * k * sign)
    elif order == 2:
        # zero-mode constant shared with virasoro(0) so M = 2 matches exactly
        _acc(acc, state, -(gamma * gamma) * Fraction(1, 2))
    bound = d + abs(k)
    for tup in _descending_tuples(order, k, bound, d, bound):
        weight = Fraction(1)
        run = 1
        for i in range(1, len(tup) + 1):
            if i < len(tup) and tup[i] == tup[i - 1]:
                run += 1
            else:
                weight /= math.factorial(run)
                run = 1
        coeff: Scalar = weight
        for _ in range(sum(1 for t in tup if t == 0)):
            coeff = coeff * a0
        indices = [t for t in tup if t != 0]
        # descending order puts annihilators (positive indices) first
        current: Dict[MayaState, int] = {state: 1}
        dead = False
        for idx in indices:
            nxt: Dict[MayaState, int] = {}
            for s, sgn in current.items():
                for s2, sgn2 in boson_moves(idx, s):
                    nxt[s2] = nxt.get(s2, 0) + sgn * sgn2
            current = {s: g for s, g in nxt.items() if g}
            if not current:
                dead = True
                break
        if dead:
            continue
        for s, g in current.items():
            _acc(acc, s, coeff * g)
    return _sorted_items(acc)


def m_virasoro(order: int, k: int, p: VirasoroParams, v: FockVector, trunc: int) -> FockVector:
    """M-fold generalization: gamma*k*a_k plus the 1/M!-weighted normally
    ordered sum over index tuples with total k.

    Any tuple whose annihilating part exceeds the vector's degree kills
    it, so indices are enumerated inside [-(trunc+|k|), trunc+|k|]; the
    grading argument makes this exact.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if trunc < v.degree() + abs(k):
        raise ValueError(
            f"truncation {trunc} insufficient for degree {v.degree()} + |{k}|"
        )
    alpha, gamma = _norm_scalar(p.alpha), _norm_scalar(p.gamma)
    return v.linear_apply(lambda s: _m_virasoro_state(order, k, alpha, gamma, s))


# ---------------------------------------------------------------------------
# operator families and exponentials
# ---------------------------------------------------------------------------

class BosonFamily:
    """Heisenberg modes a_{+-k}."""

    def apply_raising(self, k: int, v: FockVector) -> FockVector:
        from .fock import boson
        return boson(-k, v, v.degree() + k)

    def apply_lowering(self, k: int, v: FockVector) -> FockVector:
        from .fock import boson
        return boson(k, v, v.degree() + k)

    def adjoint(self) -> "BosonFamily":
        return self

    def __repr__(self):
        return "BosonFamily()"


@dataclass(frozen=True)
class VirasoroFamily:
    params: VirasoroParams

    def apply_raising(self, k: int, v: FockVector) -> FockVector:
        return virasoro(-k, self.params, v, v.degree() + k)

    def apply_lowering(self, k: int, v: FockVector) -> FockVector:
        return virasoro(k, self.params, v, v.degree() + k)

    def adjoint(self) -> "VirasoroFamily":
        # a_k* = a_{-k} turns mode k into mode -k and flips gamma
        return VirasoroFamily(VirasoroParams(self.params.alpha, -self.params.gamma))


@dataclass(frozen=True)
class MVirasoroFamily:
    order: int
    params: VirasoroParams

    def apply_raising(self, k: int, v: FockVector) -> FockVector:
        return m_virasoro(self.order, -k, self.params, v, v.degree() + k)

    def apply_lowering(self, k: int, v: FockVector) -> FockVector:
        return m_virasoro(self.order, k, self.params, v, v.degree() + k)

    def adjoint(self) -> "MVirasoroFamily":
        return MVirasoroFamily(self.order, VirasoroParams(self.params.alpha, -self.params.gamma))


@dataclass(frozen=True)
class RimHookKerovFamily:
    params: KerovParams

    def apply_raising(self, k: int, v: FockVector) -> FockVector:
        return rimhook_kerov(k, "raise", self.params, v)

    def apply_lowering(self, k: int, v: FockVector) -> FockVector:
        return rimhook_kerov(k, "lower", self.params, v)

    def adjoint(self) -> "RimHookKerovFamily":
        # the adjoint of the lowering jump with weight w + x/r - 1/2 is the
        # raising jump with weight w + x/r + 1/2, i.e. z and w trade places
        return RimHookKerovFamily(KerovParams(z=self.params.w, w=self.params.z))


Family = Union[BosonFamily, VirasoroFamily, MVirasoroFamily, RimHookKerovFamily]


def exp_raising(terms: Mapping[int, Scalar], family: Family, v: FockVector, max_degree: int) -> FockVector:
    """sum_m (1/m!) (sum_k terms[k] * Op_{-k})**m v, truncated by degree.

    Every operator strictly raises degree, so dropping components above
    the bound is exact and the sum terminates.
    """
    active = {k: c for k, c in terms.items() if not is_zero(c)}
    for k in active:
        if k < 1:
            raise ValueError(f"non-raising mode {k} in exponential")
    result = v.truncate(max_degree)
    current = result
    m = 0
    while current:
        m += 1
        step = FockVector.zero()
        for k in sorted(active):
            step = step + family.apply_raising(k, current).scale(active[k])
        current = step.truncate(max_degree).scale(Fraction(1, m))
        result = result + current
    return result


def exp_lowering_bra(terms: Mapping[int, Scalar], family: Family, lam: Partition, max_degree: int) -> Scalar:
    """<vac| exp(sum_k terms[k] * Op_{+k}) |lam>, via the adjoint action.

    Equals the lam-coefficient of exp(sum_k terms[k] * Op_k^adj) applied
    to the vacuum; finite and exact by the grading.
    """
    if lam.size > max_degree:
        raise ValueError(f"degree bound {max_degree} below |lam| = {lam.size}")
    vec = exp_raising(terms, family.adjoint(), vacuum(), lam.size)
    return vec.coefficient_of_partition(lam)


# ---------------------------------------------------------------------------
# uniform operator handles + commutator harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorSpec:
    """Uniform handle for one graded operator."""

    family: str
    k: int = 0
    r: int = 1
    direction: str = ""
    order: int = 2
    kerov: Optional[KerovParams] = None
    virasoro: Optional[VirasoroParams] = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def kerov_u(cls, p: KerovParams) -> "OperatorSpec":
        return cls(family="kerov_u", kerov=p)

    @classmethod
    def kerov_l(cls, p: KerovParams) -> "OperatorSpec":
        return cls(family="kerov_l", kerov=p)

    @classmethod
    def kerov_d(cls, p: KerovParams) -> "OperatorSpec":
        return cls(family="kerov_d", kerov=p)

    @classmethod
    def rimhook(cls, r: int, direction: str, p: KerovParams) -> "OperatorSpec":
        return cls(family="rimhook", r=r, direction=direction, kerov=p)

    @classmethod
    def boson_op(cls, k: int) -> "OperatorSpec":
        return cls(family="boson", k=k)

    @classmethod
    def virasoro_op(cls, k: int, p: VirasoroParams) -> "OperatorSpec":
        return cls(family="virasoro", k=k, virasoro=p)

    @classmethod
    def m_virasoro_op(cls, order: int, k: int, p: VirasoroParams) -> "OperatorSpec":
        return cls(family="m_virasoro", k=k, order=order, virasoro=p)

    # -- behaviour -------------------------------------------------------------

    @property
    def degree_shift(self) -> int:
        if self.family == "kerov_u":
            return 1
        if self.family == "kerov_d":
            return -1
        if self.family == "kerov_l":
            return 0
        if self.family == "rimhook":
            return {"raise": self.r, "lower": -self.r, "diagonal": 0}[self.direction]
        if self.family in ("boson", "virasoro", "m_virasoro"):
            return -self.k
        raise ValueError(f"operator family {self.family!r} is not graded")

    def apply(self, v: FockVector, trunc: Optional[int] = None) -> FockVector:
        if trunc is None:
            trunc = v.degree() + abs(self.degree_shift)
        if self.family == "kerov_u":
            return kerov_U(self.kerov, v)
        if self.family == "kerov_l":
            return kerov_L(self.kerov, v)
        if self.family == "kerov_d":
            return kerov_D(self.kerov, v)
        if self.family == "rimhook":
            return rimhook_kerov(self.r, self.direction, self.kerov, v)
        if self.family == "boson":
            from .fock import boson
            return boson(self.k, v, trunc)
        if self.family == "virasoro":
            return virasoro(self.k, self.virasoro, v, trunc)
        if self.family == "m_virasoro":
            return m_virasoro(self.order, self.k, self.virasoro, v, trunc)
        raise ValueError(f"unknown operator family {self.family!r}")

    def to_json(self):
        out = {"family": self.family}
        if self.family == "boson" or self.family in ("virasoro", "m_virasoro"):
            out["k"] = self.k
        if self.family == "m_virasoro":
            out["order"] = self.order
        if self.family == "rimhook":
            out["r"] = self.r
            out["direction"] = self.direction
        if self.kerov is not None:
            out["z"] = scalar_to_json(self.kerov.z)
            out["w"] = scalar_to_json(self.kerov.w)
        if self.virasoro is not None:
            out["alpha"] = scalar_to_json(self.virasoro.alpha)
            out["gamma"] = scalar_to_json(self.virasoro.gamma)
        return out


ExpectedCombo = Sequence[Tuple[Scalar, Optional[OperatorSpec]]]


@dataclass(frozen=True)
class CommutatorReport:
    lhs: OperatorSpec
    rhs: OperatorSpec
    degree: int
    discrepancies: Tuple[Tuple[Partition, FockVector], ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json(self):
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "degree": self.degree,
            "discrepancies": [
                {"basis": lam.to_json(), "delta": delta.to_json()}
                for lam, delta in self.discrepancies
            ],
        }


def commutator_check(a: OperatorSpec, b: OperatorSpec, expected: ExpectedCombo, degree: int) -> CommutatorReport:
    """Evaluate [a, b]v - expected(v) on every basis vector up to degree.

    Empty discrepancy list means the identity holds exactly there.
    """
    sa, sb = abs(a.degree_shift), abs(b.degree_shift)
    trunc = degree + sa + sb
    found: List[Tuple[Partition, FockVector]] = []
    for d in range(degree + 1):
        for lam in partitions_of(d):
            v = FockVector.from_partition(lam)
            lhs = a.apply(b.apply(v, trunc), trunc) - b.apply(a.apply(v, trunc), trunc)
            rhs = FockVector.zero()
            for coeff, op in expected:
                if is_zero(coeff):
                    continue
                rhs = rhs + (op.apply(v, trunc) if op is not None else v).scale(coeff)
            delta = lhs - rhs
            if delta:
                found.append((lam, delta))
    return CommutatorReport(lhs=a, rhs=b, degree=degree, discrepancies=tuple(found))
