"""Formal linear combinations over exact scalars; wedge-space operators.

States of the semi-infinite wedge are encoded canonically by their finite
deviation from the charge-0 vacuum: ``above`` holds occupied positive
positions, ``below`` holds vacated negative positions (both as doubled
odd integers, descending).  Creation/annihilation signs are counted
mechanically from the number of particles above the insertion point, so
the Murnaghan-Nakayama sign rule downstream is a theorem to test, not an
input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .partitions import HalfInt, Partition, partition_from_conf
from .rings import Scalar, is_zero, scalar_to_json


@dataclass(frozen=True)
class MayaState:
    """Charge sector plus finite deviation from the vacuum.

    ``above``: occupied positions > 0, ``below``: vacated positions < 0,
    both tuples of doubled odd integers in descending order.
    """

    above: Tuple[int, ...] = ()
    below: Tuple[int, ...] = ()

    def __post_init__(self):
        for d in self.above:
            if d <= 0 or d % 2 == 0:
                raise ValueError(f"bad occupied position double {d}")
        for d in self.below:
            if d >= 0 or d % 2 == 0:
                raise ValueError(f"bad vacated position double {d}")
        if tuple(sorted(self.above, reverse=True)) != self.above:
            raise ValueError("above must be sorted descending")
        if tuple(sorted(self.below, reverse=True)) != self.below:
            raise ValueError("below must be sorted descending")

    @property
    def charge(self) -> int:
        return len(self.above) - len(self.below)

    @property
    def degree(self) -> int:
        """Energy above the vacuum of the state's own charge sector."""
        c = self.charge
        twice = sum(self.above) - sum(self.below) - c * c
        return twice // 2

    def occupied(self, x: HalfInt) -> bool:
        d = x.doubled
        return d in self.above if d > 0 else d not in self.below

    def _occupied_d(self, d: int) -> bool:
        return d in self.above if d > 0 else d not in self.below

    def particles_above(self, x: HalfInt) -> int:
        """Number of occupied positions strictly greater than x."""
        d = x.doubled
        count = sum(1 for a in self.above if a > d)
        if d < 0:
            count += (-d - 1) // 2  # vacuum positions in (d, 0)
            count -= sum(1 for b in self.below if b > d)
        return count

    def insert(self, x: HalfInt) -> Optional[Tuple[int, "MayaState"]]:
        """Add a particle at x; None if occupied.  Returns (sign, state)."""
        d = x.doubled
        if self._occupied_d(d):
            return None
        sign = -1 if self.particles_above(x) % 2 else 1
        if d > 0:
            above = tuple(sorted(self.above + (d,), reverse=True))
            return sign, MayaState(above, self.below)
        below = tuple(b for b in self.below if b != d)
        return sign, MayaState(self.above, below)

    def remove(self, x: HalfInt) -> Optional[Tuple[int, "MayaState"]]:
        """Remove the particle at x; None if vacant.  Returns (sign, state)."""
        d = x.doubled
        if not self._occupied_d(d):
            return None
        sign = -1 if self.particles_above(x) % 2 else 1
        if d > 0:
            above = tuple(a for a in self.above if a != d)
            return sign, MayaState(above, self.below)
        below = tuple(sorted(self.below + (d,), reverse=True))
        return sign, MayaState(self.above, below)

    def sort_key(self):
        return (self.charge, self.degree, self.above, self.below)

    def to_partition(self) -> Partition:
        if self.charge != 0:
            raise ValueError(f"charge {self.charge} state is not a partition")
        lowest = self.below[-1] if self.below else 1
        prefix = [d for d in self.above]
        prefix += [d for d in range(-1, lowest - 1, -2) if d not in self.below]
        return partition_from_conf([HalfInt(d) for d in prefix], 0)

    @classmethod
    def from_partition(cls, lam: Partition, charge: int = 0) -> "MayaState":
        """State whose configuration is lam shifted into the given sector.

        Row i of the diagram sits at position lam_i - i + charge + 1/2;
        enough rows are listed that everything further down is a full sea.
        """
        rows = len(lam) + abs(charge) + 1
        pos = [2 * (lam.part(i) - i + charge) + 1 for i in range(1, rows + 1)]
        above = tuple(d for d in pos if d > 0)
        neg_occ = {d for d in pos if d < 0}
        lowest = pos[-1]
        below = tuple(d for d in range(-1, lowest, -2) if d not in neg_occ)
        return cls(above, below)

    def __str__(self):
        return f"Maya(charge={self.charge}, above={self.above}, below={self.below})"


VACUUM_STATE = MayaState()


class FockVector:
    """Finitely supported linear combination of Maya states.

    Zero coefficients are never stored; all keys share one charge.
    Immutable value semantics.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[MayaState, Scalar], Iterable[Tuple[MayaState, Scalar]], None] = None):
        data: Dict[MayaState, Scalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for state, coeff in items:
                if is_zero(coeff):
                    continue
                if state in data:
                    coeff = data[state] + coeff
                    if is_zero(coeff):
                        del data[state]
                        continue
                data[state] = coeff
        charges = {s.charge for s in data}
        if len(charges) > 1:
            raise ValueError(f"mixed charge sectors {sorted(charges)}")
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("FockVector is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def basis(cls, state: MayaState) -> "FockVector":
        return cls({state: Fraction(1)})

    @classmethod
    def from_partition(cls, lam: Partition, coeff: Scalar = Fraction(1)) -> "FockVector":
        return cls({MayaState.from_partition(lam): coeff})

    @classmethod
    def from_partition_terms(cls, terms: Mapping[Partition, Scalar]) -> "FockVector":
        return cls({MayaState.from_partition(lam): c for lam, c in terms.items()})

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[Tuple[MayaState, Scalar]]:
        for state in sorted(self._terms, key=MayaState.sort_key):
            yield state, self._terms[state]

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def charge(self) -> Optional[int]:
        for s in self._terms:
            return s.charge
        return None

    def degree(self) -> int:
        """Largest degree among supported states; 0 for the zero vector."""
        return max((s.degree for s in self._terms), default=0)

    def coefficient(self, state: MayaState) -> Scalar:
        return self._terms.get(state, Fraction(0))

    def coefficient_of_partition(self, lam: Partition) -> Scalar:
        return self.coefficient(MayaState.from_partition(lam))

    def as_partition_dict(self) -> Dict[Partition, Scalar]:
        return {s.to_partition(): c for s, c in self._terms.items()}

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        out = dict(self._terms)
        for s, c in other._terms.items():
            acc = out.get(s)
            acc = c if acc is None else acc + c
            if is_zero(acc):
                out.pop(s, None)
            else:
                out[s] = acc
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, coeff: Scalar) -> "FockVector":
        if is_zero(coeff):
            return FockVector()
        return FockVector({s: coeff * c for s, c in self._terms.items()})

    def __rmul__(self, coeff: Scalar) -> "FockVector":
        return self.scale(coeff)

    def __neg__(self) -> "FockVector":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self._terms == other._terms

    def truncate(self, max_degree: int) -> "FockVector":
        return FockVector({s: c for s, c in self._terms.items() if s.degree <= max_degree})

    def linear_apply(self, fn) -> "FockVector":
        """Extend ``fn: state -> iterable of (state, scalar)`` linearly."""
        out: Dict[MayaState, Scalar] = {}
        for state, coeff in self._terms.items():
            for new_state, c in fn(state):
                acc = out.get(new_state)
                term = coeff * c
                acc = term if acc is None else acc + term
                if is_zero(acc):
                    out.pop(new_state, None)
                else:
                    out[new_state] = acc
        return FockVector(out)

    def __repr__(self):
        inner = ", ".join(f"{s}: {c}" for s, c in self.terms())
        return f"FockVector({{{inner}}})"

    def to_json(self):
        charge = self.charge if self.charge is not None else 0
        entries = []
        for state, coeff in self.terms():
            if state.charge == 0:
                entries.append({"partition": state.to_partition().to_json(),
                                "coeff": scalar_to_json(coeff)})
            else:
                entries.append({"above": [f"{d}/2" for d in state.above],
                                "below": [f"{d}/2" for d in state.below],
                                "coeff": scalar_to_json(coeff)})
        return {"charge": charge, "terms": entries}


def vacuum() -> FockVector:
    return FockVector.basis(VACUUM_STATE)


def inner(u: FockVector, v: FockVector) -> Scalar:
    """Pairing in which the Maya basis is orthonormal."""
    cu, cv = u.charge, v.charge
    if cu is not None and cv is not None and cu != cv:
        raise ValueError(f"charge mismatch: {cu} vs {cv}")
    total: Scalar = Fraction(0)
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    for state, coeff in small._terms.items():
        other = big._terms.get(state)
        if other is not None:
            total = total + coeff * other
    return total


def psi(x: HalfInt, v: FockVector) -> FockVector:
    """Create a particle at x, with the wedge-reordering sign."""
    def act(state):
        res = state.insert(x)
        return [(res[1], Fraction(res[0]))] if res else []
    return v.linear_apply(act)


def psi_star(x: HalfInt, v: FockVector) -> FockVector:
    """Annihilate the particle at x; adjoint of :func:`psi`."""
    def act(state):
        res = state.remove(x)
        return [(res[1], Fraction(res[0]))] if res else []
    return v.linear_apply(act)


@lru_cache(maxsize=None)
def boson_moves(k: int, state: MayaState) -> Tuple[Tuple[MayaState, int], ...]:
    """Action of the mode-k boson on one basis state: (state, sign) pairs.

    The bilinear sum over fermions collapses to the particle jumps
    x -> x - k; candidates outside the deviation window act trivially.
    """
    if k == 0:
        raise ValueError("use the zero-mode action for k = 0")
    candidates = set(state.above)
    candidates.update(b + 2 * k for b in state.below)
    if k < 0:
        candidates.update(range(-1, 2 * k, -2))  # sea positions within reach of 0
    out = []
    for d in sorted(candidates, reverse=True):
        if d % 2 == 0:
            continue
        x = HalfInt(d)
        target = HalfInt(d - 2 * k)
        if not state._occupied_d(d) or state._occupied_d(d - 2 * k):
            continue
        s1, mid = state.remove(x)
        s2, new = mid.insert(target)
        out.append((new, s1 * s2))
    return tuple(out)


def boson(k: int, v: FockVector, trunc: int) -> FockVector:
    """Mode-k boson a_k as a sum of fermion bilinears.

    The result is exact; ``trunc`` is the declared degree budget and must
    cover degree(v) + |k|, keeping truncation discipline loud rather than
    silent.
    """
    if k == 0:
        raise ValueError("boson index must be nonzero")
    if trunc < v.degree() + abs(k):
        raise ValueError(
            f"truncation {trunc} insufficient for degree {v.degree()} + |{k}|"
        )
    return v.linear_apply(lambda s: boson_moves(k, s))


def boson_zero_eigenvalue(alpha: Scalar, v: FockVector) -> FockVector:
    """The central zero mode: scalar multiplication by alpha."""
    return v.scale(alpha)
