"""Ring-level property deciders with re-checkable witnesses.

Universally quantified properties are decided by exhaustive scans over
elements (or pairs); a False verdict always carries the first counterexample
in canonical element order, and ``check_witness`` re-validates any witness
against the property it refutes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .elements import (
    is_clean_elem,
    spsr_c1,
    strongly_pi_regular_witness,
    strongly_star_regular_witness,
)
from .errors import UnknownProperty
from .involutions import StarRing, is_star_abelian


@dataclass(frozen=True)
class Witness:
    kind: str  # "element" | "pair"
    ids: tuple[int, ...]
    text: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "ids": [int(i) for i in self.ids], "text": self.text}


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        return {
            "value": bool(self.value),
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _elem_witness(S: StarRing, a: int) -> Witness:
    return Witness("element", (a,), S.ring.render(a))


def _pair_witness(S: StarRing, a: int, b: int) -> Witness:
    return Witness("pair", (a, b), f"a={S.ring.render(a)}, b={S.ring.render(b)}")


# -- per-element predicates ----------------------------------------------------


def elem_clean(S, a):
    return is_clean_elem(S, a, "clean")


def elem_strongly_clean(S, a):
    return is_clean_elem(S, a, "strongly-clean")


def elem_star_clean(S, a):
    return is_clean_elem(S, a, "star-clean")


def elem_strongly_star_clean(S, a):
    return is_clean_elem(S, a, "strongly-star-clean")


def elem_exchange(S, a):
    """Some idempotent e in aR with 1-e in (1-a)R."""
    R = S.ring
    in_aR = R.right_ideal(a)
    in_caR = R.right_ideal(R.one_minus(a))
    for e in np.flatnonzero(R.idempotent_mask & in_aR).tolist():
        if in_caR[R.one_minus(e)]:
            return True
    return False


def elem_pi_regular(S, a):
    """Some power w = a^n satisfies w = w b w for some b."""
    R = S.ring
    powers, _ = R.distinct_powers(a)
    for w in powers:
        if R.has_tables:
            if (R.mul_table[R.mul_table[w], w] == w).any():
                return True
        else:
            if any(R.mul(R.mul(w, b), w) == w for b in R.elements()):
                return True
    return False


def elem_strongly_pi_regular(S, a):
    return strongly_pi_regular_witness(S.ring, a) is not None


def elem_spsr(S, a):
    return spsr_c1(S, a) is not None


def elem_regular(S, a):
    R = S.ring
    if R.has_tables:
        return bool((R.mul_table[R.mul_table[a], a] == a).any())
    return any(R.mul(R.mul(a, b), a) == a for b in R.elements())


def elem_strongly_regular(S, a):
    R = S.ring
    asq = R.mul(a, a)
    return bool(R.right_ideal(asq)[a])


def elem_unit_regular(S, a):
    R = S.ring
    for u in R.units():
        if R.mul(R.mul(a, u), a) == a:
            return True
    return False


def elem_star_regular(S, a):
    """xR = pR for some projection p."""
    R = S.ring
    row = R.right_ideal(a)
    for p in S.projections():
        if (R.right_ideal(p) == row).all():
            return True
    return False


def elem_strongly_star_regular(S, a):
    return strongly_star_regular_witness(S, a) is not None


def elem_boolean(S, a):
    return S.ring.mul(a, a) == a


def elem_local(S, a):
    R = S.ring
    return bool(R.units_mask[a] or R.units_mask[R.one_minus(a)])


_ELEMENT_TESTS: dict[str, Callable[[StarRing, int], bool]] = {
    "clean": elem_clean,
    "strongly-clean": elem_strongly_clean,
    "star-clean": elem_star_clean,
    "strongly-star-clean": elem_strongly_star_clean,
    "exchange": elem_exchange,
    "pi-regular": elem_pi_regular,
    "strongly-pi-regular": elem_strongly_pi_regular,
    "strongly-pi-star-regular": elem_spsr,
    "regular": elem_regular,
    "strongly-regular": elem_strongly_regular,
    "unit-regular": elem_unit_regular,
    "star-regular": elem_star_regular,
    "strongly-star-regular": elem_strongly_star_regular,
    "boolean": elem_boolean,
    "local": elem_local,
}


def _forall_elements(S: StarRing, pred) -> Verdict:
    for a in S.ring.elements():
        if not pred(S, a):
            return Verdict(False, _elem_witness(S, a))
    return Verdict(True)


# -- set-shaped properties -------------------------------------------------------


def _prop_abelian(S: StarRing) -> Verdict:
    R = S.ring
    for e in R.idempotents():
        bad = np.flatnonzero(R.mul_table[e] != R.mul_table[:, e]) if R.has_tables else [
            x for x in R.elements() if R.mul(e, x) != R.mul(x, e)
        ]
        if len(bad):
            return Verdict(False, _pair_witness(S, e, int(bad[0])))
    return Verdict(True)


def _prop_star_abelian(S: StarRing) -> Verdict:
    ok, witness = is_star_abelian(S)
    if ok:
        return Verdict(True)
    return Verdict(False, _pair_witness(S, *witness))


def _prop_idempotents_are_projections(S: StarRing) -> Verdict:
    for e in S.ring.idempotents():
        if S.star(e) != e:
            return Verdict(False, _elem_witness(S, e))
    return Verdict(True)


def _prop_j_nil(S: StarRing) -> Verdict:
    R = S.ring
    for a in R.jacobson_radical().elements():
        if not R.nilpotent_mask[a]:
            return Verdict(False, _elem_witness(S, a))
    return Verdict(True)


def _prop_directly_finite(S: StarRing) -> Verdict:
    witness = S.ring.directly_finite_witness()
    if witness is None:
        return Verdict(True)
    return Verdict(False, _pair_witness(S, *witness))


_SET_TESTS: dict[str, Callable[[StarRing], Verdict]] = {
    "abelian": _prop_abelian,
    "star-abelian": _prop_star_abelian,
    "idempotents-are-projections": _prop_idempotents_are_projections,
    "J-nil": _prop_j_nil,
    "directly-finite": _prop_directly_finite,
}

STABLE_RANGE_PROPERTIES = ("sr1", "isr1", "psr1")

PROPERTIES = tuple(_ELEMENT_TESTS) + tuple(_SET_TESTS) + STABLE_RANGE_PROPERTIES


# -- stable range ---------------------------------------------------------------


def _stable_success(S: StarRing, pool: np.ndarray) -> np.ndarray:
    """success[a, b] iff a + b*y is a unit for some y in the pool."""
    R = S.ring
    n = R.size
    success = np.zeros((n, n), dtype=bool)
    for b in range(n):
        cand = np.unique(R.mul_table[b, pool])
        vals = R.add_table[:, cand]
        success[:, b] = R.units_mask[vals].any(axis=1)
    return success


def _stable_range_verdict(S: StarRing, pool) -> Verdict:
    R = S.ring
    pool = np.asarray(pool, dtype=np.int64)
    viol = R.comaximal_pairs & ~_stable_success(S, pool)
    idx = np.argwhere(viol)
    if idx.size == 0:
        return Verdict(True)
    a, b = map(int, idx[0])
    return Verdict(False, _pair_witness(S, a, b))


def stable_range_checks(S: StarRing) -> dict[str, Verdict]:
    """Verdicts for stable range one over R, over idempotents, over projections."""
    cache = S._prop_cache
    if not all(name in cache for name in STABLE_RANGE_PROPERTIES):
        R = S.ring
        # compute all three before publishing so concurrent readers never see
        # a partially filled cache
        computed = {
            "sr1": _stable_range_verdict(S, np.arange(R.size)),
            "isr1": _stable_range_verdict(S, np.flatnonzero(R.idempotent_mask)),
            "psr1": _stable_range_verdict(S, np.flatnonzero(S.projection_mask)),
        }
        cache.update(computed)
    return {name: cache[name] for name in STABLE_RANGE_PROPERTIES}


def check_stable_range_pair(S: StarRing, prop: str, a: int, b: int) -> bool:
    """True iff (a, b) really is a counterexample for the given stable-range flavor."""
    R = S.ring
    if not R.comaximal_pairs[a, b]:
        return False
    if prop == "sr1":
        pool = np.arange(R.size)
    elif prop == "isr1":
        pool = np.flatnonzero(R.idempotent_mask)
    elif prop == "psr1":
        pool = np.flatnonzero(S.projection_mask)
    else:
        raise UnknownProperty(prop)
    for y in pool.tolist():
        if R.units_mask[R.add(a, R.mul(b, y))]:
            return False
    return True


# -- the umbrella decider ---------------------------------------------------------


def ring_property(S: StarRing, prop: str) -> Verdict:
    """Decide a named ring-level property; verdicts are cached per star ring."""
    cache = S._prop_cache
    if prop in cache:
        return cache[prop]
    if prop in _ELEMENT_TESTS:
        verdict = _forall_elements(S, _ELEMENT_TESTS[prop])
    elif prop in _SET_TESTS:
        verdict = _SET_TESTS[prop](S)
    elif prop in STABLE_RANGE_PROPERTIES:
        return stable_range_checks(S)[prop]
    else:
        raise UnknownProperty(f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}")
    cache[prop] = verdict
    return verdict


def check_witness(S: StarRing, prop: str, witness: Witness) -> bool:
    """Re-validate that a witness really refutes the property."""
    R = S.ring
    ids = witness.ids
    if prop in _ELEMENT_TESTS:
        return not _ELEMENT_TESTS[prop](S, ids[0])
    if prop == "abelian":
        e, x = ids
        return R.mul(e, e) == e and R.mul(e, x) != R.mul(x, e)
    if prop == "star-abelian":
        p, x = ids
        return bool(S.projection_mask[p]) and R.mul(p, x) != R.mul(x, p)
    if prop == "idempotents-are-projections":
        (e,) = ids
        return R.mul(e, e) == e and S.star(e) != e
    if prop == "J-nil":
        (a,) = ids
        return R.jacobson_radical().contains(a) and not R.is_nilpotent(a)
    if prop == "directly-finite":
        a, b = ids
        return R.mul(a, b) == R.one and R.mul(b, a) != R.one
    if prop in STABLE_RANGE_PROPERTIES:
        return check_stable_range_pair(S, prop, *ids)
    raise UnknownProperty(prop)


# -- one-sided stable range comparison ---------------------------------------------


@dataclass(frozen=True)
class OneSidedResult:
    two_sided: Verdict
    right: Verdict
    left: Verdict
    collapse_ok: bool  # right/left invertible elements coincide with units

    @property
    def consistent(self) -> bool:
        return (
            self.two_sided.value == self.right.value == self.left.value
        ) and self.collapse_ok

    def to_dict(self) -> dict:
        return {
            "two_sided": self.two_sided.to_dict(),
            "right": self.right.to_dict(),
            "left": self.left.to_dict(),
            "collapse_ok": bool(self.collapse_ok),
            "consistent": bool(self.consistent),
        }


def psr_onesided_equiv(S: StarRing) -> OneSidedResult:
    """Compare two-sided, right-invertible, and left-invertible variants of
    the projection stable-range condition; in a finite ring all three agree."""
    R = S.ring
    n = R.size
    rinv_mask = (R.mul_table == R.one).any(axis=1)
    linv_mask = (R.mul_table == R.one).any(axis=0)
    pool = np.flatnonzero(S.projection_mask)
    comax = R.comaximal_pairs

    def run(ok_mask) -> Verdict:
        success = np.zeros((n, n), dtype=bool)
        for b in range(n):
            cand = np.unique(R.mul_table[b, pool])
            vals = R.add_table[:, cand]
            success[:, b] = ok_mask[vals].any(axis=1)
        viol = comax & ~success
        idx = np.argwhere(viol)
        if idx.size == 0:
            return Verdict(True)
        a, b = map(int, idx[0])
        return Verdict(False, _pair_witness(S, a, b))

    collapse = bool((rinv_mask == R.units_mask).all() and (linv_mask == R.units_mask).all())
    return OneSidedResult(
        two_sided=run(R.units_mask),
        right=run(rinv_mask),
        left=run(linv_mask),
        collapse_ok=collapse,
    )


# -- lifting ----------------------------------------------------------------------


@dataclass(frozen=True)
class LiftingResult:
    idempotents_lift_to_central_projections: Verdict
    projections_lift: Verdict
    projections_central: Verdict

    def to_dict(self) -> dict:
        return {
            "idempotents_lift_to_central_projections": (
                self.idempotents_lift_to_central_projections.to_dict()
            ),
            "projections_lift": self.projections_lift.to_dict(),
            "projections_central": self.projections_central.to_dict(),
        }


def lifting_checks(S: StarRing) -> LiftingResult:
    """Inspect idempotent and projection lifting along R -> R/J(R)."""
    QS, pi = S.mod_jacobson()
    R = S.ring
    central_proj = S.projection_mask & R.center_mask
    proj = S.projection_mask

    def lift_verdict(targets, mask) -> Verdict:
        for t in targets:
            fiber = np.flatnonzero(pi == t)
            if not mask[fiber].any():
                return Verdict(
                    False,
                    Witness("element", (int(t),), f"coset of {QS.ring.render(int(t))}"),
                )
        return Verdict(True)

    return LiftingResult(
        idempotents_lift_to_central_projections=lift_verdict(
            QS.ring.idempotents(), central_proj
        ),
        projections_lift=lift_verdict(QS.projections(), proj),
        projections_central=_prop_star_abelian(S),
    )
