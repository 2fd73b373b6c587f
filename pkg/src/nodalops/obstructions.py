"""Witness constructions and refutation certificates for curve operator rings.

Two negative facts about D_A = k + f*W (W the operator algebra of k[t]) are
certified here, each by an explicit operator witness plus exact divisibility
checks:

* ``NotLocallyProjective``: no finite list of pairs (a_i, D_i) with a_i in A
  and D_i in D_A can reproduce the witness D as  D = sum D(a_i) * D_i.
  Reason: the witness maps A into I while sending some g in I outside I^2,
  whereas every operator of the form  sum D(a_i) * D_i  maps I into I^2
  (each D(a_i) lies in I and each D_i preserves I).

* ``NoBialgebroid``: no coproduct compatible with the counit D -> D(1) can
  exist, because every factorized two-argument map
  (a, b) -> sum D1_i(a) * D2_i(b)  sends I x I into I^2, while the witness's
  pulled-back map (a, b) -> D(a*b) escapes I^2 on an explicit pair.

Non-containments are certified exactly: one witness with a nonzero division
remainder is a proof.  Containments over infinite sets are either structural
(reduced to the split criteria of `nodalops.curves`) or sampled to a recorded
bound; each check record says which.

Tensor-product caveat: pair lists are treated as explicit representatives,
never as equivalence classes of a tensor product over A.  All containment
arguments used here hold representative-wise, so no normal form for the
tensor product is needed (and none is chosen).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .curves import CurveRing
from .polynomials import Poly
from .sampling import (
    random_ideal_element,
    random_operator_pairs,
    random_pairs,
)
from .weyl import WeylOp

CLAIM_NOT_LOCALLY_PROJECTIVE = "NotLocallyProjective"
CLAIM_NO_BIALGEBROID = "NoBialgebroid"

DEFAULT_BOUND = 8
DEFAULT_BATTERY_SIZE = 24


class DecompositionError(ValueError):
    """A pair list contains an entry outside A or outside D_A."""


class BoundExhaustedError(RuntimeError):
    """A witness search ran out of candidates below its bound."""


@dataclass(frozen=True)
class Decomposition:
    """A finite list of pairs (a_i, D_i) with a_i in A and D_i in D_A.

    Represents an element of the domain of the evaluation pairing; the empty
    list represents zero.
    """

    pairs: tuple[tuple[Poly, WeylOp], ...]

    @classmethod
    def make(cls, pairs: Sequence[tuple[Poly, WeylOp]]) -> Decomposition:
        return cls(tuple((a, op) for a, op in pairs))

    def validate(self, curve: CurveRing) -> None:
        for idx, (a, op) in enumerate(self.pairs):
            if curve.subalgebra_constant(a) is None:
                raise DecompositionError(f"pair #{idx}: left entry not in the subalgebra: {a}")
            if curve.operator_split(op) is None:
                raise DecompositionError(f"pair #{idx}: right entry not in D_A: {op}")

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class WitnessPair:
    """An operator D and polynomial g certifying D(g) outside I^target_power."""

    operator: WeylOp
    witness: Poly
    source_power: int
    target_power: int

    def validate(self, curve: CurveRing) -> None:
        if curve.operator_split(self.operator) is None:
            raise ValueError("witness operator not in D_A")
        if not curve.in_ideal_power(self.witness, self.source_power):
            raise ValueError(f"witness polynomial not in I^{self.source_power}")
        value = self.operator.apply(self.witness)
        if curve.in_ideal_power(value, self.target_power):
            raise ValueError(f"operator does not escape I^{self.target_power} on the witness")


@dataclass(frozen=True)
class CheckRecord:
    """One replayable check: what was verified, the verdict, any bound used."""

    kind: str
    description: str
    verdict: bool
    bound: int | None = None


@dataclass(frozen=True)
class Certificate:
    """A self-contained, replayable refutation record for one curve.

    `seed`, `bound` and `battery_size` pin down the randomized battery, so
    replaying the checks from the serialized data reproduces every verdict.
    """

    claim: str
    curve: CurveRing
    witness: WitnessPair
    checks: tuple[CheckRecord, ...]
    seed: int
    bound: int
    battery_size: int
    product_pair: tuple[Poly, Poly] | None = None
    version: str = "1"

    def all_passed(self) -> bool:
        return all(c.verdict for c in self.checks)


# -- the evaluation pairing and the local-projectivity condition -------------


def evaluate_decomposition(curve: CurveRing, op: WeylOp, dec: Decomposition) -> WeylOp:
    """sum from_poly(op(a_i)) * D_i over the pairs of dec, in normal form."""
    if curve.operator_split(op) is None:
        raise ValueError("operator not in D_A")
    dec.validate(curve)
    result = WeylOp.zero()
    for a, inner in dec.pairs:
        result = result + WeylOp.from_poly(op.apply(a)) * inner
    return result


def decomposition_reproduces(curve: CurveRing, op: WeylOp, dec: Decomposition) -> bool:
    """True iff dec exhibits op in the image of its own evaluation pairing,
    i.e.  op = sum op(a_i) * D_i  exactly (structural normal-form equality)."""
    return evaluate_decomposition(curve, op, dec) == op


def check_image_containment(
    curve: CurveRing, op: WeylOp, dec: Decomposition, sample_bound: int
) -> bool:
    """Sampled form of: everything in the evaluation image maps I into I^2.

    Requires op in D_A with zero constant part.  Evaluates the decomposition
    and tests its value on f*t^m for 0 <= m <= sample_bound.  The bounded
    check is backed by the structural argument: each summand op(a_i) * D_i
    sends I into op(a_i) * I, a subset of I*I = I^2.
    """
    split = curve.operator_split(op)
    if split is None:
        raise ValueError("operator not in D_A")
    if split.constant != 0:
        raise ValueError("operator does not map the subalgebra into the ideal")
    evaluated = evaluate_decomposition(curve, op, dec)
    return all(
        curve.in_ideal_power(evaluated.apply(g), 2)
        for g in curve.ideal_spanning_set(sample_bound)
    )


# -- constructive witnesses ---------------------------------------------------


def construct_raiser(g: Poly, kill_constants: bool = True) -> WeylOp:
    """An operator sending g to 1: (1 / (lc(g) * n!)) d^n with n = deg g.

    Requires deg g >= 1.  Such an operator automatically annihilates
    constants (n >= 1); the kill_constants flag is asserted, not branched on.
    """
    if g.is_constant:
        raise ValueError("no raiser for constants")
    n = int(g.degree)
    c = g.leading_coefficient()
    raiser = (WeylOp.d() ** n).scale(Fraction(1) / (c * factorial(n)))
    if kill_constants:
        assert raiser.apply(Poly.one()).is_zero
    assert raiser.apply(g) == Poly.one()
    return raiser


def ideal_escape_witness(curve: CurveRing) -> WitnessPair:
    """A witness that some operator maps A into I yet sends I outside I^2.

    Takes g = f and D = f * raiser(f): then D(A) is inside I (zero constant
    part) while D(g) = f, which is not in I^2.
    """
    g = curve.f
    op = WeylOp.from_poly(curve.f) * construct_raiser(g, kill_constants=True)
    pair = WitnessPair(op, g, source_power=1, target_power=2)
    pair.validate(curve)
    assert curve.maps_into_ideal(op)
    return pair


def square_escape_witness(curve: CurveRing) -> WitnessPair:
    """A witness that some operator sends I^2 outside I^2.

    Takes g = f^2 and D = f * raiser(f^2): then D(g) = f, not in I^2.
    """
    g = curve.f * curve.f
    op = WeylOp.from_poly(curve.f) * construct_raiser(g, kill_constants=False)
    pair = WitnessPair(op, g, source_power=2, target_power=2)
    pair.validate(curve)
    return pair


def search_noncontainment(
    curve: CurveRing,
    op: WeylOp,
    source_power: int,
    target_power: int,
    bound: int,
) -> Poly | None:
    """Smallest g = f^source_power * t^m (m ascending, m <= bound) with
    op(g) outside I^target_power, or None if every candidate stays inside."""
    if curve.operator_split(op) is None:
        raise ValueError("operator not in D_A")
    base = curve.f**source_power
    for m in range(bound + 1):
        g = base * Poly.monomial(m)
        if not curve.in_ideal_power(op.apply(g), target_power):
            return g
    return None


# -- two-argument maps ---------------------------------------------------------


def apply_pairwise(
    curve: CurveRing,
    pairs: Sequence[tuple[WeylOp, WeylOp]],
    a: Poly,
    b: Poly,
) -> Poly:
    """sum D1_i(a) * D2_i(b) over a list of operator pairs.

    The list is an explicit representative; every entry must lie in D_A.
    """
    for idx, (left, right) in enumerate(pairs):
        if curve.operator_split(left) is None:
            raise DecompositionError(f"pair #{idx}: left operator not in D_A: {left}")
        if curve.operator_split(right) is None:
            raise DecompositionError(f"pair #{idx}: right operator not in D_A: {right}")
    result = Poly.zero()
    for left, right in pairs:
        result = result + left.apply(a) * right.apply(b)
    return result


def apply_to_product(op: WeylOp, a: Poly, b: Poly) -> Poly:
    """op(a*b): the two-argument map obtained by pulling back along multiplication."""
    return op.apply(a * b)


def counit(op: WeylOp) -> Poly:
    """op(1): projection of an operator onto its value on the unit."""
    return op.apply(Poly.one())


# -- certificates ---------------------------------------------------------------


def refute_local_projectivity(
    curve: CurveRing,
    *,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    battery_size: int = DEFAULT_BATTERY_SIZE,
) -> Certificate:
    """Certificate that D_A is not locally projective over the given curve.

    Builds the ideal-escape witness D and records: D in D_A, D maps A into I,
    D(g) in I but not in I^2, and a seeded battery of random decompositions
    none of which reproduces D while all of their evaluations map sampled
    ideal elements into I^2.
    """
    witness = ideal_escape_witness(curve)
    checks = certificate_checks(
        CLAIM_NOT_LOCALLY_PROJECTIVE, curve, witness, None, seed, bound, battery_size
    )
    return Certificate(
        claim=CLAIM_NOT_LOCALLY_PROJECTIVE,
        curve=curve,
        witness=witness,
        checks=tuple(checks),
        seed=seed,
        bound=bound,
        battery_size=battery_size,
    )


def refute_bialgebroid(
    curve: CurveRing,
    search_bound: int = DEFAULT_BOUND,
    *,
    seed: int = 0,
    battery_size: int = DEFAULT_BATTERY_SIZE,
) -> Certificate:
    """Certificate that no coproduct is compatible with the counit D -> D(1).

    Builds the square-escape witness D and scans pairs (f*t^ma, f*t^mb) in
    lexicographic (ma, mb) order for D(a*b) outside I^2; the first hit is
    recorded (a = b = f always fires, so the default bound cannot exhaust).
    A seeded battery then confirms that factorized pair lists keep I x I
    inside I^2.
    """
    if search_bound < 0:
        raise ValueError("search bound must be nonnegative")
    witness = square_escape_witness(curve)
    product_pair = _first_escaping_pair(curve, witness.operator, search_bound)
    if product_pair is None:
        raise BoundExhaustedError(f"search bound exhausted: no pair up to t^{search_bound}")
    checks = certificate_checks(
        CLAIM_NO_BIALGEBROID, curve, witness, product_pair, seed, search_bound, battery_size
    )
    return Certificate(
        claim=CLAIM_NO_BIALGEBROID,
        curve=curve,
        witness=witness,
        checks=tuple(checks),
        seed=seed,
        bound=search_bound,
        battery_size=battery_size,
        product_pair=product_pair,
    )


def _first_escaping_pair(
    curve: CurveRing, op: WeylOp, bound: int
) -> tuple[Poly, Poly] | None:
    for ma in range(bound + 1):
        a = curve.f * Poly.monomial(ma)
        for mb in range(bound + 1):
            b = curve.f * Poly.monomial(mb)
            if not curve.in_ideal_power(apply_to_product(op, a, b), 2):
                return a, b
    return None


def certificate_checks(
    claim: str,
    curve: CurveRing,
    witness: WitnessPair,
    product_pair: tuple[Poly, Poly] | None,
    seed: int,
    bound: int,
    battery_size: int,
) -> list[CheckRecord]:
    """The canonical check battery for a claim; emit and replay share this.

    Total by construction: precondition failures become False verdicts, never
    exceptions, so replay on tampered-but-well-formed data terminates with a
    verdict mismatch instead of crashing.
    """
    if claim == CLAIM_NOT_LOCALLY_PROJECTIVE:
        return _local_projectivity_checks(curve, witness, seed, bound, battery_size)
    if claim == CLAIM_NO_BIALGEBROID:
        if product_pair is None:
            raise ValueError("NoBialgebroid certificate requires a product pair")
        return _bialgebroid_checks(curve, witness, product_pair, seed, bound, battery_size)
    raise ValueError(f"unknown claim: {claim}")


def _local_projectivity_checks(
    curve: CurveRing,
    witness: WitnessPair,
    seed: int,
    bound: int,
    battery_size: int,
) -> list[CheckRecord]:
    op, g = witness.operator, witness.witness
    split = curve.operator_split(op)
    kills = split is not None and split.constant == 0
    value = op.apply(g)
    checks = [
        CheckRecord(
            "operator_in_da",
            "witness operator lies in D_A = k + f*W (exact split exists)",
            split is not None,
        ),
        CheckRecord(
            "operator_maps_into_ideal",
            "witness operator maps the whole subalgebra into the ideal (zero constant part)",
            kills,
        ),
        CheckRecord(
            "witness_in_ideal_power",
            f"witness polynomial lies in I^{witness.source_power}",
            curve.in_ideal_power(g, witness.source_power),
        ),
        CheckRecord(
            "value_in_ideal",
            "operator applied to the witness lands in I",
            curve.in_ideal_power(value, 1),
        ),
        CheckRecord(
            "value_outside_target_power",
            f"operator applied to the witness does NOT land in I^{witness.target_power}",
            not curve.in_ideal_power(value, witness.target_power),
        ),
    ]
    rng = random.Random(seed)
    for i in range(battery_size):
        dec = Decomposition.make(random_pairs(rng, curve, max_pairs=3))
        if kills:
            evaluated = evaluate_decomposition(curve, op, dec)
            contained = all(
                curve.in_ideal_power(evaluated.apply(h), 2)
                for h in curve.ideal_spanning_set(bound)
            )
            mismatch = evaluated != op
        else:
            contained = False
            mismatch = False
        checks.append(
            CheckRecord(
                "evaluated_image_containment",
                f"random decomposition #{i} ({len(dec)} pairs): evaluated image maps "
                f"ideal samples into I^2",
                contained,
                bound,
            )
        )
        checks.append(
            CheckRecord(
                "decomposition_mismatch",
                f"random decomposition #{i}: evaluation does NOT reproduce the witness operator",
                mismatch,
            )
        )
    return checks


def _bialgebroid_checks(
    curve: CurveRing,
    witness: WitnessPair,
    product_pair: tuple[Poly, Poly],
    seed: int,
    bound: int,
    battery_size: int,
) -> list[CheckRecord]:
    op, g = witness.operator, witness.witness
    a, b = product_pair
    split = curve.operator_split(op)
    in_da = split is not None
    value = op.apply(g)
    checks = [
        CheckRecord(
            "operator_in_da",
            "witness operator lies in D_A = k + f*W (exact split exists)",
            in_da,
        ),
        CheckRecord(
            "witness_in_ideal_power",
            f"witness polynomial lies in I^{witness.source_power}",
            curve.in_ideal_power(g, witness.source_power),
        ),
        CheckRecord(
            "value_outside_target_power",
            f"operator applied to the witness does NOT land in I^{witness.target_power}",
            not curve.in_ideal_power(value, witness.target_power),
        ),
        CheckRecord(
            "pair_in_ideal",
            "both arguments of the escaping pair lie in I",
            curve.in_ideal_power(a, 1) and curve.in_ideal_power(b, 1),
        ),
        CheckRecord(
            "product_value_outside_square",
            "operator applied to the product of the pair does NOT land in I^2",
            not curve.in_ideal_power(apply_to_product(op, a, b), 2),
        ),
        CheckRecord(
            "pair_is_first_hit",
            f"the pair is the first hit of the lexicographic scan up to t^{bound}",
            in_da and _first_escaping_pair(curve, op, bound) == (a, b),
            bound,
        ),
    ]
    rng = random.Random(seed)
    for i in range(battery_size):
        pairs = random_operator_pairs(rng, curve, max_pairs=3)
        left = random_ideal_element(rng, curve, 3)
        right = random_ideal_element(rng, curve, 3)
        verdict = curve.in_ideal_power(apply_pairwise(curve, pairs, left, right), 2)
        checks.append(
            CheckRecord(
                "pairwise_application_in_square",
                f"random operator pair list #{i} ({len(pairs)} pairs) applied to a random "
                f"ideal pair lands in I^2",
                verdict,
            )
        )
    return checks
