"""Normal-form arithmetic for polynomial differential operators in one variable.

Operators live in the algebra generated by t (multiplication) and d (= d/dt)
subject to the single relation ``d t = t d + 1``.  Every element has a unique
normal form  sum c_ij t^i d^j  with all t's to the left of all d's; a `WeylOp`
stores exactly that form as a sparse map ``(i, j) -> Fraction``.

Multiplication uses the closed-form commutation identity

    d^j t^i = sum_{s=0}^{min(i,j)} C(j, s) * i*(i-1)*...*(i-s+1) * t^(i-s) d^(j-s)

(falling factorials; `math.perm` computes them exactly), which is
polynomial-time in the exponents.  `word_to_weyl` keeps an independent route
to the same normal form: exhaustive leftmost rewriting of the two-symbol words
``... d t ... -> ... t d ... + ... (deleted) ...``.  Tests cross-check the two
against each other; neither is ever used to validate itself.

The rewriting terminates because a swap strictly decreases the number of
(d, t) inversions and a deletion strictly shortens the word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .polynomials import (
    MINUS_INFINITY,
    Poly,
    RationalLike,
    join_signed_terms,
    _power_str,
)


class WeylOp:
    """A differential operator in normal form  sum c_ij t^i d^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], RationalLike] | None = None):
        cleaned: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term {(i, j)}")
                c = Fraction(c)
                if c != 0:
                    cleaned[(int(i), int(j))] = c
        self._terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> WeylOp:
        return cls()

    @classmethod
    def one(cls) -> WeylOp:
        return cls({(0, 0): 1})

    @classmethod
    def t(cls) -> WeylOp:
        return cls({(1, 0): 1})

    @classmethod
    def d(cls) -> WeylOp:
        return cls({(0, 1): 1})

    @classmethod
    def scalar(cls, c: RationalLike) -> WeylOp:
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def from_poly(cls, p: Poly) -> WeylOp:
        """The order-0 operator "multiply by p"."""
        return cls({(deg, 0): c for deg, c in p.items()})

    # -- inspection ---------------------------------------------------

    @property
    def order(self) -> int | float:
        """Highest d-exponent, or MINUS_INFINITY for the zero operator."""
        return max(j for _, j in self._terms) if self._terms else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient_poly(self, j: int) -> Poly:
        """The polynomial coefficient of d^j in normal form."""
        return Poly({i: c for (i, jj), c in self._terms.items() if jj == j})

    def as_poly(self) -> Poly:
        """Convert an order-<=0 operator back to the polynomial it multiplies by."""
        if self._terms and self.order > 0:
            raise ValueError(f"operator has positive order: {self}")
        return Poly({i: c for (i, _), c in self._terms.items()})

    # -- linear structure ----------------------------------------------

    def __add__(self, other: WeylOp) -> WeylOp:
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(out)

    def __neg__(self) -> WeylOp:
        return _raw({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: WeylOp) -> WeylOp:
        return self + (-other)

    def scale(self, c: RationalLike) -> WeylOp:
        c = Fraction(c)
        if c == 0:
            return WeylOp.zero()
        return _raw({key: c * v for key, v in self._terms.items()})

    # -- multiplication -------------------------------------------------

    def __mul__(self, other: WeylOp) -> WeylOp:
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (i, j), c2 in other._terms.items():
                c12 = c1 * c2
                # d^b t^i -> sum over s of C(b,s) * perm(i,s) * t^(i-s) d^(b-s)
                for s in range(min(b, i) + 1):
                    coeff = c12 * math.comb(b, s) * math.perm(i, s)
                    key = (a + i - s, b + j - s)
                    v = out.get(key, Fraction(0)) + coeff
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return _raw(out)

    def __pow__(self, n: int) -> WeylOp:
        if n < 0:
            raise ValueError("negative exponent")
        result = WeylOp.one()
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other: WeylOp) -> WeylOp:
        return self * other - other * self

    # -- action on polynomials -------------------------------------------

    def apply(self, p: Poly) -> Poly:
        """Evaluate the operator on a polynomial:  sum c_ij t^i (d^j p / dt^j)."""
        if not self._terms:
            return Poly.zero()
        derivs = {0: p}
        for j in range(1, int(self.order) + 1):
            derivs[j] = derivs[j - 1].derivative()
        result = Poly.zero()
        for (i, j), c in self._terms.items():
            result = result + derivs[j].scale(c) * Poly.monomial(i)
        return result

    # -- comparison / printing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        # print order: d-exponent descending, then t-exponent descending
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
        terms = []
        for (i, j), c in ordered:
            mono = " ".join(s for s in (_power_str("t", i), _power_str("d", j)) if s)
            terms.append((c, mono))
        return join_signed_terms(terms)

    def __repr__(self) -> str:
        return f"WeylOp({{{', '.join(f'({i},{j}): {c}' for (i, j), c in self.terms())}}})"


def _raw(terms: dict[tuple[int, int], Fraction]) -> WeylOp:
    op = WeylOp.__new__(WeylOp)
    op._terms = terms
    return op


def commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return a.commutator(b)


# -- free words and the rewriting oracle ----------------------------------


@dataclass(frozen=True)
class GeneratorWord:
    """A scalar multiple of a word in the free generators t and d.

    Words are the pre-normal-form presentation: no relation is imposed until
    `word_to_weyl` rewrites them.  Symbols are the single characters
    ``"t"`` and ``"d"``.
    """

    scalar: Fraction
    symbols: tuple[str, ...]

    def __post_init__(self):
        bad = [s for s in self.symbols if s not in ("t", "d")]
        if bad:
            raise ValueError(f"unknown generator symbols: {bad}")

    @classmethod
    def make(cls, spelling: str, scalar: RationalLike = 1) -> GeneratorWord:
        """Build a word from a spelling like ``"ddtt"`` (whitespace ignored)."""
        return cls(Fraction(scalar), tuple(spelling.replace(" ", "")))


def word_to_weyl(word: GeneratorWord) -> WeylOp:
    """Normalize a single word by exhaustive rewriting of  d t -> t d + 1."""
    return words_to_weyl([word])


def words_to_weyl(words: Iterable[GeneratorWord]) -> WeylOp:
    """Normalize a sum of words by exhaustive leftmost rewriting.

    Pending words are merged by spelling and processed in decreasing order of
    their (d, t) inversion count.  Every rewrite strictly decreases that
    count, so by the time a word is processed all scalar contributions to it
    have arrived; this collapses the exponential rewrite tree into a dynamic
    program over the distinct reachable words.
    """
    buckets: dict[int, dict[tuple[str, ...], Fraction]] = {}

    def insert(symbols: tuple[str, ...], coeff: Fraction) -> None:
        bucket = buckets.setdefault(_inversions(symbols), {})
        s = bucket.get(symbols, Fraction(0)) + coeff
        if s:
            bucket[symbols] = s
        else:
            bucket.pop(symbols, None)

    for w in words:
        if w.scalar:
            insert(w.symbols, w.scalar)

    terms: dict[tuple[int, int], Fraction] = {}
    while buckets:
        level = max(buckets)
        bucket = buckets.pop(level)
        for symbols, coeff in bucket.items():
            if level == 0:
                # no inversion left: the word reads t^i d^j
                key = (symbols.count("t"), symbols.count("d"))
                s = terms.get(key, Fraction(0)) + coeff
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
                continue
            k = _leftmost_inversion(symbols)
            insert(symbols[:k] + ("t", "d") + symbols[k + 2 :], coeff)
            insert(symbols[:k] + symbols[k + 2 :], coeff)
    return _raw(terms)


def _inversions(symbols: tuple[str, ...]) -> int:
    count = 0
    seen_d = 0
    for s in symbols:
        if s == "d":
            seen_d += 1
        else:
            count += seen_d
    return count


def _leftmost_inversion(symbols: tuple[str, ...]) -> int:
    for k in range(len(symbols) - 1):
        if symbols[k] == "d" and symbols[k + 1] == "t":
            return k
    raise AssertionError("no inversion in a word with positive inversion count")


def word_product(w1: GeneratorWord, w2: GeneratorWord) -> WeylOp:
    """Multiply two words and normalize via the rewriting route only.

    This is the independent oracle for `WeylOp.__mul__`: it never touches the
    closed-form commutation identity.
    """
    return word_to_weyl(GeneratorWord(w1.scalar * w2.scalar, w1.symbols + w2.symbols))
