"""Free generic Poisson algebra: polynomials in normal bracket words.

An element is a rational linear combination of monomials, each monomial
a multiset of normal anti-commutative words (the empty multiset is the
unit).  The product is the commutative polynomial product; the bracket
is extended from words by bilinearity and the Leibniz rule, so the
Jacobi identity is a property to test, never an assumption.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ac import (
    ACPoly,
    DEFAULT_ORDER,
    Variable,
    Word,
    WordOrder,
    _accumulate,
    bracket_normal,
    format_linear,
)

__all__ = [
    "Monomial",
    "GPPoly",
    "Weight",
    "gp_mul",
    "gp_bracket",
    "weight",
    "fine_components",
    "supports",
    "substitute",
    "is_polylinear",
    "variable_degrees",
]

Monomial = tuple[Word, ...]


def _sorted_factors(words, order: WordOrder = DEFAULT_ORDER) -> Monomial:
    return tuple(sorted(words, key=order.key))


def _monomial_key(m: Monomial):
    return (sum(w.degree for w in m), len(m), tuple(w.key for w in m))


class GPPoly:
    """Exact polynomial whose variables are normal bracket words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self._terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "GPPoly":
        return GPPoly()

    @staticmethod
    def one() -> "GPPoly":
        return GPPoly({(): Fraction(1)})

    @staticmethod
    def constant(c) -> "GPPoly":
        c = Fraction(c)
        return GPPoly({(): c} if c else {})

    @staticmethod
    def generator(v: Variable) -> "GPPoly":
        return GPPoly({(Word.leaf(v),): Fraction(1)})

    @staticmethod
    def from_ac(f: ACPoly) -> "GPPoly":
        return GPPoly({(w,): c for w, c in f._terms.items()})

    @staticmethod
    def from_factors(words, coefficient=1) -> "GPPoly":
        """Monomial on already-normal words."""
        c = Fraction(coefficient)
        return GPPoly({_sorted_factors(words): c} if c else {})

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _monomial_key(kv[0]))

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(_sorted_factors(m), Fraction(0))

    def monomials(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def variables(self) -> frozenset[Variable]:
        out: frozenset[Variable] = frozenset()
        for m in self._terms:
            for w in m:
                out |= w.varset
        return out

    def factor_words(self) -> frozenset[Word]:
        return frozenset(w for m in self._terms for w in m)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "GPPoly") -> "GPPoly":
        if not isinstance(other, GPPoly):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(acc, m, c)
        return GPPoly(acc)

    def __sub__(self, other: "GPPoly") -> "GPPoly":
        if not isinstance(other, GPPoly):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(acc, m, -c)
        return GPPoly(acc)

    def __neg__(self) -> "GPPoly":
        return GPPoly({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "GPPoly":
        if isinstance(other, GPPoly):
            acc: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    _accumulate(acc, _sorted_factors(m1 + m2), c1 * c2)
            return GPPoly(acc)
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            if not s:
                return GPPoly()
            return GPPoly({m: c * s for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def bracket(self, other: "GPPoly", order: WordOrder = DEFAULT_ORDER) -> "GPPoly":
        """Leibniz expansion to pairwise word brackets, recanonicalized."""
        if not isinstance(other, GPPoly):
            raise TypeError("bracket expects a GPPoly")
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for i, u in enumerate(m1):
                rest1 = m1[:i] + m1[i + 1 :]
                for m2, c2 in other._terms.items():
                    c12 = c1 * c2
                    for j, v in enumerate(m2):
                        bw = bracket_normal(u, v, order)
                        if bw is None:
                            continue
                        s, w = bw
                        mono = _sorted_factors(rest1 + m2[:j] + m2[j + 1 :] + (w,), order)
                        _accumulate(acc, mono, c12 * s)
        return GPPoly(acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, GPPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return format_linear(
            ("*".join(repr(w) for w in m), c) for m, c in self.terms()
        )


def gp_mul(f: GPPoly, g: GPPoly) -> GPPoly:
    return f * g


def gp_bracket(f: GPPoly, g: GPPoly, order: WordOrder = DEFAULT_ORDER) -> GPPoly:
    return f.bracket(g, order)


@dataclass(frozen=True)
class Weight:
    """Multiset of commutative variable words, one per bracket factor."""

    parts: tuple[tuple[Variable, ...], ...]

    @staticmethod
    def of(m: Monomial) -> "Weight":
        return Weight(tuple(sorted(tuple(sorted(w.leaves)) for w in m)))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(sorted(self.parts + other.parts)))

    def __repr__(self) -> str:
        if not self.parts:
            return "0"
        rendered = []
        for part in self.parts:
            counts = Counter(part)
            body = " ".join(
                v.name if k == 1 else f"{v.name}^{k}" for v, k in sorted(counts.items())
            )
            rendered.append(f"[{body}]")
        return " + ".join(rendered)


def weight(m: Monomial) -> Weight:
    return Weight.of(m)


def fine_components(f: GPPoly) -> list[tuple[Weight, GPPoly]]:
    """Partition of the monomials of `f` by weight; the parts sum to `f`."""
    buckets: dict[Weight, dict[Monomial, Fraction]] = {}
    for m, c in f._terms.items():
        buckets.setdefault(Weight.of(m), {})[m] = c
    return [
        (w, GPPoly(terms)) for w, terms in sorted(buckets.items(), key=lambda kv: kv[0].parts)
    ]


def supports(f: GPPoly) -> tuple[frozenset[Variable], frozenset[Word]]:
    """(variables occurring, normal words occurring as factors)."""
    return f.variables(), f.factor_words()


def substitute(
    f: GPPoly, images: Mapping[Variable, GPPoly], order: WordOrder = DEFAULT_ORDER
) -> GPPoly:
    """The homomorphism sending each mapped generator to its image.

    Unmapped generators stay fixed; brackets of images are expanded by
    the Leibniz rule.
    """
    cache: dict[Word, GPPoly] = {}

    def image_of(w: Word) -> GPPoly:
        got = cache.get(w)
        if got is not None:
            return got
        if w.is_leaf:
            res = images[w.var] if w.var in images else GPPoly.generator(w.var)
        else:
            res = image_of(w.left).bracket(image_of(w.right), order)
        cache[w] = res
        return res

    total = GPPoly.zero()
    for m, c in f._terms.items():
        g = GPPoly.constant(c)
        for w in m:
            g = g * image_of(w)
        total = total + g
    return total


def variable_degrees(m: Monomial) -> Counter:
    """Occurrences of each variable in a monomial, over all factors."""
    counts: Counter = Counter()
    for w in m:
        counts.update(w.leaves)
    return counts


def is_polylinear(f: GPPoly) -> bool:
    """Every monomial uses every variable of the support exactly once."""
    vs = f.variables()
    n = len(vs)
    for m in f._terms:
        leaves = [v for w in m for v in w.leaves]
        if len(leaves) != n or set(leaves) != vs:
            return False
    return True
