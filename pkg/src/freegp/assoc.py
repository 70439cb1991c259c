"""Free associative algebra over an arbitrary alphabet.

Words are tuples of letters (any hashable, mutually comparable values).
The module provides the signed permutation sums, the primitivity test
for Lie elements (an element is Lie iff the coproduct that makes every
letter primitive sends it to L(x)1 + 1(x)L), and the algebra map onto
the exterior algebra of the letter space.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ac import _accumulate, format_linear

__all__ = [
    "AssocPoly",
    "ExteriorElem",
    "commutator",
    "alternating_sum",
    "is_lie_element",
    "exterior_image",
    "permutation_sign",
]


def permutation_sign(perm: Sequence[int]) -> int:
    """Parity of a permutation given as a sequence of distinct indices."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _sort_sign(letters: tuple):
    """(sign, sorted letters) from sorting, or None on a repeated letter."""
    sign = 1
    out = list(letters)
    for i in range(1, len(out)):
        j = i
        while j > 0 and out[j] < out[j - 1]:
            out[j], out[j - 1] = out[j - 1], out[j]
            sign = -sign
            j -= 1
    for a, b in zip(out, out[1:]):
        if a == b:
            return None
    return sign, tuple(out)


class AssocPoly:
    """Exact linear combination of associative words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        self._terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "AssocPoly":
        return AssocPoly()

    @staticmethod
    def one() -> "AssocPoly":
        return AssocPoly({(): Fraction(1)})

    @staticmethod
    def letter(l) -> "AssocPoly":
        return AssocPoly({(l,): Fraction(1)})

    @staticmethod
    def word(letters: Iterable, coefficient=1) -> "AssocPoly":
        c = Fraction(coefficient)
        return AssocPoly({tuple(letters): c} if c else {})

    def terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def letters(self) -> frozenset:
        return frozenset(l for w in self._terms for l in w)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        if not isinstance(other, AssocPoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(acc, w, c)
        return AssocPoly(acc)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        if not isinstance(other, AssocPoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(acc, w, -c)
        return AssocPoly(acc)

    def __neg__(self) -> "AssocPoly":
        return AssocPoly({w: -c for w, c in self._terms.items()})

    def __mul__(self, other) -> "AssocPoly":
        if isinstance(other, AssocPoly):
            acc: dict[tuple, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    _accumulate(acc, w1 + w2, c1 * c2)
            return AssocPoly(acc)
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            if not s:
                return AssocPoly()
            return AssocPoly({w: c * s for w, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "AssocPoly":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, AssocPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return format_linear(
            ("*".join(str(l) for l in w), c) for w, c in self.terms()
        )


def commutator(a: AssocPoly, b: AssocPoly) -> AssocPoly:
    return a * b - b * a


def alternating_sum(m: int, letters: Sequence) -> AssocPoly:
    """Sum over all orderings of the letters, signed by permutation parity."""
    letters = tuple(letters)
    if m != len(letters):
        raise ValueError(f"m={m} does not match {len(letters)} letters")
    if len(set(letters)) != m:
        raise ValueError("duplicate letters")
    acc: dict[tuple, Fraction] = {}
    for perm in itertools.permutations(range(m)):
        word = tuple(letters[i] for i in perm)
        acc[word] = Fraction(permutation_sign(perm))
    return AssocPoly(acc)


def _coproduct(L: AssocPoly) -> dict[tuple[tuple, tuple], Fraction]:
    """Coproduct with every letter primitive, extended multiplicatively."""
    acc: dict[tuple[tuple, tuple], Fraction] = {}
    for word, c in L._terms.items():
        k = len(word)
        for mask in range(1 << k):
            left = tuple(word[i] for i in range(k) if mask >> i & 1)
            right = tuple(word[i] for i in range(k) if not mask >> i & 1)
            _accumulate(acc, (left, right), c)
    return acc


def is_lie_element(L: AssocPoly) -> bool:
    """Primitivity test: the coproduct of L equals L(x)1 + 1(x)L."""
    target: dict[tuple[tuple, tuple], Fraction] = {}
    for word, c in L._terms.items():
        _accumulate(target, (word, ()), c)
        _accumulate(target, ((), word), c)
    return _coproduct(L) == target


class ExteriorElem:
    """Element of the exterior algebra on the letter space."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        self._terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "ExteriorElem":
        return ExteriorElem()

    def terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def coefficient(self, letters: tuple) -> Fraction:
        sg = _sort_sign(tuple(letters))
        if sg is None:
            return Fraction(0)
        s, key = sg
        return s * self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "ExteriorElem") -> "ExteriorElem":
        if not isinstance(other, ExteriorElem):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(acc, w, c)
        return ExteriorElem(acc)

    def __mul__(self, other) -> "ExteriorElem":
        if isinstance(other, ExteriorElem):
            acc: dict[tuple, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    sg = _sort_sign(w1 + w2)
                    if sg is None:
                        continue
                    s, key = sg
                    _accumulate(acc, key, c1 * c2 * s)
            return ExteriorElem(acc)
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            if not s:
                return ExteriorElem()
            return ExteriorElem({w: c * s for w, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "ExteriorElem":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, ExteriorElem) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return format_linear(
            ("^".join(str(l) for l in w), c) for w, c in self.terms()
        )


def exterior_image(L: AssocPoly) -> ExteriorElem:
    """Image under the algebra map fixing letters; repeated letters die."""
    acc: dict[tuple, Fraction] = {}
    for word, c in L._terms.items():
        sg = _sort_sign(word)
        if sg is None:
            continue
        s, key = sg
        _accumulate(acc, key, c * s)
    return ExteriorElem(acc)
