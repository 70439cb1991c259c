"""Rational-function realizations of the generic Poisson bracket.

On the field of rational functions in x1,y1,...,xn,yn the bracket
{a,b} = sum_i d_i(a) d'_i(b) - d_i(b) d'_i(a) is a Poisson bracket when
the derivation pairs commute (d_i = d/dx_i, d'_i = d/dy_i).  The
twisted pairs xi_i = y_{i+1} d/dx_i (indices wrapping at n) and
xi'_i = d/dy_i do not commute, and the same formula then gives a
generic Poisson bracket that fails Jacobi; staggered generator
assignments turn suitable bracket products into nonzero monomials in
the y variables, certifying non-identities.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ac import Variable, Word
from .gp import GPPoly, is_polylinear
from .ratfunc import MultiPoly, RatFunc

__all__ = [
    "Realization",
    "realized_bracket",
    "evaluate_gp",
    "structured_witness",
    "Witness",
    "identity_witness_search",
]


@dataclass(frozen=True)
class Realization:
    """A derivation-pair model: kind "poisson" (commuting pairs) or
    "gps" (twisted pairs) of size n."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("poisson", "gps"):
            raise ValueError(f"unknown realization kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("realization size must be positive")

    @property
    def var_names(self) -> tuple[str, ...]:
        out = []
        for i in range(1, self.n + 1):
            out.append(f"x{i}")
            out.append(f"y{i}")
        return tuple(out)

    def variable(self, name: str) -> RatFunc:
        return RatFunc.variable(self.var_names, name)

    def constant(self, c) -> RatFunc:
        return RatFunc.constant(self.var_names, c)

    def first_derivation(self, a: RatFunc, i: int) -> RatFunc:
        """d/dx_i for poisson; y_{i+1 mod n} * d/dx_i for gps."""
        d = a.derivative(f"x{i}")
        if self.kind == "poisson":
            return d
        j = i + 1 if i < self.n else 1
        return self.variable(f"y{j}") * d

    def second_derivation(self, a: RatFunc, i: int) -> RatFunc:
        return a.derivative(f"y{i}")


def realized_bracket(a: RatFunc, b: RatFunc, realization: Realization) -> RatFunc:
    total = RatFunc.zero(realization.var_names)
    for i in range(1, realization.n + 1):
        total = total + (
            realization.first_derivation(a, i) * realization.second_derivation(b, i)
            - realization.first_derivation(b, i) * realization.second_derivation(a, i)
        )
    return total


def evaluate_gp(
    f: GPPoly, assignment: Mapping[Variable, RatFunc], realization: Realization
) -> RatFunc:
    """Image of f under the homomorphism extending the assignment, with
    the realized bracket and the field product."""
    missing = sorted(f.variables() - set(assignment))
    if missing:
        raise ValueError(f"assignment does not cover {missing[0]}")
    cache: dict[Word, RatFunc] = {}

    def eval_word(w: Word) -> RatFunc:
        got = cache.get(w)
        if got is not None:
            return got
        if w.is_leaf:
            res = assignment[w.var]
        else:
            res = realized_bracket(eval_word(w.left), eval_word(w.right), realization)
        cache[w] = res
        return res

    total = RatFunc.zero(realization.var_names)
    for m, c in f._terms.items():
        g = realization.constant(c)
        for w in m:
            g = g * eval_word(w)
        total = total + g
    return total


def _witness_plan(f: GPPoly):
    """Chosen monomial whose factors all have degree 2 or 3, the block
    staggering, and the minimal gps size (the last block's output index);
    None if no monomial qualifies."""
    if not is_polylinear(f):
        raise ValueError("structured witnesses need a polylinear input")
    candidates = [
        m
        for m in f._terms
        if m and all(w.degree in (2, 3) for w in m)
    ]
    if not candidates:
        return None
    chosen = min(
        candidates, key=lambda m: (sum(w.degree for w in m), len(m), tuple(w.key for w in m))
    )
    starts = []
    k = 1
    for w in chosen:
        h = w.degree - 1
        starts.append(k)
        k += h + 1
    minimal = starts[-1] + (chosen[-1].degree - 1)
    return chosen, starts, minimal


def _staggered_assignment(plan, n: int) -> dict[Variable, RatFunc] | None:
    """Build the staggered x/y assignment over n derivation pairs, or
    None when the generators it mentions do not all exist."""
    chosen, starts, minimal = plan
    if n < minimal - 1:  # the largest x index is minimal - 1
        return None
    names = Realization("gps", n).var_names
    assignment: dict[Variable, RatFunc] = {}
    for w, k in zip(chosen, starts):
        spine = []
        cur = w
        while not cur.is_leaf:
            spine.append(cur.left)
            cur = cur.right
        assignment[cur.var] = RatFunc.variable(names, f"y{k}")
        for offset, leafw in enumerate(reversed(spine)):
            assignment[leafw.var] = RatFunc.variable(names, f"x{k + offset}")
    return assignment


def structured_witness(f: GPPoly, m: int) -> dict[Variable, RatFunc] | None:
    """The staggered x/y assignment turning the leading pair/triple
    bracket product of f into a product of single y generators.

    Block i starting at k sends the innermost right leaf to y_k and the
    remaining leaves, inside out, to x_k, x_{k+1}, ...; the block then
    evaluates to y_{k + height}.  Returns None when no monomial of f is
    a product of degree-2/3 factors; raises when m is too small.
    """
    plan = _witness_plan(f)
    if plan is None:
        return None
    if m < plan[2]:
        raise ValueError(f"m={m} is too small; the minimal sufficient m is {plan[2]}")
    return _staggered_assignment(plan, m)


@dataclass(frozen=True)
class Witness:
    assignment: dict[Variable, RatFunc]
    value: RatFunc
    method: str
    attempts: int


def _random_polynomial(var_names: tuple[str, ...], rng: random.Random) -> RatFunc:
    """Dense random polynomial of total degree <= 2, coefficients in -2..2."""
    nvars = len(var_names)
    terms: dict[tuple[int, ...], Fraction] = {}
    exponents = [(0,) * nvars]
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        exponents.append(tuple(e))
    for i, j in itertools.combinations_with_replacement(range(nvars), 2):
        e = [0] * nvars
        e[i] += 1
        e[j] += 1
        exponents.append(tuple(e))
    for e in exponents:
        c = rng.randint(-2, 2)
        if c:
            terms[e] = Fraction(c)
    return RatFunc(MultiPoly(var_names, terms))


def identity_witness_search(
    f: GPPoly, realization: Realization, budget: int = 200, seed: int = 0
) -> Witness | None:
    """Look for an assignment where f evaluates to something nonzero.

    Tries the structured staggered assignment first when it applies,
    then seeded random polynomial assignments of degree <= 2; candidates
    are evaluated in a fixed order, so results are reproducible.
    """
    if is_polylinear(f):
        plan = _witness_plan(f)
        assignment = _staggered_assignment(plan, realization.n) if plan else None
        if assignment is not None:
            value = evaluate_gp(f, assignment, realization)
            if not value.is_zero():
                return Witness(assignment, value, "structured", 0)
    rng = random.Random(seed)
    names = realization.var_names
    variables = sorted(f.variables())
    for attempt in range(1, budget + 1):
        assignment = {v: _random_polynomial(names, rng) for v in variables}
        value = evaluate_gp(f, assignment, realization)
        if not value.is_zero():
            return Witness(assignment, value, "random", attempt)
    return None
