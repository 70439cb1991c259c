"""Derivation calculus on the free generic Poisson algebra.

An element linear in a variable x acts there like a first-order
operator; it is a *derivation in x* when substituting a product for x
obeys the Leibniz expansion.  Elements that are derivations in every
variable ("Jacobian" elements) are classified exactly: up to scale the
bracket pair {x1,x2} in two variables and the bracket jacobiator in
three, and nothing in higher arity.  The module also provides the
supporting machinery: multiplication operators, linearization by
polarization, bracket-factor heights, the height-reducing derivation
difference, and decomposition into products of the two basic shapes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .ac import (
    ACPoly,
    DEFAULT_ORDER,
    Variable,
    Word,
    WordOrder,
    ac_bracket,
    enumerate_polylinear_basis,
    i_normal_form,
)
from .assoc import AssocPoly
from .gp import (
    GPPoly,
    Monomial,
    is_polylinear,
    substitute,
    variable_degrees,
)
from .linalg import RowReducer, primitive_integer_vector, solve

__all__ = [
    "jacobiator",
    "derivation_difference",
    "is_derivation_in",
    "is_jacobian",
    "multiplication_operator",
    "jacobian_space",
    "linearize",
    "FarkasHeight",
    "farkas_height",
    "strip_bare_factors",
    "ReductionStep",
    "jacobian_reduce",
    "jacobian_reduce_trace",
    "ProductDecomposition",
    "jacobian_product_decompose",
]


def jacobiator(a: ACPoly, b: ACPoly, c: ACPoly, order: WordOrder = DEFAULT_ORDER) -> ACPoly:
    """Cyclic sum {{a,b},c} + {{b,c},a} + {{c,a},b}; zero iff Jacobi holds."""
    return (
        ac_bracket(ac_bracket(a, b, order), c, order)
        + ac_bracket(ac_bracket(b, c, order), a, order)
        + ac_bracket(ac_bracket(c, a, order), b, order)
    )


def _require_linear(f: GPPoly, x: Variable) -> None:
    for m in f._terms:
        if variable_degrees(m)[x] != 1:
            raise ValueError(f"input is not linear in {x}")


def _fresh_variables(f: GPPoly, like: Variable, count: int) -> list[Variable]:
    top = max((v.index for v in f.variables() | {like}), default=0)
    return [Variable(like.base, top + i) for i in range(1, count + 1)]


def derivation_difference(f: GPPoly, x: Variable, y: Variable, z: Variable) -> GPPoly:
    """f with y*z plugged into x, minus the two Leibniz terms.

    Vanishes exactly when f is a derivation in x.  The callers that
    reduce heights pass y = x; fresh y, z give the defining test.
    """
    _require_linear(f, x)
    gy = GPPoly.generator(y)
    gz = GPPoly.generator(z)
    return (
        substitute(f, {x: gy * gz})
        - gy * substitute(f, {x: gz})
        - gz * substitute(f, {x: gy})
    )


def is_derivation_in(f: GPPoly, x: Variable) -> bool:
    y, z = _fresh_variables(f, x, 2)
    return derivation_difference(f, x, y, z).is_zero()


def is_jacobian(f: GPPoly) -> bool:
    """True when f is a derivation in every variable of its support.

    Requires a polylinear input; a constant is vacuously Jacobian.
    """
    if not is_polylinear(f):
        raise ValueError("Jacobian test needs a polylinear input; linearize first")
    return all(is_derivation_in(f, v) for v in sorted(f.variables()))


def multiplication_operator(f: ACPoly, x: Variable, order: WordOrder = DEFAULT_ORDER) -> AssocPoly:
    """f, linear in x, as an associative word in bracket-multiplication
    letters applied to x; the letters are the normal factor words."""
    acc = AssocPoly.zero()
    for w, c in f.terms():
        op = i_normal_form(w, x, order)
        acc = acc + AssocPoly.word(op.factors, c * op.sign)
    return acc


def jacobian_space(n: int, max_n: int = 6, order: WordOrder = DEFAULT_ORDER) -> list[ACPoly]:
    """Basis of the polylinear elements on x1..xn that are Jacobian.

    Solves the exact linear system "derivation difference vanishes for
    each variable" over the basis of polylinear normal words.  The
    dimension is 1 for n = 2 and n = 3 and 0 beyond.
    """
    if n < 2:
        raise ValueError("need at least two variables")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured bound {max_n}")
    xs = [Variable("x", i) for i in range(1, n + 1)]
    y, z = Variable("x", n + 1), Variable("x", n + 2)
    words = enumerate_polylinear_basis(xs, order)
    reducer = RowReducer(len(words))
    for xi in xs:
        rows: dict[Monomial, list[Fraction]] = {}
        for j, w in enumerate(words):
            diff = derivation_difference(GPPoly.from_factors((w,)), xi, y, z)
            for m, c in diff._terms.items():
                row = rows.get(m)
                if row is None:
                    row = rows[m] = [Fraction(0)] * len(words)
                row[j] = c
        for m in sorted(rows, key=lambda mono: tuple(w.key for w in mono)):
            reducer.add(rows[m])
            if reducer.rank == len(words):
                return []
    basis = []
    for vec in reducer.nullspace():
        vec = primitive_integer_vector(vec)
        acc: dict[Word, Fraction] = {}
        for j, c in enumerate(vec):
            if c:
                acc[words[j]] = c
        basis.append(ACPoly(acc))
    return basis


def linearize(f: GPPoly) -> GPPoly:
    """Full polarization: each variable of degree d is replaced by d
    fresh copies and the component linear in every copy is kept.

    The multilinear component is not divided by d!, which does not
    affect which algebras satisfy the identity in characteristic zero.
    Fresh copies take the next unused indices of the same letter class.
    Requires f to be degree-homogeneous in each of its variables.
    """
    degrees: dict[Variable, int] = {}
    for m in f._terms:
        for v, d in variable_degrees(m).items():
            if degrees.setdefault(v, d) != d:
                raise ValueError(
                    f"not homogeneous in {v}; split into fine components first"
                )
    result = f
    next_index = max((v.index for v in f.variables()), default=0)
    for v in sorted(degrees):
        d = degrees[v]
        if d <= 1:
            continue
        copies = [v]
        for _ in range(d - 1):
            next_index += 1
            copies.append(Variable(v.base, next_index))
        image = GPPoly.zero()
        for c in copies:
            image = image + GPPoly.generator(c)
        expanded = substitute(result, {v: image})
        kept: dict[Monomial, Fraction] = {}
        for m, c in expanded._terms.items():
            counts = variable_degrees(m)
            if all(counts[cp] == 1 for cp in copies):
                kept[m] = c
        result = GPPoly(kept)
    return result


@dataclass(frozen=True)
class FarkasHeight:
    """Per-variable bracket-factor degrees and their 3-power total."""

    per_variable: Mapping[Variable, int]
    total: int


def _bare_factor_variables(f: GPPoly) -> list[Variable]:
    return sorted({w.var for m in f._terms for w in m if w.degree == 1})


def farkas_height(f: GPPoly) -> FarkasHeight:
    """Max degree of the factor containing each variable; total is the
    sum of 3 raised to those degrees."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no height")
    if not is_polylinear(f):
        raise ValueError("height needs a polylinear input")
    bare = _bare_factor_variables(f)
    if bare:
        raise ValueError(
            f"bare variable factor {bare[0]}; substitute 1 for bare factors first"
            " (strip_bare_factors)"
        )
    per: dict[Variable, int] = {}
    for m in f._terms:
        for w in m:
            for v in w.varset:
                if per.get(v, 0) < w.degree:
                    per[v] = w.degree
    total = sum(3**h for h in per.values())
    return FarkasHeight(dict(sorted(per.items())), total)


def strip_bare_factors(f: GPPoly) -> GPPoly:
    """Substitute 1 for every variable occurring as a degree-one factor,
    repeating until none remain.  Monomials holding such a variable
    inside a bracket die with it ({u,1} = 0)."""
    g = f
    while True:
        bare = _bare_factor_variables(g)
        if not bare:
            return g
        g = substitute(g, {bare[0]: GPPoly.one()})


@dataclass(frozen=True)
class ReductionStep:
    variable: Variable
    fresh: Variable
    height_before: int
    height_after: int


def jacobian_reduce_trace(f: GPPoly) -> tuple[GPPoly, list[ReductionStep]]:
    """Iterate derivation differences until the result is Jacobian.

    At each step the smallest variable in which f fails to be a
    derivation is split against a fresh variable; the total height
    strictly decreases, which forces termination.
    """
    if f.is_zero():
        raise ValueError("cannot reduce the zero polynomial")
    if not is_polylinear(f):
        raise ValueError("reduction needs a polylinear input; linearize first")
    if _bare_factor_variables(f):
        raise ValueError("bare variable factors present; strip_bare_factors first")
    g = f
    steps: list[ReductionStep] = []
    while True:
        failing = next(
            (v for v in sorted(g.variables()) if not is_derivation_in(g, v)), None
        )
        if failing is None:
            return g, steps
        before = farkas_height(g).total
        fresh = Variable(failing.base, max(v.index for v in g.variables()) + 1)
        g = derivation_difference(g, failing, failing, fresh)
        if g.is_zero():
            raise ArithmeticError(
                "derivation difference vanished for a non-derivation variable"
            )
        after = farkas_height(g).total
        if after >= before:
            raise ArithmeticError("total height failed to decrease")
        steps.append(ReductionStep(failing, fresh, before, after))


def jacobian_reduce(f: GPPoly) -> GPPoly:
    return jacobian_reduce_trace(f)[0]


def _partitions_23(items: Sequence[Variable]):
    """Set partitions into blocks of size 2 and 3, each block sorted."""
    items = tuple(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for size in (2, 3):
        for partners in itertools.combinations(rest, size - 1):
            block = (first, *partners)
            remaining = tuple(v for v in rest if v not in partners)
            for tail in _partitions_23(remaining):
                yield (block, *tail)


def _block_element(block: tuple[Variable, ...], order: WordOrder) -> ACPoly:
    gens = [ACPoly.generator(v) for v in block]
    if len(block) == 2:
        return ac_bracket(gens[0], gens[1], order)
    return jacobiator(gens[0], gens[1], gens[2], order)


@dataclass(frozen=True)
class ProductDecomposition:
    ok: bool
    terms: tuple[tuple[Fraction, GPPoly], ...]
    blocks: tuple[tuple[tuple[Variable, ...], ...], ...]
    reason: str | None = None

    def reconstruct(self) -> GPPoly:
        total = GPPoly.zero()
        for c, g in self.terms:
            total = total + c * g
        return total


def jacobian_product_decompose(
    f: GPPoly, order: WordOrder = DEFAULT_ORDER
) -> ProductDecomposition:
    """Exact coefficients of f over products of pair brackets and
    three-variable jacobiators, one product per 2/3-partition of the
    support.  Fails when the support size is not a sum of 2s and 3s or
    the system is inconsistent."""
    if not is_jacobian(f):
        raise ValueError("input is not Jacobian")
    vs = sorted(f.variables())
    partitions = list(_partitions_23(vs))
    if not partitions:
        return ProductDecomposition(
            False, (), (), f"support size {len(vs)} is not a sum of 2s and 3s"
        )
    spanning: list[GPPoly] = []
    for part in partitions:
        g = GPPoly.one()
        for block in part:
            g = g * GPPoly.from_ac(_block_element(block, order))
        spanning.append(g)
    monomials = sorted(
        {m for g in spanning for m in g._terms} | set(f._terms),
        key=lambda mono: tuple(w.key for w in mono),
    )
    rows = [[g._terms.get(m, Fraction(0)) for g in spanning] for m in monomials]
    rhs = [f._terms.get(m, Fraction(0)) for m in monomials]
    coeffs = solve(rows, rhs)
    if coeffs is None:
        return ProductDecomposition(
            False, (), (), "not in the span of pair/triple bracket products"
        )
    terms = []
    blocks = []
    for part, g, c in zip(partitions, spanning, coeffs):
        if c:
            terms.append((c, g))
            blocks.append(part)
    return ProductDecomposition(True, tuple(terms), tuple(blocks))
