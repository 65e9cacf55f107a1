import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from lengrp.errors import PreconditionError
from lengrp.polynomials import (
    IntPolynomial,
    half_trace_transform,
    has_unit_circle_eigenvalue,
    is_irreducible,
    self_reciprocal_part,
    squarefree_part,
    sturm_count,
)

CONNER_CHAR = IntPolynomial((1, -2, 1, -2, 1))  # x^4 - 2x^3 + x^2 - 2x + 1


def cyclotomic(n):
    poly = sympy.polys.specialpolys.cyclotomic_poly(n, sympy.Symbol("x"))
    coeffs = sympy.Poly(poly).all_coeffs()
    return IntPolynomial(tuple(int(c) for c in reversed(coeffs)))


def test_canonical_form():
    assert IntPolynomial((2, 4, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0, -3)).coeffs == (0, 0, 1)  # leading made positive
    assert IntPolynomial((0,)).is_zero
    assert IntPolynomial(()).is_zero
    assert IntPolynomial((5,)).coeffs == (1,)


def test_degree_and_evaluation():
    p = IntPolynomial((1, -3, 1))  # x^2 - 3x + 1
    assert p.degree == 2
    assert p(0) == 1
    assert p(3) == 1
    assert p(Fraction(1, 2)) == Fraction(-1, 4)
    assert p.derivative().coeffs == (-3, 2)
    assert IntPolynomial((7,)).derivative().is_zero


def test_reversal_and_palindromic():
    p = IntPolynomial((1, -3, 1))
    assert p.is_palindromic
    assert p.reversed_() == p
    q = IntPolynomial((1, -3, 0, 1))
    assert not q.is_palindromic
    assert q.reversed_().coeffs == (1, 0, -3, 1)
    assert CONNER_CHAR.is_palindromic


def test_squarefree_part():
    # (x-1)^2 (x+2) = x^3 - 3x + 2
    p = IntPolynomial((2, -3, 0, 1))
    assert squarefree_part(p) == IntPolynomial((-2, 1, 1))  # (x-1)(x+2)
    assert squarefree_part(IntPolynomial((-1, 0, 1))) == IntPolynomial((-1, 0, 1))
    with pytest.raises(PreconditionError):
        squarefree_part(IntPolynomial((0,)))


def test_sturm_count():
    p = IntPolynomial((-2, 0, 1))  # x^2 - 2
    assert sturm_count(p, 0, 2) == 1
    assert sturm_count(p, -2, 2) == 2
    assert sturm_count(p, 2, 3) == 0
    with pytest.raises(PreconditionError):
        sturm_count(IntPolynomial((-4, 0, 1)), 0, 2)  # root at endpoint
    with pytest.raises(PreconditionError):
        sturm_count(p, 2, 1)


def test_sturm_against_numpy_roots():
    rng = random.Random(5)
    for _ in range(50):
        coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))] + [1]
        p = squarefree_part(IntPolynomial(tuple(coeffs)))
        if p.degree < 1 or p(Fraction(-7)) == 0 or p(Fraction(7)) == 0:
            continue
        roots = np.roots(list(reversed(p.coeffs)))
        expected = sum(
            1 for r in roots if abs(r.imag) < 1e-9 and -7 < r.real <= 7
        )
        assert sturm_count(p, -7, 7) == expected


def test_self_reciprocal_part():
    assert self_reciprocal_part(CONNER_CHAR) == CONNER_CHAR
    # x^2 - x - 1 shares no factor with its reversal -x^2 - x + 1
    golden = IntPolynomial((-1, -1, 1))
    assert self_reciprocal_part(golden).degree == 0
    with pytest.raises(PreconditionError):
        self_reciprocal_part(IntPolynomial((0, 1)))


def test_half_trace_transform():
    assert half_trace_transform(IntPolynomial((1, -3, 1))) == IntPolynomial((-3, 1))
    assert half_trace_transform(CONNER_CHAR) == IntPolynomial((-1, -2, 1))
    assert half_trace_transform(IntPolynomial((1, 0, 0, 0, 1))) == IntPolynomial((-2, 0, 1))
    with pytest.raises(PreconditionError):
        half_trace_transform(IntPolynomial((1, -3, 0, 1)))  # not palindromic


def test_half_trace_substitution_identity():
    # r(x) = s * x^m * q(x + 1/x) for a fixed scalar s (q is canonicalized)
    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        half = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        coeffs = half + [rng.randint(-3, 3)] + half[::-1]
        r = IntPolynomial(tuple(coeffs))
        if r.degree < 2 or r.degree % 2 or not r.is_palindromic:
            continue
        q = half_trace_transform(r)
        m = r.degree // 2
        ratios = set()
        for num in (2, 3, -5, 4):
            x = Fraction(num, 7)
            lhs = Fraction(r(x))
            rhs = x ** m * q(x + 1 / x)
            if rhs != 0:
                ratios.add(lhs / rhs)
        assert len(ratios) == 1
        checked += 1
    assert checked > 10


def test_unit_circle_detection_goldens():
    assert has_unit_circle_eigenvalue(CONNER_CHAR)
    assert not has_unit_circle_eigenvalue(IntPolynomial((1, -3, 1)))
    assert has_unit_circle_eigenvalue(IntPolynomial((-1, 1)))  # x - 1
    assert has_unit_circle_eigenvalue(IntPolynomial((1, 1)))  # x + 1
    assert not has_unit_circle_eigenvalue(IntPolynomial((-1, -1, 1)))
    for n in (3, 4, 5, 6, 8, 12):
        assert has_unit_circle_eigenvalue(cyclotomic(n))
    with pytest.raises(PreconditionError):
        has_unit_circle_eigenvalue(IntPolynomial((2, 0, 1)))  # non-unit constant


def test_unit_circle_detection_random_cross_check():
    rng = random.Random(3)
    for _ in range(100):
        deg = rng.randint(2, 6)
        coeffs = [rng.choice([-1, 1])] + [rng.randint(-3, 3) for _ in range(deg - 1)] + [1]
        p = IntPolynomial(tuple(coeffs))
        if abs(p.constant_term) != 1:
            continue
        roots = np.roots(list(reversed(p.coeffs)))
        moduli = sorted(abs(r) for r in roots)
        if any(1e-12 < abs(m - 1) < 1e-4 for m in moduli):
            continue  # numerically ambiguous; the exact answer is the oracle
        assert has_unit_circle_eigenvalue(p) == any(abs(m - 1) < 1e-9 for m in moduli)


def test_irreducibility():
    assert is_irreducible(CONNER_CHAR)
    assert is_irreducible(IntPolynomial((1, -3, 1)))
    assert is_irreducible(cyclotomic(5))
    assert not is_irreducible(IntPolynomial((-1, 0, 1)))  # x^2 - 1
    assert not is_irreducible(IntPolynomial((1, 0, 2, 0, 1)))  # (x^2+1)^2
    assert is_irreducible(IntPolynomial((2, 2)))  # canonicalizes to x + 1
    assert not is_irreducible(IntPolynomial((1, 2, 2, 2, 1)))  # (x^2+1)(x+1)^2
    with pytest.raises(PreconditionError):
        is_irreducible(IntPolynomial((7,)))
