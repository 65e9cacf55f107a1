"""Exact univariate integer polynomials.

Carries the polynomial side of the spectral machinery: Sturm-sequence real
root counting, the palindromic factor that holds all unit-circle roots, the
x + 1/x change of variable, and irreducibility over Q.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

import sympy

from .errors import PreconditionError

Scalar = Union[int, Fraction]


def _content(coeffs: Sequence[int]) -> int:
    c = 0
    for a in coeffs:
        c = gcd(c, abs(a))
    return c


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial over Z, coefficients constant term first.

    Canonical form: trailing zeros trimmed, integer content divided out,
    leading coefficient positive.  The zero polynomial is stored as ``(0,)``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        if any(cs):
            cont = _content(cs)
            if cs[-1] < 0:
                cont = -cont
            cs = [c // cont for c in cs]
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    @property
    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        if self.degree < 1:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def reversed_(self) -> "IntPolynomial":
        """Coefficient reversal x^deg * p(1/x)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    @classmethod
    def from_fractions(cls, coeffs: Iterable[Fraction]) -> "IntPolynomial":
        cs = [Fraction(c) for c in coeffs]
        denom = 1
        for c in cs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        return cls(tuple(int(c * denom) for c in cs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        return " + ".join(parts)


# -- rational-coefficient helpers (lists, constant term first) -----------


def _fp(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _fp_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and _fp_trim(a):
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
        _fp_trim(a)
    return _fp_trim(q), a


def _fp_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd over Q (constant 1 for coprime inputs)."""
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        _, r = _fp_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _fp_eval(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


# -- squarefree part, Sturm counting -------------------------------------


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero:
        raise PreconditionError("squarefree part of the zero polynomial")
    g = _fp_gcd(_fp(p), _fp(p.derivative()))
    q, r = _fp_divmod(_fp(p), g)
    assert not r, "gcd must divide exactly"
    return IntPolynomial.from_fractions(q)


def sturm_count(q: IntPolynomial, a: Scalar, b: Scalar) -> int:
    """Number of distinct real roots of squarefree q in the interval (a, b].

    Neither endpoint may be a root; perturb the endpoints by an exact
    rational shift before calling if that happens.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise PreconditionError("need a < b")
    if q.degree < 1:
        return 0
    if q(a) == 0 or q(b) == 0:
        raise PreconditionError("endpoint is a root; perturb it first")
    chain = [_fp(q), _fp(q.derivative())]
    while len(chain[-1]) > 1:
        _, r = _fp_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])

    def variations(x: Fraction) -> int:
        signs = []
        for poly in chain:
            v = _fp_eval(poly, x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    return variations(a) - variations(b)


# -- unit-circle root detection ------------------------------------------


def self_reciprocal_part(p: IntPolynomial) -> IntPolynomial:
    """gcd of p with its coefficient reversal, over Q, made primitive.

    Contains every root of p lying on the unit circle: such roots come in
    pairs lambda, 1/lambda = conj(lambda), so they divide the reversal too.
    """
    if p.constant_term == 0:
        raise PreconditionError("zero constant term; factor out x first")
    g = _fp_gcd(_fp(p), _fp(p.reversed_()))
    return IntPolynomial.from_fractions(g)


def half_trace_transform(r: IntPolynomial) -> IntPolynomial:
    """For palindromic r of degree 2m, the q with r(x) = x^m * q(x + 1/x).

    Uses the recurrence b_0 = 2, b_1 = y, b_{k+1} = y*b_k - b_{k-1} for the
    polynomials with b_k(x + 1/x) = x^k + x^(-k).
    """
    deg = r.degree
    if deg < 2 or deg % 2 or not r.is_palindromic:
        raise PreconditionError("need a palindromic polynomial of even degree >= 2")
    m = deg // 2
    c = r.coeffs

    def padd(u: list[int], v: list[int]) -> list[int]:
        n = max(len(u), len(v))
        return [(u[i] if i < len(u) else 0) + (v[i] if i < len(v) else 0) for i in range(n)]

    def scale(u: list[int], s: int) -> list[int]:
        return [s * x for x in u]

    b_prev, b_cur = [2], [0, 1]
    q = [c[m]]
    for k in range(1, m + 1):
        q = padd(q, scale(b_cur, c[m + k]))
        if k < m:
            b_prev, b_cur = b_cur, padd([0] + b_cur, scale(b_prev, -1))
    return IntPolynomial(tuple(q))


def has_unit_circle_eigenvalue(p: IntPolynomial) -> bool:
    """True iff p has a complex root of modulus exactly 1.

    Intended for characteristic polynomials of GL_n(Z) matrices, hence the
    requirement of a unit constant term.  Fully exact: after handling the
    roots +-1, the palindromic factor is rewritten in y = x + 1/x and its
    real roots in (-2, 2) are counted with a Sturm sequence.
    """
    if p.degree < 1:
        raise PreconditionError("need a nonconstant polynomial")
    if abs(p.constant_term) != 1:
        raise PreconditionError("constant term must be a unit")
    if p(1) == 0 or p(-1) == 0:
        return True
    r = self_reciprocal_part(p)
    if r.degree == 0:
        return False
    q = half_trace_transform(r)
    qs = squarefree_part(q)
    # roots at y = +-2 would mean x = +-1, excluded above
    return sturm_count(qs, Fraction(-2), Fraction(2)) > 0


# -- irreducibility over Q -----------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _has_rational_root(p: IntPolynomial) -> bool:
    c0, lead = p.constant_term, p.leading
    if c0 == 0:
        return True
    for r in _divisors(c0):
        for s in _divisors(lead):
            if gcd(r, s) != 1:
                continue
            for cand in (Fraction(r, s), Fraction(-r, s)):
                if p(cand) == 0:
                    return True
    return False


def is_irreducible(p: IntPolynomial) -> bool:
    """Irreducibility of p over Q (equivalently over Z, p being primitive)."""
    if p.degree < 1:
        raise PreconditionError("constant polynomial")
    if p.degree == 1:
        return True
    if _has_rational_root(p):
        return False
    if p.degree <= 3:
        # any factorization of a degree-2/3 polynomial has a linear factor
        return True
    x = sympy.Symbol("x")
    return bool(sympy.Poly(list(reversed(p.coeffs)), x).is_irreducible)
