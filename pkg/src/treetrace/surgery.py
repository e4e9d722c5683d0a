"""Knot polynomial arithmetic and surgery formulas for the two invariants.

A knot enters as its Conway and Jones polynomials (exact integer Laurent
polynomials); 1/n surgery on it produces a homology sphere whose Casson
invariant is -n/6 times the second h-derivative of the Jones polynomial at
t = exp(-h), and whose second invariant is

    n/2 v2 - n/3 v3 + n^2 (v2 + 5/3 v2^2 - 60 c4),

with c4 the z^4 Conway coefficient.  On top of that sit the connected-sum
and orientation-reversal rules, the derived invariant d2 = lambda2 -
18 lambda^2, and the combination lambda2 + 3 lambda - 18 lambda^2 that
obstructs deep Heegaard gluings; its value on the Poincare sphere is 24.

The n-th power of a twist on a genus-1 bounding curve realizes 1/n surgery
on the corresponding knot, which ties the tree-side bilinear forms to the
surgery side: ``cocycle_coefficients`` rebuilds the linear system matching
the two routes and solves it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .exact import FreeVec, solve_linear
from .forms import j_form, q_form
from .symplectic import DEFAULT_GENUS, a, b
from .trees import tau2_bscc_twist


class LaurentPoly:
    """Integer Laurent polynomial, stored exponent -> nonzero coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for exp, coeff in items:
                exp = int(exp)
                coeff = int(coeff)
                acc = data.get(exp, 0) + coeff
                if acc:
                    data[exp] = acc
                else:
                    data.pop(exp, None)
        self._coeffs = data

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def terms(self):
        return sorted(self._coeffs.items())

    def evaluate(self, x) -> Fraction:
        """Exact value at a nonzero rational point."""
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._coeffs.items()), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self):
        if not self._coeffs:
            return "LaurentPoly(0)"
        return "LaurentPoly(%s)" % (self.terms(),)


class SphereInvariants(NamedTuple):
    """The pair (Casson lambda, second invariant lambda2) of a homology sphere."""

    lam: Fraction
    lam2: Fraction


@dataclass(frozen=True)
class KnotRecord:
    """A knot's polynomial data plus, optionally, the homology classes of a
    symplectic basis of the genus-1 subsurface its curve bounds."""

    name: str
    conway: LaurentPoly
    jones: LaurentPoly
    bscc_basis: Optional[tuple] = None

    def __post_init__(self):
        if self.jones.evaluate(1) != 1:
            raise ValueError(
                "Jones polynomial of %r is not 1 at t = 1" % self.name)


TREFOIL = KnotRecord(
    name="trefoil",
    conway=LaurentPoly({2: 1, 0: 1}),
    jones=LaurentPoly({1: 1, 3: 1, 4: -1}),
    bscc_basis=(FreeVec({a(1): 1, b(1): 1}),
                FreeVec({a(2): 1, b(1): -1, b(2): 1})),
)

FIGURE_EIGHT = KnotRecord(
    name="figure-eight",
    conway=LaurentPoly({0: 1, 2: -1}),
    jones=LaurentPoly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1}),
    bscc_basis=(FreeVec({a(1): 1, b(1): 1}),
                FreeVec({a(2): 1, b(1): 1, b(2): -1})),
)

BUILTIN_KNOTS = {k.name: k for k in (TREFOIL, FIGURE_EIGHT)}

POINCARE = SphereInvariants(Fraction(1), Fraction(39))


def conway_coefficient(p: LaurentPoly, k: int) -> int:
    """Coefficient of z^k in a Conway polynomial."""
    return p.coefficient(k)


def jones_h_derivative(p: LaurentPoly, i: int) -> int:
    """i-th derivative of p(exp(-h)) at h = 0: sum of c_n (-n)^i."""
    if i < 0:
        raise ValueError("derivative order must be nonnegative")
    return sum(c * (-n) ** i for n, c in p.terms())


def casson_surgery(knot: KnotRecord, n: int) -> Fraction:
    """Casson invariant of the sphere from 1/n surgery: -n/6 times v2."""
    return Fraction(-n, 6) * jones_h_derivative(knot.jones, 2)


def lambda2_surgery(knot: KnotRecord, n: int) -> Fraction:
    """Second invariant of the sphere from 1/n surgery on the knot."""
    v2 = jones_h_derivative(knot.jones, 2)
    v3 = jones_h_derivative(knot.jones, 3)
    c4 = conway_coefficient(knot.conway, 4)
    quadratic = v2 + Fraction(5, 3) * v2 * v2 - 60 * c4
    return Fraction(n, 2) * v2 - Fraction(n, 3) * v3 + n * n * quadratic


def connected_sum(m1: SphereInvariants, m2: SphereInvariants) -> SphereInvariants:
    """Invariants of a connected sum: lambda adds, lambda2 picks up 36*lam*lam."""
    return SphereInvariants(
        m1.lam + m2.lam,
        m1.lam2 + m2.lam2 + 36 * m1.lam * m2.lam)


def reverse_orientation(m: SphereInvariants) -> SphereInvariants:
    """Orientation reversal negates lambda and shifts lambda2 by 6*lambda."""
    return SphereInvariants(-m.lam, m.lam2 + 6 * m.lam)


def d2_value(m: SphereInvariants) -> Fraction:
    """The homomorphism-on-deeper-layers part: lambda2 - 18 lambda^2."""
    return m.lam2 - 18 * m.lam * m.lam


def vanishing_combo(m: SphereInvariants) -> Fraction:
    """lambda2 + 3 lambda - 18 lambda^2; zero on spheres glued from deep twists."""
    return m.lam2 + 3 * m.lam - 18 * m.lam * m.lam


def solve_alpha_r() -> tuple:
    """Coefficients (alpha, r) making lambda2 = r*lambda + alpha*lambda^2 on deep gluings.

    Imposing the connected-sum rule on a double of a sphere with Casson
    value t forces 2*t^2*alpha = 36*t^2, and the orientation-reversal rule
    forces -2*t*r = 6*t.  Both are assembled at two generic values of t and
    solved exactly.
    """
    rows, rhs = [], []
    for t in (Fraction(1), Fraction(2)):
        # lambda2(double) = 2*lambda2 + 36*t^2 with lambda2 = r t + alpha t^2.
        rows.append([4 * t * t - 2 * t * t, 2 * t - 2 * t])
        rhs.append(36 * t * t)
        # lambda2(reversed) = lambda2 + 6 t with lambda(reversed) = -t.
        rows.append([t * t - t * t, -t - t])
        rhs.append(6 * t)
    alpha, r = solve_linear(rows, rhs)
    return alpha, r


def twist_cocycle_data(knot: KnotRecord, genus: int = DEFAULT_GENUS) -> tuple:
    """(Casson value, tree image) of the twist on the knot's bounding curve."""
    if knot.bscc_basis is None:
        raise ValueError("knot %r carries no bounding-curve basis" % knot.name)
    x, y = knot.bscc_basis
    return casson_surgery(knot, 1), tau2_bscc_twist(x, y, genus)


def surgery_cocycle_value(knot: KnotRecord) -> Fraction:
    """Self-cocycle of the twist measured on the surgery side.

    The square of the twist is 1/2 surgery, so the cocycle evaluates to
    lambda2(1/2 surgery) - 2*lambda2(1/1 surgery).
    """
    return lambda2_surgery(knot, 2) - 2 * lambda2_surgery(knot, 1)


def cocycle_equation(knot: KnotRecord, genus: int = DEFAULT_GENUS) -> tuple:
    """One linear condition (j, q, rhs) on the tree-part coefficients.

    The unknown combination r1*J + r2*Q must reproduce the surgery-side
    cocycle with the 36*lambda*lambda part stripped off.
    """
    lam, tau = twist_cocycle_data(knot, genus)
    j = j_form(tau, tau)
    q = q_form(tau, tau)
    rhs = surgery_cocycle_value(knot) - 36 * lam * lam
    return j, q, rhs


def cocycle_coefficients(genus: int = DEFAULT_GENUS) -> tuple:
    """Solve for the tree-part coefficients (r1, r2) from both built-in knots."""
    if genus < DEFAULT_GENUS:
        raise ValueError("genus must be at least %d" % DEFAULT_GENUS)
    rows, rhs = [], []
    for knot in (TREFOIL, FIGURE_EIGHT):
        j, q, value = cocycle_equation(knot, genus)
        rows.append([j, q])
        rhs.append(value)
    r1, r2 = solve_linear(rows, rhs)
    return r1, r2
