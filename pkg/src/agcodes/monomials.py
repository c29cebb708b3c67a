"""Reduced monomials and polynomials over the variable grid X_ij.

A monomial is a flat tuple of exponents in row-major order over the
rectangle [1,l] x [1,l']: slot (i-1)*l' + (j-1) holds the exponent of
X_ij.  Reduced means every exponent lies in [0, q-1].  Canonical ordering
everywhere is row-major lexicographic on this tuple, matching the point
enumeration used by the code builders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DegreeTooLarge, DependentForms
from . import linalg


@dataclass(frozen=True)
class Rectangle:
    """The integral rectangle of variable positions, 1 <= i <= l, 1 <= j <= l'."""

    ell: int
    ell_prime: int

    def __post_init__(self):
        if not 1 <= self.ell <= self.ell_prime:
            raise ValueError(f"need 1 <= ell <= ell_prime, got {self.ell}, {self.ell_prime}")

    @property
    def m(self):
        return self.ell + self.ell_prime

    @property
    def delta(self):
        return self.ell * self.ell_prime

    def slot(self, i, j):
        """Flat index of variable X_ij (1-based i, j)."""
        return (i - 1) * self.ell_prime + (j - 1)

    def positions(self):
        return [(i, j) for i in range(1, self.ell + 1)
                for j in range(1, self.ell_prime + 1)]


def reduce_exponent(alpha, q):
    """Fold an exponent into [0, q-1]: alpha if already there, else the
    representative of alpha mod (q-1) in [1, q-1]."""
    if alpha < 0:
        raise ValueError("negative exponent")
    if alpha <= q - 1:
        return alpha
    r = alpha % (q - 1)
    return r if r else q - 1


def monomial_degree(mu):
    return sum(mu)


def full_product(rect, q):
    """The monomial with every exponent q-1; reduced monomials are exactly
    its divisors."""
    return (q - 1,) * rect.delta


def monomial_divides(mu, nu):
    return all(a <= b for a, b in zip(mu, nu))


def monomial_div(mu, nu):
    out = tuple(a - b for a, b in zip(mu, nu))
    if any(e < 0 for e in out):
        raise ValueError("not a divisor")
    return out


def all_reduced_monomials(rect, q):
    """All reduced monomials in row-major lexicographic order."""
    return itertools.product(range(q), repeat=rect.delta)


def monomial_str(mu, rect):
    factors = []
    for (i, j) in rect.positions():
        e = mu[rect.slot(i, j)]
        if e == 1:
            factors.append(f"X[{i},{j}]")
        elif e > 1:
            factors.append(f"X[{i},{j}]^{e}")
    return "*".join(factors) if factors else "1"


class SparsePolynomial:
    """Finite map from monomials to nonzero field elements.

    Instances produced by the public constructors are reduced; raw products
    are reduced before being returned.  Values are immutable by convention.
    """

    __slots__ = ("field", "rect", "terms")

    def __init__(self, field, rect, terms=None):
        self.field = field
        self.rect = rect
        self.terms = {mu: int(c) for mu, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, rect):
        return cls(field, rect)

    @classmethod
    def constant(cls, field, rect, c):
        return cls(field, rect, {(0,) * rect.delta: c})

    @classmethod
    def monomial(cls, field, rect, mu, coeff=1):
        return cls(field, rect, {tuple(mu): coeff})

    @classmethod
    def variable(cls, field, rect, i, j):
        mu = [0] * rect.delta
        mu[rect.slot(i, j)] = 1
        return cls(field, rect, {tuple(mu): 1})

    # -- ring-ish operations ------------------------------------------------

    def _check_compatible(self, other):
        if self.field is not other.field or self.rect != other.rect:
            raise ValueError("mismatched field or rectangle")

    def __add__(self, other):
        self._check_compatible(other)
        F = self.field
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            s = int(F.add(terms.get(mu, 0), c))
            if s:
                terms[mu] = s
            else:
                terms.pop(mu, None)
        return SparsePolynomial(self.field, self.rect, terms)

    def __neg__(self):
        F = self.field
        return SparsePolynomial(self.field, self.rect,
                                {mu: int(F.neg(c)) for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        F = self.field
        if c == 0:
            return SparsePolynomial.zero(self.field, self.rect)
        return SparsePolynomial(self.field, self.rect,
                                {mu: int(F.mul(c, v)) for mu, v in self.terms.items()})

    def __mul__(self, other):
        return multiply_reduced(self, other)

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return max((monomial_degree(mu) for mu in self.terms), default=0)

    def is_reduced(self):
        q = self.field.q
        return all(all(0 <= e <= q - 1 for e in mu) for mu in self.terms)

    def evaluate_at(self, point):
        """Evaluate at a single point given as a flat tuple of element codes."""
        F = self.field
        total = 0
        for mu, c in self.terms.items():
            v = c
            for slot, e in enumerate(mu):
                if e:
                    v = int(F.mul(v, F.pow(int(point[slot]), e)))
            total = int(F.add(total, v))
        return total

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (isinstance(other, SparsePolynomial)
                and self.rect == other.rect
                and self.field.q == other.field.q
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rect, self.field.q, tuple(self.sorted_terms())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mu, c in self.sorted_terms():
            ms = monomial_str(mu, self.rect)
            parts.append(ms if c == 1 and ms != "1" else
                         (str(c) if ms == "1" else f"{c}*{ms}"))
        return " + ".join(parts)


def reduce_polynomial(f):
    """Apply the exponent-folding reduction entrywise and merge coefficients.

    Evaluation-preserving: Ev(f) = Ev(reduce_polynomial(f)) pointwise.
    """
    F, q = f.field, f.field.q
    terms = {}
    for mu, c in f.terms.items():
        red = tuple(reduce_exponent(e, q) for e in mu)
        s = int(F.add(terms.get(red, 0), c))
        if s:
            terms[red] = s
        else:
            terms.pop(red, None)
    return SparsePolynomial(f.field, f.rect, terms)


def multiply_reduced(f, g):
    """Product in the reduced-polynomial algebra: raw product, then reduce."""
    f._check_compatible(g)
    F = f.field
    raw = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            key = tuple(x + y for x, y in zip(mu, nu))
            s = int(F.add(raw.get(key, 0), F.mul(a, b)))
            if s:
                raw[key] = s
            else:
                raw.pop(key, None)
    return reduce_polynomial(SparsePolynomial(f.field, f.rect, raw))


# ----------------------------------------------------- univariate basis sets

def _poly1_mul(a, b, F):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = int(F.add(out[i + j], F.mul(ai, bj)))
    return out


def monic_split_set(F, d):
    """All monic degree-d univariate polynomials with d distinct roots in F_q.

    Returned as coefficient tuples (constant term first); there are C(q, d)
    of them and for d = q-1 they are exactly (T-a)^(q-1) - 1, a in F_q.
    """
    q = F.q
    if not 0 <= d < q:
        raise DegreeTooLarge(f"need 0 <= d < q, got d={d}")
    out = []
    for roots in itertools.combinations(range(q), d):
        poly = [1]
        for a in roots:
            poly = _poly1_mul(poly, [int(F.neg(a)), 1], F)
        out.append(tuple(poly))
    return out


def linear_form_power_basis(F, forms):
    """Reduced powers L_1^e_1 ... L_s^e_s of s independent linear forms.

    forms: list of s coefficient vectors of homogeneous linear forms in
    T_1..T_s.  Returns the q^s reduced polynomials over the 1 x s grid, in
    lexicographic order of the exponent vector (e_1, ..., e_s).
    """
    import numpy as np

    s = len(forms)
    mat = np.array(forms, dtype=np.uint8)
    if mat.shape != (s, s) or linalg.rank(mat, F) < s:
        raise DependentForms("forms are linearly dependent")
    rect = Rectangle(1, s)
    q = F.q
    lin = []
    for row in forms:
        poly = SparsePolynomial.zero(F, rect)
        for j, c in enumerate(row):
            if c:
                poly = poly + SparsePolynomial.variable(F, rect, 1, j + 1).scaled(int(c))
        lin.append(poly)
    out = []
    for exps in itertools.product(range(q), repeat=s):
        prod = SparsePolynomial.constant(F, rect, 1)
        for Lf, e in zip(lin, exps):
            for _ in range(e):
                prod = prod * Lf
        out.append(prod)
    return out
