"""Forbidden monomials, minor binomials, and the explicit dual basis.

The dual of the level-r code is spanned by the evaluations of the
non-forbidden reduced monomials together with one binomial per (minor of
size >= 2, non-identity permutation).  All orthogonality here is exact;
any nonzero inner product is a hard error, never a warning.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import Code, PointEnumeration, evaluate, theoretical_params
from .errors import (InvalidWitnessParams, OrthogonalityViolation,
                     SizeOutOfRange, TooLarge)
from .field import make_field
from .minors import enumerate_minors, minor_terms
from .monomials import (Rectangle, SparsePolynomial, all_reduced_monomials,
                        full_product, monomial_div, monomial_divides)


@dataclass(frozen=True)
class ForbiddenSet:
    """full/t for t ranging over the (unsigned) terms of minors of size <= r."""

    monomials: frozenset
    ell: int
    m: int
    r: int
    q: int

    def __contains__(self, mu):
        return mu in self.monomials

    def __len__(self):
        return len(self.monomials)


@dataclass(frozen=True)
class MinorBinomial:
    """full/t_eps(M) - full/t_sigma(M) for a non-identity permutation sigma."""

    minor: object
    perm: tuple
    poly: SparsePolynomial


def _params(ell, m, r, q):
    ell_prime = m - ell
    if not 0 <= r <= ell <= ell_prime:
        raise SizeOutOfRange("need 0 <= r <= ell <= ell' = m - ell")
    return make_field(q), Rectangle(ell, ell_prime)


def forbidden_monomials(ell, m, r, q):
    F, rect = _params(ell, m, r, q)
    full = full_product(rect, q)
    mons = set()
    for i in range(r + 1):
        for M in enumerate_minors(rect, i):
            for t in minor_terms(M, F, rect):
                mons.add(monomial_div(full, t.monomial))
    return ForbiddenSet(monomials=frozenset(mons), ell=ell, m=m, r=r, q=q)


def binomials(ell, m, r, q):
    """One binomial per (minor of size i in [2, r], non-identity sigma), in
    minor-enumeration and permutation-lexicographic order."""
    F, rect = _params(ell, m, r, q)
    full = full_product(rect, q)
    out = []
    for i in range(2, r + 1):
        for M in enumerate_minors(rect, i):
            terms = minor_terms(M, F, rect)
            lead = terms[0]  # identity permutation comes first lexicographically
            for st in terms[1:]:
                # full/t_sigma picks up the inverse of the sign, which is the
                # sign itself; the binomial has the two monomials with
                # coefficients +1 and -sgn(sigma).
                poly = SparsePolynomial(F, rect, {
                    monomial_div(full, lead.monomial): 1,
                    monomial_div(full, st.monomial): int(F.neg(st.sign)),
                })
                out.append(MinorBinomial(minor=M, perm=st.perm, poly=poly))
    return out


def dual_basis(ell, m, r, q, max_cells=None):
    """Non-forbidden monomials (row-major lex order) followed by binomials.

    The total count equals n - k_r; evaluations are independent and
    orthogonal to every generator row of the level-r code.
    """
    F, rect = _params(ell, m, r, q)
    params = theoretical_params(ell, m, r, q)
    if max_cells is not None and params.n * (params.n - params.k) > max_cells:
        raise TooLarge("dual basis exceeds the size cap")
    forb = forbidden_monomials(ell, m, r, q)
    basis = [SparsePolynomial.monomial(F, rect, mu)
             for mu in all_reduced_monomials(rect, q) if mu not in forb]
    basis.extend(b.poly for b in binomials(ell, m, r, q))
    expected = params.n - params.k
    if len(basis) != expected:
        raise AssertionError(
            f"dual basis count {len(basis)} != n - k = {expected}")
    return basis


def build_dual_code(C, check_rank=True):
    """Evaluate the explicit dual basis of an affine Grassmann code.

    Verifies exact orthogonality against every generator row; the theorem
    admits no slack, so any nonzero inner product raises.
    """
    meta = C.meta
    if meta.get("kind") != "AGC":
        raise ValueError("build_dual_code needs a code built by build_affine_grassmann")
    ell, m, r, q = meta["ell"], meta["m"], meta["r"], meta["q"]
    F = C.field
    pe = PointEnumeration(C.rect, F)
    basis = dual_basis(ell, m, r, q)
    H = np.array([evaluate(f, pe) for f in basis], dtype=np.uint8) \
        if basis else np.zeros((0, C.n), dtype=np.uint8)
    prods = linalg.matmul(H, C.generator.T, F)
    if prods.any():
        raise OrthogonalityViolation(
            "dual basis evaluation not orthogonal to the generator matrix")
    if check_rank and len(basis):
        if linalg.rank(H, F) != len(basis):
            raise AssertionError("dual basis evaluations unexpectedly dependent")
    dual = Code(field=F, generator=H, rect=C.rect,
                meta={"kind": "DUAL", "dual_of": C,
                      "ell": ell, "m": m, "r": r, "q": q})
    return dual


def dual_min_weight_witness(ell, m, r, q, choice):
    """A reduced polynomial whose evaluation is a minimum-weight dual word.

    choice = ("g", a1, a2) for q > 2: the full split product divided by
    (X_{l,l'} - a1)(X_{l,l'} - a2); its evaluation has weight 3.
    choice = ("h", (i1, j1), (i2, j2)) for q = 2, l' > 1: the full product
    with two same-row or same-column variables removed; weight 4.
    """
    F, rect = _params(ell, m, r, q)
    if r < 1:
        raise InvalidWitnessParams("witnesses need level r >= 1")
    kind = choice[0]
    if kind == "g":
        _, a1, a2 = choice
        if q <= 2:
            raise InvalidWitnessParams("g witness requires q > 2")
        if a1 == a2 or a1 == 0 or a2 == 0 or not (0 < a1 < q and 0 < a2 < q):
            raise InvalidWitnessParams("need distinct nonzero a1, a2")
        poly = SparsePolynomial.constant(F, rect, 1)
        for (i, j) in rect.positions():
            if (i, j) == (rect.ell, rect.ell_prime):
                continue
            factor = SparsePolynomial.monomial(
                F, rect, tuple(q - 1 if s == rect.slot(i, j) else 0
                               for s in range(rect.delta)))
            factor = factor - SparsePolynomial.constant(F, rect, 1)
            poly = poly * factor
        # (X^{q-1} - 1) / ((X - a1)(X - a2)) = prod over the remaining roots
        for a in range(1, q):
            if a in (a1, a2):
                continue
            x = SparsePolynomial.variable(F, rect, rect.ell, rect.ell_prime)
            poly = poly * (x - SparsePolynomial.constant(F, rect, a))
        return poly
    if kind == "h":
        _, p1, p2 = choice
        if q != 2:
            raise InvalidWitnessParams("h witness requires q = 2")
        if rect.ell_prime == 1:
            raise InvalidWitnessParams("h witness requires ell' > 1")
        if p1 == p2 or (p1[0] != p2[0] and p1[1] != p2[1]):
            raise InvalidWitnessParams(
                "need distinct positions sharing a row or a column")
        mu = list(full_product(rect, q))
        mu[rect.slot(*p1)] = 0
        mu[rect.slot(*p2)] = 0
        return SparsePolynomial.monomial(F, rect, tuple(mu))
    raise InvalidWitnessParams(f"unknown witness kind {kind!r}")


SELF_ORTH_EXCEPTIONS = {(1, 2, 1, 2), (1, 2, 1, 3), (1, 3, 1, 2)}


def self_orthogonality_check(ell, m, r, q, code=None):
    """Compare G G^T = 0 against the classification theorem.

    Returns {"selfOrthogonal": bool, "expectedByTheorem": bool}; the two
    flags agree whenever the implementation is correct.
    """
    from .codes import build_affine_grassmann

    C = code if code is not None else build_affine_grassmann(ell, m, r, q)
    gram = linalg.matmul(C.generator, C.generator.T, C.field)
    return {
        "selfOrthogonal": not gram.any(),
        "expectedByTheorem": (ell, m, r, q) not in SELF_ORTH_EXCEPTIONS,
    }


def char_sum(mu, pe):
    """Sum of mu(P) over all points; 0 unless mu is the full product, in
    which case it is (-1)^delta."""
    F = pe.field
    vals = evaluate(SparsePolynomial.monomial(F, pe.rect, tuple(mu)), pe)
    total = 0
    for v in vals:
        total = int(F.add(total, int(v)))
    return total


def maximal_nonforbidden(ell, m, r, q):
    """Maximal non-forbidden monomials: full/t for t a term of an
    (r+1)-minor (type i, absent at full level), plus full over two
    same-row or same-column variables (type ii)."""
    F, rect = _params(ell, m, r, q)
    if r < 1:
        raise SizeOutOfRange("maximal non-forbidden monomials need r >= 1")
    full = full_product(rect, q)
    out = set()
    if r < ell:
        for M in enumerate_minors(rect, r + 1):
            for t in minor_terms(M, F, rect):
                out.add(monomial_div(full, t.monomial))
    positions = rect.positions()
    for p1, p2 in itertools.combinations_with_replacement(positions, 2):
        if p1 == p2 and q == 2:
            continue
        if p1[0] == p2[0] or p1[1] == p2[1]:
            mu = list(full)
            mu[rect.slot(*p1)] -= 1
            mu[rect.slot(*p2)] -= 1
            out.add(tuple(mu))
    return out


def is_forbidden_counts(ell, m, r, q):
    """Closed-form counts: (forbidden, non-forbidden, binomials)."""
    ell_prime = m - ell
    forb = sum(math.factorial(i) * math.comb(ell, i) * math.comb(ell_prime, i)
               for i in range(r + 1))
    n = q ** (ell * ell_prime)
    bino = sum((math.factorial(i) - 1) * math.comb(ell, i) * math.comb(ell_prime, i)
               for i in range(r + 1))
    return forb, n - forb, bino
