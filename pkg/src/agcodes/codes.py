"""Point enumeration, evaluation, and the code builders.

The point order is fixed once and for all: point index n corresponds to the
base-q digit expansion of n filled into the grid row-major, with entry
(1,1) as the least significant digit.  Every generator matrix in the
package is reproducible bit for bit from this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import DimensionMismatch, OrderOutOfRange, SizeOutOfRange, TooLarge
from .field import make_field
from .minors import enumerate_minors, minor_polynomial
from .monomials import Rectangle, all_reduced_monomials, monomial_degree

DEFAULT_MAX_CELLS = 2 ** 24  # cap on n * k across all builders


@lru_cache(maxsize=None)
def _points(q, delta):
    n = q ** delta
    idx = np.arange(n, dtype=np.int64)[:, None]
    weights = q ** np.arange(delta, dtype=np.int64)[None, :]
    return ((idx // weights) % q).astype(np.uint8)


@dataclass(frozen=True)
class PointEnumeration:
    """Fixed bijection {0..q^delta - 1} -> l x l' matrices over F_q."""

    rect: Rectangle
    field: object

    @property
    def n(self):
        return self.field.q ** self.rect.delta

    @property
    def points(self):
        """(n, delta) array; row i is point P_i as flat row-major digits."""
        return _points(self.field.q, self.rect.delta)

    def point(self, i):
        return self.points[i].reshape(self.rect.ell, self.rect.ell_prime)

    def index_of(self, matrix):
        digits = np.asarray(matrix, dtype=np.int64).reshape(-1)
        weights = self.field.q ** np.arange(self.rect.delta, dtype=np.int64)
        return int((digits * weights).sum())


def evaluate(f, pe):
    """Ev(f): coordinate i is f(P_i).  Linear in f."""
    if f.rect != pe.rect or f.field.q != pe.field.q:
        raise DimensionMismatch("polynomial does not match the point enumeration")
    F = pe.field
    pts = pe.points
    out = np.zeros(pe.n, dtype=np.uint8)
    for mu, c in f.terms.items():
        term = np.full(pe.n, c, dtype=np.uint8)
        for slot, e in enumerate(mu):
            if e:
                term = F.mul_table[term, F.pow_table[pts[:, slot], e]]
        out = F.add_table[out, term]
    return out


@dataclass(eq=False)
class Code:
    """A linear code with its generator matrix kept in construction order."""

    field: object
    generator: np.ndarray
    meta: dict = dc_field(default_factory=dict)
    rect: Rectangle = None

    def __post_init__(self):
        self.generator = np.asarray(self.generator, dtype=np.uint8)
        self._parity = None

    @property
    def n(self):
        return self.generator.shape[1]

    @property
    def k(self):
        return self.generator.shape[0]

    def parity_check(self):
        """An (n-k) x n matrix whose rows span the dual; cached."""
        if self._parity is None:
            primal = self.meta.get("dual_of")
            if primal is not None:
                self._parity = primal.generator
            else:
                self._parity = linalg.nullspace(self.generator, self.field)
        return self._parity

    def contains(self, word):
        word = np.asarray(word, dtype=np.uint8)
        if word.shape != (self.n,):
            raise DimensionMismatch("word length mismatch")
        syndrome = linalg.matmul(self.parity_check(), word[:, None], self.field)
        return not syndrome.any()

    def __repr__(self):
        tag = self.meta.get("kind", "RAW")
        return f"Code[{self.n},{self.k}]({tag})"


def write_generator(code, path):
    """Plain-text export: first line 'q n k', then k rows of element codes."""
    with open(path, "w") as fh:
        fh.write(f"{code.field.q} {code.n} {code.k}\n")
        for row in code.generator:
            fh.write(" ".join(str(int(x)) for x in row) + "\n")


def gaussian_binomial(a, b, q):
    """Number of b-dimensional subspaces of F_q^a, as an exact integer."""
    if not a >= b >= 0:
        raise ValueError("need a >= b >= 0")
    num = math.prod(q ** a - q ** j for j in range(b))
    den = math.prod(q ** b - q ** j for j in range(b))
    return num // den


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    min_weight_count: int = None


def theoretical_params(ell, m, r, q):
    """Closed-form [n, k_r, d_r] of the level-r code; the minimum-weight
    count is only known in closed form at full level r = l."""
    ell_prime = m - ell
    if not 0 <= r <= ell <= ell_prime:
        raise SizeOutOfRange("need 0 <= r <= ell <= ell'")
    delta = ell * ell_prime
    n = q ** delta
    k = sum(math.comb(ell, i) * math.comb(ell_prime, i) for i in range(r + 1))
    d = q ** (delta - r * (r + 1) // 2) * math.prod(q ** i - 1 for i in range(1, r + 1))
    count = None
    if r == ell:
        count = (q - 1) * q ** (ell * ell) * gaussian_binomial(ell_prime, ell, q)
    return CodeParams(n=n, k=k, d=d, min_weight_count=count)


def rm_theoretical_params(r, delta, q):
    """[n, k, d] and the minimum-weight count of RM(r, delta) over F_q."""
    if not 0 <= r <= delta * (q - 1):
        raise OrderOutOfRange(f"RM order {r} outside [0, {delta * (q - 1)}]")
    n = q ** delta
    k = sum(
        (-1) ** j * math.comb(delta, j) * math.comb(delta + i - j * q - 1, i - j * q)
        for i in range(r + 1) for j in range(delta + 1)
        if i - j * q >= 0
    )
    Q, R = divmod(delta * (q - 1) - r, q - 1)
    d = (R + 1) * q ** Q
    if R == 0:
        count = (q ** (delta - Q + 1) - q ** (delta - Q)) * gaussian_binomial(delta, Q, q)
    else:
        count = ((q ** delta - q ** (delta - Q - 1))
                 * gaussian_binomial(delta, Q + 1, q) * math.comb(q, R + 1))
    return CodeParams(n=n, k=k, d=d, min_weight_count=count)


def delta_monomial_set(rect, r):
    """The minors of size 0..r in enumeration order (size, then lex)."""
    return [M for i in range(r + 1) for M in enumerate_minors(rect, i)]


def build_affine_grassmann(ell, m, r, q, max_cells=DEFAULT_MAX_CELLS):
    """Generator rows are Ev(M) for M in the minor set, in enumeration order.

    Rank and (for r >= 1) nondegeneracy are verified on build.
    """
    ell_prime = m - ell
    if not 0 <= r <= ell <= ell_prime:
        raise SizeOutOfRange("need 0 <= r <= ell <= ell' = m - ell")
    F = make_field(q)
    rect = Rectangle(ell, ell_prime)
    params = theoretical_params(ell, m, r, q)
    if params.n * params.k > max_cells:
        raise TooLarge(f"n*k = {params.n * params.k} exceeds cap {max_cells}")
    pe = PointEnumeration(rect, F)
    rows = [evaluate(minor_polynomial(M, F, rect), pe)
            for M in delta_monomial_set(rect, r)]
    G = np.array(rows, dtype=np.uint8)
    if linalg.rank(G, F) != params.k:
        raise AssertionError("minor evaluations unexpectedly dependent")
    if r >= 1 and (~G.any(axis=0)).any():
        raise AssertionError("unexpected zero column in a level >= 1 code")
    return Code(field=F, generator=G, rect=rect,
                meta={"kind": "AGC", "ell": ell, "m": m, "r": r, "q": q})


def build_reed_muller(r, delta, q, max_cells=DEFAULT_MAX_CELLS):
    """RM(r, delta): evaluations of all reduced monomials of degree <= r
    on F_q^delta (realized as the 1 x delta grid)."""
    if not 0 <= r <= delta * (q - 1):
        raise OrderOutOfRange(f"RM order {r} outside [0, {delta * (q - 1)}]")
    F = make_field(q)
    rect = Rectangle(1, delta)
    pe = PointEnumeration(rect, F)
    mus = sorted((mu for mu in all_reduced_monomials(rect, q)
                  if monomial_degree(mu) <= r),
                 key=lambda mu: (monomial_degree(mu), mu))
    if pe.n * len(mus) > max_cells:
        raise TooLarge("RM build exceeds the size cap")
    from .monomials import SparsePolynomial
    G = np.array([evaluate(SparsePolynomial.monomial(F, rect, mu), pe) for mu in mus],
                 dtype=np.uint8)
    expected = rm_theoretical_params(r, delta, q).k
    if G.shape[0] != expected:
        raise AssertionError("monomial count disagrees with the dimension formula")
    return Code(field=F, generator=G, rect=rect,
                meta={"kind": "RM", "r": r, "delta": delta, "q": q})


def subcode_check(C1, C2):
    """True iff every generator row of C1 lies in the row space of C2."""
    if C1.field.q != C2.field.q or C1.n != C2.n:
        raise DimensionMismatch("codes live in different ambient spaces")
    R, pivots = linalg.rref(C2.generator, C2.field)
    return all(linalg.in_rowspace(row, R, pivots, C2.field) for row in C1.generator)
