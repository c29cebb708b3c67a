"""Exact arithmetic in small finite fields F_q via lookup tables.

Elements are integer codes in [0, q-1].  For q = p^t with t > 1 the code is
the base-p encoding of the coefficient vector of the element written in the
power basis of a fixed irreducible modulus, so code 0 is the additive
identity and code 1 the multiplicative identity.  The representation is
deterministic for every supported q, which makes all downstream matrices
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, NotPrimePower, Unsupported

MAX_Q = 16

# Fixed irreducible modulus per non-prime q, coefficients constant term first.
_MODULI = {
    4: (1, 1, 1),         # X^2 + X + 1
    8: (1, 1, 0, 1),      # X^3 + X + 1
    9: (1, 0, 1),         # X^2 + 1
    16: (1, 1, 0, 0, 1),  # X^4 + X + 1
}


def _factor_prime_power(q):
    if q < 2:
        raise NotPrimePower(f"q = {q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    t = 0
    n = q
    while n % p == 0:
        n //= p
        t += 1
    if n != 1:
        raise NotPrimePower(f"q = {q} is not a prime power")
    return p, t


def _digits(code, p, t):
    out = []
    for _ in range(t):
        out.append(code % p)
        code //= p
    return out


def _undigits(ds, p):
    code = 0
    for d in reversed(ds):
        code = code * p + d
    return code


def _poly_mul_mod(a, b, modulus, p):
    # multiply two coefficient vectors, reduce mod the modulus over F_p
    t = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, t - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(t):
                prod[deg - t + j] = (prod[deg - t + j] - c * modulus[j]) % p
    return prod[:t] + [0] * (t - len(prod))


@dataclass(eq=False)
class FieldSpec:
    """The field F_q with precomputed operation tables.

    Immutable after construction; safe to share between workers.
    """

    q: int
    p: int
    t: int
    modulus: tuple
    add_table: np.ndarray
    mul_table: np.ndarray
    neg_table: np.ndarray
    inv_table: np.ndarray
    pow_table: np.ndarray  # pow_table[x, e] = x^e for 0 <= e <= q-1

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if np.isscalar(a) or isinstance(a, int):
            if a == 0:
                raise DivisionByZero("inverse of 0")
            return int(self.inv_table[a])
        a = np.asarray(a)
        if (a == 0).any():
            raise DivisionByZero("inverse of 0")
        return self.inv_table[a]

    def pow(self, a, e):
        """a^e by square-and-multiply; exponent reduced mod q-1 for a != 0."""
        if e < 0:
            raise ValueError("negative exponent")
        a = int(a)
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    @property
    def one(self):
        return 1

    @property
    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"FieldSpec(q={self.q})"


def field_op(F, op, *args):
    """Dispatch a named field operation: add, mul, neg, inv or pow."""
    ops = {"add": F.add, "mul": F.mul, "neg": F.neg, "inv": F.inv, "pow": F.pow}
    if op not in ops:
        raise ValueError(f"unknown field op {op!r}")
    return ops[op](*args)


@lru_cache(maxsize=None)
def make_field(q):
    """Build F_q for a prime power q <= 16."""
    p, t = _factor_prime_power(q)
    if q > MAX_Q:
        raise Unsupported(f"q = {q} exceeds the cap of {MAX_Q}")
    modulus = _MODULI.get(q, ()) if t > 1 else ()

    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        da = _digits(a, p, t)
        for b in range(q):
            db = _digits(b, p, t)
            add[a, b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
            if t == 1:
                mul[a, b] = (a * b) % p
            else:
                mul[a, b] = _undigits(_poly_mul_mod(da, db, modulus, p), p)

    neg = np.zeros(q, dtype=np.uint8)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(q):
        neg[a] = np.where(add[a] == 0)[0][0]
        if a:
            inv[a] = np.where(mul[a] == 1)[0][0]

    pow_table = np.zeros((q, q), dtype=np.uint8)
    pow_table[:, 0] = 1
    for e in range(1, q):
        pow_table[:, e] = mul[pow_table[:, e - 1], np.arange(q)]

    return FieldSpec(q=q, p=p, t=t, modulus=modulus,
                     add_table=add, mul_table=mul,
                     neg_table=neg, inv_table=inv, pow_table=pow_table)
