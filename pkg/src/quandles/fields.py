"""Arithmetic for small finite fields F_q with q = p^d <= 121.

Field elements are integers 0..q-1 encoding polynomial coefficient vectors
in base p, least significant digit first: the integer sum(c_i * p^i)
stands for c_0 + c_1*x + ... + c_{d-1}*x^{d-1} modulo a fixed irreducible
monic polynomial.  The modulus for each (p, d) is shipped below (the
lexicographically least irreducible choice), so element encodings are
stable across runs and machines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# (p, d) -> monic modulus coefficients (c0, c1, ..., c_d), c_d = 1.
IRREDUCIBLE_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 0, 1, 1, 1),
    (5, 2): (1, 1, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
}

_MAX_Q = 121


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FiniteFieldSpec:
    """Prime p, degree d and the modulus polynomial defining F_{p^d}."""

    p: int
    d: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.d < 1:
            raise ValueError("degree must be >= 1")
        if self.q > _MAX_Q:
            raise ValueError(f"field size {self.q} exceeds supported bound {_MAX_Q}")
        if not self.modulus:
            if self.d == 1:
                object.__setattr__(self, "modulus", (0, 1))
            else:
                object.__setattr__(self, "modulus", IRREDUCIBLE_MODULI[(self.p, self.d)])
        if len(self.modulus) != self.d + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree d")

    @property
    def q(self) -> int:
        return self.p**self.d

    @classmethod
    def of(cls, q: int) -> "FiniteFieldSpec":
        """Spec for the field of order q (q a prime power <= 121)."""
        for p in range(2, q + 1):
            if _is_prime(p) and q % p == 0:
                d = 0
                m = q
                while m % p == 0:
                    m //= p
                    d += 1
                if m != 1:
                    raise ValueError(f"{q} is not a prime power")
                return cls(p, d)
        raise ValueError(f"{q} is not a prime power")


class FiniteField:
    """Table-driven arithmetic in F_{p^d}; elements are ints 0..q-1."""

    def __init__(self, spec: FiniteFieldSpec):
        self.spec = spec
        self.p = spec.p
        self.d = spec.d
        self.q = spec.q
        self._mul = self._build_mul_table()
        self._check_field()
        self._inv = self._build_inv_table()

    @classmethod
    def of(cls, q) -> "FiniteField":
        if isinstance(q, FiniteFieldSpec):
            return cls(q)
        return cls(FiniteFieldSpec.of(q))

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits) -> int:
        value = 0
        for c in reversed(digits):
            value = value * self.p + c
        return value

    def _build_mul_table(self):
        p, d, q = self.p, self.d, self.q
        mod = self.spec.modulus
        # reduction of x^k for k = d .. 2d-2
        xpow = {}
        cur = [(-mod[i]) % p for i in range(d)]  # x^d
        xpow[d] = cur[:]
        for k in range(d + 1, 2 * d - 1):
            nxt = [0] * d
            for i in range(d - 1):
                nxt[i + 1] = cur[i]
            if cur[d - 1]:
                for i in range(d):
                    nxt[i] = (nxt[i] + cur[d - 1] * ((-mod[i]) % p)) % p
            xpow[k] = nxt
            cur = nxt
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                raw = [0] * (2 * d - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            raw[i + j] = (raw[i + j] + x * y) % p
                acc = raw[:d]
                for k in range(d, 2 * d - 1):
                    if raw[k]:
                        red = xpow[k]
                        for i in range(d):
                            acc[i] = (acc[i] + raw[k] * red[i]) % p
                v = self._pack(acc)
                table[a][b] = v
                table[b][a] = v
        return table

    def _check_field(self):
        # the quotient ring is a field iff there are no zero divisors
        for a in range(1, self.q):
            row = self._mul[a]
            for b in range(1, self.q):
                if row[b] == 0:
                    raise ValueError(
                        f"modulus {self.spec.modulus} is reducible over F_{self.p}"
                    )

    def _build_inv_table(self):
        inv = [0] * self.q
        for a in range(1, self.q):
            row = self._mul[a]
            for b in range(1, self.q):
                if row[b] == 1:
                    inv[a] = b
                    break
        return inv

    def add(self, a: int, b: int) -> int:
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._pack([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        p = self.p
        return self._pack([(-x) % p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def embed(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self._mul[x][a]
            n += 1
        return n

    def __repr__(self):
        return f"FiniteField(q={self.q})"
