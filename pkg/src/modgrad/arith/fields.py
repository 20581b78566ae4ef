"""Exact arithmetic in small finite fields GF(p^k).

Two element representations coexist:

* scalar form, used by the polynomial/rational layers: a plain ``int`` in
  ``range(p)`` for prime fields, a length-``k`` tuple of such ints (power
  basis coefficients) for extension fields;
* array form, used by the linear-algebra kernels: ``int64`` arrays whose
  trailing axis has length ``deg`` (so prime-field matrices are ``(n, m, 1)``).

A field object carries the reduction tensor ``red2`` consumed by the kernels:
``red2[i, j, :]`` is the reduced coefficient vector of ``u^(i+j)`` modulo the
defining polynomial.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

PRIME_BOUND = 97  # characteristic cap; keeps dense tables and Lucas digits small


def is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_characteristic(p: int) -> int:
    p = int(p)
    if not is_small_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > PRIME_BOUND:
        raise ValueError(f"characteristic {p} exceeds supported bound {PRIME_BOUND}")
    return p


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    # modulus is monic; plain schoolbook convolution then top-down reduction
    k = len(modulus) - 1
    conv = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            conv[i + j] = (conv[i + j] + ai * bj) % p
    for e in range(len(conv) - 1, k - 1, -1):
        c = conv[e]
        if c == 0:
            continue
        conv[e] = 0
        for t in range(k):
            conv[e - k + t] = (conv[e - k + t] - c * modulus[t]) % p
    conv += [0] * (k - len(conv))
    return [c % p for c in conv[:k]]


def _poly_powmod(a: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e > 0:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    k = len(modulus) - 1
    result += [0] * (k - len(result))
    return result[:k]


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and _poly_trim(r):
            if len(r) < len(b):
                break
            q = r[-1] * inv_lead % p
            shift = len(r) - len(b)
            for t in range(len(b)):
                r[shift + t] = (r[shift + t] - q * b[t]) % p
            _poly_trim(r)
        a, b = b, _poly_trim(r)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [c * inv_lead % p for c in a]
    return a


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        return False
    x = [0, 1]
    # x^(p^k) must equal x mod f
    xq = list(x)
    for _ in range(k):
        xq = _poly_powmod(xq, p, modulus, p)
    diff = [(xq[i] - (x[i] if i < len(x) else 0)) % p for i in range(len(xq))]
    if _poly_trim(diff):
        return False
    for q in sorted({d for d in range(2, k + 1) if k % d == 0 and is_small_prime(d)}):
        xe = list(x)
        for _ in range(k // q):
            xe = _poly_powmod(xe, p, modulus, p)
        diff = [(xe[i] - (x[i] if i < len(x) else 0)) % p for i in range(len(xe))]
        g = _poly_gcd(diff, modulus, p)
        if len(g) - 1 != 0:
            return False
    return True


class Field:
    """Common interface of PrimeField and ExtensionField.

    Scalars are ints (deg 1) or tuples (deg > 1); subclasses fill in the
    scalar ops.  Array-form helpers and the reduction tensor live here.
    """

    p: int
    deg: int
    order: int
    modulus: tuple[int, ...] | None

    def _init_tables(self):
        d = self.deg
        # red[e] = coefficient vector of u^e reduced, for e = 0 .. 2d-2
        red = np.zeros((2 * d - 1, d), dtype=np.int64)
        for e in range(d):
            red[e, e] = 1
        if d > 1:
            assert self.modulus is not None
            top = [(-self.modulus[t]) % self.p for t in range(d)]
            cur = list(top)  # u^d
            red[d] = cur
            for e in range(d + 1, 2 * d - 1):
                nxt = [0] * d
                for t in range(d - 1):
                    nxt[t + 1] = cur[t]
                c = cur[d - 1]
                for t in range(d):
                    nxt[t] = (nxt[t] + c * top[t]) % self.p
                cur = nxt
                red[e] = cur
        red2 = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                red2[i, j] = red[i + j]
        self.red = red
        self.red2 = red2

    @property
    def is_prime_field(self) -> bool:
        return self.deg == 1

    # -- scalar <-> vector form -------------------------------------------
    def to_vec(self, x) -> np.ndarray:
        if self.deg == 1:
            return np.array([x % self.p], dtype=np.int64)
        return np.array(x, dtype=np.int64) % self.p

    def from_vec(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.deg == 1:
            return int(v[0])
        return tuple(int(c) for c in v)

    def from_int(self, n: int):
        n %= self.p
        if self.deg == 1:
            return n
        return tuple([n] + [0] * (self.deg - 1))

    # -- ring protocol (shared with polynomial coefficient rings) ---------
    def is_zero(self, x) -> bool:
        return x == self.zero

    def eq(self, x, y) -> bool:
        return x == y

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow_int(self, x, e: int):
        if e < 0:
            return self.pow_int(self.inv(x), -e)
        result = self.one
        base = x
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        """All field elements; only sensible for small orders."""
        if self.deg == 1:
            yield from range(self.p)
        else:
            def rec(prefix):
                if len(prefix) == self.deg:
                    yield tuple(prefix)
                    return
                for c in range(self.p):
                    yield from rec(prefix + [c])
            yield from rec([])

    def random(self, rng):
        if self.deg == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.deg))

    def __eq__(self, other):
        return (isinstance(other, Field) and self.p == other.p
                and self.deg == other.deg and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.deg, self.modulus))


class PrimeField(Field):
    """GF(p) with elements stored as ints in range(p)."""

    def __init__(self, p: int):
        self.p = _check_characteristic(p)
        self.deg = 1
        self.order = self.p
        self.modulus = None
        self.zero = 0
        self.one = 1 % self.p
        self._init_tables()

    def add(self, x, y):
        return (x + y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(x, self.p - 2, self.p)

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(Field):
    """GF(p^k) presented as F_p[u]/(modulus), elements = coefficient tuples."""

    def __init__(self, p: int, modulus, check: bool = True):
        self.p = _check_characteristic(p)
        mod = [int(c) % self.p for c in modulus]
        if len(mod) < 3 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 2")
        if check and not is_irreducible(mod, self.p):
            raise ValueError("modulus is reducible over GF(%d)" % self.p)
        self.modulus = tuple(mod)
        self.deg = len(mod) - 1
        self.order = self.p ** self.deg
        self.zero = tuple([0] * self.deg)
        self.one = tuple([1] + [0] * (self.deg - 1))
        self._init_tables()

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y):
        return tuple(_poly_mulmod(list(x), list(y), list(self.modulus), self.p))

    def inv(self, x):
        if all(c == 0 for c in x):
            raise ZeroDivisionError("inverse of 0 in GF(%d^%d)" % (self.p, self.deg))
        return self.pow_int(x, self.order - 2)

    def frobenius(self, x):
        return self.pow_int(x, self.p)

    def __repr__(self):
        return f"GF({self.p}^{self.deg})"


def artin_schreier_field(p: int) -> ExtensionField:
    """GF(p^p) as F_p[t]/(t^p - t - 1); the class of t is exposed as .gamma.

    t^p - t - 1 is irreducible over F_p, and gamma = t satisfies
    gamma^p - gamma = 1.
    """
    p = _check_characteristic(p)
    mod = [0] * (p + 1)
    mod[0] = (-1) % p
    mod[1] = (-1) % p
    mod[p] = 1
    field = ExtensionField(p, mod, check=False)
    field.gamma = tuple([0, 1] + [0] * (p - 2))
    return field


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> Field:
    """GF(p^k); for k > 1 a fixed irreducible modulus is found by search."""
    if k == 1:
        return PrimeField(p)
    p = _check_characteristic(p)
    # deterministic scan over monic polynomials u^k + c_{k-1} u^{k-1} + ... + c_0
    total = p ** k
    for code in range(total):
        c, coeffs = code, []
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        mod = coeffs + [1]
        if is_irreducible(mod, p):
            return ExtensionField(p, mod, check=False)
    raise RuntimeError("no irreducible polynomial found")  # unreachable
