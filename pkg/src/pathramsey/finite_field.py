"""Exact arithmetic in GF(p^k) at desk scale (p^k <= 2^16).

Elements are dense coefficient vectors (constant term first) reduced by a
deterministically chosen monic irreducible modulus, so every construction
is reproducible across runs.
"""

from dataclasses import dataclass
from functools import lru_cache

SIZE_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def prime_power_decomposition(q: int):
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        if q % p:
            continue
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return None


def is_prime_power(q: int) -> bool:
    return prime_power_decomposition(q) is not None


# -- polynomial helpers over GF(p), coefficient lists low-to-high --------


def _poly_trim(c):
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    """Remainder of a divided by monic m, both coefficient lists mod p."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        a = _poly_trim(a)
        if len(a) - 1 < dm:
            break
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i in range(dm + 1):
            a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a = _poly_trim(a)
    return _poly_trim(a)


def _monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, lexicographic by the
    base-p encoding of the lower coefficients."""
    for code in range(p ** degree):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % p)
            c //= p
        yield coeffs + [1]


def _is_irreducible(m, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(m, f, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Defining data of GF(p^k): prime p, exponent k, monic irreducible
    modulus of degree k (coefficient tuple, constant first)."""

    p: int
    k: int
    modulus: tuple

    @property
    def q(self) -> int:
        return self.p ** self.k

    def zero(self):
        return FieldElement((0,) * self.k, self)

    def one(self):
        return FieldElement((1,) + (0,) * (self.k - 1), self)

    def element(self, index: int):
        """The element with enumeration index in [0, q)."""
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} outside [0, {self.q})")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(index % self.p)
            index //= self.p
        return FieldElement(tuple(coeffs), self)

    def elements(self):
        return [self.element(i) for i in range(self.q)]


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple
    spec: FieldSpec

    @property
    def index(self) -> int:
        """Enumeration index: coefficients read as base-p digits."""
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.spec.p + c
        return enc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if self.spec != other.spec:
            raise ValueError("elements from different field specs")

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
            self.spec,
        )

    def __sub__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
            self.spec,
        )

    def __neg__(self):
        p = self.spec.p
        return FieldElement(tuple((-a) % p for a in self.coeffs), self.spec)

    def __mul__(self, other):
        self._check(other)
        p = self.spec.p
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), p)
        if self.spec.k > 1:
            prod = _poly_mod(prod, list(self.spec.modulus), p)
        else:
            prod = [prod[0] % p]
        prod = prod + [0] * (self.spec.k - len(prod))
        return FieldElement(tuple(prod[: self.spec.k]), self.spec)

    def inverse(self):
        """Multiplicative inverse by exhaustive search (q <= 2^16)."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        one = self.spec.one()
        for i in range(1, self.spec.q):
            cand = self.spec.element(i)
            if self * cand == one:
                return cand
        raise ArithmeticError("no inverse found; modulus not irreducible?")

    def __repr__(self):
        return f"GF{self.spec.q}[{self.index}]"


def field_new(p: int, k: int) -> FieldSpec:
    """Build GF(p^k) with the lowest lexicographic monic irreducible
    modulus (for k = 1 the modulus is the placeholder x - 0)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if k < 1:
        raise ValueError(f"k = {k} must be >= 1")
    if p ** k > SIZE_CAP:
        raise ValueError(f"field size {p ** k} exceeds cap {SIZE_CAP}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for m in _monic_polys(p, k):
        if _is_irreducible(m, p):
            return FieldSpec(p, k, tuple(m))
    raise ArithmeticError("no irreducible modulus found")  # unreachable


def field_for_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    pk = prime_power_decomposition(q)
    if pk is None:
        raise ValueError(f"q = {q} is not a prime power")
    return field_new(*pk)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
