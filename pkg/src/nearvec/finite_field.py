"""Exact arithmetic in GF(p^r) for small prime powers.

Elements are canonical integers in [0, p^r).  The element with
coefficient vector (c0, ..., c_{r-1}) over Z_p, read as coefficients of
1, x, ..., x^{r-1}, is encoded as sum(c_i * p**i).  Index 0 is the zero
element, index 1 is one, and enumeration in index order is deterministic
(lexicographic in the coefficient vector read from the highest power
down), so every enumeration built on top of it is reproducible.
"""

from .errors import (
    DivisionByZeroError,
    NonPrimeError,
    ReduciblePolynomialError,
    TooLargeError,
)

MAX_ORDER = 1 << 20

# Dense operation tables are only materialised below this order; above it
# arithmetic falls back to digit/polynomial computation per call.
TABLE_LIMIT = 1024


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Sorted distinct prime factors of n (trial division; n <= 2^20)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over Z_p ----------------------------------------
# Polynomials are tuples of coefficients in ascending degree with no
# trailing zeros; () is the zero polynomial.


def _poly_trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, cm in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * cm) % p
        a.pop()
    return _poly_trim(a)


def _monic_polys(p, degree):
    """All monic polynomials of the given degree, in counter order."""
    counter = [0] * degree
    while True:
        yield tuple(counter) + (1,)
        i = 0
        while i < degree:
            counter[i] += 1
            if counter[i] < p:
                break
            counter[i] = 0
            i += 1
        else:
            return


class Field:
    """GF(p^r) with exact, table-backed arithmetic.

    Immutable after construction; all operations are pure, so instances
    are safe to share freely.
    """

    def __init__(self, p, r=1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"extension degree must be a positive integer, got {r}")
        order = p ** r
        if order > MAX_ORDER:
            raise TooLargeError(f"p^r = {order} exceeds the bound {MAX_ORDER}")
        self.p = p
        self.r = r
        self.order = order
        self.mult_order = order - 1
        if r == 1:
            self.modulus = None  # only consulted for genuine extensions
        else:
            if modulus is None:
                raise ValueError(f"GF({p}^{r}) needs an explicit modulus polynomial")
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != r + 1 or mod[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {r}, got {tuple(modulus)}"
                )
            self._check_irreducible(mod)
            self.modulus = mod
        self._powers = [p ** i for i in range(r)]
        self._add_table = None
        self._mul_table = None
        self._neg_table = None
        self._inv_table = None
        self._generator = None

    def _check_irreducible(self, mod):
        # Exhaustive search for a monic factor of degree <= r/2; feasible
        # because p^r <= 2^20 keeps the candidate count near 2*p^(r/2).
        p = self.p
        for d in range(1, self.r // 2 + 1):
            for g in _monic_polys(p, d):
                if not _poly_mod(mod, g, p):
                    raise ReduciblePolynomialError(
                        f"{mod} is divisible by {g} over Z_{p}", factor=g
                    )

    # -- encoding -------------------------------------------------------

    def coeffs(self, a):
        """Coefficient vector (c0, ..., c_{r-1}) of the element index a."""
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def element(self, coeffs):
        cs = tuple(coeffs)
        if len(cs) != self.r:
            raise ValueError(f"expected {self.r} coefficients, got {len(cs)}")
        if any(not (0 <= c < self.p) for c in cs):
            raise ValueError(f"coefficients must lie in [0, {self.p}): {cs}")
        return sum(c * w for c, w in zip(cs, self._powers))

    def elements(self):
        """All p^r elements exactly once, in canonical index order."""
        return range(self.order)

    def units(self):
        return range(1, self.order)

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        t = self._add_table
        if t is not None:
            return t[a][b]
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for w in self._powers:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
        return out

    def neg_table(self):
        if self._neg_table is None:
            self._neg_table = [
                self.element(tuple((-c) % self.p for c in self.coeffs(x)))
                for x in range(self.order)
            ]
        return self._neg_table

    def neg(self, a):
        return self.neg_table()[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        t = self._mul_table
        if t is not None:
            return t[a][b]
        if self.r == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self._from_poly(_poly_mod(prod, self.modulus, self.p))

    def _from_poly(self, poly):
        return sum(c * w for c, w in zip(poly, self._powers))

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("0 has no multiplicative inverse")
        t = self._inv_table
        if t is not None:
            inv = t[a]
            if inv is not None:
                return inv
        return self.pow(a, self.mult_order - 1)

    def pow(self, a, k):
        """a^k with the exponent reduced mod mult_order for nonzero a."""
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise DivisionByZeroError("0 cannot be raised to a negative power")
        k %= self.mult_order if self.mult_order else 1
        if self.r == 1:
            return pow(a, k, self.p)
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a):
        return self.pow(a, self.p)

    # -- dense tables -----------------------------------------------------

    def op_tables(self):
        """Dense (add, mul) tables; built lazily, only below TABLE_LIMIT."""
        if self._add_table is None:
            if self.order > TABLE_LIMIT:
                raise TooLargeError(
                    f"dense tables refused for order {self.order} > {TABLE_LIMIT}"
                )
            self._build_tables()
        return self._add_table, self._mul_table

    def _build_tables(self):
        n = self.order
        digits = [self.coeffs(a) for a in range(n)]
        p = self.p
        powers = self._powers
        add = []
        for a in range(n):
            da = digits[a]
            add.append(
                [
                    sum(((ca + cb) % p) * w for ca, cb, w in zip(da, digits[b], powers))
                    for b in range(n)
                ]
            )
        # multiplication through discrete logs of a fixed generator
        g = self.generator()
        exp = [1] * max(self.mult_order, 1)
        for i in range(1, self.mult_order):
            exp[i] = self._raw_mul(exp[i - 1], g)
        log = [None] * n
        for i, e in enumerate(exp):
            log[e] = i
        m = self.mult_order
        mul = [[0] * n]
        for a in range(1, n):
            la = log[a]
            row = [0] * n
            for b in range(1, n):
                row[b] = exp[(la + log[b]) % m]
            mul.append(row)
        inv = [None] + [exp[(m - log[a]) % m] for a in range(1, n)]
        self._add_table = add
        self._mul_table = mul
        self._inv_table = inv

    def _raw_mul(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self._from_poly(_poly_mod(prod, self.modulus, self.p))

    def generator(self):
        """Smallest element generating the multiplicative group."""
        if self._generator is None:
            m = self.mult_order
            if m <= 1:
                self._generator = 1
            else:
                factors = prime_factors(m)
                for g in range(2, self.order):
                    if all(self.pow(g, m // q) != 1 for q in factors):
                        self._generator = g
                        break
                else:  # pragma: no cover - every finite field has one
                    raise RuntimeError("no multiplicative generator found")
        return self._generator

    def pow_table(self, k):
        """[x^k for every element x], used for twist actions downstream."""
        return [self.pow(x, k) for x in range(self.order)]

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"
