"""Exact arithmetic in GF(p) and GF(p^m).

An element of GF(p^m) is an integer code in [0, p^m): the polynomial
a0 + a1*t + ... + a_{m-1}*t^(m-1) is stored as a0 + a1*p + ... + a_{m-1}*p^(m-1).
Multiplication reduces modulo a monic irreducible polynomial picked
deterministically (the one whose low-coefficient vector has the smallest
base-p value), so a field is pinned by (p, m) alone and codes are portable.

Field contexts are immutable after construction.  The generator, trace
basis, character roots and lookup tables are write-once caches computed on
first use; recomputing them in a race is idempotent, so contexts may be
shared between threads.
"""

from __future__ import annotations

import functools
import math

__all__ = ["Field", "make_field", "is_prime", "factorize", "divisors", "MAX_ORDER"]

MAX_ORDER = 2 ** 31  # keeps every count downstream inside exact 64-bit integer range

# Witnesses making Miller-Rabin deterministic far beyond 2^31.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    ds = [1]
    for prime, exp in factorize(n):
        ds = [d * prime ** k for d in ds for k in range(exp + 1)]
    return sorted(ds)


# ---------------------------------------------------------------------------
# dense polynomials over GF(p): coefficient lists, lowest degree first

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, f, p):
    """Remainder of a modulo monic f."""
    a = list(a)
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k] % p
        if c:
            off = k - df
            for i in range(df):
                a[off + i] = (a[off + i] - c * f[i]) % p
        a[k] = 0
    return _trim([x % p for x in a[:df]])


def _poly_powmod(base, e, f, p):
    result = [1]
    b = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, b, p), f, p)
        e >>= 1
        if e:
            b = _poly_mod(_poly_mul(b, b, p), f, p)
    return result


def _poly_gcd(a, b, p):
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], p - 2, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _poly_mod(a, monic, p)
    return a


def _poly_is_irreducible(f, p):
    """True iff monic f of degree >= 2 has no factor of degree <= deg(f)/2."""
    deg = len(f) - 1
    if f[0] == 0:  # divisible by x
        return False
    u = [0, 1]
    for _ in range(deg // 2):
        u = _poly_powmod(u, p, f, p)  # iterated Frobenius: u = x^(p^d) mod f
        diff = list(u) + [0] * (2 - len(u))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, f, p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over GF(p).

    Candidates x^m + a_{m-1} x^{m-1} + ... + a_0 are ordered by the base-p
    value a_0 + a_1 p + ... of the lower coefficient vector.
    """
    for k in range(p ** m):
        digits = []
        v = k
        for _ in range(m):
            digits.append(v % p)
            v //= p
        f = digits + [1]
        if _poly_is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class Field:
    """A finite field GF(p^m) whose elements are integer codes in [0, q)."""

    def __init__(self, p: int, m: int = 1):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise ValueError(f"characteristic {p!r} is not a prime")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError(f"extension degree must be a positive integer, got {m!r}")
        q = p ** m
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported limit 2^31")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = (0, 1) if m == 1 else smallest_irreducible(p, m)
        self._red = self._reduction_rows() if m > 1 else None
        # write-once caches
        self._generator = None
        self._trace_basis = None
        self._roots = None
        self._subfields = {}
        self._gpow = None
        self._dlog = None

    def _reduction_rows(self):
        # row k-m holds the coefficients of t^k mod modulus, m <= k <= 2m-2
        p, m, f = self.p, self.m, self.modulus
        base = [(-f[i]) % p for i in range(m)]
        rows = [base]
        for _ in range(m - 2):
            prev = rows[-1]
            top = prev[m - 1]
            row = [0] + list(prev[: m - 1])
            if top:
                row = [(row[i] + top * base[i]) % p for i in range(m)]
            rows.append(row)
        return rows

    # -- representation -----------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p and self.m == other.m

    def __hash__(self):
        return hash((self.p, self.m))

    def elements(self):
        """All element codes, ascending."""
        return range(self.q)

    def check(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.q:
            raise ValueError(f"{x!r} is not an element code of {self!r}")
        return x

    def decode(self, x) -> tuple[int, ...]:
        """Coefficient vector (a0, ..., a_{m-1}) of an element code."""
        self.check(x)
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(x % p)
            x //= p
        return tuple(out)

    def encode(self, digits) -> int:
        """Element code of a coefficient vector."""
        digits = list(digits)
        if len(digits) != self.m or any(not 0 <= d < self.p for d in digits):
            raise ValueError(f"bad coefficient vector {digits!r} for {self!r}")
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    # -- arithmetic -----------------------------------------------------------

    def add(self, x, y):
        self.check(x)
        self.check(y)
        p = self.p
        if self.m == 1:
            return (x + y) % p
        out = 0
        mult = 1
        while x or y:
            out += ((x % p) + (y % p)) % p * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x):
        self.check(x)
        p = self.p
        if self.m == 1:
            return (-x) % p
        out = 0
        mult = 1
        while x:
            d = x % p
            if d:
                out += (p - d) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x, y):
        self.check(x)
        self.check(y)
        p = self.p
        if self.m == 1:
            return (x - y) % p
        out = 0
        mult = 1
        while x or y:
            out += ((x % p) - (y % p)) % p * mult
            x //= p
            y //= p
            mult *= p
        return out

    def mul(self, x, y):
        self.check(x)
        self.check(y)
        p = self.p
        if self.m == 1:
            return x * y % p
        if x == 0 or y == 0:
            return 0
        m = self.m
        a = []
        v = x
        for _ in range(m):
            a.append(v % p)
            v //= p
        b = []
        v = y
        for _ in range(m):
            b.append(v % p)
            v //= p
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        red = self._red
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                row = red[k - m]
                for i in range(m):
                    prod[i] += c * row[i]
        code = 0
        for i in range(m - 1, -1, -1):
            code = code * p + prod[i] % p
        return code

    def pow(self, x, e):
        """x**e by square-and-multiply; e must be a nonnegative integer."""
        self.check(x)
        if e < 0:
            raise ValueError("negative exponents are not supported; use inv()")
        if self.m == 1:
            return pow(x, e, self.p)
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, x):
        self.check(x)
        if x == 0:
            raise ValueError("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        return self.pow(x, self.q - 2)

    # -- structure ------------------------------------------------------------

    def trace(self, x):
        """Trace down to the prime field: x + x^p + ... + x^(p^(m-1)), as a code < p.

        Computed through the trace of the power basis (the map is linear over
        the prime field), so table builds stay cheap.
        """
        self.check(x)
        if self.m == 1:
            return x
        tb = self._trace_basis
        if tb is None:
            tb = []
            for i in range(self.m):
                z = self.p ** i
                acc = z
                w = z
                for _ in range(self.m - 1):
                    w = self.pow(w, self.p)
                    acc = self.add(acc, w)
                if acc >= self.p:
                    raise RuntimeError("trace left the prime subfield; modulus arithmetic is broken")
                tb.append(acc)
            tb = tuple(tb)
            self._trace_basis = tb
        p = self.p
        total = 0
        i = 0
        while x:
            total += (x % p) * tb[i]
            x //= p
            i += 1
        return total % p

    def additive_char(self, a, x) -> complex:
        """exp(2*pi*i * Tr(a*x) / p), a unit-modulus complex number."""
        r = self._roots
        if r is None:
            tau = 2.0 * math.pi / self.p
            r = tuple(complex(math.cos(tau * k), math.sin(tau * k)) for k in range(self.p))
            self._roots = r
        return r[self.trace(self.mul(a, x))]

    def generator(self):
        """Smallest-code element of multiplicative order q - 1 (cached)."""
        g = self._generator
        if g is None:
            n = self.q - 1
            checks = [n // ell for ell, _ in factorize(n)] if n > 1 else []
            for cand in range(1, self.q):
                if all(self.pow(cand, e) != 1 for e in checks):
                    g = cand
                    break
            else:  # pragma: no cover - the group is cyclic, a generator exists
                raise RuntimeError("no generator found")
            self._generator = g
        return g

    def subfield(self, nu):
        """The subfield of order p^nu as an ESet; nu must divide m.

        These are exactly the fixed points of x -> x^(p^nu): {0} together
        with the multiplicative subgroup of order p^nu - 1.
        """
        if not isinstance(nu, int) or nu < 1 or self.m % nu != 0:
            raise ValueError(f"{nu!r} does not divide the extension degree {self.m}")
        cached = self._subfields.get(nu)
        if cached is None:
            from .sets import ESet

            size = self.p ** nu - 1
            step = (self.q - 1) // size
            h = self.pow(self.generator(), step)
            codes = [0]
            cur = 1
            for _ in range(size):
                codes.append(cur)
                cur = self.mul(cur, h)
            if cur != 1:
                raise RuntimeError("subgroup enumeration did not close")
            cached = ESet(self, codes)
            self._subfields[nu] = cached
        return cached

    def dlog_tables(self):
        """(powers-of-generator, discrete-log) lookup tables; dlog[0] = -1.

        Built once by q - 1 repeated multiplications.  Limited to q <= 2^22;
        these tables only back fast counting paths, never the definitions.
        """
        if self._gpow is None:
            if self.q > (1 << 22):
                raise ValueError("lookup tables are limited to q <= 2^22")
            g = self.generator()
            n = self.q - 1
            gpow = [0] * n
            dlog = [-1] * self.q
            cur = 1
            for k in range(n):
                gpow[k] = cur
                dlog[cur] = k
                cur = self.mul(cur, g)
            if cur != 1:
                raise RuntimeError("generator order check failed while building tables")
            self._gpow = tuple(gpow)
            self._dlog = tuple(dlog)
        return self._gpow, self._dlog


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> Field:
    """Shared field context for GF(p^m); repeated calls return the same object."""
    return Field(p, m)
