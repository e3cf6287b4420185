"""Exact arithmetic in GF(p^e) via exp/log tables.

Elements are plain integer indices in [0, q).  For e = 1 the index is the
residue itself; for e > 1 the base-p digits of the index are the polynomial
coefficients of the element (index = sum c_i * p^i for the element
sum c_i * X^i).  This keeps vertex ids and file formats canonical.
"""

import math
from dataclasses import dataclass, field as dc_field

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q as p^e with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


def gcd_bar(a: int, q: int) -> int:
    """gcd(a, q-1) taken on a mod (q-1), with gcd(0, q-1) = q-1."""
    return math.gcd(a % (q - 1), q - 1)


def units_mod(n: int) -> list[int]:
    """All k in [1, n] coprime to n, ascending."""
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


# -- polynomial helpers over GF(p), coefficients low-degree-first ------------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a, b, mod, p):
    """(a * b) mod `mod` over GF(p); mod is monic, low-first."""
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce
    dm = len(mod) - 1
    while len(res) > dm:
        top = res.pop()
        if top:
            off = len(res) - dm
            for j in range(dm):
                res[off + j] = (res[off + j] - top * mod[j]) % p
    _poly_trim(res)
    return res


def _poly_divisible(num, den, p):
    """True iff den divides num over GF(p); den monic, both low-first."""
    rem = list(num)
    dd = len(den) - 1
    while len(rem) - 1 >= dd and any(rem):
        _poly_trim(rem)
        if len(rem) - 1 < dd:
            break
        lead = rem[-1]
        shift = len(rem) - 1 - dd
        for j in range(len(den)):
            rem[shift + j] = (rem[shift + j] - lead * den[j]) % p
        _poly_trim(rem)
    return not any(rem)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if poly[0] == 0:  # divisible by X
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for k in range(p ** d):
            den = _digits(k, p, d) + [1]
            if _poly_divisible(poly, den, p):
                return False
    return True


def _digits(n, p, width):
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


def _undigits(c, p):
    v = 0
    for d in reversed(c):
        v = v * p + d
    return v


@dataclass(frozen=True)
class Field:
    """GF(p^e) with deterministic modulus and exp/log tables.

    Immutable after construction; safe to share across workers.
    """

    p: int
    e: int
    q: int
    modulus: tuple  # coefficients high-degree-first incl. leading 1; () for e = 1
    primitive: int
    exp: tuple = dc_field(repr=False, default=())
    log: tuple = dc_field(repr=False, default=())

    def elements(self):
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        res, mult = 0, 1
        while a or b:
            res += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return res

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        res, mult = 0, 1
        while a:
            res += ((-a) % p) * mult
            a //= p
            mult *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a: int, m: int) -> int:
        """a^m with exponents reduced mod q-1; 0^m = 0 only for m >= 1."""
        if a == 0:
            if m < 1:
                raise ValueError("0 raised to a non-positive power")
            return 0
        return self.exp[(m * self.log[a]) % (self.q - 1)]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        return (self.q - 1) // math.gcd(self.log[a], self.q - 1)


def make_field(p: int, e: int) -> Field:
    """Construct GF(p^e) deterministically.

    The modulus is the lexicographically smallest monic irreducible of
    degree e (coefficients compared high-degree-first), and the primitive
    element is the smallest-index generator of the multiplicative group.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError("e must be >= 1")
    q = p ** e
    if q > MAX_ORDER:
        raise ValueError(f"q = {q} exceeds implementation bound {MAX_ORDER}")

    if e == 1:
        modulus_low = None
        modulus_high = ()
    else:
        modulus_low = None
        for k in range(p ** e):
            # digits of k read high-degree-first gives lexicographic order
            high_first = _digits(k, p, e)[::-1]
            cand = high_first[::-1] + [1]  # low-first, monic
            if _is_irreducible(cand, p):
                modulus_low = cand
                break
        assert modulus_low is not None
        modulus_high = tuple(reversed(modulus_low))

    def raw_mul(a, b):
        if e == 1:
            return (a * b) % p
        pa = _digits(a, p, e)
        pb = _digits(b, p, e)
        _poly_trim(pa)
        _poly_trim(pb)
        res = _poly_mulmod(pa, pb, modulus_low, p)
        return _undigits(res, p)

    primitive = None
    exp = None
    for g in range(1, q):
        seen = [g]
        x = g
        while True:
            x = raw_mul(x, g)
            if x == g:
                break
            seen.append(x)
        if len(seen) == q - 1:
            primitive = g
            # seen starts at g = g^1; rotate so exp[0] = 1
            exp = [seen[-1]] + seen[:-1]
            break
    assert primitive is not None

    log = [0] * q
    for i, x in enumerate(exp):
        log[x] = i

    return Field(p=p, e=e, q=q, modulus=modulus_high, primitive=primitive,
                 exp=tuple(exp), log=tuple(log))


def field_for_order(q: int) -> Field:
    p, e = factor_prime_power(q)
    return make_field(p, e)


# -- univariate polynomials over a Field, coefficients low-degree-first ------

def poly_eval(F: Field, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_mul(F: Field, a, b):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = F.add(res[i + j], F.mul(ai, bj))
    return res


def poly_add(F: Field, a, b):
    n = max(len(a), len(b))
    return [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)]


def poly_scale(F: Field, a, c):
    return [F.mul(x, c) for x in a]


def lagrange_interpolate(F: Field, points) -> list:
    """Coefficients (low-first, length q) of the unique polynomial of degree
    < q through the given (x, y) points; points must have distinct x."""
    xs = [x for x, _ in points]
    # full product prod (Y - x_j)
    full = [1]
    for x in xs:
        full = poly_mul(F, full, [F.neg(x), 1])
    coeffs = [0] * len(points)
    for xi, yi in points:
        # basis_i = full / (Y - xi), by synthetic division
        basis = [0] * (len(full) - 1)
        carry = 0
        for k in range(len(full) - 1, 0, -1):
            carry = F.add(full[k], F.mul(carry, xi))
            basis[k - 1] = carry
        denom = poly_eval(F, basis, xi)
        scale = F.mul(yi, F.inv(denom))
        coeffs = poly_add(F, coeffs, poly_scale(F, basis, scale))
    if len(coeffs) < len(points):
        coeffs += [0] * (len(points) - len(coeffs))
    return coeffs
