"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements live in the power basis 1, zeta, ..., zeta^(phi(n)-1) modulo the
n-th cyclotomic polynomial.  Internally an element is an integer numerator
vector over one positive common denominator, kept in lowest terms; the
public `coeffs` view gives Fractions.  Roots of unity follow the compatible
system zeta_d = zeta_N^(N/d), so zeta(n, d*e)^e == zeta(n, d).  Here N is the
number of roots of unity in the field: N = n for even n, and N = 2n for odd n
with zeta_2n := -zeta_n^((n+1)/2), since Q(zeta_n) = Q(zeta_2n) then.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd


class CycloError(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise CycloError("conductor must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_exact_div(a, b):
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    assert not any(a[:db]), "inexact division"
    return q


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


class CycloField:
    _cache = {}

    def __new__(cls, n):
        # one field object per conductor; construction is idempotent
        f = cls._cache.get(n)
        if f is None:
            f = super().__new__(cls)
            f._setup(n)
            cls._cache[n] = f
        return f

    def _setup(self, n):
        self.n = n
        self.modulus = cyclotomic_poly(n)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # x^k mod Phi_n for 0 <= k < max(n, 2d)
        red = []
        cur = [1] + [0] * (d - 1)
        for k in range(max(n, 2 * d)):
            red.append(tuple(cur))
            # multiply by x
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, self.modulus[:d])]
        self._red = red
        self._galois = {}
        self.root_order = n if n % 2 == 0 else 2 * n

    def __repr__(self):
        return f"CycloField({self.n})"

    def __reduce__(self):
        return (CycloField, (self.n,))

    def units(self):
        return [u for u in range(1, self.n + 1) if gcd(u, self.n) == 1] if self.n > 1 else [1]

    # constructors

    def zero(self):
        return CycloElem(self, (0,) * self.degree, 1)

    def one(self):
        return self.from_int(1)

    def from_int(self, a):
        return CycloElem(self, (a,) + (0,) * (self.degree - 1), 1)

    def from_fraction(self, q):
        q = Fraction(q)
        return CycloElem(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coeffs(self, coeffs):
        """Element with the given power-basis coefficients (any length; reduced)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        return CycloElem(self, self._reduce_poly(nums), den)

    def zeta_power(self, k):
        """zeta_n^k."""
        return CycloElem(self, self._red[k % self.n], 1)

    def root(self, k):
        """zeta_N^k for N = root_order."""
        return CycloElem(self, self._root_vec(k), 1)

    def _root_vec(self, k):
        n, N = self.n, self.root_order
        k %= N
        if N == n:
            return self._red[k]
        v = self._red[(k * ((n + 1) // 2)) % n]
        return tuple(-a for a in v) if k % 2 else v

    def kappa(self, u, m):
        """k mod m with (zeta -> zeta^u)(zeta_m) = zeta_m^k."""
        if self.root_order % m:
            raise CycloError(f"zeta_{m} is not in Q(zeta_{self.n})")
        if self.n % m == 0 or u % 2 == 1:
            return u % m
        return (u + self.n) % m

    def _reduce_poly(self, nums):
        d = self.degree
        out = list(nums[:d]) + [0] * max(0, d - len(nums))
        for k in range(d, len(nums)):
            c = nums[k]
            if c:
                r = self._red[k % self.n] if k >= len(self._red) else self._red[k]
                for i in range(d):
                    out[i] += c * r[i]
        return tuple(out)

    def galois_matrix(self, u):
        u %= self.n
        if gcd(u, self.n) != 1:
            raise CycloError(f"{u} is not a unit mod {self.n}")
        M = self._galois.get(u)
        if M is None:
            M = [self._red[(u * i) % self.n] for i in range(self.degree)]
            self._galois[u] = M
        return M


def zeta(field: CycloField, d: int) -> "CycloElem":
    """The compatible primitive d-th root of unity zeta_N^(N/d)."""
    if field.root_order % d:
        raise CycloError(f"zeta_{d} is not in Q(zeta_{field.n})")
    return field.root(field.root_order // d)


class CycloElem:
    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field, nums, den=1):
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            nums = tuple(-a for a in nums)
            den = -den
        g = den
        for a in nums:
            g = gcd(g, a)
            if g == 1:
                break
        if g != 1:
            nums = tuple(a // g for a in nums)
            den //= g
        self.field = field
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @property
    def coeffs(self):
        return tuple(Fraction(a, self.den) for a in self.nums)

    def __repr__(self):
        return f"CycloElem({self.field.n}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.field is other.field and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_fraction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.n, self.nums, self.den))
        return self._hash

    def sort_key(self):
        return self.coeffs

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.field is not self.field:
                raise CycloError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        raise TypeError(f"cannot combine CycloElem with {type(other)}")

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return CycloElem(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        return CycloElem(self.field, tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)),
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.field, tuple(a * other for a in self.nums), self.den)
        if isinstance(other, Fraction):
            return CycloElem(self.field, tuple(a * other.numerator for a in self.nums),
                             self.den * other.denominator)
        o = self._coerce(other)
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.nums):
            if a:
                for j, b in enumerate(o.nums):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.field, self.field._reduce_poly(prod), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid in Q[x]: s * a + t * Phi = 1
        a = [Fraction(c) for c in self.coeffs]
        s = _poly_inverse_mod(a, [Fraction(c) for c in self.field.modulus])
        return self.field.from_coeffs(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return not any(self.nums)

    def is_one(self):
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self):
        return not any(self.nums[1:])

    def rational(self):
        if not self.is_rational():
            raise CycloError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def mul_zeta(self, k):
        """self * zeta_n^k."""
        n = self.field.n
        red = self.field._red
        d = self.field.degree
        out = [0] * d
        for i, a in enumerate(self.nums):
            if a:
                r = red[(i + k) % n]
                for j in range(d):
                    if r[j]:
                        out[j] += a * r[j]
        return CycloElem(self.field, tuple(out), self.den)

    def mul_root(self, k):
        """self * zeta_N^k, N = root_order."""
        N = self.field.root_order
        if N == self.field.n:
            return self.mul_zeta(k)
        k %= N
        r = self.mul_zeta((k * ((self.field.n + 1) // 2)) % self.field.n)
        return -r if k % 2 else r

    def galois(self, u):
        M = self.field.galois_matrix(u)
        d = self.field.degree
        out = [0] * d
        for a, row in zip(self.nums, M):
            if a:
                for j in range(d):
                    if row[j]:
                        out[j] += a * row[j]
        return CycloElem(self.field, tuple(out), self.den)

    def embed(self, big: CycloField):
        """Image in Q(zeta_N) for N a multiple of n, via zeta_n -> zeta_N^(N/n)."""
        if big.n % self.field.n:
            raise CycloError(f"{self.field.n} does not divide {big.n}")
        step = big.n // self.field.n
        return CycloElem(big, big._reduce_poly(_spread(self.nums, step)), self.den)

    def trace(self, units=None):
        """Sum of the Galois conjugates over the listed units (default: all)."""
        units = self.field.units() if units is None else units
        acc = self.field.zero()
        for u in units:
            acc = acc + self.galois(u)
        return acc

    def norm(self):
        acc = self.field.one()
        for u in self.field.units():
            acc = acc * self.galois(u)
        return acc.rational()

    def root_of_unity_exponent(self):
        """r in Q/Z with self == zeta_N^(r N), or None."""
        if self.den != 1:
            return None
        N = self.field.root_order
        for k in range(N):
            if self.field._root_vec(k) == self.nums:
                return Fraction(k, N)
        return None


def _spread(nums, step):
    out = [0] * ((len(nums) - 1) * step + 1)
    for i, a in enumerate(nums):
        out[i * step] = a
    return out


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    _trim(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for j in range(len(b)):
            a[k + j] -= c * b[j]
        a.pop()
        _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a, m):
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is a zero divisor")
    c = r1[0]
    return [x / c for x in s1]


def galois_apply(u: int, x: CycloElem) -> CycloElem:
    """The automorphism zeta -> zeta^u applied to x."""
    return x.galois(u)


def is_integral(x: CycloElem) -> bool:
    return x.den == 1


def is_unit(x: CycloElem) -> bool:
    """Unit of Z[zeta_n]: integral with integral inverse."""
    return (not x.is_zero()) and x.den == 1 and x.inverse().den == 1


def check_subgroup(n, H):
    H = sorted({u % n for u in H})
    if not H or any(gcd(u, n) != 1 for u in H):
        raise CycloError(f"{H} is not a set of units mod {n}")
    Hs = set(H)
    for a in H:
        for b in H:
            if (a * b) % n not in Hs:
                raise CycloError(f"{H} is not closed under multiplication mod {n}")
    return H


def fixed_subfield_check(x: CycloElem, H) -> bool:
    """True iff x is fixed by every automorphism zeta -> zeta^u, u in H."""
    H = check_subgroup(x.field.n, H)
    return all(x.galois(u) == x for u in H)


def fixed_subfield_basis(field: CycloField, H):
    """A Q-basis of the fixed field of H, as traces of power-basis elements."""
    from .intlin import rank_q
    H = check_subgroup(field.n, H)
    basis = []
    rows = []
    for i in range(field.degree):
        t = field.zeta_power(i).trace(H)
        cand = rows + [list(t.coeffs)]
        if rank_q(cand) > len(rows):
            rows = cand
            basis.append(t)
    return basis


def orbit_sums(field: CycloField, H):
    """Sums of zeta^k over the orbits of H on Z/n, ordered by least exponent.

    These are integral, H-fixed, and span the fixed ring over Z up to finite
    index; they are the search space for integral equivariant maps.
    """
    H = check_subgroup(field.n, H)
    seen = set()
    out = []
    for k in range(field.n):
        if k in seen:
            continue
        orb = sorted({(k * u) % field.n for u in H})
        seen.update(orb)
        acc = field.zero()
        for j in orb:
            acc = acc + field.zeta_power(j)
        out.append(acc)
    return out
