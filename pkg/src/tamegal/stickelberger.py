"""Stickelberger pairing, map, the lattice ker(det) and the transpose.

<chi, s> = v(chi, s)/|s| where chi(s) = zeta_|s|^v.  Theta(psi) = sum_s <psi, s> s.
A = ker(det: Z[G^] -> G^) is the lattice of psi with Theta(psi) integral, and
the transpose sends a map f on G to psi -> prod_s f(s)^<psi, s> on A.

Multiplicative values only need *, inverse(), ** int and (for equivariance
checks) a Galois action, so cyclotomic units and formal local values u*pi^r
can both be used.
"""
from fractions import Fraction
from functools import lru_cache

from .abelian import FinAbGroup, GroupElem, Character, char_eval, elem_order
from . import intlin


class StickelbergerError(ValueError):
    pass


def pairing(chi: Character, s: GroupElem) -> Fraction:
    if chi.group != s.group:
        raise StickelbergerError("character and element live on different groups")
    v, o = char_eval(chi, s)
    return Fraction(v, o)


@lru_cache(maxsize=None)
def _pairing_table(factors):
    G = FinAbGroup(factors)
    return tuple(tuple(pairing(chi, s) for s in G) for chi in G.dual())


def pairing_table(G: FinAbGroup):
    """table[chi_index][s_index] = <chi, s>."""
    return _pairing_table(G.factors)


class CharCombo:
    """sum_chi n_chi chi in Q G^, coefficients aligned with G.dual()."""

    def __init__(self, group: FinAbGroup, coeffs):
        self.group = group
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != group.order():
            raise StickelbergerError("one coefficient per character")

    @classmethod
    def of(cls, group, terms):
        """From a mapping {Character: coefficient}."""
        c = [0] * group.order()
        for chi, n in terms.items():
            c[group.index(chi.as_elem())] += n
        return cls(group, c)

    @classmethod
    def zero(cls, group):
        return cls(group, [0] * group.order())

    def __add__(self, other):
        return CharCombo(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return CharCombo(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rmul__(self, k):
        return CharCombo(self.group, [k * a for a in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, CharCombo) and self.coeffs == other.coeffs

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self):
        if not self.is_integral():
            raise StickelbergerError("combination has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def power(self, u):
        """psi^u: every chi replaced by chi^u."""
        G = self.group
        out = [Fraction(0)] * G.order()
        for chi, c in zip(G.dual(), self.coeffs):
            if c:
                out[G.index((chi ** u).as_elem())] += c
        return CharCombo(G, out)

    def det(self):
        """Product of the characters with multiplicity, as a Character."""
        G = self.group
        acc = G.zero()
        for chi, c in zip(G.dual(), self.int_coeffs()):
            acc = acc + c * chi.as_elem()
        return Character(G, acc.coords)

    def __repr__(self):
        G = self.group
        terms = [f"{c}*{chi}" for chi, c in zip(G.dual(), self.coeffs) if c]
        return "CharCombo(" + " + ".join(terms or ["0"]) + ")"


class GroupCombo:
    """sum_s c_s s in Q G, coefficients aligned with G.elements()."""

    def __init__(self, group, coeffs):
        self.group = group
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    def __eq__(self, other):
        return isinstance(other, GroupCombo) and self.coeffs == other.coeffs

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, s):
        return self.coeffs[self.group.index(s)]

    def __repr__(self):
        terms = [f"{c}*{s}" for s, c in zip(self.group, self.coeffs) if c]
        return "GroupCombo(" + " + ".join(terms or ["0"]) + ")"


def theta(psi: CharCombo) -> GroupCombo:
    P = pairing_table(psi.group)
    n = psi.group.order()
    out = [Fraction(0)] * n
    for row, c in zip(P, psi.coeffs):
        if c:
            for j in range(n):
                out[j] += c * row[j]
    return GroupCombo(psi.group, out)


def theta_exponents(psi: CharCombo):
    """The integer exponents <psi, s>; raises unless psi lies in A."""
    t = theta(psi)
    if not t.is_integral():
        raise StickelbergerError(f"{psi} is not in ker(det)")
    return [int(c) for c in t.coeffs]


class AghLattice:
    """Integer basis (rows) of A = ker(det) inside Z G^."""

    def __init__(self, group, basis):
        self.group = group
        self.basis = [list(r) for r in basis]

    def index(self):
        return abs(intlin.det_int(self.basis))

    def rank(self):
        return len(self.basis)

    def coordinates(self, psi: CharCombo):
        """Rational coordinates of psi in the basis."""
        B = self.basis
        n = len(B)
        Bt = [[B[j][i] for j in range(n)] for i in range(n)]
        return intlin.solve_q(Bt, list(psi.coeffs))

    def contains(self, psi: CharCombo) -> bool:
        if not psi.is_integral():
            return False
        return all(x.denominator == 1 for x in self.coordinates(psi))

    def element(self, i):
        return CharCombo(self.group, self.basis[i])

    def elements(self):
        return [self.element(i) for i in range(len(self.basis))]


@lru_cache(maxsize=None)
def _agh_basis(factors):
    G = FinAbGroup(factors)
    dual = G.dual()
    n = G.order()
    if G.rank == 0:
        return ((1,),)
    A = [[chi.coords[i] for chi in dual] for i in range(G.rank)]
    rows = intlin.kernel_mod(A, list(G.factors), n)
    return tuple(tuple(r) for r in rows)


def agh_basis(G: FinAbGroup) -> AghLattice:
    return AghLattice(G, _agh_basis(G.factors))


def integrality_criterion(psi: CharCombo):
    """(Theta(psi) integral, psi in A), each computed on its own."""
    if not psi.is_integral():
        raise StickelbergerError("criterion is stated for integer combinations")
    return theta(psi).is_integral(), agh_basis(psi.group).contains(psi)


def equivariance_check(psi: CharCombo, u: int) -> bool:
    """Theta(psi^u) == Theta(psi) with s -> u^-1 s (the G(-1) action)."""
    G = psi.group
    m = G.exponent()
    try:
        uinv = pow(u, -1, m) if m > 1 else 1
    except ValueError:
        raise StickelbergerError(f"{u} is not a unit mod {m}")
    lhs = theta(psi.power(u))
    t = theta(psi)
    moved = [Fraction(0)] * G.order()
    for s, c in zip(G, t.coeffs):
        moved[G.index(uinv * s)] += c
    return lhs.coeffs == tuple(moved)


# ---------------------------------------------------------------------------
# Lambda maps and the transpose


class LambdaMap:
    """A map G -> multiplicative values, aligned with G.elements()."""

    def __init__(self, group: FinAbGroup, values, model=None):
        self.group = group
        self.values = tuple(values)
        self.model = model
        if len(self.values) != group.order():
            raise StickelbergerError("one value per group element")

    def __call__(self, s):
        return self.values[self.group.index(s)]

    def __mul__(self, other):
        return LambdaMap(self.group, [a * b for a, b in zip(self.values, other.values)], self.model)

    def inverse(self):
        return LambdaMap(self.group, [a.inverse() for a in self.values], self.model)

    def __eq__(self, other):
        return isinstance(other, LambdaMap) and self.values == other.values

    def __repr__(self):
        return "LambdaMap{" + ", ".join(f"{s}: {v}" for s, v in zip(self.group, self.values)) + "}"


def lambda_equivariant(f: LambdaMap, model) -> bool:
    """f(w.s) == w(f(s)) with w.s = s^(kappa(w)^-1), for a cyclotomic GaloisModel."""
    G = f.group
    m = G.exponent()
    for u in model.units:
        k = model.field.kappa(u, m) if m > 1 else 1
        kinv = pow(k, -1, m) if m > 1 else 1
        for s in G:
            if f(kinv * s) != f(s).galois(u):
                return False
    return True


def _one_like(x):
    return x ** 0


def transpose(f: LambdaMap, psi: CharCombo):
    """prod_s f(s)^<psi, s> for psi in A."""
    if not agh_basis(psi.group).contains(psi):
        raise StickelbergerError(f"{psi} is not in ker(det)")
    exps = theta_exponents(psi)
    acc = _one_like(f.values[0])
    for v, e in zip(f.values, exps):
        if e:
            acc = acc * (v ** e)
    return acc


class AghHom:
    """A homomorphism A -> multiplicative values, stored on the basis of A."""

    def __init__(self, lattice: AghLattice, basis_values):
        self.lattice = lattice
        self.basis_values = tuple(basis_values)

    def __call__(self, psi: CharCombo):
        coords = self.lattice.coordinates(psi)
        if any(x.denominator != 1 for x in coords):
            raise StickelbergerError(f"{psi} is not in ker(det)")
        acc = _one_like(self.basis_values[0])
        for v, x in zip(self.basis_values, coords):
            if x:
                acc = acc * (v ** int(x))
        return acc

    def __mul__(self, other):
        return AghHom(self.lattice, [a * b for a, b in zip(self.basis_values, other.basis_values)])

    def inverse(self):
        return AghHom(self.lattice, [a.inverse() for a in self.basis_values])

    def __eq__(self, other):
        return isinstance(other, AghHom) and self.basis_values == other.basis_values

    def __hash__(self):
        return hash(self.basis_values)

    def is_identity(self):
        return all(v == _one_like(v) for v in self.basis_values)

    def __repr__(self):
        return f"AghHom({list(self.basis_values)})"


def transpose_as_reduced_resolvend(f: LambdaMap, model=None) -> AghHom:
    """psi -> transpose(f, psi) as a hom on A, evaluated on the basis."""
    if model is not None and not lambda_equivariant(f, model):
        raise StickelbergerError("map is not equivariant for the G(-1) action")
    L = agh_basis(f.group)
    return AghHom(L, [transpose(f, psi) for psi in L.elements()])


def character_hom(values, group: FinAbGroup) -> AghHom:
    """Restriction to A of chi -> values[chi] (e.g. the Fourier values of a unit)."""
    L = agh_basis(group)
    out = []
    for row in L.basis:
        acc = _one_like(values[0])
        for v, n in zip(values, row):
            if n:
                acc = acc * (v ** n)
        out.append(acc)
    return AghHom(L, out)


def lift_to_resolvend(f: LambdaMap, roots: LambdaMap, model):
    """A unit of E G whose restriction to A is the transpose of f.

    `roots` must satisfy roots(s)^m == f(s), m = exp(G); the character values
    are chi -> prod_s roots(s)^(m <chi, s>), all integer exponents.
    """
    from .resolvend import GroupRingElem
    G = f.group
    m = G.exponent()
    for a, b in zip(roots.values, f.values):
        if a ** m != b:
            raise StickelbergerError("roots do not raise to f")
    P = pairing_table(G)
    vals = []
    for row in P:
        acc = model.field.one()
        for z, p in zip(roots.values, row):
            e = int(p * m)
            if e:
                acc = acc * (z ** e)
        vals.append(acc)
    return GroupRingElem.from_fourier(G, model.field, vals)
