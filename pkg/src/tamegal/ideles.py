"""Finite place systems, local tame data and idele-level identities.

Local multiplicative values are pairs u * pi^r with u in Q(zeta_M) and r
rational.  The Frobenius lift phi acts on u by zeta -> zeta^q and fixes every
radical pi^(1/n); sigma fixes u and sends pi^(a/n) to zeta_n^a pi^(a/n).  This
needs p not dividing M, which the place system enforces.

Local units of F_v G are kept through their character values
(chi -> chi(c) in (F_v^c)^x), so every idele component is multiplicative data:

    kind "FG"      FourierUnit (character values of a unit of F_v G)
    kind "LAMBDA"  LambdaMap G -> local values
    kind "H"       AghHom on the basis of ker(det), local values

A PlaceSystem models K/k with Sigma = Gal(K/k): each base place w carries a
decomposition subgroup D_w of Sigma, the places above w are the cosets
gamma D_w, the distinguished place is D_w itself and gamma_v is the least
element of the coset (so gamma_{v_w} = 1).  Global constants live in
Q(zeta_M); the chosen lifts of Sigma act on them through residues mod M.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import gcd

from .abelian import FinAbGroup, GroupElem, FiniteGroup, GroupHom, elem_order, char_eval
from .cyclo import CycloField, CycloElem, zeta, is_unit as cyclo_is_unit, fixed_subfield_basis
from .stickelberger import LambdaMap, AghHom, agh_basis, character_hom, transpose_as_reduced_resolvend, pairing


class IdeleError(ValueError):
    pass


def _prime_power_base(q):
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    x = q
    while x % p == 0:
        x //= p
    return p if x == 1 else None


# ---------------------------------------------------------------------------
# local values


class LocalMultValue:
    """u * pi^r with u a nonzero element of Q(zeta_M)."""

    __slots__ = ("unit", "exp")

    def __init__(self, unit: CycloElem, exp=0):
        if unit.is_zero():
            raise IdeleError("unit part must be nonzero")
        self.unit = unit
        self.exp = Fraction(exp)

    @classmethod
    def one(cls, field):
        return cls(field.one(), 0)

    @classmethod
    def pi(cls, field, r=1):
        return cls(field.one(), r)

    @property
    def field(self):
        return self.unit.field

    def __mul__(self, other):
        return LocalMultValue(self.unit * other.unit, self.exp + other.exp)

    def inverse(self):
        return LocalMultValue(self.unit.inverse(), -self.exp)

    def __pow__(self, k):
        if isinstance(k, Fraction) and k.denominator != 1:
            if not self.unit.is_one():
                raise IdeleError("fractional powers are only defined for pure radicals")
            return LocalMultValue(self.unit, self.exp * k)
        k = int(k)
        return LocalMultValue(self.unit ** k, self.exp * k)

    def __eq__(self, other):
        return isinstance(other, LocalMultValue) and self.exp == other.exp and self.unit == other.unit

    def __hash__(self):
        return hash((self.unit, self.exp))

    def __repr__(self):
        if self.exp == 0:
            return f"{self.unit}"
        return f"({self.unit})*pi^{self.exp}"

    def is_one(self):
        return self.exp == 0 and self.unit.is_one()

    def is_integral_unit(self):
        return self.exp == 0 and cyclo_is_unit(self.unit)

    def galois(self, u):
        """zeta -> zeta^u on the unit part, radicals fixed."""
        return LocalMultValue(self.unit.galois(u), self.exp)


class LocalTameGroup:
    """Omega_F^t generated by phi and sigma with phi sigma phi^-1 = sigma^q."""

    def __init__(self, q: int, p: int = None):
        base = _prime_power_base(q)
        if base is None or (p is not None and p != base):
            raise IdeleError(f"{q} is not a power of the prime {p}")
        self.q = q
        self.p = base

    def __repr__(self):
        return f"LocalTameGroup(q={self.q})"

    def g_q1(self, G: FinAbGroup):
        """G_(q-1): elements whose order divides q - 1."""
        return [s for s in G if (self.q - 1) % elem_order(s) == 0]

    def _check_field(self, x):
        if x.field.n % self.p == 0:
            raise IdeleError(f"residue characteristic {self.p} divides the conductor {x.field.n}")

    def phi(self, x: LocalMultValue, k: int = 1):
        self._check_field(x)
        n = x.field.n
        u = pow(self.q, k, n) if k >= 0 else pow(pow(self.q, -1, n), -k, n)
        return x.galois(u)

    def sigma(self, x: LocalMultValue, k: int = 1):
        self._check_field(x)
        r = x.exp
        if r.denominator == 1:
            return x
        if r.denominator % self.p == 0:
            raise IdeleError(f"pi^{r} is a wild radical for p = {self.p}")
        z = zeta(x.field, r.denominator)
        return LocalMultValue(x.unit * z ** ((r.numerator * k) % r.denominator), r)

    def relation_holds(self, x: LocalMultValue) -> bool:
        """phi sigma phi^-1 sigma^-1 (x) == sigma^(q-1) (x)."""
        lhs = self.phi(self.sigma(self.phi(self.sigma(x, -1), -1)))
        return lhs == self.sigma(x, self.q - 1)


@dataclass(frozen=True)
class LocalTameHom:
    """h with h(phi) = x, h(sigma) = y; y must lie in G_(q-1)."""
    q: int
    x: GroupElem
    y: GroupElem

    def __post_init__(self):
        if (self.q - 1) % elem_order(self.y) != 0:
            raise IdeleError(f"h(sigma) = {self.y} has order not dividing q - 1 = {self.q - 1}")

    @property
    def group(self):
        return self.x.group

    def __mul__(self, other):
        return LocalTameHom(self.q, self.x + other.x, self.y + other.y)

    def is_trivial(self):
        return self.x.is_zero() and self.y.is_zero()


def local_homs(q: int, G: FinAbGroup):
    lt = LocalTameGroup(q)
    ys = lt.g_q1(G)
    return [LocalTameHom(q, x, y) for x in G for y in ys]


def factorize(h: LocalTameHom):
    """(h_nr, h_tot) with h_nr = (x, 0) and h_tot = (0, y)."""
    z = h.group.zero()
    return LocalTameHom(h.q, h.x, z), LocalTameHom(h.q, z, h.y)


def is_unramified(h: LocalTameHom) -> bool:
    return h.y.is_zero()


def total_ramification_degree(h: LocalTameHom) -> int:
    """n with F^(h_tot) = F(pi^(1/n))."""
    return elem_order(h.y)


def prime_f(s: GroupElem, q: int, field: CycloField) -> LambdaMap:
    """t -> pi if t == s != 1, else 1."""
    if (q - 1) % elem_order(s) != 0:
        raise IdeleError(f"order of {s} does not divide q - 1 = {q - 1}")
    G = s.group
    one = LocalMultValue.one(field)
    pi = LocalMultValue.pi(field)
    return LambdaMap(G, [pi if (t == s and not s.is_zero()) else one for t in G])


def prime_f_support(f: LambdaMap):
    """s if f is a prime F-element f_s (s = 0 for f = 1), else None."""
    G = f.group
    hit = None
    for t, v in zip(G, f.values):
        if v.is_one():
            continue
        if t.is_zero() or v.exp != 1 or not v.unit.is_one() or hit is not None:
            return None
        hit = t
    return G.zero() if hit is None else hit


def local_transpose_resolvend(f: LambdaMap) -> AghHom:
    """Theta^t(f) on the basis of ker(det); every exponent is checked integral."""
    out = transpose_as_reduced_resolvend(f)
    for v in out.basis_values:
        if v.exp.denominator != 1:
            raise IdeleError("transpose has a non-integral uniformizer exponent")
    return out


def character_lift(f: LambdaMap):
    """chi -> prod_t f(t)^<chi, t> (fractional radicals), aligned with G.dual()."""
    G = f.group
    out = []
    for chi in G.dual():
        acc = LocalMultValue.one(f.values[0].field)
        for t, v in zip(G, f.values):
            e = pairing(chi, t)
            if e and not v.is_one():
                acc = acc * (v ** e)
        out.append(acc)
    return out


def chi_value(chi, s, field):
    v, o = char_eval(chi, s)
    return LocalMultValue(zeta(field, o) ** v if o > 1 else field.one(), 0)


def sigma_shift_check(f: LambdaMap, s: GroupElem, lt: LocalTameGroup) -> bool:
    """sigma acts on the character lift of Theta^t(f_s) as multiplication by s."""
    G = f.group
    lift = character_lift(f)
    field = f.values[0].field
    return all(lt.sigma(val) == val * chi_value(chi, s, field) for chi, val in zip(G.dual(), lift))


# ---------------------------------------------------------------------------
# character-valued local units


class FourierUnit:
    """A unit of F^c G given by its character values chi -> chi(c)."""

    def __init__(self, group: FinAbGroup, values):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != group.order():
            raise IdeleError("one value per character")

    @classmethod
    def one(cls, group, field):
        return cls(group, [LocalMultValue.one(field)] * group.order())

    @classmethod
    def of_group_ring(cls, beta):
        return cls(beta.group, [LocalMultValue(v, 0) for v in beta.fourier()])

    def __mul__(self, other):
        return FourierUnit(self.group, [a * b for a, b in zip(self.values, other.values)])

    def inverse(self):
        return FourierUnit(self.group, [a.inverse() for a in self.values])

    def __eq__(self, other):
        return isinstance(other, FourierUnit) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "FourierUnit(" + ", ".join(map(repr, self.values)) + ")"

    def is_one(self):
        return all(v.is_one() for v in self.values)

    def reduced(self) -> AghHom:
        """Restriction to ker(det): the reduced resolvend."""
        return character_hom(list(self.values), self.group)

    def _act(self, lt, which, k=1):
        """(w . c)(chi) = w(c(chi^(kappa(w)^-1)))."""
        G = self.group
        dual = G.dual()
        m = G.exponent()
        if which == "sigma":
            return FourierUnit(G, [lt.sigma(v, k) for v in self.values])
        kap = pow(lt.q, k, m) if m > 1 else 1
        kinv = pow(kap, -1, m) if m > 1 else 1
        out = []
        for chi in dual:
            src = chi ** kinv
            out.append(lt.phi(self.values[G.index(src.as_elem())], k))
        return FourierUnit(G, out)

    def is_rational(self, lt: LocalTameGroup) -> bool:
        """Fixed by phi and sigma, i.e. a unit of F_v G."""
        return self._act(lt, "phi") == self and self._act(lt, "sigma") == self

    def associated_local_hom(self, lt: LocalTameGroup):
        """(h(phi), h(sigma)) with w . c = c t_w, or None if c is not a resolvend."""
        out = []
        for which in ("phi", "sigma"):
            moved = self._act(lt, which)
            t = self._shift_by(moved)
            if t is None:
                return None
            out.append(t)
        try:
            return LocalTameHom(lt.q, out[0], out[1])
        except IdeleError:
            return None

    def _shift_by(self, other):
        """t with other == self * t, or None."""
        G = self.group
        field = self.values[0].field
        ratio = [b * a.inverse() for a, b in zip(self.values, other.values)]
        for t in G:
            if all(r == chi_value(chi, t, field) for chi, r in zip(G.dual(), ratio)):
                return t
        return None


def _as_local_hom(x) -> AghHom:
    """Global reduced resolvend or cyclotomic-valued AghHom -> local values."""
    from .resolvend import ReducedResolvend, GroupRingElem
    if isinstance(x, ReducedResolvend):
        x = x.rep
    if isinstance(x, GroupRingElem):
        return FourierUnit.of_group_ring(x).reduced()
    if isinstance(x, AghHom):
        vals = [v if isinstance(v, LocalMultValue) else LocalMultValue(v, 0) for v in x.basis_values]
        return AghHom(x.lattice, vals)
    raise IdeleError(f"cannot read {type(x).__name__} as a reduced resolvend")


# ---------------------------------------------------------------------------
# place systems


@dataclass
class FiberSpec:
    name: str
    q: int
    decomposition: list = dc_field(default_factory=lambda: [0])
    ramified: bool = False
    e: int = 1
    frobenius: int = None  # element of Omega (total index) for phi at v_w
    inertia: int = None    # element of Omega (total index) for sigma at v_w


@dataclass
class Place:
    name: str
    base: int
    gamma: int
    q: int
    p: int
    ramified: bool
    e: int

    @property
    def local(self):
        return LocalTameGroup(self.q, self.p)


class PlaceSystem:
    def __init__(self, sigma: FiniteGroup, fibers, field: CycloField, lift_units=None,
                 tame_model=None, base_units=None, name=None):
        self.sigma = sigma
        self.field = field
        self.name = name
        self.fiber_data = list(fibers)
        self.tame_model = tame_model
        self.lift_units = list(lift_units) if lift_units is not None else [1] * sigma.n
        # units of Q(zeta_M) fixing the base constants k
        self.base_units = sorted(set(base_units)) if base_units is not None else sorted(
            {u % field.n for u in self.lift_units} | {1})
        self.base = []
        self.places = []
        self._fiber = []
        self._build()
        self.validate()

    @classmethod
    def from_realized(cls, rm, fibers, name=None):
        """Constants Q(zeta_N), k = fixed field of the total group, lifts from the model."""
        m = rm.model
        lift_units = [rm.unit_of(m.lift(g)) for g in range(m.sigma.n)]
        return cls(m.sigma, fibers, CycloField(rm.N), lift_units, tame_model=m,
                   base_units=list(m.total.labels), name=name)

    def _build(self):
        S = self.sigma
        for wi, fs in enumerate(self.fiber_data):
            p = _prime_power_base(fs.q)
            if p is None:
                raise IdeleError(f"q = {fs.q} is not a prime power")
            D = sorted(S.generated(fs.decomposition))
            if len(D) % fs.e:
                raise IdeleError(f"ramification index {fs.e} does not divide |D_w| = {len(D)}")
            f = len(D) // fs.e
            self.base.append(Place(fs.name, wi, 0, fs.q, p, fs.ramified, 1))
            seen = set()
            idx = []
            for g in range(S.n):
                if g in seen:
                    continue
                coset = sorted(S.mul(g, d) for d in D)
                seen.update(coset)
                rep = coset[0]
                idx.append(len(self.places))
                self.places.append(Place(f"{fs.name}.{len(idx) - 1}", wi, rep, fs.q ** f, p, fs.ramified, fs.e))
            self._fiber.append(idx)
        self._perm = []
        for g in range(S.n):
            row = []
            for v in self.places:
                target = S.mul(g, v.gamma)
                hit = next(j for j in self._fiber[v.base]
                           if self._same_coset(target, self.places[j].gamma, v.base))
                row.append(hit)
            self._perm.append(row)

    def _same_coset(self, a, b, wi):
        S = self.sigma
        D = S.generated(self.fiber_data[wi].decomposition)
        return S.mul(S.inv(b), a) in D

    def validate(self):
        S = self.sigma
        if self.lift_units[0] % self.field.n != 1 % self.field.n:
            raise IdeleError("the lift of 1 must act trivially")
        for wi, fiber in enumerate(self._fiber):
            vw = self.distinguished(wi)
            if self.places[vw].gamma != 0:
                raise IdeleError("gamma of the distinguished place must be 1")
            orbit = {self._perm[g][vw] for g in range(S.n)}
            if orbit != set(fiber):
                raise IdeleError(f"Sigma is not transitive on the fiber over {self.base[wi].name}")
            for v in fiber:
                pl = self.places[v]
                if self._perm[pl.gamma][vw] != v:
                    raise IdeleError(f"gamma_v does not carry v_w to {pl.name}")
                if pl.ramified != self.places[vw].ramified or pl.q != self.places[vw].q:
                    raise IdeleError("places in one fiber must share q and ramification")
        for pl in self.base + self.places:
            if self.field.n % pl.p == 0:
                raise IdeleError(f"residue characteristic {pl.p} divides the conductor {self.field.n}")

    def __repr__(self):
        return f"PlaceSystem({self.name or ''}: {len(self.base)} base places, {len(self.places)} places)"

    def level_places(self, level):
        return self.base if level == "base" else self.places

    def fiber(self, wi):
        return list(self._fiber[wi])

    def distinguished(self, wi):
        return self._fiber[wi][0]

    def act(self, g, v):
        return self._perm[g][v]

    def ramified_places(self):
        """V: places of K ramified in K/k."""
        return [i for i, pl in enumerate(self.places) if pl.ramified]

    def lift_unit(self, v):
        return self.lift_units[self.places[v].gamma] % self.field.n

    def lift_total(self, v):
        if self.tame_model is None:
            raise IdeleError("system has no tame model")
        return self.tame_model.lift(self.places[v].gamma)

    def roots_in_base(self, m: int) -> bool:
        """zeta_m is fixed by every base unit (k contains the m-th roots of unity)."""
        if m == 1:
            return True
        try:
            return all(self.field.kappa(u, m) == 1 for u in self.base_units)
        except Exception:
            return False

    def transport(self, v, x: LocalMultValue) -> LocalMultValue:
        """epsilon_v on a base value: Galois by the lift of gamma_v, pi_w -> pi_v^e."""
        pl = self.places[v]
        return LocalMultValue(x.unit.galois(self.lift_unit(v)), x.exp * pl.e)

    def kappa_inverse(self, v, m):
        """k with epsilon_v^-1 o chi = chi^k on characters of exponent m."""
        if m == 1:
            return 1
        u = pow(self.lift_unit(v), -1, self.field.n)
        return self.field.kappa(u, m)

    def base_constants_basis(self):
        return fixed_subfield_basis(self.field, self.base_units)


# ---------------------------------------------------------------------------
# ideles


KINDS = ("FG", "LAMBDA", "H")


class IdeleVector:
    def __init__(self, system: PlaceSystem, kind: str, level: str, group: FinAbGroup, components):
        if kind not in KINDS:
            raise IdeleError(f"unknown idele kind {kind}")
        if level not in ("base", "ext"):
            raise IdeleError("level is 'base' or 'ext'")
        self.system = system
        self.kind = kind
        self.level = level
        self.group = group
        self.components = list(components)
        if len(self.components) != len(system.level_places(level)):
            raise IdeleError("one component per place")

    @classmethod
    def identity(cls, system, kind, level, group):
        n = len(system.level_places(level))
        return cls(system, kind, level, group, [_identity_component(kind, group, system.field)] * n)

    def _check(self, other):
        if (self.kind, self.level) != (other.kind, other.level) or self.system is not other.system:
            raise IdeleError(f"kind mismatch: {self.kind}/{self.level} vs {other.kind}/{other.level}")

    def __mul__(self, other):
        self._check(other)
        return IdeleVector(self.system, self.kind, self.level, self.group,
                           [a * b for a, b in zip(self.components, other.components)])

    def inverse(self):
        return IdeleVector(self.system, self.kind, self.level, self.group,
                           [a.inverse() for a in self.components])

    def __eq__(self, other):
        return (isinstance(other, IdeleVector) and (self.kind, self.level) == (other.kind, other.level)
                and self.components == other.components)

    def support(self):
        """Places where the component is not the identity."""
        one = _identity_component(self.kind, self.group, self.system.field)
        return [i for i, c in enumerate(self.components) if c != one]

    def is_unit_at(self, i) -> bool:
        c = self.components[i]
        if self.kind == "FG":
            return all(v.is_integral_unit() for v in c.values)
        if self.kind == "LAMBDA":
            return all(v.is_integral_unit() for v in c.values)
        return all(v.is_integral_unit() for v in c.basis_values)

    def unit_places(self):
        return [i for i in range(len(self.components)) if self.is_unit_at(i)]

    def __repr__(self):
        return f"IdeleVector({self.kind}/{self.level}, support={self.support()})"


def _identity_component(kind, G, field):
    one = LocalMultValue.one(field)
    if kind == "FG":
        return FourierUnit.one(G, field)
    if kind == "LAMBDA":
        return LambdaMap(G, [one] * G.order())
    L = agh_basis(G)
    return AghHom(L, [one] * L.rank())


def idele_mul(a: IdeleVector, b: IdeleVector) -> IdeleVector:
    return a * b


def idele_inv(a: IdeleVector) -> IdeleVector:
    return a.inverse()


# diagonal maps


def partial_diag(system, level, beta) -> IdeleVector:
    """The diagonal image of a unit of F G (kind FG)."""
    if not beta.is_unit():
        raise IdeleError("not a unit of the group algebra")
    c = FourierUnit.of_group_ring(beta)
    n = len(system.level_places(level))
    return IdeleVector(system, "FG", level, beta.group, [c] * n)


def lambda_diag(system, level, g: LambdaMap) -> IdeleVector:
    """The diagonal image of a global map G -> F^x (kind LAMBDA)."""
    vals = [v if isinstance(v, LocalMultValue) else LocalMultValue(v, 0) for v in g.values]
    comp = LambdaMap(g.group, vals)
    n = len(system.level_places(level))
    return IdeleVector(system, "LAMBDA", level, g.group, [comp] * n)


def eta_diag(system, level, r) -> IdeleVector:
    """The diagonal image of a global reduced resolvend (kind H)."""
    comp = _as_local_hom(r)
    n = len(system.level_places(level))
    return IdeleVector(system, "H", level, comp.lattice.group, [comp] * n)


def rag_idele(c: IdeleVector) -> IdeleVector:
    if c.kind != "FG":
        raise IdeleError("rag is defined on FG ideles")
    return IdeleVector(c.system, "H", c.level, c.group, [x.reduced() for x in c.components])


def theta_idele(g: IdeleVector) -> IdeleVector:
    """Componentwise Stickelberger transpose LAMBDA -> H."""
    if g.kind != "LAMBDA":
        raise IdeleError("Theta^t is defined on LAMBDA ideles")
    return IdeleVector(g.system, "H", g.level, g.group,
                       [transpose_as_reduced_resolvend(x) for x in g.components])


def epsilon_fg(c: IdeleVector) -> IdeleVector:
    """epsilon_v on a base FG idele: chi(eps(c_w)) = eps(c_w(chi^k)), k = kappa of the inverse lift."""
    ps = c.system
    if c.kind != "FG" or c.level != "base":
        raise IdeleError("epsilon takes a base FG idele")
    G = c.group
    m = G.exponent()
    comps = []
    for v, pl in enumerate(ps.places):
        cw = c.components[pl.base]
        k = ps.kappa_inverse(v, m)
        comps.append(FourierUnit(G, [ps.transport(v, cw.values[G.index((chi ** k).as_elem())])
                                     for chi in G.dual()]))
    return IdeleVector(ps, "FG", "ext", G, comps)


def nu_map(g: IdeleVector) -> IdeleVector:
    """nu(g)_v = epsilon_v o g_w."""
    ps = g.system
    if g.kind != "LAMBDA" or g.level != "base":
        raise IdeleError("nu takes a base LAMBDA idele")
    if not ps.roots_in_base(g.group.exponent()):
        raise IdeleError("nu needs the exp(G)-th roots of unity in the base field")
    comps = []
    for v, pl in enumerate(ps.places):
        gw = g.components[pl.base]
        comps.append(LambdaMap(g.group, [ps.transport(v, x) for x in gw.values]))
    return IdeleVector(ps, "LAMBDA", "ext", g.group, comps)


def mu_map(r: IdeleVector) -> IdeleVector:
    """mu(r)_v(psi) = epsilon_v(r_w(epsilon_v^-1 o psi))."""
    ps = r.system
    if r.kind != "H" or r.level != "base":
        raise IdeleError("mu takes a base H idele")
    G = r.group
    L = agh_basis(G)
    m = G.exponent()
    comps = []
    for v, pl in enumerate(ps.places):
        rw = r.components[pl.base]
        k = ps.kappa_inverse(v, m)
        vals = [ps.transport(v, rw(psi.power(k))) for psi in L.elements()]
        comps.append(AghHom(L, vals))
    return IdeleVector(ps, "H", "ext", G, comps)


# ---------------------------------------------------------------------------
# prime F-elements


class PrimeFElement:
    """Per-place s_v with order dividing q_v - 1; realizes f_v = f_{F_v, s_v}."""

    def __init__(self, system: PlaceSystem, level: str, group: FinAbGroup, s):
        self.system = system
        self.level = level
        self.group = group
        self.s = list(s)
        places = system.level_places(level)
        if len(self.s) != len(places):
            raise IdeleError("one s_v per place")
        for pl, sv in zip(places, self.s):
            if (pl.q - 1) % elem_order(sv):
                raise IdeleError(f"s = {sv} at {pl.name}: order does not divide q - 1 = {pl.q - 1}")

    @classmethod
    def trivial(cls, system, level, group):
        return cls(system, level, group, [group.zero()] * len(system.level_places(level)))

    @classmethod
    def from_idele(cls, g: IdeleVector):
        s = []
        for comp in g.components:
            t = prime_f_support(comp)
            if t is None:
                return None
            s.append(t)
        try:
            return cls(g.system, g.level, g.group, s)
        except IdeleError:
            return None

    def to_idele(self) -> IdeleVector:
        places = self.system.level_places(self.level)
        comps = [prime_f(sv, pl.q, self.system.field) for pl, sv in zip(places, self.s)]
        return IdeleVector(self.system, "LAMBDA", self.level, self.group, comps)

    def support(self):
        return [i for i, sv in enumerate(self.s) if not sv.is_zero()]

    def __eq__(self, other):
        return isinstance(other, PrimeFElement) and self.level == other.level and self.s == other.s


def f_descent(f: PrimeFElement):
    """g over the base with nu(g) = f, when s_v = 1 on V and s_v = s_{v_w} on fibers."""
    ps = f.system
    if f.level != "ext":
        raise IdeleError("descent starts from an extension-level element")
    for v in ps.ramified_places():
        if not f.s[v].is_zero():
            return None
    for wi in range(len(ps.base)):
        sw = f.s[ps.distinguished(wi)]
        if any(f.s[v] != sw for v in ps.fiber(wi)):
            return None
    try:
        return PrimeFElement(ps, "base", f.group, [f.s[ps.distinguished(wi)] for wi in range(len(ps.base))])
    except IdeleError:
        return None


# ---------------------------------------------------------------------------
# local hom families and transport


def ramified_set(family):
    """d(h): indices where h_v(sigma) != 1."""
    return {i for i, h in enumerate(family) if not is_unramified(h)}


def derived_local_family(h: GroupHom, ps: PlaceSystem):
    """h_v = (h(phi_v), h(sigma_v)) with phi_v, sigma_v conjugated from v_w by the lift of gamma_v."""
    m = ps.tame_model
    if m is None:
        raise IdeleError("system has no tame model")
    T = m.total
    out = []
    for v, pl in enumerate(ps.places):
        fs = ps.fiber_data[pl.base]
        if fs.frobenius is None or fs.inertia is None:
            raise IdeleError(f"fiber {fs.name} has no decomposition data")
        lift = ps.lift_total(v)
        x = h.values[m.omega_index(T.conj(lift, fs.frobenius))]
        y = h.values[m.omega_index(T.conj(lift, fs.inertia))]
        out.append(LocalTameHom(pl.q, x, y))
    return out


def check_decomposition_data(ps: PlaceSystem):
    """phi sigma phi^-1 == sigma^q inside Omega at every distinguished place."""
    m = ps.tame_model
    T = m.total
    for wi, fs in enumerate(ps.fiber_data):
        if fs.frobenius is None:
            continue
        for t in (fs.frobenius, fs.inertia):
            if t not in m.omega:
                raise IdeleError(f"decomposition data at {fs.name} is not in Omega")
        q = ps.places[ps.distinguished(wi)].q
        if T.conj(fs.frobenius, fs.inertia) != T.pow(fs.inertia, q):
            raise IdeleError(f"phi sigma phi^-1 != sigma^q at {fs.name}")
    return True


@dataclass
class CompatReport:
    holds: bool
    per_place: list


def hv_compatibility_check(h: GroupHom, ps: PlaceSystem, act, family=None, trivial_action=None):
    """Transport identities of local homs along gamma_v.

    (a) h(lift(gamma_v) w lift(gamma_v)^-1) == gamma_v . h(w) for w = phi, sigma at v_w;
    (b) off V: family[v] == gamma_v . family[v_w] (sigma part needs zeta_{e_v} in k);
        with trivial action this reads s_v == s_{v_w}.
    """
    from .cohomology import is_sigma_fixed
    m = ps.tame_model
    T = m.total
    derived = derived_local_family(h, ps)
    family = derived if family is None else list(family)
    if trivial_action is None:
        trivial_action = act.is_trivial()
    fixed = is_sigma_fixed(m, h, act)
    rows = []
    ok = fixed
    V = set(ps.ramified_places())
    for v, pl in enumerate(ps.places):
        fs = ps.fiber_data[pl.base]
        vw = ps.distinguished(pl.base)
        lift = ps.lift_total(v)
        g = pl.gamma
        a_ok = all(h.values[m.omega_index(T.conj(lift, w))] == act.act(g, h.values[m.omega_index(w)])
                   for w in (fs.frobenius, fs.inertia))
        b_ok = True
        if v not in V:
            e = elem_order(family[v].y)
            root_ok = ps.roots_in_base(e)
            if family[v].x != act.act(g, family[vw].x):
                b_ok = False
            if root_ok and family[v].y != act.act(g, family[vw].y):
                b_ok = False
            if trivial_action and root_ok and family[v].y != family[vw].y:
                b_ok = False
        ok = ok and a_ok and b_ok
        rows.append((pl.name, a_ok, b_ok))
    return CompatReport(ok, rows)


# ---------------------------------------------------------------------------
# witnesses for rag(c) = eta(r(b))^-1 u Theta^t(f)


@dataclass
class PlaceVerdict:
    place: str
    equation: bool
    u_unit: bool
    c_rational: bool
    f_prime: bool
    local_hom: object
    f_matches_sigma: bool
    f_trivial_iff_unramified: bool

    def ok(self):
        return self.equation and self.u_unit and self.c_rational and self.f_prime


@dataclass
class Char1Witness:
    system: PlaceSystem
    level: str
    c: IdeleVector     # kind FG
    b: list            # per-place FourierUnit: local images of r(b)
    u: IdeleVector     # kind H
    f: IdeleVector     # kind LAMBDA
    family: list = None

    def __mul__(self, other):
        return Char1Witness(self.system, self.level, self.c * other.c,
                            [x * y for x, y in zip(self.b, other.b)], self.u * other.u, self.f * other.f,
                            None if self.family is None or other.family is None
                            else [x * y for x, y in zip(self.family, other.family)])


def char1_verify(c: IdeleVector, b, u: IdeleVector, f: IdeleVector):
    """Check rag(c) == eta(r(b))^-1 u Theta^t(f) place by place.

    Also reports, where the equation holds, whether f_v = f_{F_v, h_v(sigma)} and
    whether f_v = 1 exactly when h_v is unramified; h_v is read off from the
    local images of r(b).  The output c is the witness for the class j(c).
    """
    if (c.kind, u.kind, f.kind) != ("FG", "H", "LAMBDA"):
        raise IdeleError("char1_verify takes (FG, resolvend images, H, LAMBDA) data")
    ps = c.system
    places = ps.level_places(c.level)
    reports = []
    all_ok = True
    for i, pl in enumerate(places):
        lt = pl.local
        cv, bv, uv, fv = c.components[i], b[i], u.components[i], f.components[i]
        lhs = cv.reduced()
        s = prime_f_support(fv)
        f_prime = s is not None and (pl.q - 1) % elem_order(s) == 0
        rhs = bv.reduced().inverse() * uv * transpose_as_reduced_resolvend(fv)
        eq = lhs == rhs
        u_unit = u.is_unit_at(i)
        c_rat = cv.is_rational(lt)
        hv = bv.associated_local_hom(lt)
        if hv is None:
            raise IdeleError(f"r(b) at {pl.name} is not a resolvend of a tame hom")
        cons1 = f_prime and s == hv.y
        cons2 = (s is not None and s.is_zero()) == is_unramified(hv)
        rep = PlaceVerdict(pl.name, eq, u_unit, c_rat, f_prime, hv, cons1, cons2)
        all_ok = all_ok and rep.ok()
        reports.append(rep)
    return all_ok, reports


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def kummer_witness(system: PlaceSystem, level: str, G: FinAbGroup, radicals, betas):
    """Witness data for the cyclic Kummer hom with local radicals rho_v.

    G = Z/m, k contains mu_m (and the constants of betas); rho_v = w_v pi^(y_v/m)
    is the local image of a global m-th root R.  r(b) has character values
    chi_e -> beta_e R^e; the local generator a_v has values
    w_v^e pi^<chi_e, y_v>, giving
        c_v = beta_e^-1 pi^(-floor(e y_v/m)),  u_v = (chi_e -> w_v^e),  f_v = f_{y_v}.
    """
    if G.rank != 1:
        raise IdeleError("the Kummer construction handles cyclic G")
    m = G.factors[0]
    places = system.level_places(level)
    field = system.field
    if len(radicals) != len(places):
        raise IdeleError("one radical per place")
    dual = G.dual()
    cs, bs, us, fs, fam = [], [], [], [], []
    for pl, rho in zip(places, radicals):
        lt = pl.local
        if (pl.q - 1) % m:
            raise IdeleError(f"mu_{m} is not in the residue field at {pl.name}")
        mexp = rho.exp * m
        if mexp.denominator != 1:
            raise IdeleError(f"rho at {pl.name} is not an m-th root of an element of F_v")
        y = int(mexp) % m
        w = LocalMultValue(rho.unit, 0)
        rvals, cvals, uvals = [], [], []
        for chi, beta in zip(dual, betas):
            e = chi.coords[0]
            bval = LocalMultValue(beta, 0) * (rho ** e)
            lifted = w ** e * LocalMultValue.pi(field, pairing(chi, G.elem((y,))))
            rvals.append(bval)
            cvals.append(lifted * bval.inverse())
            uvals.append(w ** e)
        bv = FourierUnit(G, rvals)
        hv = bv.associated_local_hom(lt)
        if hv is None:
            raise IdeleError(f"rho at {pl.name} does not define a tame local hom")
        s = G.elem((y,))
        cs.append(FourierUnit(G, cvals))
        bs.append(bv)
        us.append(FourierUnit(G, uvals).reduced())
        fs.append(prime_f(s, pl.q, field))
        fam.append(hv)
    return Char1Witness(system, level,
                        IdeleVector(system, "FG", level, G, cs), bs,
                        IdeleVector(system, "H", level, G, us),
                        IdeleVector(system, "LAMBDA", level, G, fs), fam)


def perturb_unit(wit: Char1Witness, place: int) -> Char1Witness:
    """Multiply u at one place by the non-unit psi -> pi on every basis element."""
    comps = list(wit.u.components)
    L = comps[place].lattice
    pi = LocalMultValue.pi(wit.system.field)
    comps[place] = comps[place] * AghHom(L, [pi] * L.rank())
    u = IdeleVector(wit.system, "H", wit.level, wit.u.group, comps)
    return Char1Witness(wit.system, wit.level, wit.c, wit.b, u, wit.f, wit.family)


def weak_mult_witness(w1: Char1Witness, w2: Char1Witness):
    """Product witness for h1 h2 when d(h1) and d(h2) are disjoint; verified."""
    d1 = ramified_set(w1.family)
    d2 = ramified_set(w2.family)
    if d1 & d2:
        raise IdeleError(f"ramified sets overlap at {sorted(d1 & d2)}")
    w = w1 * w2
    ok, rep = char1_verify(w.c, w.b, w.u, w.f)
    if not ok:
        raise IdeleError("product witness does not verify")
    return w, rep


# ---------------------------------------------------------------------------
# congruence units and the approximation surrogate


def congruence_unit_check(g: IdeleVector, m: int) -> bool:
    """Every g_v(s), s != 1, is a unit congruent to 1 mod m."""
    if g.kind != "LAMBDA":
        raise IdeleError("congruence check is on LAMBDA ideles")
    G = g.group
    for comp in g.components:
        for s, v in zip(G, comp.values):
            if s.is_zero():
                continue
            if v.exp != 0:
                return False
            d = v.unit - v.unit.field.one()
            if any((c / m).denominator != 1 for c in d.coeffs):
                return False
    return True


@dataclass
class ApproxResult:
    status: str               # FOUND or MODEL-INCOMPLETE
    f: PrimeFElement = None
    witness: LambdaMap = None
    strengthened: bool = False


def approx_search(g: IdeleVector, T, m: int, candidates=()):
    """f in F with f_v = 1 on T and g f^-1 lambda(x)^-1 congruent to 1 mod m.

    x runs over the identity and the supplied global maps.  Prefers f whose
    support meets every s != 1; exhaustion is reported as MODEL-INCOMPLETE.
    """
    if g.kind != "LAMBDA":
        raise IdeleError("approximation is on LAMBDA ideles")
    ps, level, G = g.system, g.level, g.group
    places = ps.level_places(level)
    T = set(T)
    one_map = LambdaMap(G, [ps.field.one()] * G.order())
    cands = [one_map] + [c for c in candidates]
    choices = []
    for i, pl in enumerate(places):
        if i in T:
            choices.append([G.zero()])
        else:
            choices.append(LocalTameGroup(pl.q, pl.p).g_q1(G))
    first = None
    for sv in product(*choices):
        f = PrimeFElement(ps, level, G, list(sv))
        finv = f.to_idele().inverse()
        for x in cands:
            lam = lambda_diag(ps, level, x).inverse()
            if congruence_unit_check(g * finv * lam, m):
                covered = {s for s in sv if not s.is_zero()}
                strong = covered == {s for s in G if not s.is_zero()}
                if strong:
                    return ApproxResult("FOUND", f, x, True)
                if first is None:
                    first = ApproxResult("FOUND", f, x, False)
                break
    return first if first is not None else ApproxResult("MODEL-INCOMPLETE")


# ---------------------------------------------------------------------------
# global constants


def random_base_constant(ps: PlaceSystem, rng, spread=2):
    """A random nonzero element of the base constants (fixed by the base units)."""
    basis = ps.base_constants_basis()
    while True:
        acc = ps.field.zero()
        for b in basis:
            c = rng.randint(-spread, spread)
            if c:
                acc = acc + b * c
        if not acc.is_zero():
            return acc


def random_lambda_idele(ps: PlaceSystem, level, G, rng, spread=2, exp_spread=2):
    comps = []
    for _ in ps.level_places(level):
        vals = [LocalMultValue(random_base_constant(ps, rng, spread), rng.randint(-exp_spread, exp_spread))
                for _ in range(G.order())]
        comps.append(LambdaMap(G, vals))
    return IdeleVector(ps, "LAMBDA", level, G, comps)


def random_global_lambda(ps: PlaceSystem, G, rng, spread=2):
    return LambdaMap(G, [random_base_constant(ps, rng, spread) for _ in range(G.order())])


def hs_inclusion_check(rm, g: LambdaMap, roots: LambdaMap, act):
    """Theta^t_K(g) for k-valued g lifts to a resolvend whose hom has trivial transgression."""
    from .stickelberger import lift_to_resolvend
    from .resolvend import associated_hom
    from .cohomology import transgression, is_coboundary, is_sigma_fixed
    gm = rm.galois_model
    r = lift_to_resolvend(g, roots, gm)
    h = associated_hom(r, gm)
    hh = GroupHom(rm.model.omega_group, h.target, h.values)
    if not is_sigma_fixed(rm.model, hh, act):
        return h, False
    return h, is_coboundary(transgression(rm.model, hh, act)) is not None
