"""Resolvends in finite cyclotomic Galois models.

A GaloisModel is E = Q(zeta_n) with a subgroup Gamma of (Z/n)^x playing the
role of Gal(E/F), F = E^Gamma.  For a hom h: Gamma -> G the Galois algebra F_h
is modelled by the maps a: G -> E with a(h(w) + s) = w(a(s)).  The resolvend
of a is r(a) = sum_s a(s) s^-1 in the group algebra E G.

Character side: chi(r) = sum_t c_t chi(t), so chi(r(a)) = sum_s a(s) chi(s)^-1,
and a(s) = |G|^-1 sum_chi chi(r(a)) chi(s).
"""
from fractions import Fraction
from itertools import product

from .abelian import FinAbGroup, FiniteGroup, GroupHom, GroupError, char_exponent
from .cyclo import CycloField, CycloElem, fixed_subfield_basis, orbit_sums
from . import intlin


class ResolvendError(ValueError):
    pass


class SearchExhausted(ResolvendError):
    pass


class GaloisModel:
    """E = Q(zeta_n) together with Gamma <= (Z/n)^x."""

    def __init__(self, n, gamma=None):
        self.field = CycloField(n)
        self.n = n
        self.gamma = FiniteGroup.units(n, gamma)
        self.units = list(self.gamma.labels)

    def __repr__(self):
        return f"GaloisModel(n={self.n}, gamma={self.units})"

    def act(self, w, x: CycloElem):
        """Action of the Gamma element with index w."""
        return x.galois(self.units[w])

    def base_basis(self):
        """Q-basis of the fixed field F = E^Gamma."""
        return fixed_subfield_basis(self.field, self.units)

    def check_group(self, G: FinAbGroup):
        if self.field.root_order % G.exponent():
            raise ResolvendError(
                f"exp(G) = {G.exponent()} does not divide the number of roots of unity in Q(zeta_{self.n})")


def _chi_table(G: FinAbGroup, field: CycloField):
    """exponents k with chi(t) = zeta_N^k (N = field.root_order), as table[chi][t]."""
    m = G.exponent()
    if field.root_order % m:
        raise ResolvendError(f"exp(G) = {m} does not divide the number of roots of unity in Q(zeta_{field.n})")
    step = field.root_order // m
    return [[char_exponent(chi, t) * step for t in G] for chi in G.dual()]


_CHI_CACHE = {}


def chi_table(G, field):
    key = (G.factors, field.n)
    t = _CHI_CACHE.get(key)
    if t is None:
        t = _chi_table(G, field)
        _CHI_CACHE[key] = t
    return t


class GroupRingElem:
    """sum_t c_t t in E G with coefficients indexed like G.elements()."""

    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group: FinAbGroup, field: CycloField, coeffs):
        self.group = group
        self.field = field
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != group.order():
            raise ResolvendError("coefficient vector has the wrong length")

    @classmethod
    def one(cls, group, field):
        z = field.zero()
        return cls(group, field, [field.one()] + [z] * (group.order() - 1))

    @classmethod
    def group_element(cls, group, field, s):
        z = field.zero()
        c = [z] * group.order()
        c[group.index(s)] = field.one()
        return cls(group, field, c)

    @classmethod
    def from_rationals(cls, group, field, coeffs):
        return cls(group, field, [field.from_fraction(Fraction(c)) for c in coeffs])

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c}){s}" for c, s in zip(self.coeffs, self.group) if not c.is_zero()]
        return "GroupRingElem[" + " + ".join(terms) + "]"

    def __add__(self, other):
        return GroupRingElem(self.group, self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return GroupRingElem(self.group, self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, x):
        return GroupRingElem(self.group, self.field, [c * x for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, GroupRingElem):
            return self.scale(other)
        T = self.group.add_table
        out = [self.field.zero()] * self.group.order()
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            row = T[i]
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[row[j]] = out[row[j]] + a * b
        return GroupRingElem(self.group, self.field, out)

    def shift(self, s):
        """self * s for a group element s."""
        T = self.group.add_table
        k = self.group.index(s)
        out = [None] * self.group.order()
        for i, c in enumerate(self.coeffs):
            out[T[i][k]] = c
        return GroupRingElem(self.group, self.field, out)

    def galois(self, u):
        return GroupRingElem(self.group, self.field, [c.galois(u) for c in self.coeffs])

    def semilinear(self, u, perm):
        """Apply zeta -> zeta^u to coefficients and t -> perm[t] to group elements."""
        out = [None] * self.group.order()
        for i, c in enumerate(self.coeffs):
            out[perm[i]] = c.galois(u)
        return GroupRingElem(self.group, self.field, out)

    def fourier(self):
        """(chi(self))_chi in the order of G.dual()."""
        table = chi_table(self.group, self.field)
        out = []
        for row in table:
            acc = self.field.zero()
            for c, k in zip(self.coeffs, row):
                if not c.is_zero():
                    acc = acc + c.mul_root(k)
            out.append(acc)
        return out

    @classmethod
    def from_fourier(cls, group, field, values):
        table = chi_table(group, field)
        n = field.root_order
        inv_order = Fraction(1, group.order())
        coeffs = []
        for t in range(group.order()):
            acc = field.zero()
            for j, v in enumerate(values):
                if not v.is_zero():
                    acc = acc + v.mul_root((-table[j][t]) % n)
            coeffs.append(acc * inv_order)
        return cls(group, field, coeffs)

    def is_unit(self):
        return all(not v.is_zero() for v in self.fourier())

    def inverse(self):
        vals = self.fourier()
        if any(v.is_zero() for v in vals):
            raise ResolvendError("not a unit of the group algebra")
        return GroupRingElem.from_fourier(self.group, self.field, [v.inverse() for v in vals])

    def is_integral(self):
        return all(c.den == 1 for c in self.coeffs)

    def as_group_element(self):
        """s if self == s, else None."""
        hit = None
        for s, c in zip(self.group, self.coeffs):
            if c.is_zero():
                continue
            if hit is not None or not c.is_one():
                return None
            hit = s
        return hit

    def sort_key(self):
        return tuple(c.coeffs for c in self.coeffs)

    def is_fixed_by(self, units):
        return all(self.galois(u) == self for u in units)


class MapGE:
    """A map a: G -> E, values indexed like G.elements()."""

    def __init__(self, model: GaloisModel, group: FinAbGroup, values):
        self.model = model
        self.group = group
        self.values = tuple(values)
        if len(self.values) != group.order():
            raise ResolvendError("map must be total on G")

    def __call__(self, s):
        return self.values[self.group.index(s)]

    def __eq__(self, other):
        return isinstance(other, MapGE) and self.values == other.values

    def __repr__(self):
        return "MapGE{" + ", ".join(f"{s}: {v}" for s, v in zip(self.group, self.values)) + "}"

    def act(self, beta: GroupRingElem):
        """(beta . a)(t) = sum_s b_s a(t + s)."""
        T = self.group.add_table
        out = [self.model.field.zero()] * self.group.order()
        for si, b in enumerate(beta.coeffs):
            if b.is_zero():
                continue
            for ti in range(self.group.order()):
                out[ti] = out[ti] + b * self.values[T[ti][si]]
        return MapGE(self.model, self.group, out)

    def shift(self, s):
        T = self.group.add_table
        k = self.group.index(s)
        return MapGE(self.model, self.group, [self.values[T[t][k]] for t in range(self.group.order())])

    @classmethod
    def indicator(cls, model, group, s=None):
        s = group.zero() if s is None else s
        z = model.field.zero()
        vals = [z] * group.order()
        vals[group.index(s)] = model.field.one()
        return cls(model, group, vals)


def resolvend(a: MapGE) -> GroupRingElem:
    """r(a) = sum_s a(s) s^-1."""
    G = a.group
    neg = G.neg_table
    coeffs = [None] * G.order()
    for i, v in enumerate(a.values):
        coeffs[neg[i]] = v
    return GroupRingElem(G, a.model.field, coeffs)


def map_of_resolvend(r: GroupRingElem, model: GaloisModel) -> MapGE:
    neg = r.group.neg_table
    return MapGE(model, r.group, [r.coeffs[neg[i]] for i in range(r.group.order())])


def map_of_fourier(values, group, model):
    """a(s) = |G|^-1 sum_chi phi(chi) chi(s)."""
    return map_of_resolvend(GroupRingElem.from_fourier(group, model.field, values), model)


def fourier_values(a: MapGE):
    """phi(chi) = sum_s a(s) chi(s)^-1, i.e. chi(r(a))."""
    return resolvend(a).fourier()


def membership_Fh(a: MapGE, h: GroupHom) -> bool:
    model = a.model
    T = a.group.add_table
    for w in range(model.gamma.n):
        hw = a.group.index(h.values[w])
        u = model.units[w]
        for si in range(a.group.order()):
            if a.values[T[hw][si]] != a.values[si].galois(u):
                return False
    return True


def resol1_check(a: MapGE, h: GroupHom) -> bool:
    """w . r(a) == r(a) h(w) for every w in Gamma."""
    r = resolvend(a)
    model = a.model
    return all(r.galois(model.units[w]) == r.shift(h.values[w]) for w in range(model.gamma.n))


def _require_member(a, h):
    if not membership_Fh(a, h):
        raise ResolvendError("map is not in F_h for the given hom")


def is_normal_basis_gen(a: MapGE, h: GroupHom) -> bool:
    _require_member(a, h)
    return all(not v.is_zero() for v in fourier_values(a))


def span_rank_generates(a: MapGE) -> bool:
    """Independent check: the translates s.a span a space of F-dimension |G|.

    Computes the Q-rank of {b (s.a)} for b running over a Q-basis of F.
    """
    model = a.model
    basis = model.base_basis()
    rows = []
    for s in a.group:
        sa = a.shift(s)
        for b in basis:
            row = []
            for v in sa.values:
                row.extend((v * b).coeffs)
            rows.append(row)
    return intlin.rank_q(rows) == a.group.order() * len(basis)


def is_unramified_unit(a: MapGE, h: GroupHom) -> bool:
    _require_member(a, h)
    r = resolvend(a)
    if not r.is_unit():
        return False
    return r.is_integral() and r.inverse().is_integral()


class ReducedResolvend:
    """A unit of E G modulo multiplication by G, in canonical form."""

    def __init__(self, rep: GroupRingElem):
        if not rep.is_unit():
            raise ResolvendError("reduced resolvends are built from units")
        best = None
        for s in rep.group:
            cand = rep.shift(s)
            if best is None or cand.sort_key() < best.sort_key():
                best = cand
        self.rep = best

    @property
    def group(self):
        return self.rep.group

    def __eq__(self, other):
        return isinstance(other, ReducedResolvend) and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __mul__(self, other):
        return ReducedResolvend(self.rep * other.rep)

    def inverse(self):
        return ReducedResolvend(self.rep.inverse())

    def is_identity(self):
        return self.rep.as_group_element() is not None

    def __repr__(self):
        return f"ReducedResolvend({self.rep})"


def reduced_resolvend(a: MapGE) -> ReducedResolvend:
    return ReducedResolvend(resolvend(a))


def rag(beta: GroupRingElem, model: GaloisModel) -> ReducedResolvend:
    """Image of a unit of the base group algebra F G."""
    if not beta.is_fixed_by(model.units):
        raise ResolvendError("coefficients are not in the base field")
    if not beta.is_unit():
        raise ResolvendError("not a unit of the group algebra")
    return ReducedResolvend(beta)


def associated_hom(r, model: GaloisModel) -> GroupHom:
    """w -> r^-1 (w . r), certified to lie in G."""
    rep = r.rep if isinstance(r, ReducedResolvend) else r
    inv = rep.inverse()
    vals = []
    for w in range(model.gamma.n):
        q = inv * rep.galois(model.units[w])
        s = q.as_group_element()
        if s is None:
            raise ResolvendError(f"r^-1 (w . r) is not in G for w = {model.units[w]}")
        vals.append(s)
    h = GroupHom(model.gamma, rep.group, vals)
    if not h.is_hom():
        raise ResolvendError("associated map is not multiplicative")
    return h


def coset_reps(G: FinAbGroup, H):
    """First element (in G's order) of each coset of the subgroup H."""
    H = list(H)
    seen = set()
    reps = []
    for s in G:
        if s in seen:
            continue
        reps.append(s)
        for t in H:
            seen.add(s + t)
    return reps


def equivariant_map(h: GroupHom, model: GaloisModel, rep_values):
    """Extend values on coset representatives of h(Gamma) by a(h(w)+s) = w(a(s))."""
    G = h.target
    reps = coset_reps(G, h.image())
    vals = [None] * G.order()
    for s, x in zip(reps, rep_values):
        for w in range(model.gamma.n):
            i = G.index(h.values[w] + s)
            y = x.galois(model.units[w])
            if vals[i] is None:
                vals[i] = y
            elif vals[i] != y:
                raise ResolvendError("value at a coset representative is not fixed by ker h")
    return MapGE(model, G, vals)


def kernel_units(h: GroupHom, model: GaloisModel):
    return [model.units[w] for w in h.kernel()]


def _vectors_of_norm(dim, r):
    """Integer vectors with L1 norm r, in descending lexicographic order."""
    if dim == 1:
        yield (r,)
        if r:
            yield (-r,)
        return
    for k in range(r, -r - 1, -1):
        for rest in _vectors_of_norm(dim - 1, r - abs(k)):
            yield (k,) + rest


def find_normal_basis_gen(h: GroupHom, model: GaloisModel, bound: int) -> MapGE:
    """First integral normal-basis generator of F_h in a fixed search order.

    Values at coset representatives are integer combinations of the orbit sums
    of ker h, enumerated by L1 norm 1..bound and then in descending lex order.
    """
    model.check_group(h.target)
    gens = orbit_sums(model.field, kernel_units(h, model))
    reps = coset_reps(h.target, h.image())
    k = len(gens)
    dim = k * len(reps)
    for norm in range(1, bound + 1):
        for vec in _vectors_of_norm(dim, norm):
            rep_values = []
            for i in range(len(reps)):
                acc = model.field.zero()
                for c, g in zip(vec[i * k:(i + 1) * k], gens):
                    if c:
                        acc = acc + g * c
                rep_values.append(acc)
            a = equivariant_map(h, model, rep_values)
            if all(not v.is_zero() for v in fourier_values(a)):
                return a
    raise SearchExhausted(f"no normal-basis generator with search bound {bound}")


def random_member(h: GroupHom, model: GaloisModel, rng, spread=3, integral=True):
    """A random element of F_h (integral by default), built from coset reps."""
    gens = orbit_sums(model.field, kernel_units(h, model))
    reps = coset_reps(h.target, h.image())
    vals = []
    for _ in reps:
        acc = model.field.zero()
        for g in gens:
            c = rng.randint(-spread, spread)
            if not integral:
                c = Fraction(c, rng.randint(1, 3))
            if c:
                acc = acc + g * c
        vals.append(acc)
    return equivariant_map(h, model, vals)


def random_map(model, G, rng, spread=2):
    """A random (usually non-equivariant) map G -> Z[zeta_n]."""
    d = model.field.degree
    return MapGE(model, G, [model.field.from_coeffs([rng.randint(-spread, spread) for _ in range(d)])
                            for _ in range(G.order())])


def random_base_unit(G, model, rng, spread=3):
    """A random unit of Q G (rational coefficients), retried until invertible."""
    while True:
        beta = GroupRingElem.from_rationals(G, model.field,
                                            [Fraction(rng.randint(-spread, spread), rng.randint(1, 2))
                                             for _ in range(G.order())])
        if beta.is_unit():
            return beta


def homs_from_gamma(model: GaloisModel, G: FinAbGroup):
    from .abelian import all_homs
    return all_homs(model.gamma, G)
