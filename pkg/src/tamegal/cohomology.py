"""Second cohomology of finite groups, extensions and transgression.

Cocycles are normalized and written additively: a 2-cocycle c satisfies
    g.c(d, e) - c(gd, e) + c(g, de) - c(g, d) = 0
and c(1, .) = c(., 1) = 0.  H^2 is computed from the bar complex restricted to
normalized cochains, using integer Smith forms; an enumeration routine is kept
as an independent oracle for small cases.

A FiniteTameModel is a finite extension 1 -> Omega -> T -> Sigma -> 1 with
chosen lifts.  The transgression of a Sigma-fixed h: Omega -> G is the class of
(g, d) -> h(lift(g) lift(d) lift(gd)^-1).
"""
from dataclasses import dataclass, field
from itertools import product

from .abelian import (FinAbGroup, FiniteGroup, GroupHom, GroupError, SigmaAction,
                      all_homs, crossed_homs, fixed_homs)
from . import intlin


class CohomologyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cochains


class Cocycle2:
    """A normalized 2-cochain Sigma x Sigma -> G (values[g][d] is a GroupElem)."""

    def __init__(self, act: SigmaAction, values):
        self.act = act
        self.sigma = act.sigma
        self.module = act.module
        self.values = [list(r) for r in values]

    @classmethod
    def zero(cls, act):
        z = act.module.zero()
        n = act.sigma.n
        return cls(act, [[z] * n for _ in range(n)])

    @classmethod
    def from_function(cls, act, f):
        n = act.sigma.n
        return cls(act, [[f(g, d) for d in range(n)] for g in range(n)])

    def __call__(self, g, d):
        return self.values[g][d]

    def __add__(self, other):
        return Cocycle2.from_function(self.act, lambda g, d: self.values[g][d] + other.values[g][d])

    def __neg__(self):
        return Cocycle2.from_function(self.act, lambda g, d: -self.values[g][d])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, Cocycle2) and self.values == other.values

    def is_normalized(self):
        n = self.sigma.n
        return all(self.values[0][d].is_zero() and self.values[d][0].is_zero() for d in range(n))

    def is_zero(self):
        return all(v.is_zero() for r in self.values for v in r)

    def vector(self):
        """Coordinates on the normalized positions (g, d), g, d != 1."""
        out = []
        n = self.sigma.n
        for g in range(1, n):
            for d in range(1, n):
                out.extend(self.values[g][d].coords)
        return out

    def __repr__(self):
        return "Cocycle2(" + repr(self.values) + ")"


def coboundary(act: SigmaAction, b):
    """(g, d) -> g.b(d) - b(gd) + b(g) for b a list of GroupElems indexed by Sigma."""
    S = act.sigma
    return Cocycle2.from_function(act, lambda g, d: act.act(g, b[d]) - b[S.mul(g, d)] + b[g])


def is_cocycle(c: Cocycle2) -> bool:
    S, act = c.sigma, c.act
    n = S.n
    for g in range(n):
        for d in range(n):
            gd = S.mul(g, d)
            for e in range(n):
                v = act.act(g, c.values[d][e]) - c.values[gd][e] + c.values[g][S.mul(d, e)] - c.values[g][d]
                if not v.is_zero():
                    return False
    return True


def _action_matrix(act, g):
    """Integer matrix of the automorphism g on coordinates (columns = images of generators)."""
    G = act.module
    cols = [act.act(g, e).coords for e in G.gens()]
    k = G.rank
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _d1_matrix(act):
    """Normalized 1-cochains -> normalized 2-cochains."""
    S, G = act.sigma, act.module
    n, k = S.n, G.rank
    rows = []
    ncols = (n - 1) * k
    mats = [_action_matrix(act, g) for g in range(n)]
    for g in range(1, n):
        for d in range(1, n):
            gd = S.mul(g, d)
            for i in range(k):
                row = [0] * ncols
                # g.b(d)
                for j in range(k):
                    row[(d - 1) * k + j] += mats[g][i][j]
                if gd != 0:
                    row[(gd - 1) * k + i] -= 1
                row[(g - 1) * k + i] += 1
                rows.append(row)
    return rows


def _d2_matrix(act):
    S, G = act.sigma, act.module
    n, k = S.n, G.rank
    ncols = (n - 1) ** 2 * k
    mats = [_action_matrix(act, g) for g in range(n)]

    def pos(g, d, i):
        return ((g - 1) * (n - 1) + (d - 1)) * k + i

    rows = []
    for g in range(1, n):
        for d in range(1, n):
            gd = S.mul(g, d)
            for e in range(1, n):
                de = S.mul(d, e)
                for i in range(k):
                    row = [0] * ncols
                    for j in range(k):
                        row[pos(d, e, j)] += mats[g][i][j]
                    if gd != 0:
                        row[pos(gd, e, i)] -= 1
                    if de != 0:
                        row[pos(g, de, i)] += 1
                    row[pos(g, d, i)] -= 1
                    rows.append(row)
    return rows


def _cochain_from_vector(act, vec):
    S, G = act.sigma, act.module
    n, k = S.n, G.rank
    z = G.zero()
    vals = [[z] * n for _ in range(n)]
    pos = 0
    for g in range(1, n):
        for d in range(1, n):
            vals[g][d] = G.elem(vec[pos:pos + k])
            pos += k
    return Cocycle2(act, vals)


def is_coboundary(c: Cocycle2):
    """A normalized 1-cochain b with c = coboundary(b), or None."""
    if not is_cocycle(c):
        raise CohomologyError("input is not a cocycle")
    act = c.act
    S, G = act.sigma, act.module
    if G.rank == 0 or S.n == 1:
        return [G.zero()] * S.n
    A = _d1_matrix(act)
    moduli = list(G.factors) * ((S.n - 1) ** 2)
    x = intlin.solve_mod(A, c.vector(), moduli, ncols=(S.n - 1) * G.rank)
    if x is None:
        return None
    k = G.rank
    b = [G.zero()] + [G.elem(x[(g - 1) * k:g * k]) for g in range(1, S.n)]
    assert coboundary(act, b) == c
    return b


def cohomologous(c1: Cocycle2, c2: Cocycle2) -> bool:
    return is_coboundary(c1 - c2) is not None


@dataclass
class H2Group:
    act: SigmaAction
    group: FinAbGroup
    representatives: list
    # internal data for class coordinates
    _basis: list = field(repr=False, default=None)
    _vmat: list = field(repr=False, default=None)
    _keep: list = field(repr=False, default=None)

    def order(self):
        return self.group.order()

    def class_of(self, c: Cocycle2):
        """Coordinates of the class of c in invariant-factor form."""
        if not is_cocycle(c):
            raise CohomologyError("input is not a cocycle")
        if self.group.order() == 1:
            return self.group.zero()
        B = self._basis
        n = len(B)
        Bt = [[B[j][i] for j in range(n)] for i in range(n)]
        y = intlin.solve_q(Bt, c.vector())
        assert all(v.denominator == 1 for v in y)
        y = [int(v) for v in y]
        z = [sum(y[i] * self._vmat[i][j] for i in range(n)) for j in range(n)]
        return self.group.elem([z[j] for j in self._keep])

    def elements(self):
        """One representative cocycle per class."""
        out = []
        for g in self.group:
            acc = Cocycle2.zero(self.act)
            for coef, rep in zip(g.coords, self.representatives):
                for _ in range(coef):
                    acc = acc + rep
            out.append(acc)
        return out


def h2_group(act: SigmaAction, bound: int = 24) -> H2Group:
    """H^2(Sigma, G) as Z^2/B^2 in invariant-factor form, with representatives."""
    S, G = act.sigma, act.module
    if S.n > bound:
        raise CohomologyError(f"|Sigma| = {S.n} exceeds the bound {bound}")
    if S.n == 1 or G.rank == 0:
        return H2Group(act, FinAbGroup(()), [])
    k = G.rank
    n2 = (S.n - 1) ** 2 * k
    mod2 = list(G.factors) * ((S.n - 1) ** 2)
    mod3 = list(G.factors) * ((S.n - 1) ** 3)
    Z = intlin.kernel_mod(_d2_matrix(act), mod3, n2)
    # generators of B^2 + (moduli lattice)
    D1 = _d1_matrix(act)
    gens = [[D1[r][j] for r in range(len(D1))] for j in range(len(D1[0]))]
    for i, d in enumerate(mod2):
        v = [0] * n2
        v[i] = d
        gens.append(v)
    Zt = [[Z[j][i] for j in range(n2)] for i in range(n2)]
    Y = []
    for y in intlin.solve_q_many(Zt, gens):
        assert all(q.denominator == 1 for q in y)
        Y.append([int(q) for q in y])
    U, D, V = intlin.smith_normal_form(Y)
    diag = intlin.diagonal(D) + [0] * (n2 - min(len(Y), n2))
    if any(d == 0 for d in diag[:n2]):
        raise CohomologyError("coboundary lattice has infinite index (malformed complex)")
    keep = [i for i in range(n2) if diag[i] != 1]
    Vinv = _unimodular_inverse(V)
    reps = []
    for i in keep:
        vec = [sum(Vinv[i][j] * Z[j][t] for j in range(n2)) for t in range(n2)]
        reps.append(_cochain_from_vector(act, vec))
    H = FinAbGroup([diag[i] for i in keep])
    return H2Group(act, H, reps, _basis=Z, _vmat=V, _keep=keep)


def _unimodular_inverse(V):
    n = len(V)
    cols = intlin.solve_q_many(V, intlin.identity(n))
    return [[int(cols[j][i]) for j in range(n)] for i in range(n)]


def h2_order_by_enumeration(act: SigmaAction, limit: int = 200000):
    """|Z^2| / |B^2| by listing every normalized cochain (small cases only)."""
    S, G = act.sigma, act.module
    if S.n == 1:
        return 1
    npos = (S.n - 1) ** 2
    if G.order() ** npos > limit:
        raise CohomologyError("cochain space too large to enumerate")
    n, m = S.n, G.order()
    add, neg = G.add_table, G.neg_table
    mul = [[S.mul(g, d) for d in range(n)] for g in range(n)]
    acts = [[act.act_index(g, i) for i in range(m)] for g in range(n)]
    triples = [(g, d, e) for g in range(1, n) for d in range(1, n) for e in range(1, n)]
    z2 = 0
    c = [[0] * n for _ in range(n)]
    for vals in product(range(m), repeat=npos):
        it = iter(vals)
        for g in range(1, n):
            row = c[g]
            for d in range(1, n):
                row[d] = next(it)
        ok = True
        for g, d, e in triples:
            # g.c(d,e) + c(g,de) == c(gd,e) + c(g,d)
            lhs = add[acts[g][c[d][e]]][c[g][mul[d][e]]]
            if lhs != add[c[mul[g][d]][e]][c[g][d]]:
                ok = False
                break
        z2 += ok
    b2 = set()
    for vals in product(range(m), repeat=n - 1):
        b = (0,) + vals
        b2.add(tuple(add[add[acts[g][b[d]]][neg[b[mul[g][d]]]]][b[g]]
                     for g in range(1, n) for d in range(1, n)))
    return z2 // len(b2)


# ---------------------------------------------------------------------------
# extensions


class GroupExtension:
    """1 -> G -> total -> Sigma -> 1 with a normalized section."""

    def __init__(self, total: FiniteGroup, act: SigmaAction, inject, project, section):
        self.total = total
        self.act = act
        self.sigma = act.sigma
        self.module = act.module
        self.inject = list(inject)
        self.project = list(project)
        self.section = list(section)
        self._validate()
        self._inj_inv = {t: i for i, t in enumerate(self.inject)}

    def _validate(self):
        T, S, G = self.total, self.sigma, self.module
        els = G.elements()
        if self.section[0] != 0:
            raise CohomologyError("section must send 1 to 1")
        if len(set(self.inject)) != G.order():
            raise CohomologyError("injection is not injective")
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                if self.inject[G.index(a + b)] != T.mul(self.inject[i], self.inject[j]):
                    raise CohomologyError("injection is not a homomorphism")
        for a in range(T.n):
            for b in range(T.n):
                if self.project[T.mul(a, b)] != S.mul(self.project[a], self.project[b]):
                    raise CohomologyError("projection is not a homomorphism")
        kernel = sorted(t for t in range(T.n) if self.project[t] == 0)
        if kernel != sorted(self.inject):
            raise CohomologyError("image of the injection is not the kernel of the projection")
        if any(self.project[self.section[g]] != g for g in range(S.n)):
            raise CohomologyError("section is not a section of the projection")
        inv = {t: i for i, t in enumerate(self.inject)}
        for g in range(S.n):
            for i, s in enumerate(els):
                c = T.conj(self.section[g], self.inject[i])
                if els[inv[c]] != self.act.act(g, s):
                    raise CohomologyError("conjugation action differs from the declared action")

    def decompose(self, t):
        """(s, g) with t = inject(s) section(g)."""
        T = self.total
        g = self.project[t]
        i = self._inj_inv[T.mul(t, T.inv(self.section[g]))]
        return self.module.elements()[i], g

    def with_section(self, section):
        return GroupExtension(self.total, self.act, self.inject, self.project, section)


def cocycle_of_extension(E: GroupExtension) -> Cocycle2:
    T, S = E.total, E.sigma
    els = E.module.elements()

    def c(g, d):
        x = T.prod(E.section[g], E.section[d], T.inv(E.section[S.mul(g, d)]))
        if x not in E._inj_inv:
            raise CohomologyError("section product lies outside the image of G")
        return els[E._inj_inv[x]]

    return Cocycle2.from_function(E.act, c)


def extension_of_cocycle(c: Cocycle2) -> GroupExtension:
    """Crossed product: (s, g)(t, d) = (s + g.t + c(g, d), gd) on G x Sigma."""
    if not is_cocycle(c) or not c.is_normalized():
        raise CohomologyError("need a normalized cocycle")
    act, S, G = c.act, c.sigma, c.module
    els = G.elements()
    m = G.order()

    def idx(si, g):
        return g * m + si

    table = [[0] * (S.n * m) for _ in range(S.n * m)]
    for g in range(S.n):
        for si, s in enumerate(els):
            for d in range(S.n):
                for ti, t in enumerate(els):
                    v = s + act.act(g, t) + c.values[g][d]
                    table[idx(si, g)][idx(ti, d)] = idx(G.index(v), S.mul(g, d))
    labels = [(els[i % m].coords, i // m) for i in range(S.n * m)]
    total = FiniteGroup(table, labels=labels, name="crossed product", check=S.n * m <= 32)
    inject = [idx(i, 0) for i in range(m)]
    project = [i // m for i in range(S.n * m)]
    section = [idx(0, g) for g in range(S.n)]
    return GroupExtension(total, act, inject, project, section)


def extensions_equivalent(E1: GroupExtension, E2: GroupExtension):
    """An isomorphism commuting with inject and project, or None."""
    S, G = E1.sigma, E1.module
    T1, T2 = E1.total, E2.total
    if T1.n != T2.n:
        return None
    els = G.elements()
    for vals in product(els, repeat=S.n - 1):
        b = [G.zero()] + list(vals)
        phi = [None] * T1.n
        for t in range(T1.n):
            s, g = E1.decompose(t)
            phi[t] = T2.mul(E2.inject[G.index(s + b[g])], E2.section[g])
        if all(phi[T1.mul(x, y)] == T2.mul(phi[x], phi[y]) for x in range(T1.n) for y in range(T1.n)):
            return phi
    return None


# ---------------------------------------------------------------------------
# tame models and transgression


class FiniteTameModel:
    """1 -> Omega -> total -> Sigma -> 1 with lifts lift(g), lift(1) = 1."""

    def __init__(self, total: FiniteGroup, omega, lifts=None, name=None):
        omega = sorted(omega)
        if not total.is_normal(omega):
            raise CohomologyError("Omega must be a normal subgroup")
        self.total = total
        self.name = name
        self.sigma, self.proj, reps = total.quotient(omega)
        self.omega_group, self.omega = total.subgroup(omega)
        self._omega_pos = {w: i for i, w in enumerate(self.omega)}
        self.lifts = list(reps) if lifts is None else list(lifts)
        if self.lifts[0] != 0:
            raise CohomologyError("the lift of 1 must be 1")
        if any(self.proj[l] != g for g, l in enumerate(self.lifts)):
            raise CohomologyError("lifts do not project correctly")

    def __repr__(self):
        return f"FiniteTameModel({self.name or self.total.name}, |Omega|={len(self.omega)}, |Sigma|={self.sigma.n})"

    def lift(self, g):
        return self.lifts[g]

    def omega_index(self, t):
        return self._omega_pos[t]

    def with_lifts(self, lifts):
        return FiniteTameModel(self.total, self.omega, lifts, self.name)

    def lift_choices(self):
        cosets = [[t for t in range(self.total.n) if self.proj[t] == g] for g in range(self.sigma.n)]
        cosets[0] = [0]
        for choice in product(*cosets):
            yield list(choice)

    def total_action(self, act: SigmaAction):
        """act(t, s) for t in the total group, through the projection."""
        return lambda t, s: act.act(self.proj[t], s)

    def omega_homs(self, G):
        return all_homs(self.omega_group, G)

    def fixed_homs(self, G, act):
        return fixed_homs(self.omega_homs(G), act, self)

    @classmethod
    def named(cls, total_name, omega_gens, name=None):
        T = FiniteGroup.named(total_name)
        return cls(T, T.generated(omega_gens), name=name or total_name)


def is_sigma_fixed(model: FiniteTameModel, h: GroupHom, act: SigmaAction) -> bool:
    return bool(fixed_homs([h], act, model))


def transgression(model: FiniteTameModel, h: GroupHom, act: SigmaAction) -> Cocycle2:
    if not is_sigma_fixed(model, h, act):
        raise CohomologyError("transgression needs a Sigma-fixed hom")
    T, S = model.total, model.sigma

    def c(g, d):
        x = T.prod(model.lift(g), model.lift(d), T.inv(model.lift(S.mul(g, d))))
        return h.values[model.omega_index(x)]

    return Cocycle2.from_function(act, c)


@dataclass
class ExactnessReport:
    image: list
    kernel: list
    fixed: list
    holds: bool


def restriction_exactness(model: FiniteTameModel, G: FinAbGroup, act: SigmaAction) -> ExactnessReport:
    """image(res) == ker(tr) inside Hom(Omega, G)^Sigma, by enumeration."""
    ext = crossed_homs(model.total, G, model.total_action(act))
    image = sorted({tuple(f.values[w] for w in model.omega) for f in ext})
    fixed = model.fixed_homs(G, act)
    fixed_keys = sorted(tuple(h.values) for h in fixed)
    kernel = sorted(tuple(h.values) for h in fixed
                    if is_coboundary(transgression(model, h, act)) is not None)
    holds = image == kernel and set(image) <= set(fixed_keys)
    return ExactnessReport(image, kernel, fixed_keys, holds)


def embedding_solution_check(model: FiniteTameModel, h: GroupHom, act: SigmaAction):
    """(E_h, c_{E_h}, class(c_{E_h}) == class(tr h)) for surjective fixed h."""
    if not h.is_surjective():
        raise CohomologyError("embedding problem needs a surjective hom")
    if not is_sigma_fixed(model, h, act):
        raise CohomologyError("hom is not Sigma-fixed")
    T, S, G = model.total, model.sigma, h.target
    ker = [model.omega[i] for i in h.kernel()]
    if not T.is_normal(ker):
        raise CohomologyError("ker(h) is not normal in the total group")
    Q, qproj, qreps = T.quotient(ker)
    inject = [None] * G.order()
    for i, w in enumerate(model.omega):
        inject[G.index(h.values[i])] = qproj[w]
    project = [model.proj[r] for r in qreps]
    section = [qproj[model.lift(g)] for g in range(S.n)]
    E = GroupExtension(Q, act, inject, project, section)
    # commutative diagram: T -> Q -> Sigma is the projection, Omega -> Q is inject o h
    for t in range(T.n):
        if project[qproj[t]] != model.proj[t]:
            raise CohomologyError("diagram does not commute over Sigma")
    for i, w in enumerate(model.omega):
        if qproj[w] != inject[G.index(h.values[i])]:
            raise CohomologyError("diagram does not commute over G")
    cE = cocycle_of_extension(E)
    tr = transgression(model, h, act)
    return E, cE, cohomologous(cE, tr)


# ---------------------------------------------------------------------------
# semilinear families and the basic diagram


class SemilinearFamily:
    """phi_g for g in Sigma acting on a module of group-ring elements.

    phis[g] and phi_invs[g] are callables; generators span the module;
    base_gens are elements of the base group ring used to test gradings,
    and base_act(g, beta) is the Sigma-action on the base ring.
    """

    def __init__(self, sigma, phis, phi_invs, generators, base_gens=(), base_act=None):
        self.sigma = sigma
        self.phis = list(phis)
        self.phi_invs = list(phi_invs)
        self.generators = list(generators)
        self.base_gens = list(base_gens)
        self.base_act = base_act

    def grading_holds(self, phi, g):
        """phi(beta x) == (g.beta) phi(x) on all generator pairs."""
        for beta in self.base_gens:
            gb = self.base_act(g, beta)
            for x in self.generators:
                if phi(beta * x) != gb * phi(x):
                    return False
        return True

    def gradings(self, phi):
        return [g for g in range(self.sigma.n) if self.grading_holds(phi, g)]

    def twisted(self, units):
        """phi'_g = units[g] * phi_g."""
        phis = [(lambda f, u: (lambda x: u * f(x)))(f, u) for f, u in zip(self.phis, units)]
        invs = [(lambda f, u: (lambda x: f(u.inverse() * x)))(f, u) for f, u in zip(self.phi_invs, units)]
        return SemilinearFamily(self.sigma, phis, invs, self.generators, self.base_gens, self.base_act)


def grading_cocycle(fam: SemilinearFamily):
    """d(g, d) with phi_g phi_d phi_gd^-1 = multiplication by d(g, d)."""
    S = fam.sigma
    x0 = fam.generators[0]
    x0inv = x0.inverse()
    table = []
    for g in range(S.n):
        row = []
        for d in range(S.n):
            gd = S.mul(g, d)

            def comp(x, g=g, d=d, gd=gd):
                return fam.phis[g](fam.phis[d](fam.phi_invs[gd](x)))

            unit = comp(x0) * x0inv
            for x in fam.generators:
                if comp(x) != unit * x:
                    raise CohomologyError(f"composite at ({g}, {d}) is not a scalar multiplication")
            row.append(unit)
        table.append(row)
    return table


def unit_cocycle_in_group(table):
    """Convert a table of group-ring units to group elements, or None if some value is not in G."""
    out = []
    for row in table:
        r = []
        for u in row:
            s = u.as_group_element()
            if s is None:
                return None
            r.append(s)
        out.append(r)
    return out


class RealizedTameModel:
    """A FiniteTameModel realized inside Q(zeta_N): total <= (Z/N)^x, Omega a subgroup."""

    def __init__(self, N, total_units, omega_units, lifts=None, name=None):
        from .resolvend import GaloisModel
        self.N = N
        T = FiniteGroup.units(N, total_units)
        omega = [T.index_of(u % N) for u in omega_units]
        if sorted(T.generated(omega)) != sorted(omega):
            raise CohomologyError("Omega units do not form a subgroup")
        self.model = FiniteTameModel(T, omega, lifts, name=name or f"U({N}) model")
        self.galois_model = GaloisModel(N, [T.labels[w] for w in self.model.omega])
        self.name = name

    def unit_of(self, t):
        return self.model.total.labels[t]

    def __repr__(self):
        return f"RealizedTameModel(N={self.N}, total={self.model.total.labels}, omega={self.galois_model.units})"


@dataclass
class BasicDiagramReport:
    holds: bool
    transgression_values: list
    grading_values: list
    preserves_module: bool
    generator: object = None


def _perm_of(act, g):
    G = act.module
    return [act.act_index(g, i) for i in range(G.order())]


def resolvend_family(rm: RealizedTameModel, h: GroupHom, act: SigmaAction, generators):
    """phi_g(r) = lift(g) . r, acting on coefficients by Galois and on G by act."""
    from .resolvend import GroupRingElem
    model = rm.model
    T, S = model.total, model.sigma
    N = rm.N
    phis, invs = [], []
    for g in range(S.n):
        t = model.lift(g)
        u = rm.unit_of(t)
        uinv = rm.unit_of(T.inv(t))
        perm = _perm_of(act, g)
        perm_inv = _perm_of(act, S.inv(g))
        phis.append((lambda u, p: (lambda x: x.semilinear(u, p)))(u, perm))
        invs.append((lambda u, p: (lambda x: x.semilinear(u, p)))(uinv, perm_inv))
    # base ring K G with K = E^Omega, tested on a Q-basis of K times group elements
    G = h.target
    field_ = rm.galois_model.field
    base = []
    for b in rm.galois_model.base_basis():
        for s in G:
            base.append(GroupRingElem.group_element(G, field_, s).scale(b))

    def base_act(g, beta):
        return beta.semilinear(rm.unit_of(model.lift(g)), _perm_of(act, g))

    return SemilinearFamily(S, phis, invs, generators, base, base_act)


def module_generators(h: GroupHom, gm):
    """Resolvends of integral equivariant maps spanning (up to finite index) r(O_h)."""
    from .resolvend import equivariant_map, resolvend, coset_reps, kernel_units
    from .cyclo import orbit_sums
    gens = orbit_sums(gm.field, kernel_units(h, gm))
    reps = coset_reps(h.target, h.image())
    out = []
    z = gm.field.zero()
    for i in range(len(reps)):
        for g in gens:
            vals = [z] * len(reps)
            vals[i] = g
            out.append(resolvend(equivariant_map(h, gm, vals)))
    return out


def basic_diagram_check(rm: RealizedTameModel, h: GroupHom, act: SigmaAction, bound: int = 6):
    """Compare tr(h) (embedded in the group ring) with the grading cocycle of phi_g: r -> lift(g).r."""
    from .resolvend import (GroupRingElem, find_normal_basis_gen, resolvend, map_of_resolvend,
                            membership_Fh)
    model = rm.model
    G = h.target
    gm = rm.galois_model
    hg = GroupHom(gm.gamma, G, h.values)
    tr = transgression(model, h, act)
    a = find_normal_basis_gen(hg, gm, bound)
    x = resolvend(a)
    gens = [x] + module_generators(hg, gm)
    fam = resolvend_family(rm, h, act, gens)
    # the family preserves the integral resolvend module
    preserves = True
    for phi in fam.phis:
        for y in gens:
            img = phi(y)
            if not (img.is_integral() and membership_Fh(map_of_resolvend(img, gm), hg)):
                preserves = False
    dX = grading_cocycle(fam)
    d_tr = [[GroupRingElem.group_element(G, gm.field, tr.values[g][d]) for d in range(model.sigma.n)]
            for g in range(model.sigma.n)]
    holds = all(dX[g][d] == d_tr[g][d] for g in range(model.sigma.n) for d in range(model.sigma.n))
    return BasicDiagramReport(holds and preserves, tr.values, unit_cocycle_in_group(dX), preserves, a)
