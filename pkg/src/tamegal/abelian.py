"""Finite groups, homomorphisms, characters and group actions.

Abelian groups are kept in invariant-factor form Z/d_1 x ... x Z/d_k with
d_1 | d_2 | ... | d_k.  Arbitrary finite groups (Galois groups of the finite
models, Sigma, the tame extension groups) are multiplication tables with the
identity at index 0.

Characters of an abelian group G are written in dual coordinates: the
character with coordinates (c_i) sends the i-th generator to zeta_{d_i}^{c_i},
where zeta_d = zeta_m^{m/d} for m = exp(G).  This compatible choice of roots
of unity is what makes every other module agree on character values.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd

from . import intlin


class GroupError(ValueError):
    pass


def _lcm(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# abelian groups


class FinAbGroup:
    """Z/d_1 x ... x Z/d_k in invariant-factor form."""

    def __init__(self, factors=()):
        factors = tuple(int(d) for d in factors)
        if any(d < 1 for d in factors):
            raise GroupError(f"invariant factors must be positive: {factors}")
        factors = tuple(d for d in factors if d != 1)
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise GroupError(f"not in invariant-factor form: {factors}")
        self.factors = factors

    @classmethod
    def from_orders(cls, orders):
        """Canonical form of Z/o_1 x ... x Z/o_k.

        Returns (G, to_canonical) where to_canonical maps a coordinate tuple
        of the product to a GroupElem of G.
        """
        k = len(orders)
        if k == 0:
            G = cls(())
            return G, (lambda coords: G.zero())
        R = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
        U, D, _ = intlin.smith_normal_form(R)
        d = intlin.diagonal(D)
        keep = [i for i in range(k) if d[i] != 1]
        G = cls([d[i] for i in keep])

        def to_canonical(coords):
            y = intlin.matvec(U, list(coords))
            return G.elem([y[i] for i in keep])

        return G, to_canonical

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(("FinAbGroup", self.factors))

    def __repr__(self):
        if not self.factors:
            return "FinAbGroup(1)"
        return "FinAbGroup(" + " x ".join(f"Z/{d}" for d in self.factors) + ")"

    @property
    def rank(self):
        return len(self.factors)

    def order(self):
        n = 1
        for d in self.factors:
            n *= d
        return n

    def exponent(self):
        return self.factors[-1] if self.factors else 1

    def elem(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise GroupError(f"{coords} has the wrong length for {self}")
        return GroupElem(self, tuple(c % d for c, d in zip(coords, self.factors)))

    def zero(self):
        return GroupElem(self, (0,) * len(self.factors))

    def gens(self):
        k = len(self.factors)
        return [self.elem([1 if i == j else 0 for j in range(k)]) for i in range(k)]

    @cached_property
    def _elements(self):
        return [GroupElem(self, c) for c in product(*[range(d) for d in self.factors])]

    def elements(self):
        return list(self._elements)

    def index(self, g):
        i = 0
        for c, d in zip(g.coords, self.factors):
            i = i * d + c
        return i

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return self.order()

    @cached_property
    def add_table(self):
        els = self._elements
        return [[self.index(a + b) for b in els] for a in els]

    @cached_property
    def neg_table(self):
        return [self.index(-a) for a in self._elements]

    def subgroup_killed_by(self, n):
        """The n-torsion G_n = {s : n s = 0}."""
        return [g for g in self._elements if (n * g).is_zero()]

    @cached_property
    def as_finite_group(self):
        els = self._elements
        return FiniteGroup(self.add_table, labels=[e.coords for e in els], name=repr(self))

    def dual(self):
        return [Character(self, c) for c in product(*[range(d) for d in self.factors])]


@dataclass(frozen=True)
class GroupElem:
    group: FinAbGroup
    coords: tuple

    def __add__(self, other):
        if other.group != self.group:
            raise GroupError("adding elements of different groups")
        return GroupElem(self.group, tuple((a + b) % d for a, b, d in
                                           zip(self.coords, other.coords, self.group.factors)))

    def __neg__(self):
        return GroupElem(self.group, tuple((-a) % d for a, d in zip(self.coords, self.group.factors)))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return GroupElem(self.group, tuple((n * a) % d for a, d in zip(self.coords, self.group.factors)))

    def is_zero(self):
        return not any(self.coords)

    def __repr__(self):
        return f"<{','.join(map(str, self.coords))}>"

    def __lt__(self, other):
        return self.coords < other.coords


def elem_order(g: GroupElem) -> int:
    n = 1
    for c, d in zip(g.coords, g.group.factors):
        n = _lcm(n, d // gcd(d, c))
    return n


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    group: FinAbGroup
    coords: tuple

    def __mul__(self, other):
        return Character(self.group, tuple((a + b) % d for a, b, d in
                                           zip(self.coords, other.coords, self.group.factors)))

    def inverse(self):
        return Character(self.group, tuple((-a) % d for a, d in zip(self.coords, self.group.factors)))

    def __pow__(self, u):
        return Character(self.group, tuple((u * a) % d for a, d in zip(self.coords, self.group.factors)))

    def is_trivial(self):
        return not any(self.coords)

    def as_elem(self):
        return GroupElem(self.group, self.coords)

    def __repr__(self):
        return f"chi<{','.join(map(str, self.coords))}>"


def char_exponent(chi: Character, s: GroupElem) -> int:
    """e in Z/m with chi(s) = zeta_m^e, m = exp(G)."""
    m = chi.group.exponent()
    return sum(c * x * (m // d) for c, x, d in zip(chi.coords, s.coords, chi.group.factors)) % m


def char_eval(chi: Character, s: GroupElem):
    """(v, |s|) with chi(s) = zeta_{|s|}^v and 0 <= v < |s|."""
    m = chi.group.exponent()
    o = elem_order(s)
    e = char_exponent(chi, s)
    step = m // o
    assert e % step == 0
    return e // step, o


def dual_index(chi: Character) -> int:
    return chi.group.index(chi.as_elem())


# ---------------------------------------------------------------------------
# arbitrary finite groups


class FiniteGroup:
    """A finite group given by its multiplication table; identity is 0."""

    def __init__(self, table, labels=None, name=None, check=True):
        self.table = [list(r) for r in table]
        n = len(self.table)
        self.n = n
        self.labels = list(labels) if labels is not None else list(range(n))
        self.name = name
        if check:
            self._validate()
        self.inverses = [self.table[a].index(0) for a in range(n)]
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    def _validate(self):
        n = self.n
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise GroupError("index 0 must be the identity")
            if sorted(self.table[a]) != list(range(n)):
                raise GroupError("table rows must be permutations")
        if n <= 64:
            T = self.table
            for a in range(n):
                for b in range(n):
                    ab = T[a][b]
                    for c in range(n):
                        if T[ab][c] != T[a][T[b][c]]:
                            raise GroupError("multiplication table is not associative")

    def __repr__(self):
        return f"FiniteGroup({self.name or self.n})"

    def __len__(self):
        return self.n

    def order(self):
        return self.n

    def elements(self):
        return list(range(self.n))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def prod(self, *xs):
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def pow(self, a, k):
        if k < 0:
            a, k = self.inverses[a], -k
        r = 0
        for _ in range(k % self.elem_order(a)):
            r = self.table[r][a]
        return r

    def elem_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def conj(self, g, x):
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverses[g]]

    def index_of(self, label):
        return self._label_index[label]

    def label(self, a):
        return self.labels[a]

    def is_abelian(self):
        T = self.table
        return all(T[a][b] == T[b][a] for a in range(self.n) for b in range(self.n))

    def generated(self, gens):
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @cached_property
    def generators(self):
        gens = []
        span = {0}
        # prefer elements of large order so cyclic groups get one generator
        for a in sorted(range(1, self.n), key=lambda a: (-self.elem_order(a), a)):
            if a not in span:
                gens.append(a)
                span = set(self.generated(gens))
                if len(span) == self.n:
                    break
        return gens

    def is_subgroup(self, H):
        Hs = set(H)
        return 0 in Hs and all(self.table[a][self.inverses[b]] in Hs for a in Hs for b in Hs)

    def is_normal(self, H):
        Hs = set(H)
        return self.is_subgroup(H) and all(self.conj(g, h) in Hs for g in range(self.n) for h in Hs)

    def subgroups(self):
        found = {(0,)}
        frontier = [(0,)]
        while frontier:
            nxt = []
            for H in frontier:
                for a in range(self.n):
                    if a in H:
                        continue
                    K = tuple(self.generated(list(H) + [a]))
                    if K not in found:
                        found.add(K)
                        nxt.append(K)
            frontier = nxt
        return sorted(found, key=lambda H: (len(H), H))

    def subgroup(self, H):
        """(FiniteGroup on H, embedding list) with H listed in sorted order."""
        H = sorted(H)
        if H[0] != 0:
            raise GroupError("subgroup must contain the identity")
        pos = {h: i for i, h in enumerate(H)}
        table = [[pos[self.table[a][b]] for b in H] for a in H]
        return FiniteGroup(table, labels=[self.labels[h] for h in H], check=False), H

    def quotient(self, N):
        """(Q, proj, reps) for a normal subgroup N.

        Cosets are ordered by their smallest element, so the trivial coset is
        index 0 and reps[0] == 0.
        """
        if not self.is_normal(N):
            raise GroupError("quotient by a non-normal subgroup")
        Ns = sorted(N)
        coset_of = {}
        reps = []
        for a in range(self.n):
            if a in coset_of:
                continue
            idx = len(reps)
            reps.append(a)
            for x in Ns:
                coset_of[self.table[a][x]] = idx
        table = [[coset_of[self.table[reps[i]][reps[j]]] for j in range(len(reps))]
                 for i in range(len(reps))]
        proj = [coset_of[a] for a in range(self.n)]
        Q = FiniteGroup(table, labels=[self.labels[r] for r in reps], check=False)
        return Q, proj, reps

    def is_isomorphic_to(self, other):
        return find_isomorphism(self, other) is not None

    # constructors

    @classmethod
    def cyclic(cls, n):
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], name=f"C{n}")

    @classmethod
    def trivial(cls):
        return cls([[0]], name="C1")

    @classmethod
    def units(cls, N, subset=None):
        """(Z/N)^x, or the subgroup listed in `subset`, labelled by residues."""
        if subset is None:
            els = [u for u in range(1, N) if gcd(u, N) == 1] if N > 1 else [0]
        else:
            els = sorted({u % N for u in subset})
        if N > 1 and els[0] != 1:
            raise GroupError("subset must contain 1")
        pos = {u: i for i, u in enumerate(els)}
        try:
            table = [[pos[(a * b) % N] for b in els] for a in els]
        except KeyError:
            raise GroupError(f"{els} is not closed under multiplication mod {N}")
        return cls(table, labels=els, name=f"U({N})" if subset is None else f"<{els}> mod {N}")

    @classmethod
    def direct_product(cls, A, B):
        n, m = A.n, B.n
        table = [[A.table[a1][a2] * m + B.table[b1][b2]
                  for a2 in range(n) for b2 in range(m)]
                 for a1 in range(n) for b1 in range(m)]
        labels = [(A.labels[a], B.labels[b]) for a in range(n) for b in range(m)]
        return cls(table, labels=labels, name=f"{A.name}x{B.name}")

    @classmethod
    def dihedral(cls, n):
        """Symmetries of the n-gon; element r^i s^j is stored at 2*i + j."""

        # r^i s * r^k s^l = r^(i-k) s^(1+l)
        def mul2(x, y):
            i1, j1 = divmod(x, 2)
            i2, j2 = divmod(y, 2)
            if j1 == 0:
                return ((i1 + i2) % n) * 2 + j2
            return ((i1 - i2) % n) * 2 + (1 - j2)

        table = [[mul2(x, y) for y in range(2 * n)] for x in range(2 * n)]
        return cls(table, name=f"D{n}")

    @classmethod
    def quaternion(cls):
        # elements +-1, +-i, +-j, +-k as (sign, unit) with unit in 1,i,j,k
        units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
                 ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
                 ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
                 ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
        els = [(s, u) for u in "1ijk" for s in (1, -1)]
        pos = {e: i for i, e in enumerate(els)}

        def mul(a, b):
            s, u = units[(a[1], b[1])]
            return (a[0] * b[0] * s, u)

        table = [[pos[mul(a, b)] for b in els] for a in els]
        labels = [("" if s > 0 else "-") + u for s, u in els]
        return cls(table, labels=labels, name="Q8")

    @classmethod
    def symmetric3(cls):
        from itertools import permutations
        perms = sorted(permutations(range(3)))
        pos = {p: i for i, p in enumerate(perms)}
        table = [[pos[tuple(a[b[i]] for i in range(3))] for b in perms] for a in perms]
        return cls(table, labels=perms, name="S3")

    @classmethod
    def named(cls, name):
        name = name.replace(" ", "")
        if name in ("C1", "1", "trivial"):
            return cls.trivial()
        if name == "S3":
            return cls.symmetric3()
        if name == "Q8":
            return cls.quaternion()
        if name.startswith("D") and name[1:].isdigit():
            # D4 means the dihedral group of order 8
            return cls.dihedral(int(name[1:]))
        parts = name.split("x")
        if all(p.startswith("C") and p[1:].isdigit() for p in parts):
            G = cls.cyclic(int(parts[0][1:]))
            for p in parts[1:]:
                G = cls.direct_product(G, cls.cyclic(int(p[1:])))
            G.name = name
            return G
        raise GroupError(f"unknown group name {name!r}")


def find_isomorphism(A: FiniteGroup, B: FiniteGroup):
    """An isomorphism A -> B as a list, or None.  Brute force on generators."""
    if A.n != B.n:
        return None
    gens = A.generators
    orders = [A.elem_order(g) for g in gens]
    cands = [[b for b in range(B.n) if B.elem_order(b) == o] for o in orders]
    for imgs in product(*cands):
        f = _extend_on_generators(A, gens, list(imgs), lambda x, gx: B.table[x][gx], 0)
        if f is None or len(set(f)) != A.n:
            continue
        if all(f[A.table[a][b]] == B.table[f[a]][f[b]] for a in range(A.n) for b in range(A.n)):
            return f
    return None


def _extend_on_generators(A, gens, imgs, step, identity_value):
    """Extend f(x g) = step(f(x), img(g)) from the identity, or None if inconsistent."""
    f = [None] * A.n
    f[0] = identity_value
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, gi in zip(gens, imgs):
                y = A.table[x][g]
                val = step(f[x], gi) if not callable(gi) else gi(x, f[x])
                if f[y] is None:
                    f[y] = val
                    nxt.append(y)
                elif f[y] != val:
                    return None
        frontier = nxt
    return f


# ---------------------------------------------------------------------------
# homomorphisms into abelian groups


def _elements_of(source):
    if isinstance(source, FinAbGroup):
        return source.elements()
    return source.elements()


def _index_in(source, x):
    if isinstance(source, FinAbGroup):
        if isinstance(x, GroupElem):
            return source.index(x)
        return x
    return x


class GroupHom:
    """A homomorphism from a finite group (table or abelian) to an abelian group.

    Stored as its full value table, indexed like the source's elements.
    """

    def __init__(self, source, target: FinAbGroup, values):
        self.source = source
        self.target = target
        self.values = tuple(values)
        if len(self.values) != len(source):
            raise GroupError("value table has the wrong size")

    @classmethod
    def from_images(cls, source: FinAbGroup, target: FinAbGroup, images):
        """Hom out of an abelian group given by the images of its generators."""
        images = list(images)
        if len(images) != source.rank:
            raise GroupError("need one image per generator")
        for d, y in zip(source.factors, images):
            if not (d * y).is_zero():
                raise GroupError(f"image {y} does not respect the relation of order {d}")
        vals = []
        for g in source:
            v = target.zero()
            for c, y in zip(g.coords, images):
                v = v + c * y
            vals.append(v)
        return cls(source, target, vals)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [target.zero()] * len(source))

    def __call__(self, x):
        return self.values[_index_in(self.source, x)]

    def images(self):
        """Images of the standard generators (abelian source) as coordinate rows."""
        return [self(g).coords for g in self.source.gens()]

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.values == other.values and self.target == other.target

    def __hash__(self):
        return hash(self.values)

    def __add__(self, other):
        return GroupHom(self.source, self.target, [a + b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return GroupHom(self.source, self.target, [-a for a in self.values])

    def is_trivial(self):
        return all(v.is_zero() for v in self.values)

    def is_surjective(self):
        return len(set(self.values)) == self.target.order()

    def kernel(self):
        return [i for i, v in enumerate(self.values) if v.is_zero()]

    def image(self):
        return sorted(set(self.values))

    def is_hom(self):
        src = self.source
        if isinstance(src, FinAbGroup):
            T = src.add_table
        else:
            T = src.table
        n = len(src)
        return all(self.values[T[a][b]] == self.values[a] + self.values[b]
                   for a in range(n) for b in range(n))

    def __repr__(self):
        return f"GroupHom({list(self.values)})"


def _table_of(source):
    return source.as_finite_group if isinstance(source, FinAbGroup) else source


def all_homs(source, target: FinAbGroup):
    """Every homomorphism source -> target, in a deterministic order."""
    A = _table_of(source)
    gens = A.generators
    out = []
    for imgs in product(target.elements(), repeat=len(gens)):
        f = _extend_on_generators(A, gens, list(imgs), lambda x, y: x + y, target.zero())
        if f is not None:
            out.append(GroupHom(source, target, f))
    return out


def crossed_homs(source: FiniteGroup, target: FinAbGroup, act):
    """Maps f with f(xy) = f(x) + x.f(y); act(x, s) is the left action."""
    gens = source.generators
    out = []
    for imgs in product(target.elements(), repeat=len(gens)):
        steps = [(lambda gi: (lambda x, fx: fx + act(x, gi)))(gi) for gi in imgs]
        f = _extend_on_generators(source, gens, steps, None, target.zero())
        if f is not None:
            out.append(GroupHom(source, target, f))
    return out


def automorphisms(G: FinAbGroup):
    out = []
    for h in all_homs(G, G):
        if len(set(h.values)) == G.order():
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# group actions


class SigmaAction:
    """A finite group Sigma acting on an abelian group G by automorphisms."""

    def __init__(self, sigma: FiniteGroup, module: FinAbGroup, maps):
        self.sigma = sigma
        self.module = module
        self.maps = list(maps)
        if len(self.maps) != sigma.n:
            raise GroupError("need one automorphism per element of Sigma")
        if not self.maps[0].values == tuple(module.elements()):
            raise GroupError("the identity of Sigma must act trivially")
        for a in range(sigma.n):
            for b in range(sigma.n):
                ab = sigma.mul(a, b)
                for s in module:
                    if self.maps[ab](s) != self.maps[a](self.maps[b](s)):
                        raise GroupError("maps do not define an action")
        self._t = [[module.index(m(s)) for s in module] for m in self.maps]

    @classmethod
    def trivial(cls, sigma, module):
        ident = GroupHom(module, module, module.elements())
        return cls(sigma, module, [ident] * sigma.n)

    @classmethod
    def from_generator_images(cls, sigma, module, auts):
        """Extend an assignment generator -> automorphism of G to an action."""
        ident = tuple(range(module.order()))
        perms = [tuple(module.index(a(s)) for s in module) for a in auts]

        def compose(p, q):
            return tuple(p[q[i]] for i in range(len(q)))

        f = _extend_on_generators(sigma, sigma.generators, perms, compose, ident)
        if f is None:
            raise GroupError("generator images do not define an action")
        els = module.elements()
        maps = [GroupHom(module, module, [els[p[i]] for i in range(module.order())]) for p in f]
        return cls(sigma, module, maps)

    @classmethod
    def via_sign(cls, sigma, module, sign):
        """gamma acts by s -> sign(gamma) s, with sign a list of +-1."""
        els = module.elements()
        maps = [GroupHom(module, module, [e if sign[g] == 1 else -e for e in els]) for g in range(sigma.n)]
        return cls(sigma, module, maps)

    def act(self, gamma, s: GroupElem) -> GroupElem:
        return self.maps[gamma](s)

    def act_index(self, gamma, i):
        return self._t[gamma][i]

    def is_trivial(self):
        return all(m.values == self.maps[0].values for m in self.maps)

    def fixed_points(self):
        return [s for s in self.module if all(m(s) == s for m in self.maps)]

    def pullback(self, proj):
        """The action of a group mapping onto Sigma via proj (a list)."""
        return _PulledAction(self, proj)


class _PulledAction:
    def __init__(self, base, proj):
        self.base = base
        self.proj = proj
        self.module = base.module

    def act(self, g, s):
        return self.base.act(self.proj[g], s)


def all_actions(sigma: FiniteGroup, module: FinAbGroup):
    """Every action of sigma on module, as SigmaAction objects."""
    auts = automorphisms(module)
    out = []
    seen = set()
    for imgs in product(auts, repeat=len(sigma.generators)):
        try:
            a = SigmaAction.from_generator_images(sigma, module, imgs)
        except GroupError:
            continue
        key = tuple(m.values for m in a.maps)
        if key not in seen:
            seen.add(key)
            out.append(a)
    return out


class CycloTwist:
    """The Tate twist G(n): omega acts on s by s -> s^(kappa(omega)^n mod m).

    kappa maps elements of a Galois group to residues mod some N with m | N.
    """

    def __init__(self, n: int, kappa, m: int):
        self.n = n
        self.kappa = kappa
        self.m = m

    @classmethod
    def cyclotomic(cls, n, m):
        """kappa(u) = u for Galois groups labelled by residues u."""
        return cls(n, lambda u: u, m)

    def exponent_of(self, omega):
        k = self.kappa(omega) % self.m
        if gcd(k, self.m) != 1:
            raise GroupError(f"kappa({omega}) = {k} is not a unit mod {self.m}")
        return pow(k, self.n, self.m) if self.n >= 0 else pow(pow(k, -1, self.m), -self.n, self.m)


def twisted_action(tw: CycloTwist, omega, s: GroupElem) -> GroupElem:
    if s.group.exponent() > 1 and tw.m % s.group.exponent():
        raise GroupError("exp(G) must divide the twist modulus")
    return tw.exponent_of(omega) * s


def fixed_homs(homs, act, model):
    """The homs h: Omega -> G fixed by Sigma.

    Sigma acts by (h.gamma)(omega) = gamma^-1 . h(lift(gamma) omega lift(gamma)^-1).
    `model` supplies total (a FiniteGroup), omega (sorted list of total indices
    forming the normal subgroup), sigma and lift(gamma).  `act` is a SigmaAction
    of model.sigma on the target of the homs; each h has source model.omega_group.
    """
    out = []
    pos = {w: i for i, w in enumerate(model.omega)}
    T = model.total
    for h in homs:
        ok = True
        for gamma in range(model.sigma.n):
            lift = model.lift(gamma)
            ginv = model.sigma.inv(gamma)
            for i, w in enumerate(model.omega):
                conj = pos[T.conj(lift, w)]
                if act.act(ginv, h.values[conj]) != h.values[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(h)
    return out
