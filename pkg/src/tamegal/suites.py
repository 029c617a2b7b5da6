"""Verification suites run by the command-line driver.

Each suite takes a Scenario and a seeded RNG and returns result lines.  A line
is (passed, label, detail); the label names the identity checked and the
detail echoes the exact values involved.
"""
import random
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction

from .abelian import FinAbGroup
from .cyclo import CycloField
from .scenario import SUITES, Scenario, ScenarioInvariantError, build_action
from . import stickelberger as st
from . import cohomology as co
from . import resolvend as rs
from . import ideles as il


SUITE_DOCS = {
    "stickelberger": (
        "Stickelberger integrality and equivariance.\n"
        "For random integer character combinations psi: Theta(psi) is integral\n"
        "exactly when psi lies in ker(det); the lattice ker(det) has index |G|\n"
        "(Smith normal form); Theta(psi^u) equals Theta(psi) twisted by u^-1."),
    "cohomology": (
        "Second cohomology, extensions and the five-term segment.\n"
        "H^2(Sigma, G) by Smith normal form against an enumeration count; for the\n"
        "tame model, image(restriction) = kernel(transgression) on Sigma-fixed\n"
        "homs, and the extension cut out by a surjective fixed h has cocycle\n"
        "class equal to the transgression of h."),
    "resolvend": (
        "Resolvends and normal basis generators.\n"
        "Nonvanishing Fourier values of r(a) agree with a rank computation of the\n"
        "span of the translates of a; reduced resolvends of base units have trivial\n"
        "associated hom; every hom from the Galois group is hit by a resolvend."),
    "local": (
        "Tame local model.\n"
        "Every h = (h(phi), h(sigma)) factors as unramified times totally ramified;\n"
        "prime F-elements require the order of s to divide q - 1; the transpose of\n"
        "a prime F-element has integral uniformizer exponents and sigma acts on\n"
        "its character lift by multiplication by s; the presentation relation\n"
        "phi sigma phi^-1 sigma^-1 = sigma^(q-1) holds on radicals."),
    "ideles": (
        "Idele transport identities and witnessed class equations.\n"
        "nu o lambda_k = lambda_K, Theta^t_K o nu = mu o Theta^t_k,\n"
        "rag o partial = eta o rag and mu o rag = rag o epsilon on random ideles;\n"
        "nu carries prime F-ideles of unramified fibers to prime F-ideles;\n"
        "local homs transport along gamma_v; the Kummer witness satisfies\n"
        "rag(c) = eta(r(b))^-1 u Theta^t(f) with f_v = 1 iff h_v is unramified."),
    "basic-diagram": (
        "Transgression against the grading cocycle.\n"
        "For each Sigma-fixed h of a realized tame model, the semilinear maps\n"
        "r -> lift(g).r on resolvends of F_h have grading cocycle equal, value by\n"
        "value, to the transgression tr(h) embedded in the group ring."),
}


@dataclass
class SuiteResult:
    name: str
    lines: list = field(default_factory=list)
    skipped: str = None

    def add(self, ok, label, detail=""):
        self.lines.append((bool(ok), label, detail))

    @property
    def passed(self):
        return all(ok for ok, _, _ in self.lines)


def suite_rng(seed, suite):
    return random.Random(f"{seed}:{suite}")


def gname(G: FinAbGroup):
    return "x".join(f"Z/{d}" for d in G.factors) or "1"


def _tame(sc):
    if sc.tame is None:
        return None, None
    try:
        built = sc.tame.build()
    except Exception as e:
        raise ScenarioInvariantError(f"tame model: {e}")
    if sc.tame.kind == "realized":
        return built, built.model
    return None, built


def _galois_model(sc, rm):
    if sc.gamma is not None:
        return rs.GaloisModel(sc.conductor, sc.gamma)
    if rm is not None:
        return rm.galois_model
    return None


# ---------------------------------------------------------------------------


def run_stickelberger(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("stickelberger")
    G = sc.G()
    n = G.order()
    agree, in_a = 0, 0
    for _ in range(sc.samples):
        psi = st.CharCombo(G, [rng.randint(-6, 6) for _ in range(n)])
        th, ina = st.integrality_criterion(psi)
        agree += th == ina
        in_a += ina
    out.add(agree == sc.samples, f"Theta(psi) integral <=> psi in ker(det) on G = {gname(G)}",
            f"{agree}/{sc.samples} agree, {in_a} in ker(det)")
    L = st.agh_basis(G)
    out.add(L.index() == n, "index of ker(det) equals |G|", f"index {L.index()}, |G| = {n}")
    m = G.exponent()
    units = [u for u in range(1, max(m, 2)) if m == 1 or gcd(u, m) == 1]
    ok = 0
    total = 0
    for u in units:
        for _ in range(max(1, sc.samples // 4)):
            psi = st.CharCombo(G, [rng.randint(-6, 6) for _ in range(n)])
            total += 1
            ok += st.equivariance_check(psi, u)
    out.add(ok == total, "Theta(psi^u) = u^-1 . Theta(psi)", f"units {units}, {ok}/{total}")
    return out


def run_cohomology(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("cohomology")
    rm, model = _tame(sc)
    if model is None:
        out.skipped = "no tame model"
        return out
    G = sc.G()
    for ai, act in enumerate(build_action(sc, model.sigma, G)):
        tag = f"action {ai}" if sc.action == "all" else "action"
        H = co.h2_group(act)
        try:
            enum = co.h2_order_by_enumeration(act)
            out.add(H.order() == enum, f"|H^2(Sigma, G)| by SNF equals enumeration ({tag})",
                    f"SNF {H.order()} {list(H.group.factors)}, enumeration {enum}")
        except co.CohomologyError:
            # cochain space too large to enumerate; the roundtrip below still runs
            pass
        for c in H.elements():
            E = co.extension_of_cocycle(c)
            back = co.cocycle_of_extension(E)
            if not co.cohomologous(c, back):
                out.add(False, f"extension/cocycle roundtrip ({tag})", f"class {H.class_of(c)}")
                break
        else:
            out.add(True, f"extension/cocycle roundtrip ({tag})", f"{H.order()} classes")
        rep = co.restriction_exactness(model, G, act)
        out.add(rep.holds, f"image(res) = ker(tr) on {model!r} ({tag})",
                f"fixed {len(rep.fixed)}, image {len(rep.image)}, kernel {len(rep.kernel)}")
        for h in model.fixed_homs(G, act):
            if not h.is_surjective():
                continue
            try:
                _, _, same = co.embedding_solution_check(model, h, act)
            except co.CohomologyError as e:
                out.add(False, "embedding problem class", f"h = {list(h.values)}: {e}")
                continue
            out.add(same, "class(c_E_h) = class(tr h)", f"h = {list(h.values)}")
    return out


def run_resolvend(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("resolvend")
    rm, _ = _tame(sc)
    gm = _galois_model(sc, rm)
    if gm is None:
        out.skipped = "no Galois model"
        return out
    G = sc.G()
    agree, total = 0, 0
    for _ in range(sc.samples):
        a = rs.random_map(gm, G, rng)
        h = None
        for cand in rs.homs_from_gamma(gm, G):
            if rs.membership_Fh(a, cand):
                h = cand
                break
        if h is None:
            continue
        total += 1
        agree += rs.is_normal_basis_gen(a, h) == rs.span_rank_generates(a)
    for h in rs.homs_from_gamma(gm, G):
        for _ in range(max(1, sc.samples // 4)):
            a = rs.random_member(h, gm, rng)
            total += 1
            agree += rs.is_normal_basis_gen(a, h) == rs.span_rank_generates(a)
    out.add(agree == total, "normal basis criterion agrees with the span-rank oracle",
            f"{agree}/{total} maps on Gamma = {list(gm.units)}")
    triv = True
    for _ in range(max(1, sc.samples // 4)):
        beta = rs.random_base_unit(G, gm, rng)
        h = rs.associated_hom(rs.rag(beta, gm), gm)
        triv = triv and all(v.is_zero() for v in h.values)
    out.add(triv, "associated_hom o rag is trivial")
    hit = 0
    homs = rs.homs_from_gamma(gm, G)
    for h in homs:
        a = rs.find_normal_basis_gen(h, gm, sc.search_bound)
        hh = rs.associated_hom(rs.reduced_resolvend(a), gm)
        hit += hh.values == h.values
    out.add(hit == len(homs), "every hom is the associated hom of a resolvend", f"{hit}/{len(homs)}")
    return out


def _local_qs(sc):
    qs = list(sc.local_q) + [p.q for p in sc.places]
    return sorted(set(qs))


def run_local(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("local")
    qs = _local_qs(sc)
    if not qs:
        out.skipped = "no residue sizes"
        return out
    G = sc.G()
    for q in qs:
        # constants Q(zeta_(q-1)): prime to p and holding every chi(s), s in G_(q-1)
        F = CycloField(max(q - 1, 1))
        lt = il.LocalTameGroup(q)
        hs = il.local_homs(q, G)
        ok = all(a * b == h and il.is_unramified(a) and a.y.is_zero() and b.x.is_zero()
                 for h in hs for a, b in [il.factorize(h)])
        out.add(ok, f"h = h_nr h_tot for all homs at q = {q}", f"{len(hs)} homs")
        good = set(lt.g_q1(G))
        pre = True
        integral = True
        shift = True
        for s in G:
            if s in good:
                f = il.prime_f(s, q, F)
                try:
                    il.local_transpose_resolvend(f)
                except il.IdeleError:
                    integral = False
                try:
                    shift = shift and il.sigma_shift_check(f, s, lt)
                except Exception:
                    shift = False
            else:
                try:
                    il.prime_f(s, q, F)
                    pre = False
                except il.IdeleError:
                    pass
        out.add(pre, f"prime_f rejects s outside G_(q-1) at q = {q}", f"|G_(q-1)| = {len(good)}")
        out.add(integral, f"transpose of prime F-elements integral at q = {q}")
        out.add(shift, f"sigma multiplies the character lift by s at q = {q}")
        rel = True
        for n in range(1, F.root_order + 1):
            if F.root_order % n or n % lt.p == 0:
                continue
            for a in range(n):
                x = il.LocalMultValue(F.from_int(2) + F.zeta_power(1), Fraction(a, n))
                rel = rel and lt.relation_holds(x)
        out.add(rel, f"phi sigma phi^-1 sigma^-1 = sigma^(q-1) on radicals at q = {q}")
    return out


def _place_system(sc, rm, model):
    fibers = []
    for p in sc.places:
        fr, ine = p.frobenius, p.inertia
        if rm is not None:
            T = model.total
            fr = T.index_of(fr % rm.N) if fr is not None else None
            ine = T.index_of(ine % rm.N) if ine is not None else None
        fibers.append(il.FiberSpec(p.name, p.q, p.decomposition, p.ramified, p.e, fr, ine))
    from .abelian import FiniteGroup
    try:
        if rm is not None:
            return il.PlaceSystem.from_realized(rm, fibers, name=sc.name)
        return il.PlaceSystem(FiniteGroup.trivial(), fibers, sc.field(),
                              base_units=sc.gamma, name=sc.name)
    except (il.IdeleError, ValueError) as e:
        raise ScenarioInvariantError(f"place system: {e}")


def place_system(sc: Scenario):
    """The PlaceSystem described by a scenario (tame model included when present)."""
    rm, model = _tame(sc)
    return _place_system(sc, rm, model)


def random_fg_unit(ps, G, rng):
    return _random_fg_unit(ps, G, rng)


def _random_fg_unit(ps, G, rng):
    while True:
        b = rs.GroupRingElem(G, ps.field, [il.random_base_constant(ps, rng) for _ in G])
        if b.is_unit():
            return b


def run_ideles(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("ideles")
    if not sc.places:
        out.skipped = "no place system"
        return out
    rm, model = _tame(sc)
    ps = _place_system(sc, rm, model)
    G = sc.G()
    m = G.exponent()
    roots = ps.roots_in_base(m)
    if sc.roots_in_base is not None and sc.roots_in_base != roots:
        raise ScenarioInvariantError("roots_in_base flag disagrees with the base constants")
    n = sc.samples
    ok = [0, 0, 0, 0, 0]
    for _ in range(n):
        g1 = il.random_lambda_idele(ps, "base", G, rng)
        g2 = il.random_lambda_idele(ps, "base", G, rng)
        x = il.random_global_lambda(ps, G, rng)
        b = _random_fg_unit(ps, G, rng)
        c = il.partial_diag(ps, "base", b)
        if roots:
            ok[0] += il.nu_map(g1 * g2) == il.nu_map(g1) * il.nu_map(g2)
            ok[1] += il.nu_map(il.lambda_diag(ps, "base", x)) == il.lambda_diag(ps, "ext", x)
            ok[2] += il.theta_idele(il.nu_map(g1)) == il.mu_map(il.theta_idele(g1))
        ok[3] += il.rag_idele(c) == il.eta_diag(ps, "base", st.character_hom(b.fourier(), G))
        ok[4] += il.mu_map(il.rag_idele(c)) == il.rag_idele(il.epsilon_fg(c))
    if roots:
        out.add(ok[0] == n, "nu(g1 g2) = nu(g1) nu(g2)", f"{ok[0]}/{n}")
        out.add(ok[1] == n, "nu o lambda_k = lambda_K", f"{ok[1]}/{n}")
        out.add(ok[2] == n, "Theta^t_K o nu = mu o Theta^t_k", f"{ok[2]}/{n}")
    out.add(ok[3] == n, "rag o partial = eta o rag", f"{ok[3]}/{n}")
    out.add(ok[4] == n, "mu o rag = rag o epsilon", f"{ok[4]}/{n}")
    if roots:
        good, count = True, 0
        for wi, base in enumerate(ps.base):
            if base.ramified:
                continue
            for s in il.LocalTameGroup(base.q).g_q1(G):
                sl = [G.zero()] * len(ps.base)
                sl[wi] = s
                f = il.PrimeFElement(ps, "base", G, sl)
                nf = il.nu_map(f.to_idele())
                count += 1
                good = good and all(nf.components[v] == il.prime_f(s, ps.places[v].q, ps.field)
                                    for v in ps.fiber(wi))
                good = good and il.f_descent(il.PrimeFElement.from_idele(nf)) == f
        out.add(good, "nu(f_(k_w, s)) = f_(K_v, s) on unramified fibers, descent roundtrip",
                f"{count} prime F-ideles")
    if model is not None and all(p.frobenius is not None for p in sc.places):
        try:
            il.check_decomposition_data(ps)
        except il.IdeleError as e:
            raise ScenarioInvariantError(str(e))
        for act in build_action(sc, model.sigma, G):
            for h in model.fixed_homs(G, act):
                rep = il.hv_compatibility_check(h, ps, act)
                out.add(rep.holds, "h_v transports along gamma_v", f"h = {list(h.values)}")
                fam = il.derived_local_family(h, ps)
                off = [v for v in range(len(ps.places)) if v not in set(ps.ramified_places())
                       and ps.places[v].gamma != 0]
                if off:
                    v = off[0]
                    bad = list(fam)
                    one = G.gens()[0]
                    bad[v] = il.LocalTameHom(bad[v].q, bad[v].x + one, bad[v].y)
                    rej = not il.hv_compatibility_check(h, ps, act, family=bad).holds
                    out.add(rej, "perturbed local family rejected", f"at {ps.places[v].name}")
    if sc.kummer is not None:
        _kummer(sc, ps, G, out)
    return out


def _radicals(ps, rads):
    F = ps.field
    return [il.LocalMultValue(F.zeta_power(k), r) for k, r in rads]


def _kummer(sc, ps, G, out):
    F = ps.field
    ks = sc.kummer
    betas = [F.from_coeffs(b) for b in ks.betas]
    w = il.kummer_witness(ps, "ext", G, _radicals(ps, ks.radicals), betas)
    ok, rep = il.char1_verify(w.c, w.b, w.u, w.f)
    out.add(ok, "rag(c) = eta(r(b))^-1 u Theta^t(f) at every place",
            ", ".join(f"{r.place}: h_v = ({r.local_hom.x}, {r.local_hom.y})" for r in rep))
    out.add(all(r.f_trivial_iff_unramified and r.f_matches_sigma for r in rep),
            "f_v = f_(s_v) with s_v = h_v(sigma), and f_v = 1 iff h_v unramified")
    if ks.perturb is not None:
        bad = il.perturb_unit(w, ks.perturb)
        ok2, rep2 = il.char1_verify(bad.c, bad.b, bad.u, bad.f)
        flagged = [r.place for r in rep2 if not r.ok()]
        out.add(not ok2 and flagged == [ps.places[ks.perturb].name],
                "perturbed unit fails exactly at the perturbed place", f"flagged {flagged}")
    for j, rads in enumerate(ks.partners):
        w2 = il.kummer_witness(ps, "ext", G, _radicals(ps, rads), [F.one()] * G.order())
        label = f"product witness verifies for h1 h2 (partner {j})"
        d1, d2 = sorted(il.ramified_set(w.family)), sorted(il.ramified_set(w2.family))
        try:
            il.weak_mult_witness(w, w2)
            out.add(True, label, f"d(h1) = {d1}, d(h2) = {d2}")
        except il.IdeleError as e:
            out.add(False, label, str(e))


def run_basic_diagram(sc: Scenario, rng) -> SuiteResult:
    out = SuiteResult("basic-diagram")
    rm, model = _tame(sc)
    if rm is None:
        out.skipped = "no realized tame model"
        return out
    G = sc.G()
    for act in build_action(sc, model.sigma, G):
        for h in model.fixed_homs(G, act):
            try:
                rep = co.basic_diagram_check(rm, h, act, sc.search_bound)
            except rs.SearchExhausted as e:
                out.add(False, "i* tr(h) = d_X valuewise", f"h = {list(h.values)}: {e}")
                continue
            vals = "; ".join(" ".join(str(x) for x in row) for row in rep.transgression_values)
            out.add(rep.holds, "i* tr(h) = d_X valuewise", f"h = {list(h.values)}, tr = [{vals}]")
    return out


RUNNERS = {
    "stickelberger": run_stickelberger,
    "cohomology": run_cohomology,
    "resolvend": run_resolvend,
    "local": run_local,
    "ideles": run_ideles,
    "basic-diagram": run_basic_diagram,
}


def run_scenario(sc: Scenario, seed=0, only=None):
    results = []
    for name in SUITES:
        if name not in sc.suites or (only and name not in only):
            continue
        results.append(RUNNERS[name](sc, suite_rng(seed, name)))
    return results


def render_report(sc: Scenario, results, seed) -> str:
    lines = ["tamegal report (format 1)", f"scenario: {sc.name}", f"seed: {seed}"]
    if sc.description:
        lines.append(f"description: {sc.description}")
    npass = nfail = 0
    for r in results:
        lines.append("")
        lines.append(f"[{r.name}]")
        if r.skipped:
            lines.append(f"  SKIP {r.skipped}")
            continue
        for ok, label, detail in r.lines:
            npass += ok
            nfail += not ok
            tail = f" :: {detail}" if detail else ""
            lines.append(f"  {'PASS' if ok else 'FAIL'} {label}{tail}")
        lines.append(f"  suite {'PASS' if r.passed else 'FAIL'}")
    lines.append("")
    lines.append(f"summary: {npass} PASS, {nfail} FAIL")
    return "\n".join(lines) + "\n"


def render_kv(sc: Scenario, results, seed) -> str:
    """The same report as key=value lines."""
    lines = [f"format=1", f"scenario={sc.name}", f"seed={seed}"]
    npass = nfail = 0
    for r in results:
        if r.skipped:
            lines.append(f"{r.name}.skipped={r.skipped}")
            continue
        for i, (ok, label, detail) in enumerate(r.lines):
            npass += ok
            nfail += not ok
            lines.append(f"{r.name}.{i}.status={'PASS' if ok else 'FAIL'}")
            lines.append(f"{r.name}.{i}.check={label}")
            if detail:
                lines.append(f"{r.name}.{i}.detail={detail}")
        lines.append(f"{r.name}.status={'PASS' if r.passed else 'FAIL'}")
    lines.append(f"summary.pass={npass}")
    lines.append(f"summary.fail={nfail}")
    return "\n".join(lines) + "\n"
