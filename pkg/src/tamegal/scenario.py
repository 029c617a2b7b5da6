"""Scenario files: YAML fixtures describing one verification setup.

A scenario names the coefficient group G, a cyclotomic conductor, an optional
Galois model and tame model (with a Sigma-action on G), an optional place
system and Kummer witness data, and the suites to run.  Parsing problems
raise ScenarioParseError; mathematically inconsistent data raises
ScenarioInvariantError.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import yaml

from .abelian import FinAbGroup, FiniteGroup, SigmaAction, GroupError, all_actions
from .cyclo import CycloField

SUITES = ("stickelberger", "cohomology", "resolvend", "local", "ideles", "basic-diagram")
FORMAT_VERSION = 1


class ScenarioParseError(ValueError):
    pass


class ScenarioInvariantError(ValueError):
    pass


@dataclass
class TameSpec:
    kind: str                 # "realized" or "abstract"
    N: int = None
    total: list = None        # residues (realized) or a group name (abstract)
    omega: list = None        # residues (realized) or element indices (abstract)

    def build(self):
        from .cohomology import RealizedTameModel, FiniteTameModel
        if self.kind == "realized":
            return RealizedTameModel(self.N, self.total, self.omega)
        return FiniteTameModel.named(self.total, self.omega)


@dataclass
class PlaceSpec:
    name: str
    q: int
    decomposition: list = field(default_factory=lambda: [0])
    ramified: bool = False
    e: int = 1
    frobenius: int = None     # residue (realized) or total index
    inertia: int = None


@dataclass
class KummerSpec:
    """Radicals rho_v = zeta_M^k pi^r per place and character constants beta_e."""
    radicals: list            # list of (k, r) pairs
    betas: list               # list of coefficient lists in Q(zeta_M)
    perturb: int = None
    partners: list = field(default_factory=list)  # radical lists paired with the main witness


@dataclass
class Scenario:
    name: str
    group: list
    conductor: int
    description: str = ""
    gamma: list = None
    tame: TameSpec = None
    action: object = "trivial"
    places: list = field(default_factory=list)
    kummer: KummerSpec = None
    local_q: list = field(default_factory=list)
    suites: list = field(default_factory=lambda: list(SUITES))
    samples: int = 20
    search_bound: int = 6
    roots_in_base: bool = None
    trivial_action: bool = None
    path: str = None

    def G(self):
        return FinAbGroup(tuple(self.group))

    def field(self):
        return CycloField(self.conductor)


def _req(d, key, where):
    if key not in d:
        raise ScenarioParseError(f"{where}: missing key {key!r}")
    return d[key]


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ScenarioParseError(f"{where}: expected an integer, got {x!r}")
    return x


def _int_list(x, where):
    if not isinstance(x, list):
        raise ScenarioParseError(f"{where}: expected a list of integers")
    return [_int(v, where) for v in x]


def _frac(x, where):
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError):
        raise ScenarioParseError(f"{where}: expected a rational 'p/q', got {x!r}")


def parse_scenario(data, path=None) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioParseError("scenario must be a mapping")
    version = data.get("version")
    if version != FORMAT_VERSION:
        raise ScenarioParseError(f"unsupported scenario version {version!r}")
    name = _req(data, "name", "scenario")
    sc = Scenario(name=str(name),
                  group=_int_list(_req(data, "group", name), "group"),
                  conductor=_int(_req(data, "conductor", name), "conductor"),
                  description=str(data.get("description", "")),
                  path=str(path) if path else None)
    if "gamma" in data:
        sc.gamma = _int_list(data["gamma"], "gamma")
    if "tame_model" in data:
        t = data["tame_model"]
        if not isinstance(t, dict) or len(t) != 1 or next(iter(t)) not in ("realized", "abstract"):
            raise ScenarioParseError("tame_model needs exactly one of 'realized' or 'abstract'")
        kind, body = next(iter(t.items()))
        if kind == "realized":
            sc.tame = TameSpec("realized", _int(_req(body, "N", "tame_model"), "N"),
                               _int_list(_req(body, "total", "tame_model"), "total"),
                               _int_list(_req(body, "omega", "tame_model"), "omega"))
        else:
            sc.tame = TameSpec("abstract", None, str(_req(body, "total", "tame_model")),
                               _int_list(_req(body, "omega_gens", "tame_model"), "omega_gens"))
    act = data.get("action", "trivial")
    if act in ("trivial", "all"):
        sc.action = act
    elif isinstance(act, dict) and set(act) == {"sign"}:
        sc.action = {"sign": _int_list(act["sign"], "action.sign")}
    else:
        raise ScenarioParseError(f"action must be 'trivial', 'all' or {{sign: [...]}}, got {act!r}")
    for i, p in enumerate(data.get("places", []) or []):
        where = f"places[{i}]"
        if not isinstance(p, dict):
            raise ScenarioParseError(f"{where}: expected a mapping")
        sc.places.append(PlaceSpec(str(_req(p, "name", where)), _int(_req(p, "q", where), where),
                                   _int_list(p.get("decomposition", [0]), where),
                                   bool(p.get("ramified", False)), _int(p.get("e", 1), where),
                                   p.get("frobenius"), p.get("inertia")))
    if "kummer" in data:
        k = data["kummer"]
        rads = [(_int(_req(r, "zeta", "kummer"), "zeta"), _frac(r.get("pi", 0), "pi"))
                for r in _req(k, "radicals", "kummer")]
        betas = [[_frac(c, "betas") for c in b] for b in _req(k, "betas", "kummer")]
        partners = []
        for j, rl in enumerate(k.get("partners", []) or []):
            partners.append([(_int(_req(r, "zeta", f"kummer.partners[{j}]"), "zeta"), _frac(r.get("pi", 0), "pi"))
                             for r in rl])
        sc.kummer = KummerSpec(rads, betas, k.get("perturb"), partners)
    sc.local_q = _int_list(data.get("local_q", []), "local_q")
    suites = data.get("suites", list(SUITES))
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise ScenarioParseError(f"unknown suites {bad}")
    sc.suites = [s for s in SUITES if s in suites]
    b = data.get("bounds", {}) or {}
    sc.samples = _int(b.get("samples", 20), "bounds.samples")
    sc.search_bound = _int(b.get("search", 6), "bounds.search")
    flags = data.get("flags", {}) or {}
    sc.roots_in_base = flags.get("roots_in_base")
    sc.trivial_action = flags.get("trivial_action")
    return sc


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ScenarioParseError(f"cannot read {path}: {e}")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ScenarioParseError(f"{path}: {e}")
    return parse_scenario(data, path)


def check_invariants(sc: Scenario):
    """Cross-reference checks; raises ScenarioInvariantError."""
    try:
        G = sc.G()
    except Exception as e:
        raise ScenarioInvariantError(f"bad group {sc.group}: {e}")
    m = G.exponent()
    if sc.conductor < 1 or (m > 1 and sc.conductor % m):
        raise ScenarioInvariantError(f"exp(G) = {m} does not divide the conductor {sc.conductor}")
    if sc.tame is not None and sc.tame.kind == "realized":
        if sc.tame.N % max(m, 1) or sc.tame.N != sc.conductor:
            raise ScenarioInvariantError("realized tame model must use the scenario conductor")
    for p in sc.places:
        from .ideles import _prime_power_base
        base = _prime_power_base(p.q)
        if base is None:
            raise ScenarioInvariantError(f"q = {p.q} at {p.name} is not a prime power")
        if sc.conductor % base == 0:
            raise ScenarioInvariantError(f"residue characteristic {base} divides the conductor")
    if sc.kummer is not None:
        if G.rank != 1:
            raise ScenarioInvariantError("Kummer data needs cyclic G")
        if len(sc.kummer.radicals) != len(sc.places):
            raise ScenarioInvariantError("one Kummer radical per place")
        for p in sc.places:
            if (p.q - 1) % m:
                raise ScenarioInvariantError(f"q = {p.q} at {p.name} is not 1 mod {m}")
        if len(sc.kummer.betas) != m:
            raise ScenarioInvariantError("one beta per character")
        for rl in sc.kummer.partners:
            if len(rl) != len(sc.places):
                raise ScenarioInvariantError("one partner radical per place")
    if isinstance(sc.action, dict):
        if sc.tame is None:
            raise ScenarioInvariantError("a sign action needs a tame model")
    return True


def build_action(sc: Scenario, sigma: FiniteGroup, G: FinAbGroup):
    """The list of actions selected by the scenario."""
    if sc.action == "trivial":
        return [SigmaAction.trivial(sigma, G)]
    if sc.action == "all":
        return all_actions(sigma, G)
    sign = sc.action["sign"]
    if len(sign) != sigma.n or any(s not in (1, -1) for s in sign):
        raise ScenarioInvariantError("sign action needs one +-1 per Sigma element")
    a = SigmaAction.via_sign(sigma, G, sign)
    try:
        for g in range(sigma.n):
            for d in range(sigma.n):
                for s in G:
                    if a.act(sigma.mul(g, d), s) != a.act(g, a.act(d, s)):
                        raise GroupError("not an action")
    except GroupError:
        raise ScenarioInvariantError("sign list does not define an action")
    return [a]


def corpus_dir() -> Path:
    return Path(__file__).parent / "corpus"


def list_scenarios(directory=None):
    d = Path(directory) if directory is not None else corpus_dir()
    if not d.is_dir():
        return []
    return sorted(p for p in d.glob("*.yaml"))
