"""Named verification checks and the report they produce.

Each check compares a closed formula against an independent computation
and returns a :class:`CheckResult`.  Checks are pure functions of a
:class:`Config`, so they can run in any order or concurrently; the report
is always assembled in name order.
"""

from __future__ import annotations

import os
import random
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import charcls, hopf, kumod, multisym, s4calc
from .exactmath import binom, factorial, stirling1, stirling2
from .hopf import HopfElem, circ, circ_power, hurewicz, star
from .kumod import KuElem, f_mul, iota, ku_mul, phi_k

DEFAULT_MAX_WEIGHT = 10
ENV_MAX_WEIGHT = "KUCOMM_MAX_WEIGHT"


@dataclass(frozen=True)
class Config:
    max_weight: int = DEFAULT_MAX_WEIGHT
    fmt: str = "text"
    only: tuple[str, ...] = ()
    seed: int = 0
    trials: int = 50

    def __post_init__(self):
        if self.max_weight < 1:
            raise ValueError("max_weight must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.fmt not in ("text", "json"):
            raise ValueError("format must be text or json")


def default_max_weight() -> int:
    raw = os.environ.get(ENV_MAX_WEIGHT)
    if raw is None:
        return DEFAULT_MAX_WEIGHT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_WEIGHT} must be an integer, got {raw!r}") from None


@dataclass
class CheckResult:
    name: str
    status: str  # ok | fail | flagged
    inputs: dict = field(default_factory=dict)
    lhs: str = ""
    rhs: str = ""
    detail: str = ""
    seconds: float = 0.0


class Mismatch(Exception):
    def __init__(self, inputs, lhs, rhs, detail=""):
        super().__init__(detail)
        self.inputs, self.lhs, self.rhs, self.detail = inputs, lhs, rhs, detail


def expect(lhs, rhs, **inputs):
    if lhs != rhs:
        raise Mismatch(inputs, str(lhs), str(rhs))


REGISTRY: dict[str, Callable[[Config], CheckResult | None]] = {}


def check(name: str):
    def register(fn):
        REGISTRY[name] = fn
        return fn

    return register


# random element generators


def random_ku(rng: random.Random, max_weight: int, positive: bool = True) -> KuElem:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        w = rng.randint(1 if positive else 0, max_weight)
        n = rng.randint(0, w)
        terms[(w - n, n)] = rng.randint(-3, 3) or 1
    return KuElem(terms)


def random_hopf0(rng: random.Random, max_weight: int) -> HopfElem:
    """A [0]-component element whose monomials have weight <= max_weight."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        mono = []
        budget = rng.randint(1, max_weight)
        while budget > 0 and len(mono) < 3:
            w = rng.randint(1, budget)
            a = rng.randint(0, w)
            mono.append((a, w - a))
            budget -= w
            if rng.random() < 0.5:
                break
        terms[(0, tuple(mono))] = Fraction(rng.randint(-3, 3) or 1, rng.choice((1, 1, 2)))
    return HopfElem(terms)


# exactmath


@check("exactmath.binom_recurrence")
def _binom(cfg):
    for n in range(1, 65):
        for k in range(n + 1):
            expect(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), n=n, k=k)


@check("exactmath.stirling_inversion")
def _stirling(cfg):
    top = min(20, 2 * cfg.max_weight)
    for n in range(top + 1):
        for m in range(top + 1):
            total = sum(stirling1(n, k) * stirling2(k, m) for k in range(top + 1))
            expect(total, int(n == m), n=n, m=m)


@check("exactmath.stirling2_recurrence")
def _stirling2(cfg):
    top = min(20, 2 * cfg.max_weight)
    # independent count: surjections / k! via inclusion-exclusion
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            surj = sum((-1) ** j * binom(k, j) * (k - j) ** n for j in range(k + 1))
            expect(stirling2(n, k), surj // factorial(k), n=n, k=k)


# kumod


@check("kumod.product_vs_series")
def _ku_series(cfg):
    top = min(8, cfg.max_weight)
    for m in range(top + 1):
        for n in range(top + 1):
            expect(
                ku_mul(KuElem.y(m), KuElem.y(n)),
                kumod.ku_series_oracle(m, n, m + n),
                m=m,
                n=n,
            )


@check("kumod.y1_times_yn")
def _ku_y1(cfg):
    for n in range(1, min(8, cfg.max_weight) + 1):
        rhs = KuElem.y(n + 1).scale(n + 1) + KuElem.y(n, a=1).scale(n)
        expect(ku_mul(KuElem.y(1), KuElem.y(n)), rhs, n=n)


@check("kumod.divided_form")
def _divided(cfg):
    for n in range(1, min(10, cfg.max_weight) + 1):
        expect(kumod.divided_form(n), KuElem.y(n).scale(factorial(n)), n=n)


@check("kumod.ring_axioms")
def _ku_axioms(cfg):
    rng = random.Random(cfg.seed)
    w = max(1, min(cfg.max_weight, 10) // 3)
    for t in range(cfg.trials):
        p, q, r = (random_ku(rng, w, positive=False) for _ in range(3))
        expect(ku_mul(p, q), ku_mul(q, p), trial=t, p=str(p), q=str(q))
        expect(ku_mul(ku_mul(p, q), r), ku_mul(p, ku_mul(q, r)), trial=t)


@check("kumod.membership")
def _membership(cfg):
    for n in range(min(20, 2 * cfg.max_weight) + 1):
        ideal = [k for k in kumod.basis(n) if kumod.bcomu_membership(KuElem({k: 1}))[0]]
        expect(kumod.homotopy_rank(n), len(ideal), n=n)
        expect(kumod.homotopy_rank(n), n, n=n)
    for w in range(min(8, cfg.max_weight) + 1):
        for a, n in kumod.basis(w):
            expected = (n >= 1, n >= 2 or (n == 1 and a >= 1))
            expect(kumod.bcomu_membership(KuElem({(a, n): 1})), expected, a=a, n=n)


@check("kumod.iota_ring_map")
def _iota(cfg):
    x, u = kumod.FElem.x(), kumod.FElem.u()
    expect(f_mul(x, x), f_mul(u, x))
    for n in range(2, min(8, cfg.max_weight) + 1):
        expect(iota(KuElem.y(n)), kumod.FElem(), n=n)
    rng = random.Random(cfg.seed + 1)
    w = min(8, cfg.max_weight)
    for t in range(cfg.trials):
        p, q = random_ku(rng, w, False), random_ku(rng, w, False)
        expect(iota(ku_mul(p, q)), f_mul(iota(p), iota(q)), trial=t, p=str(p), q=str(q))


@check("kumod.phi_laws")
def _phi(cfg):
    w = min(6, cfg.max_weight)
    for k in range(-5, 6):
        expect(phi_k(k, KuElem.y(1)), KuElem.y(1).scale(k), k=k)
    ks = (-2, -1, 0, 1, 2, 3)
    for k in ks:
        for n in range(1, w + 1):
            for m in range(1, w - n + 1):
                lhs = phi_k(k, ku_mul(KuElem.y(n), KuElem.y(m)))
                rhs = ku_mul(phi_k(k, KuElem.y(n)), phi_k(k, KuElem.y(m)))
                expect(lhs, rhs, k=k, n=n, m=m)
            for l in ks:
                expect(phi_k(k, phi_k(l, KuElem.y(n))), phi_k(k * l, KuElem.y(n)), k=k, l=l, n=n)


@check("kumod.splitting_coefficients")
def _cbk(cfg):
    for b in range(1, min(10, cfg.max_weight) + 1):
        for k in range(1, b + 1):
            expect(
                charcls.ku_splitting_coefficient(b, k),
                factorial(k) * stirling2(b, k),
                b=b,
                k=k,
            )


# hopf


@check("hopf.zeta_generation")
def _thm(cfg):
    z10, z01 = HopfElem.zeta(1, 0), HopfElem.zeta(0, 1)
    for a in range(cfg.max_weight + 1):
        for b in range(cfg.max_weight + 1 - a):
            if a + b == 0:
                continue
            lhs = HopfElem.zeta(a, b).scale(factorial(a) * factorial(b))
            expect(lhs, circ(circ_power(z10, a), circ_power(z01, b)), a=a, b=b)


@check("hopf.circ_axioms")
def _circ_axioms(cfg):
    rng = random.Random(cfg.seed + 2)
    w = min(6, cfg.max_weight)
    for t in range(cfg.trials):
        p, q, r = (random_hopf0(rng, w) for _ in range(3))
        expect(circ(p, q), circ(q, p), trial=t, p=str(p), q=str(q))
        expect(circ(circ(p, q), r), circ(p, circ(q, r)), trial=t)
    for m in range(-3, 4):
        for n in range(-3, 4):
            expect(circ(HopfElem.group(m), HopfElem.group(n)), HopfElem.group(m * n), m=m, n=n)


@check("hopf.mixed_rule")
def _mixed(cfg):
    for m in range(-2, 4):
        for n in range(-2, 4):
            for (a, b), (c, d) in (((1, 0), (0, 1)), ((0, 1), (0, 1)), ((1, 1), (0, 1))):
                if a + b + c + d > cfg.max_weight:
                    continue
                lhs = circ(
                    star(HopfElem.group(m), HopfElem.zeta(a, b)),
                    star(HopfElem.group(n), HopfElem.zeta(c, d)),
                )
                rhs = HopfElem(
                    {
                        (m * n, ((a + c, b + d),)): binom(a + c, c) * binom(b + d, b),
                        (m * n, ((a, b), (c, d))): m * n,
                    }
                )
                expect(lhs, rhs, m=m, n=n, left=(a, b), right=(c, d))


@check("hopf.hurewicz_formula")
def _hur(cfg):
    for row in hopf.verify_hurewicz_formula(min(10, cfg.max_weight)):
        expect(row["closed_form"], row["oracle"], n=row["n"])


@check("hopf.hurewicz_multiplicative")
def _hur_mult(cfg):
    rng = random.Random(cfg.seed + 3)
    w = max(1, min(6, cfg.max_weight) // 2)
    for t in range(cfg.trials):
        p, q = random_ku(rng, w), random_ku(rng, w)
        expect(hurewicz(ku_mul(p, q)), circ(hurewicz(p), hurewicz(q)), trial=t, p=str(p), q=str(q))
        if kumod.bcomu_membership(p)[0] and not hopf.has_b_positive_factor(hurewicz(p)):
            raise Mismatch({"p": str(p)}, str(hurewicz(p)), "zeta monomials with b >= 1")


@check("hopf.push_via_pairing")
def _push(cfg):
    expect(hopf.pairing([(0, 1), (0, 1)], [(0, 1), (0, 1)]), 2)
    for a, b, c, d in _index_quads(min(3, cfg.max_weight)):
        m = n = a + b + c + d
        lhs = hopf.push_forward_via_pairing(a, b, c, d, m, n)
        rhs = circ(
            star(HopfElem.group(m), HopfElem.zeta(a, b)),
            star(HopfElem.group(n), HopfElem.zeta(c, d)),
        )
        expect(lhs, rhs, ab=(a, b), cd=(c, d))


def _index_quads(top: int):
    pairs = [(a, w - a) for w in range(1, top + 1) for a in range(w + 1)]
    return [(a, b, c, d) for a, b in pairs for c, d in pairs]


# multisym


@check("multisym.mu_pullback")
def _mu(cfg):
    for w in range(1, min(5, cfg.max_weight) + 1):
        for a in range(w + 1):
            expect(
                multisym.mu_pullback_oracle(a, w - a, w, w),
                multisym.mu_pullback_formula(a, w - a, w, w),
                a=a,
                b=w - a,
            )


@check("multisym.express_generators")
def _express(cfg):
    for w in range(1, min(5, cfg.max_weight) + 1):
        for a in range(w + 1):
            e = multisym.express_in_z(multisym.expand_z(a, w - a, w), w)
            expect(e, multisym.z(a, w - a), a=a, b=w - a)


@check("multisym.comult_pullback")
def _comult(cfg):
    for n in range(1, min(6, cfg.max_weight) + 1):
        rhs = multisym.MSymExpr({((j, n - j),): binom(n, j) for j in range(n)})
        expect(multisym.comult_pullback(n, n), rhs, n=n)
        expect(charcls.splitting_pullback(1, n), rhs, n=n)


@check("multisym.relations")
def _relations(cfg):
    if cfg.max_weight < 3:
        return
    rels = multisym.find_relations(2, 3)
    expect([r.render() for r in rels], ["2*z(0,3) - 3*z(0,1)*z(0,2) + z(0,1)^3"])


# charcls


@check("charcls.newton_roundtrip")
def _newton(cfg):
    for n in range(1, cfg.max_weight + 1):
        back = charcls.cherns_to_powersums(charcls.powersums_from_cherns(n))
        expect(back, charcls.PowerSumExpr.gen(n), n=n)


@check("charcls.u2_relations")
def _u2rel(cfg):
    for name, img in charcls.u2_relation_images().items():
        expect(img, multisym.Rank2Quot.zero(), relation=name)


@check("charcls.u2_injective")
def _u2inj(cfg):
    for w, (r, size) in charcls.u2_injectivity(min(6, cfg.max_weight)).items():
        expect(r, size, weight=w)


@check("charcls.su2_torsion")
def _su2(cfg):
    d2 = charcls.SU2Elem.d2()
    expect(d2.scale(2), charcls.SU2Elem())
    for b in range(7):
        expect(bool(charcls.SU2Elem.c2(b) * d2), True, b=b)


@check("charcls.u2_table")
def _u2table(cfg):
    if cfg.max_weight < 3:
        return None
    report = charcls.verify_u2_table()
    for row in report["rows"]:
        if row["status"] == "mismatch":
            raise Mismatch({"row": row["class"]}, row.get("u2", ""), row.get("u2_expected", ""),
                           row.get("error", ""))
    flagged = [r for r in report["rows"] if r["status"] == "erratum"]
    if flagged:
        r = flagged[0]
        return CheckResult(
            "charcls.u2_table",
            "flagged",
            {"row": r["class"]},
            r["u2"],
            r["u2_expected"],
            "derived entry differs from the reference table by a sign-convention erratum",
        )


@check("charcls.vaccarino")
def _vacc(cfg):
    if cfg.max_weight < 3:
        return
    rep = charcls.vaccarino_check(3)
    expect(rep["rank3_kernel_dimensions"], {1: 0, 2: 0, 3: 0})
    expect(rep["z03_in_z01_ideal_rank3"], False)
    expect(rep["rank2_control_kernel_dimension"], 1)


# s4calc


@check("s4calc.images")
def _s4(cfg):
    if cfg.max_weight < 3:
        return
    rep = s4calc.verify_kcoms4()
    expect(rep["images"]["v"], "-u*y1")
    expect(rep["images"]["w"], "2*y2 + u*y1")
    expect(rep["images"]["(v+w)/2"], "y2")
    expect(abs(rep["basis_determinant"]), 1)


# running


def run_check(name: str, cfg: Config) -> CheckResult:
    start = time.perf_counter()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", multisym.StableRangeWarning)
            res = REGISTRY[name](cfg)
        if res is None:
            res = CheckResult(name, "ok")
    except Mismatch as m:
        res = CheckResult(name, "fail", _jsonable(m.inputs), m.lhs, m.rhs, m.detail)
    except Exception as exc:  # a crashing check is a failed check
        res = CheckResult(name, "fail", detail=f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - start
    return res


def _jsonable(d: dict) -> dict:
    return {k: v if isinstance(v, (int, str, bool)) else str(v) for k, v in d.items()}


def select(only: tuple[str, ...]) -> list[str]:
    names = sorted(REGISTRY)
    if not only:
        return names
    chosen = []
    for pattern in only:
        hits = [n for n in names if n == pattern or n.startswith(pattern + ".")]
        if not hits:
            raise KeyError(pattern)
        chosen += hits
    return sorted(set(chosen))


def run_checks(cfg: Config, workers: int = 4) -> dict:
    names = select(cfg.only)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda n: run_check(n, cfg), names))
    results.sort(key=lambda r: r.name)
    failed = [r.name for r in results if r.status == "fail"]
    return {
        "config": {
            "max_weight": cfg.max_weight,
            "seed": cfg.seed,
            "trials": cfg.trials,
            "only": list(cfg.only),
        },
        "status": "fail" if failed else "ok",
        "first_failure": failed[0] if failed else None,
        "checks": [asdict(r) for r in results],
    }
