"""Verification suites behind ``genlab verify``.

Each suite is a list of named checks; a check returns ``(ok, witness)``.
Checks run one after another in id order, so reports are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from .core import Poly
from .errors import SizeLimit

__all__ = ["Check", "VerificationReport", "SUITES", "run_suite", "run_all"]


@dataclass
class Check:
    id: str
    anchor: str
    status: str            # pass | fail | skipped
    witness: object = None
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if timings:
            out["elapsed"] = round(self.elapsed, 4)
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def falsified(self) -> bool:
        return any(c.status == "fail" and c.id.startswith("conjecture") for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self, timings: bool = False) -> dict:
        return {"suite": self.suite, "ok": self.ok, "conjecture_falsified": self.falsified,
                "counts": self.counts(), "checks": [c.to_json(timings) for c in self.checks]}

    def render(self, timings: bool = False) -> str:
        lines = []
        for c in self.checks:
            t = f"  {c.elapsed:.2f}s" if timings else ""
            extra = f"  {c.witness}" if c.status != "pass" and c.witness is not None else ""
            lines.append(f"{c.status.upper():7} {c.id}  [{c.anchor}]{t}{extra}")
        k = self.counts()
        lines.append(f"{self.suite}: {k['pass']} passed, {k['fail']} failed, {k['skipped']} skipped")
        return "\n".join(lines)


def _run(report: VerificationReport, cid: str, anchor: str, fn: Callable[[], tuple]) -> None:
    t0 = time.perf_counter()
    try:
        ok, witness = fn()
        status = "pass" if ok else "fail"
    except SizeLimit as e:
        status, witness = "skipped", str(e)
    # witnesses are only kept for checks that did not pass
    report.checks.append(Check(cid, anchor, status, None if status == "pass" else witness,
                               time.perf_counter() - t0))


# ---------------------------------------------------------------------------
# bijections


def _bijection_checks(max_n: int, rep: VerificationReport) -> None:
    from .dperms import enumerate_d_perms
    from .ferrers import build_gamma, nbc_equals_id
    from .idforests import (enumerate_id_forests, forest_partition, gamma, hat_form,
                            id_trees_on, is_w_word, postorder, psi_forest, tilde_form)
    from .staircases import (enumerate_g_set, enumerate_staircases, gamma_slide,
                             gamma_unslide)

    top = min(max_n, 4)
    for n in range(1, top + 1):
        ground = list(range(1, 2 * n + 1))

        def psi_check(ground=ground):
            images = {}
            for forest in enumerate_id_forests(ground):
                p = psi_forest(forest)
                if p.cycle_support() != forest_partition(forest):
                    return False, {"forest": [t.to_json() for t in forest]}
                images[p] = forest
            dp = set(enumerate_d_perms(ground))
            return set(images) == dp, {"forests": len(images), "d_perms": len(dp)}

        _run(rep, f"bijection.psi.n{n}", "forests to D-permutations, support kept", psi_check)

        def words_check(ground=ground):
            for t in id_trees_on(ground):
                for form in (hat_form, tilde_form):
                    pt = form(t)
                    w = postorder(pt)
                    if not is_w_word(w) or gamma(w) != pt:
                        return False, {"word": list(w)}
            return True, None

        _run(rep, f"bijection.postorder.n{n}", "postorder word and its inverse", words_check)

        def w_class_check(ground=ground):
            # every word of the class is a hat-form postorder word, and conversely
            words = {w for w in permutations(ground) if is_w_word(w) and w[-1] == max(ground)}
            hats = {postorder(hat_form(t)) for t in id_trees_on(ground)}
            return words == hats, {"words": len(words), "trees": len(hats)}

        _run(rep, f"bijection.word-class.n{n}", "word class equals hat-form words", w_class_check)

        def nbc_check(ground=ground):
            r = nbc_equals_id(build_gamma(ground))
            return r["equal"], {k: r[k] for k in ("nbc_count", "id_count")}

        _run(rep, f"bijection.nbc-id.n{n}", "NBC forests are ID forests", nbc_check)

    for n in range(1, min(max_n, 4) + 1):
        def slide_check(n=n):
            seen = set()
            for g in enumerate_g_set(2 * n):
                f = gamma_slide(g)
                if gamma_unslide(f) != g:
                    return False, {"g": list(g.f)}
                if not _slide_properties(g, f):
                    return False, {"g": list(g.f), "property": "fixed-point transfer"}
                seen.add(f)
            target = set(enumerate_staircases(2 * n + 2, no_even_maxima=True))
            return seen == target, {"image": len(seen), "target": len(target)}

        _run(rep, f"bijection.slide.n{n}", "sliding bijection onto staircases", slide_check)



def _slide_properties(g, f) -> bool:
    from .staircases import maxima

    fixed_f = set(j for j in range(1, g.m + 1) if f(j) == j)
    iso_f = set(j for j in fixed_f if f.preimage(j) == {j})
    fixed_g = set(g.fixed_points())
    iso_g = set(g.isolated_fixed_points())
    even_fixed_g = {j for j in fixed_g if j % 2 == 0}
    if even_fixed_g != fixed_f:
        return False
    if {j for j in iso_g if j % 2 == 0} != iso_f:
        return False
    return {j for j in iso_g if j % 2 == 1} == set(maxima(f))


# ---------------------------------------------------------------------------
# characteristic polynomial cross-checks


def _charpoly_checks(max_n: int, rep: VerificationReport) -> None:
    from .lattice import build_reduced
    from .routes import ROUTE_LIMITS, ROUTE_MINIMA, ROUTES

    for n in range(1, max_n + 1):
        def cross(n=n):
            vals = {}
            for name, fn in ROUTES.items():
                if ROUTE_MINIMA.get(name, 1) <= n <= ROUTE_LIMITS[name]:
                    vals[name] = fn(n)
            distinct = {str(p) for p in vals.values()}
            return len(distinct) == 1 and len(vals) >= 4, {k: str(v) for k, v in vals.items()}

        _run(rep, f"charpoly.cross.n{n}", "all routes agree", cross)

    for n in range(2, min(max_n, 5) + 1):
        def reduced(n=n):
            from .routes import charpoly
            from .core import T

            _, chi_l = build_reduced(n)
            full = charpoly(n, "dperm")
            return full == (T - 1) ** 3 * chi_l, {"reduced": str(chi_l)}

        _run(rep, f"charpoly.reduced.n{n}", "reduced semilattice times (t-1)^3", reduced)

    for n in range(1, min(max_n, 5) + 1):
        def signs(n=n):
            from .genfun import genocchi_g, genocchi_h
            from .routes import charpoly

            p = charpoly(n, "dperm")
            return p(-1) == -genocchi_h(n) and p(0) == -genocchi_g(n), {"at -1": str(p(-1)), "at 0": str(p(0))}

        _run(rep, f"charpoly.values.n{n}", "values at -1 and 0", signs)


# ---------------------------------------------------------------------------
# generating functions


def _genfun_checks(order: int, seed: int, rep: VerificationReport) -> None:
    from .core import T
    from .genfun import (BD_KEYS, bd_series, charpoly_series, descent_model_count, genocchi_g,
                         genocchi_h, new_h_formula_check, shifted_charpoly_series,
                         staircase_series_pointcheck, tangent_genocchi)
    from .routes import charpoly
    from .staircases import cycle_enumerator_check

    enum_g = lambda k: genocchi_g(k, "enumerate")
    enum_h = lambda k: genocchi_h(k, "enumerate")
    g_reach, h_reach = 7, 5

    def bd(key):
        def fn():
            s = bd_series(key, order)
            got, want = [], []
            for k in range(order + 1):
                target = {"g": (enum_g, k, 1, g_reach), "h": (enum_h, k, 0, h_reach),
                          "g-next": (enum_g, k + 1, 1, g_reach), "h-prev": (enum_h, k - 1, 0, h_reach)}[key]
                f, idx, lo, hi = target
                if lo <= idx <= hi:
                    got.append(int(s[k](0)))
                    want.append(f(idx))
            return got == want, {"series": got, "enumerated": want}
        return fn

    for key in BD_KEYS:
        _run(rep, f"genfun.classical.{key}", "classical Genocchi expansions", bd(key))

    def tangent():
        got = tangent_genocchi(min(order + 1, g_reach))
        want = [enum_g(k) for k in range(1, len(got) + 1)]
        return got == want, {"tangent": got}

    _run(rep, "genfun.tangent", "x tan(x/2) coefficients", tangent)

    def descent():
        top = min(order, 5)
        got = [descent_model_count(k) for k in range(1, top + 1)]
        want = [enum_g(k) for k in range(1, top + 1)]
        return got == want, {"model": got}

    _run(rep, "genfun.descent-model", "descents exactly after even values", descent)

    def charpoly_gf():
        s = charpoly_series(order)
        bad = {}
        for n in range(1, order + 1):
            try:
                want = charpoly(n, "dperm")
            except SizeLimit:
                want = charpoly(n, "chromatic")
            if s[n] != want:
                bad[n] = (str(s[n]), str(want))
        at0 = [int(s[n](0)) for n in range(1, order + 1)]
        at_m1 = [int(s[n](-1)) for n in range(1, order + 1)]
        h = bd_series("h", order)
        g = bd_series("g", order)
        shape = at0 == [-int(g[n](0)) for n in range(1, order + 1)] and \
            at_m1 == [-int(h[n](0)) for n in range(1, order + 1)]
        return not bad and shape, {"mismatch": bad, "at 0": at0, "at -1": at_m1}

    _run(rep, "genfun.charpoly-series", "characteristic polynomial series", charpoly_gf)

    def shifted():
        from .lattice import build_reduced

        full, reduced = shifted_charpoly_series(order)
        bad = {}
        for n in range(0, order + 1):
            m = n + 1
            want = charpoly(m, "dperm") if m <= 6 else charpoly(m, "chromatic")
            if full[n] != want:
                bad[f"full u^{n}"] = str(full[n])
            if n >= 1:
                want_l = build_reduced(m)[1] if m <= 5 else charpoly(m, "chromatic").exact_div((T - 1) ** 3)
                if reduced[n] != want_l:
                    bad[f"reduced u^{n}"] = str(reduced[n])
                if int(reduced[n](0)) != enum_g(n + 1):
                    bad[f"reduced u^{n} at 0"] = str(reduced[n](0))
        return not bad, bad or None

    _run(rep, "genfun.shifted-series", "shifted and reduced series", shifted)

    def h_formula():
        r = new_h_formula_check(min(order, 6))
        return r["ok"], {"series": r["series"]}

    _run(rep, "genfun.h-formula", "closing median Genocchi series", h_formula)

    def pointcheck():
        r = staircase_series_pointcheck(min(order, 4), 20, seed)
        return r["ok"], {"points": r["points"], "failures": r["failures"]}

    _run(rep, "genfun.staircase-series", "six-variable staircase series, 20 points", pointcheck)

    def cycle_enum():
        top = min(order, 4)
        res = [cycle_enumerator_check(n) for n in range(1, top + 1)]
        return all(r["equal"] for r in res), {"n": top}

    _run(rep, "genfun.cycle-enumerator", "cycle enumerator as staircase polynomial", cycle_enum)


# ---------------------------------------------------------------------------
# geometry


def _geometry_checks(max_n: int, rep: VerificationReport) -> None:
    from .genfun import genocchi_h
    from .geometry import verify_P_iso, verify_linial_isomorphism

    for n in range(1, min(max_n, 4) + 1):
        def iso(n=n):
            r = verify_linial_isomorphism(n)
            return r["ok"], {k: (str(v) if isinstance(v, Poly) else v) for k, v in r.items() if k != "chi"}

        _run(rep, f"geometry.isomorphism.n{n}", "explicit linear isomorphism of arrangements", iso)

    for n in range(3, min(max_n, 5) + 1):
        def deconed(n=n):
            r = verify_P_iso(n)
            ok = r["elements_match"] and r["order_iso"] and r["chi_match"] and r["bounded"] == genocchi_h(n - 3)
            return ok, {"bounded": r["bounded"], "regions": r["regions"], "flats": r["flats"]}

        _run(rep, f"geometry.deconed.n{n}", "bounded regions of the deconed arrangement", deconed)


# ---------------------------------------------------------------------------
# posets and the drop expansion


def _random_poset(rng: random.Random, m: int):
    from .drops import FinitePoset

    pairs = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1) if rng.random() < 0.35]
    return FinitePoset.from_cover_pairs(range(1, m + 1), pairs)


def _chung_graham_checks(max_n: int, seed: int, rep: VerificationReport) -> None:
    from .drops import (FinitePoset, chung_graham_check, d_table, d_table_bruteforce,
                        drop_expansion_charpoly, eo_descent_table, eo_drop_count,
                        parity_incomparability_is_ferrers, parity_poset)
    from .genfun import genocchi_h
    from .routes import charpoly

    for n in range(1, min(max_n, 4) + 1):
        def parity(n=n):
            p = parity_poset(2 * n)
            ok = p.is_partial_order() and parity_incomparability_is_ferrers(2 * n)
            r = chung_graham_check(p)
            return ok and r["ok"], {"chromatic": str(r["chromatic"])}

        _run(rep, f"poset.parity.n{n}", "parity poset expansion", parity)

        def expansion(n=n):
            ok = drop_expansion_charpoly(n) == charpoly(n, "dperm")
            if 2 * n <= 8:
                ok = ok and d_table(2 * n) == d_table_bruteforce(2 * n)
            return ok, None

        _run(rep, f"poset.drop-expansion.n{n}", "drop expansion of the characteristic polynomial", expansion)

        def eo(n=n):
            a = eo_drop_count(2 * n)
            b = eo_descent_table(2 * n)
            return a == genocchi_h(n) and b == d_table(2 * n), {"eo_drop_perms": a}

        _run(rep, f"poset.eo-drops.n{n}", "only even-odd drops; descent variant", eo)

    def random_posets():
        rng = random.Random(seed)
        for trial in range(12):
            p = _random_poset(rng, rng.randint(1, 7))
            if not p.is_partial_order() or not chung_graham_check(p)["ok"]:
                return False, {"trial": trial, "relation": sorted(p.relation)}
        for m in (1, 2, 3, 5):
            for p in (FinitePoset.chain(m), FinitePoset.antichain(m)):
                if not chung_graham_check(p)["ok"]:
                    return False, {"size": m}
        return True, None

    _run(rep, "poset.random", "drop expansion on random posets", random_posets)


# ---------------------------------------------------------------------------
# conjectures


def _conjecture_checks(max_n: int, rep: VerificationReport) -> None:
    from .drops import conjecture_checks

    r = conjecture_checks(min(max_n, 6))
    for row in r["cycles"]:
        _run(rep, f"conjecture.cycles.n{row['n']}", "cycles with only even-odd drops",
             lambda row=row: (row["verdict"] == "verified", {"lhs": row["lhs"], "rhs": row["rhs"]}))
    for row in r["subsets"]:
        _run(rep, "conjecture.subsets", "cycles on every subset of [8]",
             lambda row=row: (row["verdict"] == "verified", {"checked": row["checked"],
                                                             "witnesses": row["witnesses"]}))
    for row in r["cycle_distribution"]:
        _run(rep, f"conjecture.cycle-count.n{row['n']}", "cycle-number distribution",
             lambda row=row: (row["verdict"] == "verified", {"lhs": row["lhs"], "rhs": row["rhs"]}))
    for row in r["supports"]:
        _run(rep, f"conjecture.support.n{row['n']}", "counts by cycle support",
             lambda row=row: (row["verdict"] == "verified", {"witnesses": row["witnesses"]}))


SUITES = ("bijections", "charpoly-cross", "genfun", "geometry", "chung-graham", "conjectures")


def run_suite(name: str, max_n: int = 3, order: int | None = None, seed: int = 0) -> VerificationReport:
    rep = VerificationReport(name)
    if order is None:
        order = max(3, min(max_n + 2, 5))
    if name == "bijections":
        _bijection_checks(max_n, rep)
    elif name == "charpoly-cross":
        _charpoly_checks(max_n, rep)
    elif name == "genfun":
        _genfun_checks(order, seed, rep)
    elif name == "geometry":
        _geometry_checks(max_n, rep)
    elif name == "chung-graham":
        _chung_graham_checks(max_n, seed, rep)
    elif name == "conjectures":
        _conjecture_checks(max_n, rep)
    else:
        raise ValueError(f"unknown suite {name!r}")
    return rep


def run_all(max_n: int = 3, order: int | None = None, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("all")
    for s in SUITES:
        rep.checks.extend(run_suite(s, max_n, order, seed).checks)
    return rep
