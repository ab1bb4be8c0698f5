"""Acceptance suites: every check the `dlash verify-all` command runs.

Each suite returns {"name", "passed", "detail"} and is deterministic
(randomized suites use a fixed seed).
"""

from __future__ import annotations

import random

from .f2 import F2Poly, binom_exact_parity, binom_mod2
from .laurent import (
    LaurentSeries,
    Window,
    residue,
    series_compose,
    series_inverse,
    series_mul,
    series_pow,
    series_reversion,
)
from .dyer_lashof import (
    GradedClass,
    adem_relation,
    derive_relations_by_elimination,
    reduce_to_admissible,
    symmetry_extract_relations,
)
from . import steenrod


def _suite(name: str, failures: list, detail: str) -> dict:
    return {
        "name": name,
        "passed": not failures,
        "detail": detail if not failures else f"{detail}; failures: {failures[:5]}",
    }


def check_adem_soundness(bound: int = 20) -> dict:
    """Every symmetry-extracted relation reduces to zero."""
    failures = []
    count = 0
    for n in range(0, 4):
        x = GradedClass("x", n)
        window = Window(0, -bound, bound)
        for rel in symmetry_extract_relations(x, window):
            count += 1
            if not reduce_to_admissible(rel).is_zero():
                failures.append((n, str(rel)))
    return _suite(
        "adem-soundness",
        failures,
        f"{count} relations over degrees 0..3, i+j <= {bound}",
    )


def check_adem_completeness(bound: int = 16) -> dict:
    """Gaussian elimination over F2 recovers adem_relation for every
    non-admissible pair reachable at the given bound."""
    failures = []
    count = 0
    for n in (1, 2):
        x = GradedClass("x", n)
        solved = derive_relations_by_elimination(x, bound)
        for (i, j), rhs in solved.items():
            count += 1
            expected = frozenset(
                (a, b)
                for a, b in adem_relation(i, j).rhs
                if b >= n and a >= n + b
            )
            if expected != rhs:
                failures.append((n, i, j))
        expected_pairs = {
            (i, j)
            for j in range(n, bound)
            for i in range(2 * j + 1, bound - j + 1)
            if i >= n + j
        }
        missing = expected_pairs - set(solved)
        if missing:
            failures.append((n, "missing", sorted(missing)[:5]))
    return _suite(
        "adem-completeness",
        failures,
        f"{count} non-admissible pairs re-derived by elimination, i+j <= {bound}",
    )


def check_residue_replay(bound: int = 16) -> dict:
    """The residue formula behind the Adem coefficients: the residue in s
    of t^{l+j+1} s^{i-2l-1} (t+s)^{l-j-1} is binom(l-j-1, 2l-i) t^i."""
    failures = []
    count = 0
    box = Window(-2 * bound - 4, -2 * bound - 4, 2 * bound + 4)
    t_plus_s = LaurentSeries.exact({(1, 0): F2Poly.one(), (0, 1): F2Poly.one()})
    for i in range(0, bound + 1):
        for j in range(0, bound + 1 - i):
            for l in range((i + 1) // 2, i + j + 1):
                count += 1
                k = l - j - 1
                if k >= 0:
                    core = series_pow(t_plus_s, k)
                else:
                    core = series_inverse(
                        series_pow(t_plus_s, -k), window=box
                    )
                expr = core.shift(i - 2 * l - 1, l + j + 1)
                got = residue(expr, "s")
                want = (
                    LaurentSeries.monomial(0, i)
                    if binom_mod2(k, 2 * l - i)
                    else LaurentSeries.zero()
                )
                if not got.agrees_with(want):
                    failures.append((i, j, l))
    return _suite(
        "residue-replay", failures, f"{count} (i, j, l) triples with i+j <= {bound}"
    )


def check_bisson_joyal(degree_bound: int = 16) -> dict:
    rep = steenrod.verify_bisson_joyal_identity1(degree_bound)
    failures = [c["identity"] for c in rep["checks"] if not c["ok"]]
    return _suite(
        "bisson-joyal-identity",
        failures,
        f"{len(rep['checks'])} checks at degree bound {degree_bound}",
    )


def check_nishida(degree_bound: int = 16) -> dict:
    rep = steenrod.verify_nishida_conjugate_form(degree_bound)
    failures = [c["identity"] for c in rep["checks"] if not c["ok"]]
    return _suite(
        "nishida-conjugate-form",
        failures,
        f"{len(rep['checks'])} checks at degree bound {degree_bound}",
    )


def check_steinberger() -> dict:
    rep1 = steenrod.verify_steinberger_conjugate(5)
    rep2 = steenrod.verify_steinberger_successor(4)
    checks = rep1["checks"] + rep2["checks"]
    failures = [c["identity"] for c in checks if not c["ok"]]
    return _suite(
        "steinberger-identities",
        failures,
        f"{len(checks)} checks (conjugates through index 5, successors through 4)",
    )


def check_binomial_oracle() -> dict:
    failures = []
    count = 0
    for n in range(0, 65):
        for k in range(0, n + 1):
            count += 1
            if binom_mod2(n, k) != binom_exact_parity(n, k):
                failures.append((n, k))
    # negative tops against actual series coefficients of (1+u)^top
    one_plus_u = LaurentSeries.exact({(0, 0): F2Poly.one(), (0, 1): F2Poly.one()})
    box = Window(0, 0, 44)
    for top in range(-8, 0):
        inv = series_inverse(series_pow(one_plus_u, -top), window=box)
        for k in range(0, 41):
            count += 1
            bit = 0 if inv.coefficient(0, k).is_zero() else 1
            if bit != binom_mod2(top, k):
                failures.append((top, k))
    return _suite(
        "binomial-oracle", failures, f"{count} binomial parities cross-checked"
    )


def _random_unit(rng: random.Random) -> LaurentSeries:
    """A series 1 + (positive-total terms) with small polynomial coefficients."""
    terms = {(0, 0): F2Poly.one()}
    for _ in range(rng.randint(1, 5)):
        es, et = rng.randint(0, 3), rng.randint(0, 3)
        if es == et == 0:
            continue
        c = F2Poly.one() if rng.random() < 0.6 else F2Poly.zeta(rng.randint(1, 2))
        terms[(es, et)] = terms.get((es, et), F2Poly.zero()) + c
    return LaurentSeries.exact({e: c for e, c in terms.items() if not c.is_zero()})


def check_series_kernel(instances: int = 500, seed: int = 2026) -> dict:
    rng = random.Random(seed)
    failures = []
    box = Window(0, -8, 10)
    ident = LaurentSeries.monomial(0, 1)
    for trial in range(instances):
        u = _random_unit(rng)
        # inverse round-trip
        inv = series_inverse(u, window=box)
        prod = series_mul(u, inv)
        if not prod.agrees_with(LaurentSeries.one()):
            failures.append(("inverse", trial))
            continue
        # window soundness: a smaller window computes the same coefficients
        small = Window(0, -4, 5)
        inv_small = series_inverse(u, window=small)
        if not inv_small.agrees_with(inv):
            failures.append(("window", trial))
            continue
        # reversion round-trip on t + random higher univariate terms
        terms = {(0, 1): F2Poly.one()}
        for _ in range(rng.randint(1, 4)):
            terms[(0, rng.randint(2, 5))] = F2Poly.one()
        a = LaurentSeries.exact(terms)
        b = series_reversion(a, var="t", max_total=9)
        back = series_compose(a, b, var="t", window=Window(0, 0, 9))
        if not back.agrees_with(ident):
            failures.append(("reversion", trial))
    return _suite(
        "series-kernel", failures, f"{instances} randomized round-trip instances"
    )


def _random_milnor_monomial(rng: random.Random, max_degree: int = 24) -> F2Poly:
    m = F2Poly.one()
    budget = max_degree
    for i in (4, 3, 2, 1):
        d = 2**i - 1
        if d > budget:
            continue
        e = rng.randint(0, budget // d if i == 1 else min(2, budget // d))
        if e:
            m = m * F2Poly.zeta(i, e)
            budget -= e * d
    return m


def _poly_degree(a: F2Poly) -> int:
    parts = a.degree_parts()
    return max(parts) if parts else 0


def check_property_laws(seed: int = 7, samples: int = 24) -> dict:
    rng = random.Random(seed)
    failures = []
    count = 0
    # instability: Q^i z_n = 0 for 0 < i < 2^n - 1
    for n in range(1, 6):
        total = steenrod.q_total_on_zeta(n, 2**n + 2)
        for i in range(1, 2**n - 1):
            count += 1
            w = total.window
            if w.contains(0, i):
                zero = total.coefficient(0, i).is_zero()
            else:
                # below an honest axis minimum: certified to vanish
                zero = total.honest_t and i < w.min_t
            if not zero:
                failures.append(("instability", n, i))
    # squaring: Q^{deg m}(m) = m^2
    for trial in range(samples):
        m = _random_milnor_monomial(rng)
        d = _poly_degree(m)
        count += 1
        if steenrod.q_op(d, m, 2 * d + 2) != m.square():
            failures.append(("square", trial, str(m)))
    # Cartan: Q^n(ab) = sum_i Q^i(a) Q^{n-i}(b)
    for trial in range(samples):
        a = _random_milnor_monomial(rng, 8)
        b = _random_milnor_monomial(rng, 8)
        n = rng.randint(0, _poly_degree(a * b) + 2)
        lhs = steenrod.q_op(n, a * b, n + 1)
        rhs = F2Poly.zero()
        for i in range(0, n + 1):
            rhs = rhs + steenrod.q_op(i, a, n + 1) * steenrod.q_op(n - i, b, n + 1)
        count += 1
        if lhs != rhs:
            failures.append(("cartan", trial, str(a), str(b), n))
    return _suite("property-laws", failures, f"{count} identities checked")


ALL_SUITES = (
    check_adem_soundness,
    check_adem_completeness,
    check_residue_replay,
    check_bisson_joyal,
    check_nishida,
    check_steinberger,
    check_binomial_oracle,
    check_series_kernel,
    check_property_laws,
)


def run_all(degree_bound: int = 16) -> list:
    """Run every acceptance suite; identity suites honour degree_bound."""
    reports = [
        check_adem_soundness(),
        check_adem_completeness(),
        check_residue_replay(),
        check_bisson_joyal(degree_bound),
        check_nishida(degree_bound),
        check_steinberger(),
        check_binomial_oracle(),
        check_series_kernel(),
        check_property_laws(),
    ]
    return reports
