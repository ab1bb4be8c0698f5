"""Truncated iterated Laurent series in s and t with F2Poly coefficients.

The ambient ring is k((t))((s)): s is small relative to t, so the series
order is lexicographic in (e_s, e_t).  A series carries a Window
describing where its coefficients are guaranteed exact:

  * every coefficient with e_s >= min_s, e_t >= min_t and
    e_s + e_t <= max_total is exactly the stored one (absent means zero);
  * coefficients with total degree above max_total are unknown, never
    assumed zero;
  * when the series is "honest" in an axis, the true series is known to
    vanish below that axis' minimum, at every total degree.  Inverses of
    genuinely bivariate series (like t + s) have unboundedly negative
    t-exponents, so they are exact inside their window but not honest in
    t; window propagation accounts for the difference.

max_total = None means the series is exact (known in full).
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2 import F2Poly


class LaurentError(Exception):
    pass


class EmptyWindowError(LaurentError):
    pass


class NotInvertibleError(LaurentError):
    pass


class NonComposableError(LaurentError):
    pass


class BadValuationError(LaurentError):
    pass


class WindowMissError(LaurentError):
    pass


DEFAULT_DEGREE_BOUND = 32


def _min_total(m1, m2):
    if m1 is None:
        return m2
    if m2 is None:
        return m1
    return min(m1, m2)


def _add_total(m1, m2):
    if m1 is None or m2 is None:
        return None
    return m1 + m2


@dataclass(frozen=True)
class Window:
    """Exactness region: e_s >= min_s, e_t >= min_t, e_s + e_t <= max_total."""

    min_s: int
    min_t: int
    max_total: int | None = None  # None: exact series

    def __post_init__(self):
        if self.max_total is not None and self.min_s + self.min_t > self.max_total:
            raise EmptyWindowError(
                f"empty window: min_s={self.min_s}, min_t={self.min_t}, "
                f"max_total={self.max_total}"
            )

    @staticmethod
    def default(degree_bound: int = DEFAULT_DEGREE_BOUND) -> "Window":
        d = degree_bound
        return Window(-(d + 1), -(d + 1), d)

    def contains(self, es: int, et: int) -> bool:
        if es < self.min_s or et < self.min_t:
            return False
        return self.max_total is None or es + et <= self.max_total

    def shifted(self, ds: int, dt: int) -> "Window":
        return Window(self.min_s + ds, self.min_t + dt, _add_total(self.max_total, ds + dt))

    def intersect(self, other: "Window") -> "Window":
        return Window(
            max(self.min_s, other.min_s),
            max(self.min_t, other.min_t),
            _min_total(self.max_total, other.max_total),
        )

    def describe(self) -> str:
        mx = "inf" if self.max_total is None else str(self.max_total)
        return f"[e_s>={self.min_s}, e_t>={self.min_t}, e_s+e_t<={mx}]"


class LaurentSeries:
    """Sparse bivariate Laurent series with an exactness window."""

    __slots__ = ("window", "coeffs", "honest_s", "honest_t")

    def __init__(self, window: Window, coeffs: dict,
                 honest_s: bool = True, honest_t: bool = True):
        clean = {}
        for (es, et), poly in coeffs.items():
            if poly.is_zero():
                continue
            if not window.contains(es, et):
                raise ValueError(
                    f"coefficient at ({es},{et}) outside window {window.describe()}"
                )
            clean[(es, et)] = poly
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "honest_s", honest_s)
        object.__setattr__(self, "honest_t", honest_t)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @property
    def honest(self) -> bool:
        return self.honest_s and self.honest_t

    def _flags(self) -> dict:
        return {"honest_s": self.honest_s, "honest_t": self.honest_t}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def exact(terms: dict) -> "LaurentSeries":
        """A series the caller knows in full: window covers the support."""
        nz = {e: p for e, p in terms.items() if not p.is_zero()}
        if not nz:
            return LaurentSeries(Window(0, 0, None), {})
        min_s = min(es for es, _ in nz)
        min_t = min(et for _, et in nz)
        return LaurentSeries(Window(min_s, min_t, None), nz)

    @staticmethod
    def zero() -> "LaurentSeries":
        return LaurentSeries(Window(0, 0, None), {})

    @staticmethod
    def one() -> "LaurentSeries":
        return LaurentSeries.monomial(0, 0)

    @staticmethod
    def monomial(es: int, et: int, poly: F2Poly | None = None) -> "LaurentSeries":
        poly = F2Poly.one() if poly is None else poly
        return LaurentSeries.exact({(es, et): poly})

    @staticmethod
    def truncated(terms: dict, window: Window, **flags) -> "LaurentSeries":
        """A series known exactly on the given window, unknown above."""
        kept = {e: p for e, p in terms.items() if window.contains(*e)}
        return LaurentSeries(window, kept, **flags)

    def is_exact(self) -> bool:
        return self.window.max_total is None

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self):
        return self.coeffs.keys()

    def certified_min_total(self):
        """A lower bound for the total degree of the true series.

        Everything below it is known to vanish; None means the series is
        zero in full.  Valid only for series honest in both axes.
        """
        supp_min = min((es + et for es, et in self.coeffs), default=None)
        if supp_min is not None:
            return supp_min
        if self.window.max_total is None:
            return None
        return self.window.max_total + 1

    def coefficient(self, es: int, et: int) -> F2Poly:
        if not self.window.contains(es, et):
            w = self.window
            below_axis = (self.honest_s and es < w.min_s) or (
                self.honest_t and et < w.min_t
            )
            if below_axis and (w.max_total is None or es + et <= w.max_total):
                return F2Poly.zero()  # certified vanishing below an honest axis
            raise WindowMissError(
                f"({es},{et}) outside guaranteed window {self.window.describe()}"
            )
        return self.coeffs.get((es, et), F2Poly.zero())

    def is_univariate(self, var: str) -> bool:
        other = 1 if var == "s" else 0
        return all(e[other] == 0 for e in self.coeffs)

    def univariate_coeffs(self, var: str) -> dict:
        """Exponent -> coefficient map for a series supported in one variable."""
        if not self.is_univariate(var):
            raise ValueError(f"series is not univariate in {var}")
        idx = 0 if var == "s" else 1
        return {e[idx]: p for e, p in self.coeffs.items()}

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return series_add(self, other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        return series_mul(self, other)

    def scale(self, poly: F2Poly) -> "LaurentSeries":
        return LaurentSeries(
            self.window,
            {e: p * poly for e, p in self.coeffs.items()},
            **self._flags(),
        )

    def shift(self, ds: int, dt: int, poly: F2Poly | None = None) -> "LaurentSeries":
        """Multiply by an exact monomial poly * s^ds t^dt."""
        coeffs = {(es + ds, et + dt): p for (es, et), p in self.coeffs.items()}
        if poly is not None:
            coeffs = {e: p * poly for e, p in coeffs.items()}
        return LaurentSeries(self.window.shifted(ds, dt), coeffs, **self._flags())

    def square(self) -> "LaurentSeries":
        # Frobenius: cross terms cancel in pairs, so (sum)^2 = sum of squares
        # and the square is exact out to 2*max_total + 1 (odd totals vanish).
        w = self.window
        new_w = Window(
            2 * w.min_s, 2 * w.min_t, _add_total(_add_total(w.max_total, w.max_total), 1)
        )
        coeffs = {(2 * es, 2 * et): p.square() for (es, et), p in self.coeffs.items()}
        return LaurentSeries(new_w, coeffs, **self._flags())

    def restricted(self, window: Window) -> "LaurentSeries":
        """Forget knowledge outside the given window."""
        w = self.window.intersect(window)
        # an honest axis keeps its quadrant bound: coefficients between
        # the bounds are known zero, so only max_total truly restricts
        min_s = min(w.min_s, self.window.min_s) if self.honest_s else w.min_s
        min_t = min(w.min_t, self.window.min_t) if self.honest_t else w.min_t
        w = Window(min_s, min_t, w.max_total)
        return LaurentSeries.truncated(self.coeffs, w, **self._flags())

    def map_coeffs(self, fn) -> "LaurentSeries":
        return LaurentSeries(
            self.window,
            {e: fn(p) for e, p in self.coeffs.items()},
            **self._flags(),
        )

    # -- comparison and rendering ---------------------------------------

    def __eq__(self, other) -> bool:
        """Structural equality: same window, same coefficients."""
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.window == other.window and self.coeffs == other.coeffs

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Coefficient equality on the common guaranteed window."""
        return self.first_disagreement(other) is None

    def first_disagreement(self, other: "LaurentSeries"):
        w = self.window.intersect(other.window)
        diffs = [
            e
            for e in set(self.coeffs) | set(other.coeffs)
            if w.contains(*e)
            and self.coeffs.get(e, F2Poly.zero()) != other.coeffs.get(e, F2Poly.zero())
        ]
        return min(diffs, key=lambda e: (e[0] + e[1], e[0])) if diffs else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (es, et) in sorted(self.coeffs, key=lambda e: (e[0] + e[1], e[0])):
            poly = self.coeffs[(es, et)]
            mono = []
            if es:
                mono.append("s" if es == 1 else f"s^{es}")
            if et:
                mono.append("t" if et == 1 else f"t^{et}")
            mono_str = " ".join(mono)
            if not mono_str:
                parts.append(f"({poly})" if len(poly.monomials) > 1 else str(poly))
            elif poly.is_one():
                parts.append(mono_str)
            elif len(poly.monomials) > 1:
                parts.append(f"({poly}) {mono_str}")
            else:
                parts.append(f"{poly} {mono_str}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentSeries({self} @ {self.window.describe()})"

    def to_json_terms(self) -> list:
        return [
            {"es": es, "et": et, "coeff": str(self.coeffs[(es, et)])}
            for (es, et) in sorted(self.coeffs, key=lambda e: (e[0] + e[1], e[0]))
        ]


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    coeffs = dict(a.coeffs)
    for e, p in b.coeffs.items():
        q = coeffs.get(e, F2Poly.zero()) + p
        if q.is_zero():
            coeffs.pop(e, None)
        else:
            coeffs[e] = q
    # per axis: if both summands vanish below their bounds the union
    # quadrant is sound; otherwise only the intersection is exact
    if a.honest_s and b.honest_s:
        min_s, hs = min(a.window.min_s, b.window.min_s), True
    else:
        min_s, hs = max(a.window.min_s, b.window.min_s), False
    if a.honest_t and b.honest_t:
        min_t, ht = min(a.window.min_t, b.window.min_t), True
    else:
        min_t, ht = max(a.window.min_t, b.window.min_t), False
    w = Window(min_s, min_t, _min_total(a.window.max_total, b.window.max_total))
    return LaurentSeries.truncated(coeffs, w, honest_s=hs, honest_t=ht)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    # multiplying by an exact series is a sum of monomial shifts, which is
    # window-sound whatever the other factor's flags are
    if b.is_exact():
        if not b.coeffs:
            return LaurentSeries.zero()
        acc = None
        for (es, et), poly in b.coeffs.items():
            term = a.shift(es, et, poly)
            acc = term if acc is None else series_add(acc, term)
        return acc
    if a.is_exact():
        return series_mul(b, a)
    if not (a.honest and b.honest):
        raise LaurentError(
            "general product needs quadrant-honest factors or an exact one"
        )
    wa, wb = a.window, b.window
    max_total = _min_total(
        _add_total(wa.max_total, b.certified_min_total()),
        _add_total(wb.max_total, a.certified_min_total()),
    )
    w = Window(wa.min_s + wb.min_s, wa.min_t + wb.min_t, max_total)
    coeffs: dict = {}
    for (es1, et1), p1 in a.coeffs.items():
        for (es2, et2), p2 in b.coeffs.items():
            e = (es1 + es2, et1 + et2)
            if not w.contains(*e):
                continue
            q = coeffs.get(e, F2Poly.zero()) + p1 * p2
            if q.is_zero():
                coeffs.pop(e, None)
            else:
                coeffs[e] = q
    return LaurentSeries(w, coeffs)


def series_pow(a: LaurentSeries, k: int, window: Window | None = None) -> LaurentSeries:
    """a**k for k >= 0; negative k inverts a**(-k) on the given window."""
    if k < 0:
        return series_inverse(series_pow(a, -k), window=window)
    result = LaurentSeries.one()
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = base.square()
    if window is not None:
        result = result.restricted(window)
    return result


def _lex_lead(a: LaurentSeries):
    """Leading term for the k((t))((s)) order: minimal e_s, then minimal e_t."""
    return min(a.coeffs, key=lambda e: (e[0], e[1]))


def series_inverse(a: LaurentSeries, window: Window | None = None) -> LaurentSeries:
    """Multiplicative inverse with series_mul(a, result) = 1 on the window.

    The leading term in the s-small order must be a bare monomial with
    coefficient 1.  The inverse of a genuinely bivariate series has
    unboundedly negative t-exponents; the result is then confined to the
    target window and loses honesty in the affected axis.
    """
    if not a.honest:
        raise NotInvertibleError("cannot invert a non-quadrant-bounded series")
    if a.is_zero():
        raise NotInvertibleError("zero series has no inverse")
    lead = _lex_lead(a)
    if not a.coeffs[lead].is_one():
        raise NotInvertibleError(
            f"leading coefficient at s^{lead[0]} t^{lead[1]} is "
            f"{a.coeffs[lead]}, not 1"
        )
    if window is None:
        window = a.window.shifted(-2 * lead[0], -2 * lead[1])
    if window.max_total is None and a.window.max_total is None:
        # exact inputs still give an infinite inverse unless a is a monomial
        if len(a.coeffs) > 1:
            raise NotInvertibleError(
                "inverse of a non-monomial series needs a finite window"
            )
        return LaurentSeries.monomial(-lead[0], -lead[1])
    if window.max_total is None:
        window = Window(
            window.min_s,
            window.min_t,
            a.window.max_total - 2 * (lead[0] + lead[1]),
        )

    # relative series r with a = lead * (1 + r); every term of r is
    # lexicographically positive, so the Neumann sum converges per window
    rel = a.shift(-lead[0], -lead[1])
    r_coeffs = dict(rel.coeffs)
    r_coeffs.pop((0, 0), None)
    r = LaurentSeries(rel.window, r_coeffs)
    if any(es < 0 for es, _ in r.coeffs):
        raise NotInvertibleError("leading term is not minimal in the s-small order")

    # target window for the relative inverse c = (1 + r)^{-1}
    box = window.shifted(lead[0], lead[1])
    bs = box.max_total - box.min_t  # largest reachable e_s
    neg_drop = max((-et for _, et in r.coeffs if et < 0), default=0)

    def keep(es: int, et: int) -> bool:
        # positions that can still flow back into the box under further
        # multiplications by r (e_s never decreases; e_t drops at most
        # neg_drop per unit of e_s growth)
        if es > bs:
            return False
        return et <= (box.max_total - box.min_s) + (bs - es) * neg_drop

    mt_r = r.certified_min_total()  # None only if r is exactly zero
    r_max = r.window.max_total
    lost_s = lost_t = False
    acc = {(0, 0): F2Poly.one()}
    term = {(0, 0): F2Poly.one()}
    term_max_acc = None  # running min over term windows
    steps = 0
    while term:
        steps += 1
        if steps > 100000:
            raise LaurentError("inverse iteration failed to terminate")
        new_term: dict = {}
        for (es1, et1), p1 in term.items():
            for (es2, et2), p2 in r.coeffs.items():
                es, et = es1 + es2, et1 + et2
                if not keep(es, et):
                    lost_s = lost_s or es < box.min_s
                    lost_t = lost_t or et < box.min_t
                    continue
                e = (es, et)
                q = new_term.get(e, F2Poly.zero()) + p1 * p2
                if q.is_zero():
                    new_term.pop(e, None)
                else:
                    new_term[e] = q
        term = new_term
        if not term:
            break
        for e, p in term.items():
            q = acc.get(e, F2Poly.zero()) + p
            if q.is_zero():
                acc.pop(e, None)
            else:
                acc[e] = q
        if r_max is not None:
            # the k-th power of r is exact out to r_max + (k-1)*min(mt_r, 0)
            t_max = r_max + (steps - 1) * min(mt_r, 0)
            term_max_acc = _min_total(term_max_acc, t_max)

    for es, et in acc:
        lost_s = lost_s or es < box.min_s
        lost_t = lost_t or et < box.min_t
    c_window = Window(box.min_s, box.min_t, _min_total(box.max_total, term_max_acc))
    c = LaurentSeries.truncated(
        acc, c_window, honest_s=not lost_s, honest_t=not lost_t
    )
    return c.shift(-lead[0], -lead[1]).restricted(window)


def series_compose(
    a: LaurentSeries,
    u: LaurentSeries,
    var: str = "s",
    window: Window | None = None,
) -> LaurentSeries:
    """Substitute u for the variable var of a.

    u must be quadrant honest with certified total valuation >= 1, so
    that its powers eventually leave every window and all per-bidegree
    sums are finite.  A bivariate a is handled stratum by stratum in the
    untouched variable.
    """
    if not u.honest:
        raise NonComposableError("substituted series must be quadrant honest")
    mt_u = u.certified_min_total()
    if mt_u is not None and mt_u < 1:
        raise NonComposableError(
            f"substituted series has total valuation {mt_u} < 1; "
            "powers would not be summable"
        )
    if not a.is_univariate(var):
        if not a.honest:
            raise NonComposableError(
                "bivariate composition needs a quadrant-honest left series"
            )
        other = "t" if var == "s" else "s"
        oidx = 0 if other == "s" else 1
        vidx = 1 - oidx
        strata: dict = {}
        for e, p in a.coeffs.items():
            strata.setdefault(e[oidx], {})[e[vidx]] = p
        result = None
        for oe in sorted(strata):
            s_max = _add_total(a.window.max_total, -oe)
            v_min = a.window.min_s if var == "s" else a.window.min_t
            if s_max is not None and v_min > s_max:
                continue  # no guaranteed coefficients in this stratum
            w = Window(
                v_min if var == "s" else 0,
                v_min if var == "t" else 0,
                s_max,
            )
            stratum = LaurentSeries(
                w,
                {
                    ((ve, 0) if var == "s" else (0, ve)): p
                    for ve, p in strata[oe].items()
                },
                honest_s=a.honest_s if var == "s" else True,
                honest_t=a.honest_t if var == "t" else True,
            )
            part = series_compose(stratum, u, var=var, window=window)
            part = part.shift(*((oe, 0) if other == "s" else (0, oe)))
            result = part if result is None else series_add(result, part)
        if result is None:
            result = LaurentSeries.zero() if window is None else LaurentSeries.truncated({}, window)
        # unknown strata and stratum tails: with val(u) >= 1 and lead total
        # L, everything unknown lands above a.max + min(0, v_min*(L-1))
        if a.window.max_total is not None:
            lead_total = 0
            if u.coeffs:
                le = _lex_lead(u)
                lead_total = le[0] + le[1]
            v_min = a.window.min_s if var == "s" else a.window.min_t
            cap = a.window.max_total + min(0, v_min * (lead_total - 1))
            w = Window(
                result.window.min_s,
                result.window.min_t,
                _min_total(result.window.max_total, cap),
            )
            result = LaurentSeries.truncated(result.coeffs, w, **result._flags())
        if window is not None:
            result = result.restricted(window)
        return result

    exps = a.univariate_coeffs(var)
    if not exps:
        if a.window.max_total is None:
            return LaurentSeries.zero()
        base = LaurentSeries.truncated({}, Window(0, 0, a.window.max_total * max(mt_u or 1, 1)))
        return base if window is None else base.restricted(window)
    if window is None and min(exps) < 0:
        if u.window.max_total is None:
            raise NonComposableError(
                "negative exponents with an exact substituted series need "
                "an explicit target window"
            )
        window = u.window

    pows: dict = {0: LaurentSeries.one()}

    def power(i: int) -> LaurentSeries:
        if i in pows:
            return pows[i]
        if i > 0:
            p = series_mul(power(i - 1), u)
        else:
            p = series_inverse(series_pow(u, -i), window=window)
        if window is not None and p.honest:
            p = p.restricted(window)
        pows[i] = p
        return p

    result = None
    for i in sorted(exps):
        term = power(i).scale(exps[i])
        result = term if result is None else series_add(result, term)

    # the unknown tail of a (exponents above its max_total) contributes
    # only at totals >= (max+1) * val(u)
    a_max = a.window.max_total
    if a_max is not None:
        cap = (a_max + 1) * (mt_u if mt_u is not None else 1) - 1
        w = Window(
            result.window.min_s,
            result.window.min_t,
            _min_total(result.window.max_total, cap),
        )
        result = LaurentSeries.truncated(result.coeffs, w, **result._flags())
    if window is not None:
        result = result.restricted(window)
    return result


def series_reversion(
    a: LaurentSeries, var: str = "t", max_total: int | None = None
) -> LaurentSeries:
    """Compositional inverse of a = v + (higher order), solved degree by degree."""
    if not a.is_univariate(var):
        raise BadValuationError(f"series is not univariate in {var}")
    coeffs = a.univariate_coeffs(var)
    if min(coeffs, default=0) < 1 or coeffs.get(1) != F2Poly.one():
        raise BadValuationError(
            "reversion needs a = v + higher terms with leading coefficient 1"
        )
    m = _min_total(a.window.max_total, max_total)
    if m is None:
        raise BadValuationError("reversion of an exact series needs an explicit max_total")

    a_uni = {e: p for e, p in coeffs.items() if e <= m}
    b = {1: F2Poly.one()}
    for d in range(2, m + 1):
        # coefficient of v^d in a(b) with the unknown b_d omitted; since
        # a starts with v, that coefficient is exactly the needed b_d
        comp_d = F2Poly.zero()
        bpow = dict(b)  # b^j truncated at degree d
        for j in range(1, d + 1):
            if j > 1:
                nxt: dict = {}
                for e1, p1 in bpow.items():
                    for e2, p2 in b.items():
                        e = e1 + e2
                        if e > d:
                            continue
                        q = nxt.get(e, F2Poly.zero()) + p1 * p2
                        if q.is_zero():
                            nxt.pop(e, None)
                        else:
                            nxt[e] = q
                bpow = nxt
            aj = a_uni.get(j)
            if aj is not None and d in bpow:
                comp_d = comp_d + aj * bpow[d]
        if not comp_d.is_zero():
            b[d] = comp_d

    terms = {((e, 0) if var == "s" else (0, e)): p for e, p in b.items()}
    w = Window(1 if var == "s" else 0, 1 if var == "t" else 0, m)
    return LaurentSeries(w, terms)


def residue(a: LaurentSeries, var: str) -> LaurentSeries:
    """The coefficient of var^{-1}, as a series in the other variable."""
    w = a.window
    if (w.min_s if var == "s" else w.min_t) > -1:
        raise WindowMissError(f"exponent -1 in {var} lies outside the window")
    coeffs = {}
    for (es, et), p in a.coeffs.items():
        if (es if var == "s" else et) == -1:
            coeffs[(0, et) if var == "s" else (es, 0)] = p
    max_total = _add_total(w.max_total, 1)
    if var == "s":
        new_w = Window(0, w.min_t, max_total)
        return LaurentSeries(new_w, coeffs, honest_s=True, honest_t=a.honest_t)
    new_w = Window(w.min_s, 0, max_total)
    return LaurentSeries(new_w, coeffs, honest_s=a.honest_s, honest_t=True)


def coefficient(a: LaurentSeries, es: int, et: int) -> F2Poly:
    return a.coefficient(es, et)
