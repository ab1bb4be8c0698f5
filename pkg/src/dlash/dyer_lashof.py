"""Power-operation calculus on graded classes.

Words Q^{i1}...Q^{ik} applied to a graded class symbol, with F2 sums,
instability (Q^i y = 0 for i < |y|), the Adem relations derived from the
residue formula, rewriting to admissible normal form, and an independent
oracle that re-derives the relations from the symmetry of the two-variable
iterated total operation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .f2 import binom_mod2
from .laurent import Window


class AlreadyAdmissibleError(Exception):
    pass


class RewriteLimitError(Exception):
    pass


@dataclass(frozen=True, order=True)
class GradedClass:
    name: str
    degree: int

    def __str__(self) -> str:
        return f"{self.name}[{self.degree}]"


@dataclass(frozen=True, order=True)
class DLMonomial:
    """A word of operations applied to a class: Q^{i1}...Q^{ik} x."""

    word: tuple
    klass: GradedClass

    def degree(self) -> int:
        return self.klass.degree + sum(self.word)

    def is_admissible(self) -> bool:
        return all(self.word[j] <= 2 * self.word[j + 1] for j in range(len(self.word) - 1))

    def is_instability_zero(self) -> bool:
        """True if some suffix applies Q^i to a class of degree > i."""
        d = self.klass.degree
        for i in reversed(self.word):
            if i < d:
                return True
            d += i
        return False

    def __str__(self) -> str:
        ops = " ".join(f"Q^{i}" for i in self.word)
        return f"{ops} {self.klass}" if ops else str(self.klass)


class DLSum:
    """F2-sum of monomials over a common class; set semantics gives cancellation."""

    __slots__ = ("klass", "words")

    def __init__(self, klass: GradedClass, words=()):
        object.__setattr__(self, "klass", klass)
        object.__setattr__(self, "words", frozenset(words))

    def __setattr__(self, name, value):
        raise AttributeError("DLSum is immutable")

    @staticmethod
    def of(*monomials: DLMonomial) -> "DLSum":
        if not monomials:
            raise ValueError("use DLSum(klass) for the zero sum")
        klass = monomials[0].klass
        words: frozenset = frozenset()
        for m in monomials:
            if m.klass != klass:
                raise ValueError("monomials lie over different classes")
            words = words ^ {m.word}
        return DLSum(klass, words)

    def monomials(self):
        return [DLMonomial(w, self.klass) for w in sorted(self.words)]

    def is_zero(self) -> bool:
        return not self.words

    def __add__(self, other: "DLSum") -> "DLSum":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.klass != other.klass:
            raise ValueError("sums lie over different classes")
        return DLSum(self.klass, self.words ^ other.words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DLSum):
            return NotImplemented
        return self.words == other.words and (not self.words or self.klass == other.klass)

    def __hash__(self) -> int:
        return hash(self.words)

    def __str__(self) -> str:
        if not self.words:
            return "0"
        return " + ".join(str(m) for m in self.monomials())

    def __repr__(self) -> str:
        return f"DLSum({self})"


@dataclass(frozen=True)
class AdemRelation:
    """Rewriting rule Q^i Q^j -> sum of Q^{i+j-l} Q^l for a non-admissible pair."""

    lhs: tuple
    rhs: frozenset  # set of (a, b) index pairs, each with coefficient 1

    def __str__(self) -> str:
        i, j = self.lhs
        if not self.rhs:
            return f"Q^{i} Q^{j} = 0"
        terms = " + ".join(f"Q^{a} Q^{b}" for a, b in sorted(self.rhs))
        return f"Q^{i} Q^{j} = {terms}"


def adem_relation(i: int, j: int) -> AdemRelation:
    """Rewrite of a non-admissible pair via the residue-extracted formula.

    The l-range comes from requiring both binomial arguments sensible and
    the leading index nonnegative; instability trims further at
    application time, not here.
    """
    if i <= 2 * j:
        raise AlreadyAdmissibleError(f"Q^{i} Q^{j} is already admissible")
    lo = (i + 1) // 2
    rhs = frozenset(
        (i + j - l, l)
        for l in range(lo, i + j + 1)
        if binom_mod2(l - j - 1, 2 * l - i)
    )
    return AdemRelation((i, j), rhs)


_memo: dict = {}
_memo_lock = threading.Lock()


def _reduce_word(word: tuple, degree: int, budget: list) -> frozenset:
    """Set of admissible words equal to the input modulo the rewriting system."""
    key = (word, degree)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    budget[0] -= 1
    if budget[0] < 0:
        raise RewriteLimitError(f"rewrite budget exhausted at word {word}")
    if DLMonomial(word, GradedClass("_", degree)).is_instability_zero():
        result: frozenset = frozenset()
    else:
        pos = next(
            (p for p in range(len(word) - 1) if word[p] > 2 * word[p + 1]), None
        )
        if pos is None:
            result = frozenset({word})
        else:
            rel = adem_relation(word[pos], word[pos + 1])
            acc: frozenset = frozenset()
            for a, b in rel.rhs:
                rewritten = word[:pos] + (a, b) + word[pos + 2:]
                acc = acc ^ _reduce_word(rewritten, degree, budget)
            result = acc
    with _memo_lock:
        _memo[key] = result
    return result


def reduce_to_admissible(m, step_limit: int = 2_000_000) -> DLSum:
    """Admissible normal form: leftmost non-admissible pair first, memoized."""
    if isinstance(m, DLMonomial):
        m = DLSum.of(m)
    budget = [step_limit]
    words: frozenset = frozenset()
    for w in m.words:
        words = words ^ _reduce_word(w, m.klass.degree, budget)
    return DLSum(m.klass, words)


def clear_rewrite_cache() -> None:
    with _memo_lock:
        _memo.clear()


def total_power_series(x: GradedClass, window: Window) -> dict:
    """Bidegree table of Q(t)Q(s)x expanded through s -> s + s^2 t^{-1}.

    Q(t)Q(s)x = sum over i, j of (Q^i Q^j x)(s + s^2 t^{-1})^j t^i; the
    term picking k of the s^2 t^{-1} factors lands in bidegree
    (j + k, i - k) with multiplicity C(j, k).  Returns a map from
    (e_s, e_t) inside the window to the (finite) DLSum there; monomials
    killed by instability are omitted.
    """
    n = x.degree
    table: dict = {}
    if window.max_total is None:
        raise ValueError("total power series needs a finite window")
    for es in range(max(window.min_s, 0), window.max_total - window.min_t + 1):
        for et in range(window.min_t, window.max_total - es + 1):
            words = set()
            for k in range(0, es // 2 + 1):
                j = es - k
                i = et + k
                if j < n or i < n + j:
                    continue  # instability zero
                if binom_mod2(j, k):
                    words ^= {(i, j)}
            if words:
                table[(es, et)] = DLSum(x, words)
    return table


def symmetry_extract_relations(x: GradedClass, window: Window) -> list:
    """Relations forced by symmetry of Q(t)Q(s)x in s and t.

    For each unordered bidegree pair {(a,b),(b,a)} in the window, the sum
    coeff(a,b) + coeff(b,a) must vanish; every nonzero such sum is a
    relation among length-2 words.
    """
    table = total_power_series(x, window)
    zero = DLSum(x)
    relations = []
    seen = set()
    for a, b in table:
        if (a, b) in seen or (b, a) in seen:
            continue
        seen.add((a, b))
        if not window.contains(b, a):
            continue
        rel = table.get((a, b), zero) + table.get((b, a), zero)
        if not rel.is_zero():
            relations.append(rel)
    return relations


def derive_relations_by_elimination(x: GradedClass, degree_bound: int) -> dict:
    """Independent oracle: solve the symmetry relations by Gaussian
    elimination over F2, expressing each non-admissible pair through
    admissible ones.

    Works degree by degree in d = i + j <= degree_bound; returns a map
    (i, j) -> frozenset of admissible pairs.  Non-admissible columns are
    eliminated first so each pivot row reads off one rewrite.
    """
    n = x.degree
    window = Window(0, -degree_bound, degree_bound)
    relations = symmetry_extract_relations(x, window)
    by_degree: dict = {}
    for rel in relations:
        d = sum(next(iter(rel.words)))
        if d <= degree_bound:
            by_degree.setdefault(d, []).append(rel)

    solved: dict = {}
    for d, rels in by_degree.items():
        # nonzero length-2 words of total degree d, non-admissible first
        pairs = [
            (i, d - i)
            for i in range(d + 1)
            if d - i >= n and i >= n + (d - i)
        ]
        pairs.sort(key=lambda p: (p[0] <= 2 * p[1], p))
        col = {p: c for c, p in enumerate(pairs)}
        rows = []
        for rel in rels:
            vec = 0
            for w in rel.words:
                vec ^= 1 << col[w]
            if vec:
                rows.append(vec)
        # Gaussian elimination, lowest column index = leading
        pivots: dict = {}
        for vec in rows:
            while vec:
                lead = (vec & -vec).bit_length() - 1
                if lead in pivots:
                    vec ^= pivots[lead]
                else:
                    pivots[lead] = vec
                    break
        # back-substitute to reduced form
        for lead in sorted(pivots, reverse=True):
            for other in pivots:
                if other != lead and pivots[other] >> lead & 1:
                    pivots[other] ^= pivots[lead]
        for lead, vec in pivots.items():
            p = pairs[lead]
            if p[0] <= 2 * p[1]:
                continue  # pivot on an admissible word: not a rewrite
            rest = frozenset(
                pairs[c] for c in range(len(pairs)) if c != lead and vec >> c & 1
            )
            solved[p] = rest
    return solved


def cartan_expand(n: int, x: GradedClass, y: GradedClass) -> frozenset:
    """Terms of Q^n(x (x) y) = sum over i+j=n of Q^i x (x) Q^j y.

    Returns pairs of formal monomials; summands killed by instability are
    dropped, but squaring is left formal (classes here generate a free
    module, so collapsing Q^{|x|}x to x^2 would lose relations).
    """
    return frozenset(
        (DLMonomial((i,), x), DLMonomial((n - i,), y))
        for i in range(x.degree, n - y.degree + 1)
    )
