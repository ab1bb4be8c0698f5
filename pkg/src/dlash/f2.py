"""Scalar and polynomial arithmetic over GF(2).

Binomial parities (including generalized binomials with negative top
argument) and sparse multigraded polynomials.  These polynomials are the
coefficient ring for everything else in the package: generators are either
the graded generators z1, z2, ... (with deg z_i = 2^i - 1) or free symbols
carrying a declared integer degree.
"""

from __future__ import annotations

from functools import reduce
from math import comb, factorial
from typing import Iterable

# A generator is either ("z", i) for the i-th graded generator, or
# ("sym", name, degree) for a free symbol.  Exponent maps are stored as
# sorted tuples of (generator, exponent) pairs so monomials hash.
Generator = tuple
Monomial = tuple


def binom_mod2(top: int, bottom: int) -> int:
    """Parity of the generalized binomial coefficient C(top, bottom).

    For top >= 0 this is the Lucas-theorem parity.  For top < 0 we use
    C(-a, k) = (-1)^k C(a+k-1, k), and the sign disappears mod 2.
    Returns 0 for bottom < 0 and for bottom > top >= 0.
    """
    if bottom < 0:
        return 0
    if top < 0:
        top = -top + bottom - 1
    if bottom > top:
        return 0
    return 1 if (bottom & (top - bottom)) == 0 else 0


def binom_exact_parity(top: int, bottom: int) -> int:
    """Independent oracle: parity of the exact integer binomial, computed
    from the falling factorial so that negative tops are included."""
    if bottom < 0:
        return 0
    if top >= 0:
        return comb(top, bottom) & 1 if bottom <= top else 0
    num = 1
    for i in range(bottom):
        num *= top - i
    return (num // factorial(bottom)) & 1


def zeta_gen(i: int) -> Generator:
    if i < 1:
        raise ValueError(f"zeta index must be >= 1, got {i}")
    return ("z", i)


def symbol_gen(name: str, degree: int) -> Generator:
    return ("sym", name, degree)


def generator_degree(g: Generator) -> int:
    if g[0] == "z":
        return 2 ** g[1] - 1
    return g[2]


def _gen_sort_key(g: Generator):
    # graded generators first, by index, then free symbols by name
    if g[0] == "z":
        return (0, g[1], "")
    return (1, 0, g[1])


def generator_name(g: Generator) -> str:
    if g[0] == "z":
        return f"z{g[1]}"
    return g[1]


def monomial_degree(m: Monomial) -> int:
    return sum(generator_degree(g) * e for g, e in m)


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    exps: dict = {}
    for g, e in a:
        exps[g] = exps.get(g, 0) + e
    for g, e in b:
        exps[g] = exps.get(g, 0) + e
    return tuple(sorted(exps.items(), key=lambda p: _gen_sort_key(p[0])))


def _monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for g, e in m:
        parts.append(generator_name(g) if e == 1 else f"{generator_name(g)}^{e}")
    return " ".join(parts)


class F2Poly:
    """Sparse polynomial over GF(2): a finite set of monomials.

    Coefficients are implicitly 1; addition is symmetric difference, so
    cancellation in characteristic 2 is free.  Values are immutable.
    """

    __slots__ = ("monomials",)

    def __init__(self, monomials: Iterable[Monomial] = ()):
        object.__setattr__(self, "monomials", frozenset(monomials))

    def __setattr__(self, name, value):
        raise AttributeError("F2Poly is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "F2Poly":
        return _ZERO

    @staticmethod
    def one() -> "F2Poly":
        return _ONE

    @staticmethod
    def zeta(i: int, exp: int = 1) -> "F2Poly":
        if exp == 0:
            return _ONE
        return F2Poly([((zeta_gen(i), exp),)])

    @staticmethod
    def symbol(name: str, degree: int, exp: int = 1) -> "F2Poly":
        if exp == 0:
            return _ONE
        return F2Poly([((symbol_gen(name, degree), exp),)])

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(self.monomials ^ other.monomials)

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        acc: set = set()
        for ma in self.monomials:
            for mb in other.monomials:
                acc ^= {_mul_monomials(ma, mb)}
        return F2Poly(acc)

    def square(self) -> "F2Poly":
        # Frobenius: (sum m)^2 = sum m^2 in characteristic 2
        return F2Poly(
            tuple((g, 2 * e) for g, e in m) for m in self.monomials
        )

    def __pow__(self, k: int) -> "F2Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base.square()
            k >>= 1
        return result

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.monomials

    def is_one(self) -> bool:
        return self.monomials == frozenset({()})

    def degree_parts(self) -> dict:
        """Split into homogeneous components, keyed by degree."""
        parts: dict = {}
        for m in self.monomials:
            parts.setdefault(monomial_degree(m), set()).add(m)
        return {d: F2Poly(ms) for d, ms in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(self.degree_parts()) <= 1

    def augment(self) -> "F2Poly":
        """Kill every monomial containing a graded generator (z_i -> 0)."""
        return F2Poly(
            m for m in self.monomials if all(g[0] != "z" for g, _ in m)
        )

    def generators(self) -> set:
        return {g for m in self.monomials for g, _ in m}

    # -- canonical form -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Poly):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        ms = sorted(
            self.monomials,
            key=lambda m: (
                monomial_degree(m),
                tuple((_gen_sort_key(g), e) for g, e in m),
            ),
        )
        return " + ".join(_monomial_str(m) for m in ms)

    def __repr__(self) -> str:
        return f"F2Poly({self})"


_ZERO = F2Poly()
_ONE = F2Poly([()])


def poly_sum(polys: Iterable[F2Poly]) -> F2Poly:
    return reduce(lambda a, b: a + b, polys, _ZERO)
