"""r-th power residue symbols in F_q[T] and the reciprocity implication.

Only the direction the lower-bound construction needs is implemented and
verified: for odd r | q-1, every monic irreducible pi congruent to 1 modulo
mu has mu as an r-th power in its residue field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConstantModulus,
    EvenR,
    NotIrreducible,
    RNotDividingQMinus1,
)
from .ffield import FqElem
from .fqpoly import NEG_INF, Poly, format_poly, poly_gcd, poly_powmod
from .irreducibles import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_progression,
    is_irreducible,
)


def _check_symbol_args(pi: Poly, r: int):
    q = pi.ctx.q
    if r < 1 or (q - 1) % r != 0:
        raise RNotDividingQMinus1(f"r = {r} does not divide q - 1 = {q - 1}")
    if not pi.is_monic() or not is_irreducible(pi):
        raise NotIrreducible(f"pi = {format_poly(pi)} is not monic irreducible")


def residue_symbol(alpha: Poly, pi: Poly, r: int) -> FqElem:
    """The unique zeta in F_q* with alpha^((q^deg(pi)-1)/r) = zeta mod pi.

    Returns the zero element when pi divides alpha (the conventional total
    extension of the symbol).
    """
    _check_symbol_args(pi, r)
    ctx = pi.ctx
    if not alpha or poly_gcd(alpha, pi).degree >= 1:
        return ctx.zero
    e = (ctx.q ** pi.degree - 1) // r
    zeta = poly_powmod(alpha, e, pi)
    assert zeta.degree == 0, "residue symbol did not reduce to a constant"
    return FqElem(ctx, zeta.coeff_code(0))


def is_rth_power_mod(mu: Poly, pi: Poly, r: int) -> bool:
    """True iff mu is an r-th power modulo pi (symbol equals 1)."""
    return residue_symbol(mu, pi, r).code == 1


def is_rth_power_mod_bruteforce(mu: Poly, pi: Poly, r: int) -> bool:
    """Independent oracle: search all residues X for X^r = mu (mod pi).

    Only valid on residue rings with at most 2^16 elements; used to
    cross-check the symbol computation.
    """
    ctx = pi.ctx
    size = ctx.q ** pi.degree
    if size > 1 << 16:
        raise ValueError("brute-force search capped at 2^16 residues")
    target = mu % pi
    for code in range(1, size):
        codes = []
        c = code
        for _ in range(pi.degree):
            codes.append(c % ctx.q)
            c //= ctx.q
        x = Poly(ctx, codes)
        if poly_powmod(x, r, pi) == target:
            return True
    return False


@dataclass
class ReciprocityReport:
    """Outcome of checking the reciprocity implication on an initial segment."""

    q: int
    r: int
    mu: Poly
    degree_bound: int
    tested: int
    violations: list[Poly]

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "mu": format_poly(self.mu),
            "bound": self.degree_bound,
            "tested": self.tested,
            "violations": [format_poly(v) for v in self.violations],
        }


def check_reciprocity(
    mu: Poly,
    r: int,
    degree_bound: int,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> ReciprocityReport:
    """Test every pi = 1 (mod mu) of degree <= bound for the r-th power claim.

    The theorem asserts the violation list is empty; a nonempty list is
    reported, not raised, so callers can inspect counterexample candidates.
    """
    ctx = mu.ctx
    if r % 2 == 0:
        raise EvenR(f"r = {r} must be odd")
    if (ctx.q - 1) % r != 0:
        raise RNotDividingQMinus1(f"r = {r} does not divide q - 1 = {ctx.q - 1}")
    if mu.degree is NEG_INF or mu.degree < 1:
        raise ConstantModulus("reciprocity modulus must be nonconstant")
    one = Poly.one(ctx)
    tested = 0
    violations: list[Poly] = []
    for N in range(1, degree_bound + 1):
        for pi in enumerate_progression(ctx, N, one, mu, enumeration_cap):
            tested += 1
            if not is_rth_power_mod(mu, pi, r):
                violations.append(pi)
    return ReciprocityReport(ctx.q, r, mu, degree_bound, tested, violations)
