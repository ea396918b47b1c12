"""Monic irreducibles over F_q: testing, enumeration, counting, factorization.

Enumeration follows lexicographic coefficient order.  A monic polynomial of
degree N is identified with the base-q code of its N low coefficients, so
lexicographic order is ascending code order.  Small candidate spaces are
enumerated by sieving out composites (products of lower-degree irreducibles);
larger spaces fall back to a per-candidate Rabin test, which is also the
independent check exposed as :func:`is_irreducible`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import (
    ConstantModulus,
    EnumerationCapExceeded,
    NotCoprime,
    ZeroInput,
)
from .ffield import FieldCtx, FqElem, factor_int
from .fqpoly import (
    NEG_INF,
    Poly,
    _gcd_codes,
    _mul_codes,
    _rem_codes,
    format_poly,
    poly_gcd,
    poly_powmod,
)

DEFAULT_ENUMERATION_CAP = 1 << 26
_SIEVE_CAP = 1 << 22
_EDF_EXHAUSTIVE_CAP = 1 << 12


# ---------------------------------------------------------------------------
# irreducibility
# ---------------------------------------------------------------------------

def is_irreducible(f: Poly) -> bool:
    """Rabin's test: T^{q^N} = T mod f and gcd(T^{q^{N/s}} - T, f) = 1 for s | N."""
    if f.degree is NEG_INF:
        raise ZeroInput("irreducibility of the zero polynomial")
    n = f.degree
    if n == 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    ctx = f.ctx
    q = ctx.q
    t = Poly.T(ctx)
    for s in factor_int(n):
        h = poly_powmod(t, q ** (n // s), f)
        g = _gcd_codes(ctx, _sub_t(ctx, h), f.codes())
        if len(g) != 1:
            return False
    h = poly_powmod(t, q ** n, f)
    return _sub_t(ctx, h) == []


def _sub_t(ctx, h: Poly) -> list[int]:
    codes = list(h.codes())
    while len(codes) < 2:
        codes.append(0)
    codes[1] = ctx.sub(codes[1], 1)
    while codes and codes[-1] == 0:
        codes.pop()
    return codes


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _poly_from_code(ctx: FieldCtx, N: int, code: int) -> Poly:
    codes = []
    for _ in range(N):
        codes.append(code % ctx.q)
        code //= ctx.q
    codes.append(1)
    return Poly(ctx, codes)


def _code_from_poly(f: Poly) -> int:
    q = f.ctx.q
    code = 0
    cs = f.codes()
    for i in range(len(cs) - 2, -1, -1):
        code = code * q + cs[i]
    return code


def _irreducible_codes(ctx: FieldCtx, N: int, cache: dict[int, list[int]]) -> list[int]:
    """Sorted codes of all monic irreducibles of degree N (sieve, desk scale)."""
    if N in cache:
        return cache[N]
    q = ctx.q
    total = q ** N
    composite = bytearray(total)
    for d in range(1, N // 2 + 1):
        rest = N - d
        for ucode in _irreducible_codes(ctx, d, cache):
            u = list(_poly_from_code(ctx, d, ucode).codes())
            for vcode in range(q ** rest):
                v = []
                c = vcode
                for _ in range(rest):
                    v.append(c % q)
                    c //= q
                v.append(1)
                prod = _mul_codes(ctx, u, v)
                pcode = 0
                for i in range(N - 1, -1, -1):
                    pcode = pcode * q + prod[i]
                composite[pcode] = 1
    out = [c for c in range(total) if not composite[c]]
    cache[N] = out
    return out


def enumerate_irreducibles(
    ctx: FieldCtx,
    N: int,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    code_range: range | None = None,
) -> Iterator[Poly]:
    """All monic irreducibles of degree N in lexicographic order, streamed.

    ``code_range`` restricts the candidate codes scanned, which is how
    parallel scans partition the space; the full stream is the concatenation
    of the partitions in code order.
    """
    if N < 1:
        raise ZeroInput("degree must be >= 1")
    total = ctx.q ** N
    if total > enumeration_cap:
        raise EnumerationCapExceeded(
            f"q^N = {total} candidates exceed cap {enumeration_cap}")
    if code_range is None:
        code_range = range(total)
    if total <= _SIEVE_CAP:
        codes = _irreducible_codes(ctx, N, {})
        lo, hi = code_range.start, code_range.stop
        for c in codes:
            if lo <= c < hi:
                yield _poly_from_code(ctx, N, c)
    else:
        for c in code_range:
            f = _poly_from_code(ctx, N, c)
            if is_irreducible(f):
                yield f


def count_irreducibles_exact(q: int, N: int) -> int:
    """Necklace count (1/N) sum_{d|N} mu(d) q^{N/d}; exact for any q, N."""
    if N < 1:
        raise ZeroInput("degree must be >= 1")
    primes = list(factor_int(N))
    total = 0
    for mask in range(1 << len(primes)):
        d = 1
        sign = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                d *= p
                sign = -sign
        total += sign * q ** (N // d)
    assert total % N == 0
    return total // N


def enumerate_progression(
    ctx: FieldCtx,
    N: int,
    alpha: Poly,
    mu: Poly,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    code_range: range | None = None,
) -> Iterator[Poly]:
    """Members of the degree-N irreducible stream congruent to alpha mod mu."""
    if mu.degree is NEG_INF or mu.degree < 1:
        raise ConstantModulus("progression modulus must be nonconstant")
    if alpha.ctx != ctx or mu.ctx != ctx:
        raise NotCoprime("alpha and mu must live over the enumeration context")
    g = poly_gcd(alpha, mu) if alpha else None
    if g is None or g.degree != 0:
        raise NotCoprime(f"gcd(alpha, mu) != 1 for alpha={alpha}, mu={mu}")
    target = _rem_codes(ctx, alpha.codes(), mu.codes())
    for f in enumerate_irreducibles(ctx, N, enumeration_cap, code_range):
        if _rem_codes(ctx, f.codes(), mu.codes()) == target:
            yield f


@dataclass
class CountReport:
    """Exact progression count against the Dirichlet main term."""

    q: int
    N: int
    exact_count: int
    main_term: Fraction
    deviation: Fraction
    per_class: dict[str, int] | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "q": self.q,
            "N": self.N,
            "exact": self.exact_count,
            "main_term_num": self.main_term.numerator,
            "main_term_den": self.main_term.denominator,
            "deviation": str(self.deviation),
        }
        if self.per_class is not None:
            doc["classes"] = dict(self.per_class)
        return doc

    def to_csv_rows(self) -> list[list[str]]:
        rows = []
        if self.per_class is None:
            rows.append(["", str(self.exact_count), str(self.main_term), str(self.deviation)])
        else:
            for cls, cnt in self.per_class.items():
                rows.append([cls, str(cnt), str(self.main_term),
                             str(cnt - self.main_term)])
        return rows


def count_progression(
    ctx: FieldCtx,
    N: int,
    alpha: Poly,
    mu: Poly,
    per_class: bool = False,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> CountReport:
    """Count S_{q,N}(alpha, mu) and report the deviation from the main term."""
    if mu.degree is NEG_INF or mu.degree < 1:
        raise ConstantModulus("progression modulus must be nonconstant")
    g = poly_gcd(alpha, mu) if alpha else None
    if g is None or g.degree != 0:
        raise NotCoprime(f"gcd(alpha, mu) != 1 for alpha={alpha}, mu={mu}")
    phi = phi_q(mu)
    main = Fraction(ctx.q ** N, N * phi)
    target = _rem_codes(ctx, alpha.codes(), mu.codes())
    classes: dict[str, int] | None = None
    exact = 0
    if per_class:
        reps = invertible_residues(mu)
        counts = {r.codes(): 0 for r in reps}
        for f in enumerate_irreducibles(ctx, N, enumeration_cap):
            r = tuple(_rem_codes(ctx, f.codes(), mu.codes()))
            if r in counts:
                counts[r] += 1
        classes = {format_poly(r): counts[r.codes()] for r in reps}
        exact = counts[tuple(target)]
    else:
        for f in enumerate_irreducibles(ctx, N, enumeration_cap):
            if _rem_codes(ctx, f.codes(), mu.codes()) == target:
                exact += 1
    return CountReport(ctx.q, N, exact, main, exact - main, classes)


def invertible_residues(mu: Poly) -> list[Poly]:
    """Residues of degree < deg mu coprime to mu, ascending code order."""
    ctx = mu.ctx
    d = mu.degree
    out = []
    for code in range(ctx.q ** d):
        f = _residue_from_code(ctx, d, code)
        if not f:
            continue
        if poly_gcd(f, mu).degree == 0:
            out.append(f)
    return out


def _residue_from_code(ctx: FieldCtx, width: int, code: int) -> Poly:
    codes = []
    for _ in range(width):
        codes.append(code % ctx.q)
        code //= ctx.q
    return Poly(ctx, codes)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

@dataclass
class Factorization:
    """unit * product(prime^multiplicity) == the factored polynomial."""

    unit: FqElem
    factors: list[tuple[Poly, int]]

    def expand(self) -> Poly:
        ctx = self.unit.ctx
        out = Poly.constant(self.unit)
        for prime, e in self.factors:
            out = out * prime ** e
        return out


def factorize(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles.

    Squarefree decomposition (with p-th-root descent), then distinct-degree
    splitting, then equal-degree splitting: exhaustive trial division on tiny
    residue spaces, seeded Cantor-Zassenhaus otherwise.
    """
    if f.degree is NEG_INF:
        raise ZeroInput("cannot factor the zero polynomial")
    ctx = f.ctx
    unit = FqElem(ctx, f.lead_code)
    if f.degree == 0:
        return Factorization(unit, [])
    rng = random.Random(seed)
    work = f.monic()
    found: list[tuple[Poly, int]] = []
    for part, mult in _squarefree_parts(work):
        for block, d in _distinct_degree_parts(part):
            for prime in _equal_degree_split(block, d, rng):
                found.append((prime, mult))
    found.sort(key=lambda pe: (pe[0].degree, format_poly(pe[0])))
    return Factorization(unit, found)


def _pth_root(f: Poly) -> Poly:
    """Inverse of the Frobenius on polynomials with vanishing derivative."""
    ctx = f.ctx
    p = ctx.p
    root_pow = ctx.q // p  # c -> c^(q/p) inverts c -> c^p
    cs = f.codes()
    out = []
    for i in range(0, len(cs), p):
        out.append(ctx.pow(cs[i], root_pow))
    return Poly(ctx, out)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    from .fqpoly import derivative

    ctx = f.ctx
    p = ctx.p
    fp = derivative(f)
    if not fp:
        return [(g, e * p) for g, e in _squarefree_parts(_pth_root(f))]
    out: list[tuple[Poly, int]] = []
    c = poly_gcd(f, fp)
    w = f // c
    i = 1
    one = Poly.one(ctx)
    while w != one:
        y = poly_gcd(w, c)
        z = w // y
        if z != one:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c != one:
        out.extend((g, e * p) for g, e in _squarefree_parts(_pth_root(c)))
    return out


def _distinct_degree_parts(f: Poly) -> list[tuple[Poly, int]]:
    ctx = f.ctx
    q = ctx.q
    out = []
    h = Poly.T(ctx)
    rest = f
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = poly_powmod(h, q, rest)
        g = Poly(ctx, _gcd_codes(ctx, _sub_t(ctx, h), rest.codes()))
        if g.degree >= 1:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree >= 1:
        out.append((rest, rest.degree))
    return out


def _equal_degree_split(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a product of distinct degree-d irreducibles into its primes."""
    ctx = f.ctx
    if f.degree == d:
        return [f]
    if ctx.q ** d <= _EDF_EXHAUSTIVE_CAP:
        out = []
        rest = f
        for code in range(ctx.q ** d):
            if rest.degree < d:
                break
            cand = _poly_from_code(ctx, d, code)
            quo, rem = divmod(rest, cand)
            if not rem:
                out.append(cand)
                rest = quo
        assert rest.degree == 0
        return out
    # randomized Cantor-Zassenhaus
    pieces = [f]
    out = []
    while pieces:
        u = pieces.pop()
        if u.degree == d:
            out.append(u)
            continue
        split = _cz_split(u, d, rng)
        pieces.extend(split)
    out.sort(key=_code_from_poly)
    return out


def _cz_split(u: Poly, d: int, rng: random.Random) -> list[Poly]:
    ctx = u.ctx
    q = ctx.q
    one = Poly.one(ctx)
    while True:
        h = Poly(ctx, [rng.randrange(q) for _ in range(u.degree)])
        if h.degree is NEG_INF or h.degree == 0:
            continue
        g = poly_gcd(h, u)
        if g.degree >= 1 and g != u:
            return [g, u // g]
        if ctx.p == 2:
            # trace map over F_{2^e}
            e = d * ctx.m
            acc = h % u
            t = acc
            for _ in range(e - 1):
                t = poly_powmod(t, 2, u)
                acc = acc + t
            g = poly_gcd(acc, u) if acc else u
        else:
            w = poly_powmod(h, (q ** d - 1) // 2, u)
            g = poly_gcd(w - one, u) if w != one else u
        if g.degree >= 1 and g != u:
            return [g, u // g]


# ---------------------------------------------------------------------------
# Euler functions
# ---------------------------------------------------------------------------

def phi_q(mu: Poly) -> int:
    """Order of (F_q[T]/mu)^*: product of q^{d e} - q^{d(e-1)} over factors."""
    if mu.degree is NEG_INF:
        raise ZeroInput("phi of the zero polynomial")
    if mu.degree == 0:
        return 1
    q = mu.ctx.q
    total = 1
    for prime, e in factorize(mu).factors:
        d = prime.degree
        total *= q ** (d * e) - q ** (d * (e - 1))
    return total


def euler_phi_int(r: int) -> int:
    """Classical Euler totient by trial-division factorization."""
    if r < 1:
        raise ZeroInput("totient of a nonpositive integer")
    out = r
    for p in factor_int(r):
        out -= out // p
    return out
