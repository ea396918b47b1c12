"""Exponent plans, witness certificates, and gcd-degree experiments.

This is the engine behind the certified lower bounds: given a target
congruence class n0 mod q^k, it builds the exponent family n(Q^N) whose
members provably give deg gcd(a^n - 1, b^n - 1) >= c*n, enumerates the
witness primes over the enlarged field F_Q, and cross-checks against the
directly computed gcd degree whenever the expansion fits under the degree
cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    Constant,
    DegreeCapExceeded,
    InfeasiblePlan,
    MixedContexts,
    MultiplicativelyDependent,
    N0NotReduced,
    NotMonic,
)
from .ffield import (
    DEFAULT_CARDINALITY_CAP,
    FieldCtx,
    factor_int,
    make_embedding,
    make_field,
    prime_power_split,
)
from .fqpoly import (
    DEFAULT_DEGREE_CAP,
    NEG_INF,
    Poly,
    format_poly,
    lift_poly,
    poly_gcd,
    poly_lcm,
    poly_pow_sub1,
    poly_powmod,
)
from .irreducibles import (
    DEFAULT_ENUMERATION_CAP,
    enumerate_progression,
    euler_phi_int,
    factorize,
    phi_q,
)


# ---------------------------------------------------------------------------
# exponent plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentPlan:
    """The data (r, Q, N -> n(Q^N)) placing exponents in n0 mod q^k.

    r is the smallest odd positive integer with r*n1 = -1 (mod q^k) for the
    p-free part n1 of n0, and Q = q^(k*phi(r)).  Every n(Q^N) =
    p^i*(Q^N-1)/r then lies in the class n0 mod q^k.
    """

    base_q: int
    char_p: int
    ext_m: int
    k: int
    n0: int
    p_power_i: int
    n1: int
    r: int
    Q: int
    feasible: bool

    def exponent(self, N: int) -> int:
        return self.char_p ** self.p_power_i * (self.Q ** N - 1) // self.r

    @property
    def field_degree(self) -> int:
        """Extension degree of F_Q over the prime field."""
        return self.ext_m * self.k * euler_phi_int(self.r)

    def to_json_dict(self) -> dict:
        return {
            "q": self.base_q,
            "k": self.k,
            "n0": self.n0,
            "p": self.char_p,
            "i": self.p_power_i,
            "n1": self.n1,
            "r": self.r,
            "Q": self.Q,
            "feasible": self.feasible,
        }


def plan_exponents(
    base_q: int,
    k: int,
    n0: int,
    cardinality_cap: int = DEFAULT_CARDINALITY_CAP,
) -> ExponentPlan:
    """Solve for the smallest odd r with r*n1 = -1 (mod q^k) and set Q.

    n0 = 0 is rejected: it admits no decomposition p^i * n1 with p-free n1.
    An oversized Q marks the plan infeasible but is still returned.
    """
    p, m = prime_power_split(base_q)
    if k < 1:
        raise N0NotReduced(f"k must be >= 1, got {k}")
    qk = base_q ** k
    if not 0 <= n0 < qk:
        raise N0NotReduced(f"n0 must lie in [0, q^k) = [0, {qk}), got {n0}")
    if n0 == 0:
        raise N0NotReduced("n0 = 0 has no p-free decomposition; use 1 <= n0 < q^k")
    i = 0
    n1 = n0
    while n1 % p == 0:
        n1 //= p
        i += 1
    r = (-pow(n1, -1, qk)) % qk
    if r % 2 == 0:
        r += qk
    Q = base_q ** (k * euler_phi_int(r))
    return ExponentPlan(
        base_q=base_q, char_p=p, ext_m=m, k=k, n0=n0,
        p_power_i=i, n1=n1, r=r, Q=Q,
        feasible=Q <= cardinality_cap,
    )


# ---------------------------------------------------------------------------
# direct gcd degrees
# ---------------------------------------------------------------------------

def _require_monic_nonconstant(f: Poly, name: str):
    if f.degree is NEG_INF or f.degree < 1:
        raise Constant(f"{name} must be nonconstant")
    if not f.is_monic():
        raise NotMonic(f"{name} must be monic")


def gcd_degree_direct(a: Poly, b: Poly, n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Exact deg gcd(a^n - 1, b^n - 1) by expansion.

    The p-part of n is peeled off first: the gcd at n = p^j * n' is the
    p^j-th power of the gcd at n', so only the p-free exponent is expanded.
    """
    _require_monic_nonconstant(a, "a")
    _require_monic_nonconstant(b, "b")
    if n < 1:
        raise ValueError("exponent must be >= 1")
    p = a.ctx.p
    j = 0
    while n % p == 0:
        n //= p
        j += 1
    required = n * max(a.degree, b.degree)
    if required > degree_cap:
        raise DegreeCapExceeded(required, degree_cap)
    A = poly_pow_sub1(a, n, degree_cap)
    B = poly_pow_sub1(b, n, degree_cap)
    d = poly_gcd(A, B).degree
    d = 0 if d is NEG_INF else d
    return p ** j * d


# ---------------------------------------------------------------------------
# witness certificates
# ---------------------------------------------------------------------------

@dataclass
class GcdCertificate:
    """A proven lower bound deg gcd(a^n-1, b^n-1) >= witness_degree_sum.

    The witnesses are the degree-N members of S_{Q,N}(1, ell) for
    ell = LCM[a, b]; each is re-verified to divide both a^n - 1 and
    b^n - 1 over F_Q, so the product of the (distinct) witnesses divides
    the gcd and its degree bounds the gcd degree from below.
    """

    a: Poly
    b: Poly
    plan: ExponentPlan
    N: int
    n: int
    ell: Poly
    witness_field: FieldCtx
    witnesses: list[Poly]
    witness_degree_sum: int
    phi_Q_ell: int
    constant_c: Fraction
    direct_degree: int | None
    seed: int

    def to_json_dict(self) -> dict:
        doc = {
            "q": self.plan.base_q,
            "k": self.plan.k,
            "n0": self.plan.n0,
            "r": self.plan.r,
            "Q": self.plan.Q,
            "N": self.N,
            "n": self.n,
            "a": format_poly(self.a),
            "b": format_poly(self.b),
            "ell": format_poly(self.ell),
            "phi_Q_ell": self.phi_Q_ell,
            "c_num": self.constant_c.numerator,
            "c_den": self.constant_c.denominator,
            "witnesses": [format_poly(w) for w in self.witnesses],
            "witness_degree_sum": self.witness_degree_sum,
            "seed": self.seed,
        }
        if self.direct_degree is not None:
            doc["direct_degree"] = self.direct_degree
        return doc


def _partitioned_progression(ctx, N, alpha, mu, enumeration_cap, threads) -> list[Poly]:
    total = ctx.q ** N
    threads = max(1, min(threads, total))
    if threads == 1:
        return list(enumerate_progression(ctx, N, alpha, mu, enumeration_cap))
    from concurrent.futures import ThreadPoolExecutor

    step = (total + threads - 1) // threads
    parts = [range(lo, min(lo + step, total)) for lo in range(0, total, step)]

    def worker(chunk):
        return list(enumerate_progression(ctx, N, alpha, mu, enumeration_cap, chunk))

    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        chunks = list(pool.map(worker, parts))
    return [pi for chunk in chunks for pi in chunk]


def witness_certificate(
    a: Poly,
    b: Poly,
    plan: ExponentPlan,
    N: int,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    cardinality_cap: int = DEFAULT_CARDINALITY_CAP,
    seed: int = 0,
    threads: int = 1,
) -> GcdCertificate:
    """Build and verify the witness set S_{Q,N}(1, ell) for the planned exponent.

    ``threads`` splits the candidate space into that many contiguous code
    ranges searched concurrently; the witness list is identical for every
    value.
    """
    _require_monic_nonconstant(a, "a")
    _require_monic_nonconstant(b, "b")
    if a.ctx != b.ctx:
        raise MixedContexts("a and b must share a context")
    if N < 1:
        raise ValueError("N must be >= 1")
    if a.ctx.q != plan.base_q:
        raise InfeasiblePlan(
            f"plan was made for q = {plan.base_q}, polynomials live over q = {a.ctx.q}")
    if not plan.feasible or plan.Q > cardinality_cap:
        raise InfeasiblePlan(
            f"witness field F_Q with Q = {plan.Q} exceeds the cardinality cap",
            required_q=plan.Q)
    big = make_field(a.ctx.p, plan.field_degree, cardinality_cap)
    emb = make_embedding(a.ctx, big)
    ell = poly_lcm(a, b)
    ell_big = lift_poly(ell, emb)
    a_big = lift_poly(a, emb)
    b_big = lift_poly(b, emb)
    n = plan.exponent(N)
    one = Poly.one(big)
    witnesses = _partitioned_progression(big, N, one, ell_big, enumeration_cap, threads)
    for pi in witnesses:
        ok_a = poly_powmod(a_big, n, pi) == one
        ok_b = poly_powmod(b_big, n, pi) == one
        assert ok_a and ok_b, f"witness {format_poly(pi)} failed verification"
    phi = phi_q(ell_big)
    c = Fraction(plan.r, phi)
    try:
        direct = gcd_degree_direct(a, b, n, degree_cap)
    except DegreeCapExceeded:
        direct = None
    return GcdCertificate(
        a=a, b=b, plan=plan, N=N, n=n, ell=ell,
        witness_field=big, witnesses=witnesses,
        witness_degree_sum=N * len(witnesses),
        phi_Q_ell=phi, constant_c=c, direct_degree=direct, seed=seed,
    )


def lower_bound_constant(plan: ExponentPlan, a: Poly, b: Poly,
                         cardinality_cap: int = DEFAULT_CARDINALITY_CAP):
    """The certified constant r / Phi_Q(LCM[a, b]).

    Returns an exact Fraction when F_Q is constructible under the cap;
    otherwise a symbolic string with Q spelled as q^(k*phi(r)).
    """
    _require_monic_nonconstant(a, "a")
    _require_monic_nonconstant(b, "b")
    ell = poly_lcm(a, b)
    if not plan.feasible or plan.Q > cardinality_cap:
        return f"{plan.r}/Phi_{{{plan.base_q}^{plan.k * euler_phi_int(plan.r)}}}({format_poly(ell)})"
    big = make_field(a.ctx.p, plan.field_degree, cardinality_cap)
    emb = make_embedding(a.ctx, big)
    return Fraction(plan.r, phi_q(lift_poly(ell, emb)))


# ---------------------------------------------------------------------------
# the introductory example and the Frobenius identity
# ---------------------------------------------------------------------------

@dataclass
class Example1Report:
    """Exact verification of the T / T+1 example at n = q^N - 1."""

    q: int
    N: int
    n: int
    gcd_degree: int
    shift_identity_ok: bool   # (T+1)^n - 1 == T*(T^n - 1)/(T+1)
    gcd_identity_ok: bool     # gcd == (T^n - 1)/(T+1)
    degree_ok: bool           # deg gcd == n - 1

    @property
    def ok(self) -> bool:
        return self.shift_identity_ok and self.gcd_identity_ok and self.degree_ok

    def to_json_dict(self) -> dict:
        return {
            "q": self.q, "N": self.N, "n": self.n,
            "gcd_degree": self.gcd_degree,
            "shift_identity_ok": self.shift_identity_ok,
            "gcd_identity_ok": self.gcd_identity_ok,
            "degree_ok": self.degree_ok,
            "ok": self.ok,
        }


def example1_identity(ctx: FieldCtx, N: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> Example1Report:
    """Check the three exact identities for a = T, b = T+1, n = q^N - 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    n = ctx.q ** N - 1
    if n > degree_cap:
        raise DegreeCapExceeded(n, degree_cap)
    t = Poly.T(ctx)
    t1 = Poly(ctx, [1, 1])
    A = poly_pow_sub1(t, n, degree_cap)
    B = poly_pow_sub1(t1, n, degree_cap)
    quo, rem = divmod(A.shift(1), t1)  # T*(T^n - 1) / (T+1)
    shift_ok = (not rem) and quo == B
    quo2, rem2 = divmod(A, t1)
    G = poly_gcd(A, B)
    gcd_ok = (not rem2) and G == quo2.monic()
    return Example1Report(
        q=ctx.q, N=N, n=n, gcd_degree=int(G.degree),
        shift_identity_ok=shift_ok, gcd_identity_ok=gcd_ok,
        degree_ok=G.degree == n - 1,
    )


@dataclass
class FrobeniusReport:
    """Exact check that gcd(a^(m p^i)-1, b^(m p^i)-1) = gcd(a^m-1, b^m-1)^(p^i)."""

    p: int
    m: int
    i: int
    base_degree: int
    scaled_degree: int
    identity_ok: bool

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.scaled_degree == self.p ** self.i * self.base_degree

    def to_json_dict(self) -> dict:
        return {
            "p": self.p, "m": self.m, "i": self.i,
            "base_degree": self.base_degree,
            "scaled_degree": self.scaled_degree,
            "identity_ok": self.identity_ok,
            "ok": self.ok,
        }


def frobenius_scaling(a: Poly, b: Poly, m: int, i: int,
                      degree_cap: int = DEFAULT_DEGREE_CAP) -> FrobeniusReport:
    """Verify the exponent-scaling identity by expanding both sides."""
    _require_monic_nonconstant(a, "a")
    _require_monic_nonconstant(b, "b")
    if m < 1 or i < 0:
        raise ValueError("need m >= 1 and i >= 0")
    p = a.ctx.p
    big_exp = m * p ** i
    required = big_exp * max(a.degree, b.degree)
    if required > degree_cap:
        raise DegreeCapExceeded(required, degree_cap)
    G_small = poly_gcd(poly_pow_sub1(a, m, degree_cap), poly_pow_sub1(b, m, degree_cap))
    G_big = poly_gcd(poly_pow_sub1(a, big_exp, degree_cap),
                     poly_pow_sub1(b, big_exp, degree_cap))
    lhs_deg = 0 if G_big.degree is NEG_INF else int(G_big.degree)
    rhs = G_small ** (p ** i)
    base_deg = 0 if G_small.degree is NEG_INF else int(G_small.degree)
    return FrobeniusReport(
        p=p, m=m, i=i, base_degree=base_deg, scaled_degree=lhs_deg,
        identity_ok=G_big == rhs,
    )


# ---------------------------------------------------------------------------
# multiplicative independence and scans
# ---------------------------------------------------------------------------

def multiplicative_independence(a: Poly, b: Poly, seed: int = 0) -> bool:
    """True iff no relation a^i = b^j with (i, j) != (0, 0).

    Decided on the factor-exponent vectors: a dependence exists exactly when
    the two vectors are parallel over the rationals.
    """
    _require_monic_nonconstant(a, "a")
    _require_monic_nonconstant(b, "b")
    fa = {f.codes(): e for f, e in factorize(a, seed).factors}
    fb = {f.codes(): e for f, e in factorize(b, seed).factors}
    primes = sorted(set(fa) | set(fb))
    u = [fa.get(p, 0) for p in primes]
    v = [fb.get(p, 0) for p in primes]
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if u[i] * v[j] != u[j] * v[i]:
                return True
    return False


def scan_degrees(a: Poly, b: Poly, n_from: int, n_to: int,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> list[tuple[int, int]]:
    """Exact deg gcd(a^n - 1, b^n - 1) for each n in [n_from, n_to]."""
    if n_from < 1 or n_to < n_from:
        raise ValueError("need 1 <= n_from <= n_to")
    return [(n, gcd_degree_direct(a, b, n, degree_cap)) for n in range(n_from, n_to + 1)]


def integer_gcd_table(a_int: int, b_int: int, n_max: int) -> list[tuple[int, int, float]]:
    """Rows (n, gcd(a^n-1, b^n-1), log(gcd)/n) over the integers.

    Qualitative companion to the polynomial scans; no growth bound is
    asserted because none is desk-verifiable.
    """
    if a_int < 2 or b_int < 2:
        raise ValueError("need a, b >= 2")
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    if not _int_mult_independent(a_int, b_int):
        raise MultiplicativelyDependent(f"{a_int} and {b_int} are multiplicatively dependent")
    rows = []
    pa, pb = 1, 1
    for n in range(1, n_max + 1):
        pa *= a_int
        pb *= b_int
        g = math.gcd(pa - 1, pb - 1)
        rows.append((n, g, math.log(g) / n if g > 1 else 0.0))
    return rows


def _int_mult_independent(a: int, b: int) -> bool:
    fa = factor_int(a)
    fb = factor_int(b)
    primes = sorted(set(fa) | set(fb))
    u = [fa.get(p, 0) for p in primes]
    v = [fb.get(p, 0) for p in primes]
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if u[i] * v[j] != u[j] * v[i]:
                return True
    return False
