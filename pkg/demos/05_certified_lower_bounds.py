"""The main pipeline: certify deg gcd(a^n - 1, b^n - 1) >= c*n on a schedule.

Given a target congruence class n0 mod q^k, plan_exponents picks the
smallest odd r with r*n0 = -1 (mod q^k) and the field size Q = q^(k*phi(r)).
For every exponent n = (Q^N - 1)/r, each degree-N monic irreducible
pi = 1 (mod LCM[a,b]) over F_Q divides both a^n - 1 and b^n - 1, so the
witness list certifies a lower bound on the gcd degree -- no expansion
needed, though we cross-check by expanding while it fits.

Run:  python demos/05_certified_lower_bounds.py
"""

from fractions import Fraction

from ffgcd import (
    Poly,
    lower_bound_constant,
    make_field,
    parse_poly,
    plan_exponents,
    witness_certificate,
)

# ---- run 1: q = 3, class n = 2 (mod 3); here r = 1, so Q = 3 --------------
F3 = make_field(3, 1)
a, b = Poly.T(F3), parse_poly("T+1", F3)
plan = plan_exponents(3, 1, 2)
print(f"plan for n = 2 (mod 3): r={plan.r}, Q={plan.Q}, n(Q^N) = (Q^N-1)/{plan.r}")

cert = witness_certificate(a, b, plan, N=4)
print(f"N=4 gives n={cert.n}; witnesses = S_(Q,4)(1, {cert.ell}):")
for w in cert.witnesses:
    print(f"  {w}")
print(f"certified: deg gcd >= {cert.witness_degree_sum}; "
      f"direct expansion says {cert.direct_degree}")
print(f"constant c = r/Phi_Q(l) = {cert.constant_c} and indeed "
      f"{cert.direct_degree} >= {Fraction(cert.n, 4)} = n/4\n")

# ---- run 2: q = 4, class n = 1 (mod 4); now r = 3 forces Q = 16 -----------
F4 = make_field(2, 2)
a4, b4 = Poly.T(F4), parse_poly("T+1", F4)
plan4 = plan_exponents(4, 1, 1)
print(f"plan for n = 1 (mod 4): r={plan4.r}, Q={plan4.Q}")
cert4 = witness_certificate(a4, b4, plan4, N=3)
print(f"N=3 gives n={cert4.n} = 1 (mod 4); {len(cert4.witnesses)} witnesses over F_16, "
      f"sum of degrees {cert4.witness_degree_sum}")
print(f"direct gcd degree at n=1365: {cert4.direct_degree}  "
      f"(c = {cert4.constant_c}, c*n = {float(cert4.constant_c * cert4.n):.1f})\n")

# ---- plans can be infeasible: Q is explicit but may be astronomical -------
plan_big = plan_exponents(7, 2, 3)
print(f"plan for n = 3 (mod 49): r={plan_big.r}, Q=7^{2 * 48} "
      f"({plan_big.Q.bit_length()} bits) -> feasible={plan_big.feasible}")
F7 = make_field(7, 1)
print("symbolic constant:",
      lower_bound_constant(plan_big, Poly.T(F7), parse_poly("T+1", F7)))
