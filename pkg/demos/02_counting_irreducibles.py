"""Irreducible polynomials behave like primes: counting them two ways.

The exact Moebius/necklace count (1/N) sum_{d|N} mu(d) q^{N/d} plays the
role of an analytic prime-counting formula; exhaustive enumeration must
agree with it wherever enumeration is feasible.

Run:  python demos/02_counting_irreducibles.py
"""

from ffgcd import (
    Poly,
    count_irreducibles_exact,
    enumerate_irreducibles,
    factorize,
    make_field,
    phi_q,
    poly_pow_sub1,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F5 = make_field(5, 1)

print("q=2, small degrees, in lexicographic order:")
for N in (1, 2, 3, 4):
    polys = [str(f) for f in enumerate_irreducibles(F2, N)]
    print(f"  N={N}: {polys}")

print("\nenumeration vs exact count (and the q^N/N main term):")
print("  q  N   enumerated  exact  q^N/N")
for ctx in (F2, F3, F5):
    for N in range(1, 7):
        enumerated = sum(1 for _ in enumerate_irreducibles(ctx, N))
        exact = count_irreducibles_exact(ctx.q, N)
        assert enumerated == exact
        print(f"  {ctx.q}  {N}   {enumerated:10d}  {exact:5d}  {ctx.q ** N / N:8.1f}")

# factorization: squarefree split + distinct degree + equal degree
f = poly_pow_sub1(Poly.T(F5), 24)  # T^24 - 1
fac = factorize(f)
degs = sorted(p.degree for p, _ in fac.factors)
print(f"\nT^24 - 1 over F_5 factors into {len(fac.factors)} distinct irreducibles,")
print(f"degrees {degs} (it splits over F_25, so nothing above degree 2)")
assert fac.expand() == f

# the unit-group order of F_q[T]/(mu), the polynomial Euler function
mu = Poly.T(F3) * (Poly.T(F3) + Poly.one(F3))
print(f"\nPhi_3(T(T+1)) = {phi_q(mu)}   (9 residues, minus the two linear-factor classes)")
