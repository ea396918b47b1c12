"""Scanning deg gcd(a^n - 1, b^n - 1): spikes over F_q vs flatness over Z.

Over F_q[T] the gcd degree is tiny for most n but jumps to ~n along the
planned exponent families (n = q^N - 1 and relatives).  Over the integers
gcd(a^n - 1, b^n - 1) stays small throughout -- the table shows log(gcd)/n
drifting toward zero.  Between the two sits C[T], where the gcd degree is
bounded outright (not computed here; the scans make the contrast visible).

Run:  python demos/06_scans_and_trichotomy.py
"""

from ffgcd import (
    Poly,
    example1_identity,
    frobenius_scaling,
    integer_gcd_table,
    make_field,
    parse_poly,
    scan_degrees,
)

F5 = make_field(5, 1)
a, b = Poly.T(F5), parse_poly("T+1", F5)

print("deg gcd(T^n - 1, (T+1)^n - 1) over F_5, n = 1..30:")
rows = scan_degrees(a, b, 1, 30)
for n, d in rows:
    bar = "#" * d
    marker = "  <- n = 5^N - 1" if n in (4, 24) else ""
    print(f"  n={n:2d}  deg={d:2d} {bar}{marker}")

# the spike rows are the exact identity deg = n - 1
for N in (1, 2):
    rep = example1_identity(F5, N)
    print(f"n = 5^{N} - 1 = {rep.n}: deg gcd = {rep.gcd_degree} = n - 1, "
          f"identities hold: {rep.ok}")

# p | n contributes nothing new: the gcd is a p-th power of a smaller one
rep = frobenius_scaling(a, b, 6, 1)
print(f"\nFrobenius scaling at m=6, i=1 over F_5: "
      f"deg {rep.base_degree} -> {rep.scaled_degree} (exact p-th power: {rep.identity_ok})")

print("\ninteger comparison, gcd(2^n - 1, 3^n - 1): log(gcd)/n stays small")
table = integer_gcd_table(2, 3, 60)
peak = max(table, key=lambda row: row[2])
for n, g, v in table:
    if n % 12 == 0 or n == 1:
        print(f"  n={n:3d}  gcd={g:8d}  log(gcd)/n = {v:.4f}")
print(f"largest ratio up to n=60: {peak[2]:.4f} at n={peak[0]} "
      "(compare c*n growth over F_q[T])")
