"""Primes in arithmetic progressions for F_q[T]: counts per residue class.

Degree-N irreducibles distribute themselves almost evenly among the
invertible residue classes mod mu; the main term is q^N / (N * Phi_q(mu))
per class and the deviations shrink relative to it as N grows.

Run:  python demos/03_dirichlet_progressions.py
"""

from ffgcd import Poly, count_progression, make_field, parse_poly

F3 = make_field(3, 1)
mu = parse_poly("T^2+T", F3)  # T(T+1): 4 invertible classes

print("classes mod T(T+1) over F_3, exact counts vs main term:")
for N in range(3, 8):
    report = count_progression(F3, N, Poly.one(F3), mu, per_class=True)
    spread = max(report.per_class.values()) - min(report.per_class.values())
    print(f"  N={N}: {report.per_class}  main={float(report.main_term):8.2f}  "
          f"spread={spread}")

# a single class, reported with its exact rational deviation
report = count_progression(F3, 6, Poly.one(F3), mu)
print(f"\nclass pi = 1 (mod T(T+1)) at N=6: exact={report.exact_count}, "
      f"main term={report.main_term}, deviation={report.deviation}")

# CSV rows are the CLI hand-off format
print("\nCSV form (one row per class):")
print("class,exact,main_term,deviation")
for row in count_progression(F3, 5, Poly.one(F3), mu, per_class=True).to_csv_rows():
    print(",".join(row))
