"""r-th power residue symbols and the congruence condition behind them.

The symbol (alpha/pi)_r = alpha^((q^deg(pi)-1)/r) mod pi is a constant in
mu_r; it equals 1 exactly when alpha is an r-th power mod pi.  The key fact
the certificate machinery relies on: pi = 1 (mod mu) forces mu to be an
r-th power mod pi, for every odd r | q-1.

Run:  python demos/04_power_residues.py
"""

from ffgcd import (
    Poly,
    check_reciprocity,
    is_rth_power_mod_bruteforce,
    make_field,
    parse_poly,
    residue_symbol,
)

F7 = make_field(7, 1)
t = Poly.T(F7)

print("cubic residue symbols mod T over F_7 (i.e. of the constant terms):")
for a in range(1, 7):
    z = residue_symbol(parse_poly(str(a), F7), t, 3)
    tag = "cube" if z.code == 1 else "not a cube"
    brute = is_rth_power_mod_bruteforce(parse_poly(str(a), F7), t, 3)
    assert (z.code == 1) == brute
    print(f"  ({a}/T)_3 = {z}   -> {tag} (brute-force agrees)")

# The implication pi = 1 (mod mu)  =>  mu is an r-th power mod pi,
# checked exhaustively over all small-degree primes.
for ctx_name, ctx, mu_text in [("F_7", F7, "T"),
                               ("F_7", F7, "T^2+T"),
                               ("F_4", make_field(2, 2), "T^2+T")]:
    mu = parse_poly(mu_text, ctx)
    report = check_reciprocity(mu, 3, 4)
    print(f"{ctx_name}, mu={mu_text}, r=3, deg <= 4: tested {report.tested} primes, "
          f"{len(report.violations)} violations")
    assert not report.violations
