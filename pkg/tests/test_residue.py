import pytest

from ffgcd import (
    Poly,
    check_reciprocity,
    enumerate_irreducibles,
    is_rth_power_mod,
    is_rth_power_mod_bruteforce,
    make_field,
    parse_poly,
    residue_symbol,
)
from ffgcd.errors import EvenR, NotIrreducible, RNotDividingQMinus1
from ffgcd.irreducibles import _poly_from_code

F4 = make_field(2, 2)
F7 = make_field(7, 1)


def _residues(ctx, pi):
    for code in range(ctx.q ** pi.degree):
        yield _poly_from_code(ctx, pi.degree, code) - Poly.T(ctx) ** pi.degree


class TestResidueSymbol:
    def test_one_is_always_a_power(self):
        for ctx, r in [(F7, 3), (F4, 3)]:
            for N in (1, 2):
                for pi in enumerate_irreducibles(ctx, N):
                    assert residue_symbol(Poly.one(ctx), pi, r) == ctx.one

    def test_f7_noncube(self):
        assert residue_symbol(parse_poly("2", F7), Poly.T(F7), 3) == F7.elem(4)

    def test_f7_cube(self):
        assert residue_symbol(parse_poly("6", F7), Poly.T(F7), 3) == F7.one

    def test_zero_convention(self):
        assert residue_symbol(Poly.T(F7), Poly.T(F7), 3) == F7.zero

    def test_bad_r(self):
        with pytest.raises(RNotDividingQMinus1):
            residue_symbol(parse_poly("2", F7), Poly.T(F7), 4)

    def test_reducible_pi(self):
        with pytest.raises(NotIrreducible):
            residue_symbol(parse_poly("2", F7), parse_poly("T^2+T", F7), 3)

    def test_symbol_is_rth_root_of_unity(self):
        # exhaustive: every nonzero symbol lands in mu_r
        for ctx, r in [(F7, 3), (F4, 3)]:
            for N in (1, 2):
                for pi in enumerate_irreducibles(ctx, N):
                    for alpha in _residues(ctx, pi):
                        z = residue_symbol(alpha, pi, r)
                        if z:
                            assert z ** r == ctx.one

    def test_multiplicativity_exhaustive(self):
        for ctx, r in [(F7, 3), (F4, 3)]:
            for N in (1, 2):
                for pi in enumerate_irreducibles(ctx, N):
                    table = {}
                    coprime = []
                    for alpha in _residues(ctx, pi):
                        z = residue_symbol(alpha, pi, r)
                        if z:
                            table[alpha.codes()] = z
                            coprime.append(alpha)
                    for a in coprime:
                        for b in coprime:
                            ab = (a * b) % pi
                            assert table[ab.codes()] == table[a.codes()] * table[b.codes()]


class TestIsRthPower:
    def test_r1_trivial(self):
        assert is_rth_power_mod(parse_poly("2", F7), Poly.T(F7), 1)

    def test_f7_two_not_a_cube(self):
        assert not is_rth_power_mod(parse_poly("2", F7), Poly.T(F7), 3)
        assert not is_rth_power_mod_bruteforce(parse_poly("2", F7), Poly.T(F7), 3)

    def test_reciprocity_instance_f4(self):
        # mu = T: every pi = 1 (mod T) has T as a cube in its residue field
        mu = Poly.T(F4)
        for N in (1, 2, 3):
            for pi in enumerate_irreducibles(F4, N):
                if (pi % mu) == Poly.one(F4):
                    assert is_rth_power_mod(mu, pi, 3)
                    assert is_rth_power_mod_bruteforce(mu, pi, 3)

    def test_brute_force_agreement(self):
        for ctx, r in [(F7, 3), (F4, 3)]:
            mu = parse_poly("T+1", ctx)
            for N in (1, 2):
                for pi in enumerate_irreducibles(ctx, N):
                    if (pi % mu):
                        assert is_rth_power_mod(mu, pi, r) == \
                            is_rth_power_mod_bruteforce(mu, pi, r)


class TestCheckReciprocity:
    def test_r1_no_violations(self):
        rep = check_reciprocity(parse_poly("T^2+T", F7), 1, 2)
        assert rep.violations == []

    def test_f7_mu_t(self):
        rep = check_reciprocity(Poly.T(F7), 3, 3)
        assert rep.tested > 0
        assert rep.violations == []

    def test_f4_mu_t_t1(self):
        rep = check_reciprocity(parse_poly("T^2+T", F4), 3, 3)
        assert rep.tested > 0
        assert rep.violations == []

    def test_even_r_rejected(self):
        with pytest.raises(EvenR):
            check_reciprocity(Poly.T(F7), 2, 2)

    def test_r_must_divide(self):
        f3 = make_field(3, 1)
        with pytest.raises(RNotDividingQMinus1):
            check_reciprocity(Poly.T(f3), 3, 2)

    def test_report_serializes(self):
        rep = check_reciprocity(Poly.T(F7), 3, 2)
        doc = rep.to_json_dict()
        assert doc["q"] == 7 and doc["r"] == 3 and doc["mu"] == "T"
        assert doc["tested"] == rep.tested
        assert doc["violations"] == []
