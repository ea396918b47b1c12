import random
from fractions import Fraction

import pytest

from ffgcd import (
    Poly,
    count_progression,
    example1_identity,
    frobenius_scaling,
    gcd_degree_direct,
    integer_gcd_table,
    lift_poly,
    lower_bound_constant,
    make_embedding,
    make_field,
    multiplicative_independence,
    parse_poly,
    plan_exponents,
    poly_gcd,
    poly_pow_sub1,
    poly_powmod,
    scan_degrees,
    witness_certificate,
)
from ffgcd.errors import (
    Constant,
    DegreeCapExceeded,
    InfeasiblePlan,
    MultiplicativelyDependent,
    N0NotReduced,
    NotAPrimePower,
    NotMonic,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)
F5 = make_field(5, 1)


class TestPlanExponents:
    def test_n0_minus_one_class(self):
        plan = plan_exponents(5, 1, 4)
        assert (plan.r, plan.Q) == (1, 5)
        assert plan.exponent(3) == 5 ** 3 - 1

    def test_q3_class_one(self):
        plan = plan_exponents(3, 1, 1)
        assert (plan.r, plan.Q) == (5, 81)

    def test_q4_class_one(self):
        plan = plan_exponents(4, 1, 1)
        assert (plan.r, plan.Q) == (3, 16)
        assert plan.exponent(2) == 85
        assert 85 % 4 == 1

    def test_p_part_decomposition(self):
        # q = 2, k = 2, n0 = 2 = 2^1 * 1
        plan = plan_exponents(2, 2, 2)
        assert (plan.p_power_i, plan.n1, plan.r, plan.Q) == (1, 1, 3, 16)
        assert plan.exponent(1) == 10
        assert 10 % 4 == 2

    @pytest.mark.parametrize("q,k", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1), (7, 1)])
    def test_invariants_all_classes(self, q, k):
        qk = q ** k
        for n0 in range(1, qk):
            plan = plan_exponents(q, k, n0)
            assert plan.r % 2 == 1
            assert 1 <= plan.r <= 2 * qk - 1
            assert (plan.r * plan.n1 + 1) % qk == 0
            assert (plan.Q - 1) % plan.r == 0
            assert plan.n0 == plan.char_p ** plan.p_power_i * plan.n1
            for N in range(1, 6):
                assert plan.exponent(N) % qk == n0

    def test_errors(self):
        with pytest.raises(N0NotReduced):
            plan_exponents(3, 1, 3)
        with pytest.raises(N0NotReduced):
            plan_exponents(3, 1, 0)
        with pytest.raises(NotAPrimePower):
            plan_exponents(6, 1, 1)

    def test_infeasible_reported_not_raised(self):
        plan = plan_exponents(7, 2, 3)
        assert not plan.feasible
        assert plan.Q == 7 ** (2 * 48)


class TestGcdDegreeDirect:
    def test_paper_n24(self):
        assert gcd_degree_direct(Poly.T(F5), parse_poly("T+1", F5), 24) == 23

    def test_equal_inputs(self):
        a = parse_poly("T^2+1", F3)
        assert gcd_degree_direct(a, a, 7) == 14

    def test_golden_n80(self):
        # frozen by an independent list-based oracle before the build
        assert gcd_degree_direct(Poly.T(F3), parse_poly("T+1", F3), 80) == 79

    def test_p_part_reduction_matches_expansion(self):
        a, b = Poly.T(F3), parse_poly("T+1", F3)
        for n in (3, 9, 12, 18):
            A = poly_pow_sub1(a, n, 200)
            B = poly_pow_sub1(b, n, 200)
            assert gcd_degree_direct(a, b, n) == poly_gcd(A, B).degree

    def test_cap_applies_to_p_free_part(self):
        a, b = Poly.T(F2), parse_poly("T+1", F2)
        with pytest.raises(DegreeCapExceeded):
            gcd_degree_direct(a, b, 30001, degree_cap=20000)
        # 30000 = 2^4 * 1875 expands only to degree 1875
        assert isinstance(gcd_degree_direct(a, b, 30000, degree_cap=20000), int)

    def test_errors(self):
        with pytest.raises(NotMonic):
            gcd_degree_direct(parse_poly("2*T", F3), Poly.T(F3), 2)
        with pytest.raises(Constant):
            gcd_degree_direct(Poly.one(F3), Poly.T(F3), 2)


class TestWitnessCertificate:
    def test_desk_run_a(self):
        plan = plan_exponents(3, 1, 2)
        cert = witness_certificate(Poly.T(F3), parse_poly("T+1", F3), plan, 4)
        assert cert.n == 80
        assert str(cert.ell) == "T^2+T"
        assert len(cert.witnesses) == 3  # frozen oracle: #S_{3,4}(1, T(T+1))
        assert cert.witness_degree_sum == 12
        assert cert.phi_Q_ell == 4
        assert cert.constant_c == Fraction(1, 4)
        assert cert.direct_degree == 79
        assert cert.direct_degree >= cert.witness_degree_sum

    def test_desk_run_b(self):
        plan = plan_exponents(4, 1, 1)
        cert = witness_certificate(Poly.T(F4), parse_poly("T+1", F4), plan, 3)
        assert cert.n == 1365
        assert len(cert.witnesses) == 10  # frozen oracle over F_16
        assert cert.witness_degree_sum == 30
        assert cert.constant_c == Fraction(3, 225)
        assert cert.direct_degree == 440  # frozen F_4096 brute-force oracle
        assert cert.direct_degree >= cert.witness_degree_sum > 0

    def test_witnesses_satisfy_certificate_conditions(self):
        plan = plan_exponents(3, 1, 2)
        a, b = Poly.T(F3), parse_poly("T+1", F3)
        cert = witness_certificate(a, b, plan, 4)
        big = cert.witness_field
        emb = make_embedding(F3, big)
        ell_big = lift_poly(cert.ell, emb)
        one = Poly.one(big)
        for pi in cert.witnesses:
            assert pi.ctx == big
            assert pi % ell_big == one
            assert poly_powmod(lift_poly(a, emb), cert.n, pi) == one
            assert poly_powmod(lift_poly(b, emb), cert.n, pi) == one

    def test_witness_count_matches_progression_oracle(self):
        plan = plan_exponents(4, 1, 1)
        cert = witness_certificate(Poly.T(F4), parse_poly("T+1", F4), plan, 3)
        big = cert.witness_field
        emb = make_embedding(F4, big)
        report = count_progression(big, 3, Poly.one(big), lift_poly(cert.ell, emb))
        assert report.exact_count == len(cert.witnesses)

    def test_p_part_certificate(self):
        plan = plan_exponents(2, 2, 2)
        cert = witness_certificate(Poly.T(F2), parse_poly("T+1", F2), plan, 1)
        assert cert.n == 10
        # direct degree carries the p^i scaling: deg at 10 = 2 * deg at 5
        assert cert.direct_degree == 2 * gcd_degree_direct(
            Poly.T(F2), parse_poly("T+1", F2), 5)

    def test_infeasible_plan_raises(self):
        plan = plan_exponents(7, 2, 3)
        f7 = make_field(7, 1)
        with pytest.raises(InfeasiblePlan):
            witness_certificate(Poly.T(f7), parse_poly("T+1", f7), plan, 1)

    def test_certificate_json_keys(self):
        plan = plan_exponents(3, 1, 2)
        cert = witness_certificate(Poly.T(F3), parse_poly("T+1", F3), plan, 4)
        doc = cert.to_json_dict()
        for key in ("q", "k", "n0", "r", "Q", "N", "n", "a", "b", "ell",
                    "phi_Q_ell", "c_num", "c_den", "witnesses",
                    "witness_degree_sum", "direct_degree"):
            assert key in doc
        assert doc["witnesses"] == [str(w) for w in cert.witnesses]


class TestLowerBoundConstant:
    def test_desk_run_a(self):
        plan = plan_exponents(3, 1, 2)
        assert lower_bound_constant(plan, Poly.T(F3), parse_poly("T+1", F3)) == Fraction(1, 4)

    def test_desk_run_b(self):
        plan = plan_exponents(4, 1, 1)
        c = lower_bound_constant(plan, Poly.T(F4), parse_poly("T+1", F4))
        assert c == Fraction(3, 225) == Fraction(1, 75)

    def test_single_linear_modulus(self):
        plan = plan_exponents(5, 1, 4)
        c = lower_bound_constant(plan, Poly.T(F5), Poly.T(F5))
        assert c == Fraction(1, plan.Q - 1)

    def test_symbolic_when_infeasible(self):
        plan = plan_exponents(7, 2, 3)
        f7 = make_field(7, 1)
        out = lower_bound_constant(plan, Poly.T(f7), parse_poly("T+1", f7))
        assert isinstance(out, str)
        assert out == "65/Phi_{7^96}(T^2+T)"


class TestExample1:
    def test_f2_tiny(self):
        rep = example1_identity(F2, 2)
        assert (rep.n, rep.gcd_degree) == (3, 2)
        assert rep.ok
        # the gcd itself is the only irreducible quadratic
        A = poly_pow_sub1(Poly.T(F2), 3)
        B = poly_pow_sub1(parse_poly("T+1", F2), 3)
        assert poly_gcd(A, B) == parse_poly("T^2+T+1", F2)

    def test_f5_paper_case(self):
        rep = example1_identity(F5, 2)
        assert (rep.n, rep.gcd_degree) == (24, 23)
        assert rep.ok

    def test_f4_extension(self):
        rep = example1_identity(F4, 1)
        assert (rep.n, rep.gcd_degree) == (3, 2)
        assert rep.ok

    def test_small_grid(self):
        for ctx in (F2, F3, F4, F5):
            N = 1
            while ctx.q ** N <= 300:
                rep = example1_identity(ctx, N)
                assert rep.ok and rep.gcd_degree == ctx.q ** N - 2
                N += 1


class TestFrobeniusScaling:
    def test_i_zero(self):
        rep = frobenius_scaling(Poly.T(F3), parse_poly("T+1", F3), 4, 0)
        assert rep.ok and rep.base_degree == rep.scaled_degree

    def test_f2_doubling(self):
        rep = frobenius_scaling(Poly.T(F2), parse_poly("T+1", F2), 3, 1)
        assert rep.ok
        assert (rep.base_degree, rep.scaled_degree) == (2, 4)

    def test_f3_quadratic(self):
        rep = frobenius_scaling(Poly.T(F3), parse_poly("T^2+1", F3), 4, 1)
        assert rep.ok

    def test_random_within_caps(self):
        rng = random.Random(9)
        for ctx in (F2, F3):
            for _ in range(10):
                a = Poly(ctx, [rng.randrange(ctx.q) for _ in range(rng.randrange(1, 4))] + [1])
                b = Poly(ctx, [rng.randrange(ctx.q) for _ in range(rng.randrange(1, 4))] + [1])
                rep = frobenius_scaling(a, b, rng.randrange(1, 7), rng.randrange(0, 3))
                assert rep.ok


class TestMultiplicativeIndependence:
    def test_equal_inputs(self):
        a = parse_poly("T+1", F3)
        assert not multiplicative_independence(a, a)

    def test_distinct_linears(self):
        assert multiplicative_independence(Poly.T(F3), parse_poly("T+1", F3))

    def test_powers_of_same_prime(self):
        assert not multiplicative_independence(parse_poly("T^2", F3), parse_poly("T^3", F3))

    def test_constant_rejected(self):
        with pytest.raises(Constant):
            multiplicative_independence(Poly.one(F3), Poly.T(F3))


class TestScanDegrees:
    def test_trivial_gcd_point(self):
        rows = dict(scan_degrees(Poly.T(F2), parse_poly("T+1", F2), 1, 4))
        assert rows[2] == 0

    def test_matches_example1_at_q_minus_1(self):
        for ctx in (F2, F3, F5):
            rows = dict(scan_degrees(Poly.T(ctx), parse_poly("T+1", ctx), 1, ctx.q - 1))
            assert rows[ctx.q - 1] == example1_identity(ctx, 1).gcd_degree

    def test_f5_frozen_scan(self):
        # frozen by the independent oracle run
        expected = {4: 3, 6: 2, 8: 3, 12: 5, 16: 3, 18: 2, 20: 15, 24: 23, 28: 3, 30: 10}
        rows = dict(scan_degrees(Poly.T(F5), parse_poly("T+1", F5), 1, 30))
        for n in range(1, 31):
            assert rows[n] == expected.get(n, 0)


class TestIntegerGcdTable:
    def test_n1(self):
        rows = integer_gcd_table(2, 3, 1)
        assert rows[0] == (1, 1, 0.0)

    def test_n6_is_seven(self):
        rows = integer_gcd_table(2, 3, 6)
        assert rows[5][1] == 7

    def test_dependent_rejected(self):
        with pytest.raises(MultiplicativelyDependent):
            integer_gcd_table(2, 8, 10)
        with pytest.raises(MultiplicativelyDependent):
            integer_gcd_table(6, 36, 10)

    def test_exactness(self):
        import math

        rows = integer_gcd_table(2, 3, 40)
        for n, g, v in rows:
            assert g == math.gcd(2 ** n - 1, 3 ** n - 1)
