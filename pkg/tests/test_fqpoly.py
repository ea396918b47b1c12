import random

import pytest

from ffgcd import (
    Poly,
    derivative,
    format_poly,
    lift_poly,
    make_embedding,
    make_field,
    parse_poly,
    poly_arith,
    poly_gcd,
    poly_lcm,
    poly_pow_sub1,
    poly_powmod,
)
from ffgcd.errors import (
    BothZero,
    CoefficientOutOfRange,
    ConstantModulus,
    ContextMismatch,
    DegreeCapExceeded,
    DivisionByZero,
    MixedContexts,
    PolySyntaxError,
    ZeroInput,
)
from ffgcd.irreducibles import enumerate_irreducibles

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)
F5 = make_field(5, 1)


def _random_poly(ctx, max_deg, rng):
    d = rng.randrange(max_deg + 1)
    return Poly(ctx, [rng.randrange(ctx.q) for _ in range(d + 1)])


class TestArith:
    def test_mul_by_one(self):
        f = parse_poly("T^2+2*T+1", F3)
        assert poly_arith(f, Poly.one(F3), "mul") == f

    def test_f3_product(self):
        assert parse_poly("T+1", F3) * parse_poly("T+2", F3) == parse_poly("T^2+2", F3)

    def test_f2_divrem(self):
        q, r = poly_arith(parse_poly("T^3+T+1", F2), parse_poly("T+1", F2), "divrem")
        assert q == parse_poly("T^2+T", F2)
        assert r == Poly.one(F2)

    def test_divrem_reconstruction_random(self):
        rng = random.Random(1)
        for ctx in (F2, F3, F4, F5):
            for _ in range(250):
                f = _random_poly(ctx, 12, rng)
                g = _random_poly(ctx, 6, rng)
                if not g:
                    continue
                q, r = divmod(f, g)
                assert q * g + r == f
                assert r.degree < g.degree

    def test_errors(self):
        with pytest.raises(MixedContexts):
            parse_poly("T", F2) + parse_poly("T", F3)
        with pytest.raises(DivisionByZero):
            divmod(parse_poly("T", F2), Poly.zero(F2))


class TestGcd:
    def test_gcd_with_zero(self):
        f = parse_poly("2*T^2+2", F3)
        assert poly_gcd(f, Poly.zero(F3)) == f.monic()

    def test_f3_example(self):
        assert poly_gcd(parse_poly("T^2+2", F3), parse_poly("T^2+T", F3)) == parse_poly("T+1", F3)

    def test_paper_degree_23(self):
        # F_5 with n = 24: deg gcd(T^24-1, (T+1)^24-1) = 23
        A = poly_pow_sub1(Poly.T(F5), 24)
        B = poly_pow_sub1(parse_poly("T+1", F5), 24)
        assert poly_gcd(A, B).degree == 23

    def test_both_zero(self):
        with pytest.raises(BothZero):
            poly_gcd(Poly.zero(F2), Poly.zero(F2))

    def test_postconditions_random(self):
        rng = random.Random(2)
        for ctx in (F2, F3, F5):
            for _ in range(100):
                c = _random_poly(ctx, 4, rng)
                f = c * _random_poly(ctx, 4, rng)
                g = c * _random_poly(ctx, 4, rng)
                if not f and not g:
                    continue
                d = poly_gcd(f, g)
                assert d.is_monic()
                if f:
                    assert not (f % d)
                if g:
                    assert not (g % d)
                if c:
                    # any common divisor divides the gcd
                    assert not (d % poly_gcd(c, d))


class TestLcm:
    def test_self(self):
        f = parse_poly("2*T+2", F3)
        assert poly_lcm(f, f) == f.monic()

    def test_coprime_product(self):
        assert poly_lcm(Poly.T(F3), parse_poly("T+1", F3)) == parse_poly("T^2+T", F3)

    def test_f2_shared_factor(self):
        # T^2+T = T(T+1), T^2+1 = (T+1)^2, lcm = T(T+1)^2 = T^3+T
        lcm = poly_lcm(parse_poly("T^2+T", F2), parse_poly("T^2+1", F2))
        assert lcm == parse_poly("T^3+T", F2)
        assert not (lcm % parse_poly("T^2+T", F2))
        assert not (lcm % parse_poly("T^2+1", F2))

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            poly_lcm(Poly.zero(F2), Poly.one(F2))


class TestPowmod:
    def test_exponent_zero(self):
        m = parse_poly("T^2+1", F3)
        assert poly_powmod(parse_poly("T+2", F3), 0, m) == Poly.one(F3)

    def test_f8_generator_order(self):
        assert poly_powmod(Poly.T(F2), 7, parse_poly("T^3+T+1", F2)) == Poly.one(F2)

    def test_f81_group_order(self):
        # |F_81*| = 80, so (T+1)^80 = 1 mod every irreducible quartic
        t1 = parse_poly("T+1", F3)
        for pi in enumerate_irreducibles(F3, 4):
            assert poly_powmod(t1, 80, pi) == Poly.one(F3)

    def test_consistency_with_expansion(self):
        rng = random.Random(3)
        for ctx in (F2, F3, F4):
            for _ in range(30):
                f = _random_poly(ctx, 3, rng)
                m = _random_poly(ctx, 4, rng)
                if m.degree < 1:
                    continue
                e = rng.randrange(1, 30)
                expanded = poly_pow_sub1(f, e, degree_cap=200) + Poly.one(ctx)
                assert poly_powmod(f, e, m) == expanded % m

    def test_constant_modulus(self):
        with pytest.raises(ConstantModulus):
            poly_powmod(Poly.T(F2), 3, Poly.one(F2))


class TestPowSub1:
    def test_monomial(self):
        f = poly_pow_sub1(Poly.T(F3), 5)
        assert f == parse_poly("T^5+2", F3)

    def test_char2_cube(self):
        assert poly_pow_sub1(parse_poly("T+1", F2), 3) == parse_poly("T^3+T^2+T", F2)

    def test_paper_shift_identity(self):
        # (T+1)^24 - 1 = T*(T^24-1)/(T+1) over F_5
        B = poly_pow_sub1(parse_poly("T+1", F5), 24)
        A = poly_pow_sub1(Poly.T(F5), 24)
        q, r = divmod(A.shift(1), parse_poly("T+1", F5))
        assert not r
        assert q == B

    def test_cap(self):
        with pytest.raises(DegreeCapExceeded) as exc:
            poly_pow_sub1(parse_poly("T^2+1", F3), 200, degree_cap=100)
        assert exc.value.required == 400


class TestDerivative:
    def test_constant(self):
        assert derivative(parse_poly("2", F3)) == Poly.zero(F3)

    def test_char3_cube_term_vanishes(self):
        assert derivative(parse_poly("T^3+T", F3)) == Poly.one(F3)

    def test_char2_even_powers_vanish(self):
        f = poly_pow_sub1(Poly.T(F2), 24)
        assert derivative(f) == Poly.zero(F2)


class TestLift:
    def test_variable_fixed(self):
        emb = make_embedding(F2, F4)
        assert lift_poly(Poly.T(F2), emb) == Poly.T(F4)

    def test_prime_subfield_fixed(self):
        emb = make_embedding(F2, F4)
        f = parse_poly("T^2+T+1", F2)
        assert format_poly(lift_poly(f, emb)) == "T^2+T+1"

    def test_constant_becomes_image(self):
        f16 = make_field(2, 4)
        emb = make_embedding(F4, f16)
        f = Poly.T(F4) + Poly.constant(F4.gen)
        lifted = lift_poly(f, emb)
        assert lifted.coeffs[0] == emb.image_of_generator

    def test_context_mismatch(self):
        emb = make_embedding(F2, F4)
        with pytest.raises(ContextMismatch):
            lift_poly(Poly.T(F3), emb)

    def test_base_change_gcd_degree_stable(self):
        f16 = make_field(2, 4)
        rng = random.Random(4)
        pairs = [(F2, F4), (F4, f16)]
        for src, dst in pairs:
            emb = make_embedding(src, dst)
            for _ in range(40):
                f = _random_poly(src, 8, rng)
                g = _random_poly(src, 8, rng)
                if not f and not g:
                    continue
                d1 = poly_gcd(f, g).degree
                d2 = poly_gcd(lift_poly(f, emb), lift_poly(g, emb)).degree
                assert d1 == d2

    def test_frobenius_additivity(self):
        rng = random.Random(5)
        for ctx in (F2, F3, F4, F5):
            p = ctx.p
            for _ in range(40):
                f = _random_poly(ctx, 5, rng)
                g = _random_poly(ctx, 5, rng)
                assert (f + g) ** p == f ** p + g ** p


class TestTextRoundTrip:
    def test_zero(self):
        assert parse_poly("0", F3) == Poly.zero(F3)
        assert format_poly(Poly.zero(F3)) == "0"

    def test_simple(self):
        f = parse_poly("T^3+2*T+1", F5)
        assert f.codes() == (1, 2, 0, 1)
        assert format_poly(f) == "T^3+2*T+1"

    def test_extension_coefficients(self):
        f = parse_poly("(g+1)*T+g", F4)
        assert f.degree == 1
        assert f.coeffs[1] == F4.gen + 1
        assert f.coeffs[0] == F4.gen
        assert format_poly(f) == "(g+1)*T+g"

    def test_roundtrip_random(self):
        rng = random.Random(6)
        f16 = make_field(2, 4)
        for ctx in (F2, F3, F4, F5, f16):
            for _ in range(60):
                f = _random_poly(ctx, 7, rng)
                assert parse_poly(format_poly(f), ctx) == f

    def test_syntax_error_position(self):
        with pytest.raises(PolySyntaxError):
            parse_poly("T^2-1", F3)
        with pytest.raises(PolySyntaxError):
            parse_poly("", F3)
        with pytest.raises(PolySyntaxError):
            parse_poly("g*T", F3)  # no generator over a prime field

    def test_coefficient_out_of_range(self):
        with pytest.raises(CoefficientOutOfRange):
            parse_poly("T+5", F3)
        with pytest.raises(CoefficientOutOfRange):
            parse_poly("(g+3)*T", F4)
