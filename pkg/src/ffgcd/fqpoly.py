"""Dense univariate polynomial arithmetic over a FieldCtx.

Coefficients are stored little-endian as field-element codes (see ffield).
The zero polynomial is the empty coefficient vector and has degree -inf.
Arithmetic dispatches to vectorized numpy kernels when the context provides
them and the degrees are large enough to pay for the array round-trip.
"""

from __future__ import annotations

import numpy as np

from .errors import (
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
from .ffield import Embedding, FieldCtx, FqElem

NEG_INF = float("-inf")

DEFAULT_DEGREE_CAP = 20000

# below this many coefficients the pure-python loops win over numpy dispatch
_VEC_MIN = 32


def _trim(codes: list[int]) -> list[int]:
    while codes and codes[-1] == 0:
        codes.pop()
    return codes


class Poly:
    """Immutable dense polynomial over a fixed FieldCtx."""

    __slots__ = ("ctx", "_codes")

    def __init__(self, ctx: FieldCtx, codes):
        self.ctx = ctx
        c = [int(x) for x in codes]
        self._codes = _trim(c)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [1])

    @classmethod
    def T(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def constant(cls, x: FqElem) -> "Poly":
        return cls(x.ctx, [x.code])

    @classmethod
    def from_elems(cls, ctx: FieldCtx, elems) -> "Poly":
        codes = []
        for e in elems:
            if isinstance(e, FqElem):
                if e.ctx != ctx:
                    raise MixedContexts("coefficient from a different context")
                codes.append(e.code)
            else:
                codes.append(int(e) % ctx.p)
        return cls(ctx, codes)

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self):
        return len(self._codes) - 1 if self._codes else NEG_INF

    @property
    def coeffs(self) -> list[FqElem]:
        return [FqElem(self.ctx, c) for c in self._codes]

    def coeff_code(self, i: int) -> int:
        return self._codes[i] if 0 <= i < len(self._codes) else 0

    def codes(self) -> tuple[int, ...]:
        return tuple(self._codes)

    @property
    def lead_code(self) -> int:
        if not self._codes:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self._codes[-1]

    def is_monic(self) -> bool:
        return bool(self._codes) and self._codes[-1] == 1

    def monic(self) -> "Poly":
        if not self._codes:
            raise ZeroInput("cannot normalize the zero polynomial")
        if self._codes[-1] == 1:
            return self
        inv = self.ctx.inv(self._codes[-1])
        return Poly(self.ctx, [self.ctx.mul(inv, c) for c in self._codes])

    def __bool__(self):
        return bool(self._codes)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self._codes == other._codes

    def __hash__(self):
        return hash((self.ctx, tuple(self._codes)))

    def __call__(self, x: FqElem) -> FqElem:
        if x.ctx != self.ctx:
            raise MixedContexts("evaluation point from a different context")
        ctx, acc = self.ctx, 0
        for c in reversed(self._codes):
            acc = ctx.add(ctx.mul(acc, x.code), c)
        return FqElem(ctx, acc)

    # -- ring operations ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.ctx != self.ctx:
            raise MixedContexts("polynomials over different contexts")

    def __add__(self, other):
        self._check(other)
        return Poly(self.ctx, _add_codes(self.ctx, self._codes, other._codes))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.ctx, _sub_codes(self.ctx, self._codes, other._codes))

    def __neg__(self):
        ctx = self.ctx
        return Poly(ctx, [ctx.neg(c) for c in self._codes])

    def __mul__(self, other):
        self._check(other)
        return Poly(self.ctx, _mul_codes(self.ctx, self._codes, other._codes))

    def __divmod__(self, other):
        self._check(other)
        if not other._codes:
            raise DivisionByZero("polynomial division by zero")
        q, r = _divmod_codes(self.ctx, self._codes, other._codes)
        return Poly(self.ctx, q), Poly(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        return Poly(self.ctx, _pow_codes(self.ctx, self._codes, e))

    def shift(self, k: int) -> "Poly":
        """Multiply by T^k."""
        if not self._codes:
            return self
        return Poly(self.ctx, [0] * k + self._codes)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# code-level kernels
# ---------------------------------------------------------------------------

def _add_codes(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return out


def _sub_codes(ctx, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(ctx.sub(x, y))
    return out


def _mul_codes(ctx, a, b):
    if not a or not b:
        return []
    if ctx.kernel is not None and len(a) + len(b) >= _VEC_MIN:
        arr = ctx.kernel.conv(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        return _trim([int(x) for x in arr])
    out = [0] * (len(a) + len(b) - 1)
    lo, hi = (a, b) if len(a) <= len(b) else (b, a)
    mul, add = ctx.mul, ctx.add
    for i, c in enumerate(lo):
        if c:
            for j, d in enumerate(hi):
                if d:
                    out[i + j] = add(out[i + j], mul(c, d))
    return _trim(out)


def _square_codes(ctx, a):
    # char-2 Frobenius: squaring only spreads coefficients
    if ctx.p == 2 and a:
        out = [0] * (2 * len(a) - 1)
        mul = ctx.mul
        for i, c in enumerate(a):
            if c:
                out[2 * i] = mul(c, c)
        return out
    return _mul_codes(ctx, a, a)


def _pow_codes(ctx, base, e):
    if e == 0:
        return [1]
    if not base:
        return []
    acc = None
    b = list(base)
    while True:
        if e & 1:
            acc = b if acc is None else _mul_codes(ctx, acc, b)
        e >>= 1
        if not e:
            return _trim(list(acc))
        b = _square_codes(ctx, b)


def _divmod_codes(ctx, f, g):
    dg = len(g) - 1
    if len(f) < len(g):
        return [], list(f)
    inv_lead = ctx.inv(g[-1])
    if ctx.kernel is not None and len(f) >= _VEC_MIN and dg >= 1:
        return _divmod_vec(ctx, f, g, inv_lead)
    r = list(f)
    q = [0] * (len(f) - dg)
    mul, sub = ctx.mul, ctx.sub
    for k in range(len(f) - dg - 1, -1, -1):
        c = r[k + dg]
        if c:
            c = mul(c, inv_lead)
            q[k] = c
            for j in range(dg):
                if g[j]:
                    r[k + j] = sub(r[k + j], mul(c, g[j]))
            r[k + dg] = 0
    return q, _trim(r)


def _divmod_vec(ctx, f, g, inv_lead):
    kern = ctx.kernel
    dg = len(g) - 1
    r = np.array(f, dtype=np.int64)
    garr = np.array(g[:-1], dtype=np.int64)
    q = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        c = int(r[k + dg])
        if c:
            c = ctx.mul(c, inv_lead)
            q[k] = c
            r[k:k + dg] = kern.sub(r[k:k + dg], kern.scale(c, garr))
            r[k + dg] = 0
    return q, _trim([int(x) for x in r])


def _rem_codes(ctx, f, g):
    return _divmod_codes(ctx, f, g)[1]


def _gcd_codes(ctx, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem_codes(ctx, a, b)
    if a and a[-1] != 1:
        inv = ctx.inv(a[-1])
        a = [ctx.mul(inv, c) for c in a]
    return a


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def poly_arith(f: Poly, g: Poly, op: str):
    """Dispatch one of {add, sub, mul, divrem}."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return divmod(f, g)
    raise ValueError(f"unknown op {op!r}")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
    f._check(g)
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    return Poly(f.ctx, _gcd_codes(f.ctx, f._codes, g._codes))


def poly_lcm(f: Poly, g: Poly) -> Poly:
    """Monic least common multiple of two nonzero polynomials."""
    f._check(g)
    if not f or not g:
        raise ZeroInput("lcm requires nonzero polynomials")
    d = poly_gcd(f, g)
    return ((f * g) // d).monic()


def poly_powmod(f: Poly, e: int, m: Poly) -> Poly:
    """f^e mod m by square-and-multiply on residues."""
    f._check(m)
    if m.degree is NEG_INF or m.degree < 1:
        raise ConstantModulus("powmod modulus must be nonconstant")
    if e < 0:
        raise ValueError("negative exponent")
    ctx = f.ctx
    base = _rem_codes(ctx, f._codes, m._codes)
    acc = [1]
    mc = m._codes
    while e:
        if e & 1:
            acc = _rem_codes(ctx, _mul_codes(ctx, acc, base), mc)
        e >>= 1
        if e:
            base = _rem_codes(ctx, _square_codes(ctx, base), mc)
    return Poly(ctx, acc)


def poly_pow_sub1(f: Poly, e: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> Poly:
    """The fully expanded polynomial f^e - 1."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    if f.degree is NEG_INF:
        required = 0
    else:
        required = e * f.degree
    if required > degree_cap:
        raise DegreeCapExceeded(required, degree_cap)
    ctx = f.ctx
    if f._codes == [0, 1]:  # T^e - 1 directly
        codes = [0] * (e + 1)
        codes[e] = 1
        codes[0] = ctx.neg(1)
        return Poly(ctx, codes)
    out = _pow_codes(ctx, f._codes, e)
    if not out:
        out = [0]
    out[0] = ctx.sub(out[0], 1)
    return Poly(ctx, out)


def derivative(f: Poly) -> Poly:
    """Formal derivative; T^p differentiates to zero in characteristic p."""
    ctx = f.ctx
    out = []
    for i in range(1, len(f._codes)):
        out.append(ctx.mul(i % ctx.p, f._codes[i]))
    return Poly(ctx, out)


def lift_poly(f: Poly, emb: Embedding) -> Poly:
    """Coefficient-wise image of f under a field embedding."""
    if f.ctx != emb.src:
        raise ContextMismatch("polynomial is not over the embedding source")
    return Poly(emb.dst, [emb.apply_code(c) for c in f._codes])


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Canonical text: descending powers, no zero terms, no unit coefficients."""
    if not f._codes:
        return "0"
    ctx = f.ctx
    terms = []
    for i in range(len(f._codes) - 1, -1, -1):
        c = f._codes[i]
        if not c:
            continue
        if ctx.m == 1:
            ctext = str(c)
        else:
            ctext = str(FqElem(ctx, c))
            if "+" in ctext:
                ctext = f"({ctext})"
        if i == 0:
            terms.append(ctext)
            continue
        mono = "T" if i == 1 else f"T^{i}"
        terms.append(mono if c == 1 else f"{ctext}*{mono}")
    return "+".join(terms)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolySyntaxError("expected an unsigned integer", start)
        return int(self.text[start:self.pos])


def parse_poly(text: str, ctx: FieldCtx) -> Poly:
    """Parse the polynomial grammar; inverse of :func:`format_poly`.

    Accepts the canonical form plus the natural relaxations seen in hand
    input: bare generator terms as coefficients ("g*T", "T+g") and repeated
    monomials (summed).
    """
    sc = _Scanner(text)
    acc: dict[int, int] = {}
    while True:
        coeff_code, t_power = _parse_term(sc, ctx)
        acc[t_power] = ctx.add(acc.get(t_power, 0), coeff_code)
        ch = sc.peek()
        if ch == "":
            break
        if ch != "+":
            raise PolySyntaxError(f"unexpected character {ch!r}", sc.pos)
        sc.take()
    if not acc:
        raise PolySyntaxError("empty polynomial", 0)
    deg = max(acc)
    codes = [acc.get(i, 0) for i in range(deg + 1)]
    return Poly(ctx, codes)


def _parse_term(sc: _Scanner, ctx: FieldCtx) -> tuple[int, int]:
    """One '+'-separated term -> (element code, power of T)."""
    coeff = None
    power = None
    first = True
    while True:
        ch = sc.peek()
        if ch == "" and first:
            raise PolySyntaxError("expected a term", sc.pos)
        if ch.isdigit():
            pos = sc.pos
            val = sc.take_uint()
            if val >= ctx.p:
                raise CoefficientOutOfRange(
                    f"coefficient {val} not in [0, {ctx.p}) at position {pos}")
            item = val
        elif ch == "(":
            sc.take()
            item = _parse_gpoly(sc, ctx)
            if sc.peek() != ")":
                raise PolySyntaxError("expected ')'", sc.pos)
            sc.take()
        elif ch == "g":
            item = _parse_gmono(sc, ctx)
        elif ch == "T":
            pos = sc.pos
            sc.take()
            k = 1
            if sc.peek() == "^":
                sc.take()
                k = sc.take_uint()
            if power is not None:
                raise PolySyntaxError("repeated T monomial in one term", pos)
            power = k
            item = None
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", sc.pos)
        if item is not None:
            coeff = item if coeff is None else ctx.mul(coeff, item)
        first = False
        if sc.peek() == "*":
            sc.take()
            continue
        break
    if coeff is None:
        coeff = 1
    return coeff, power if power is not None else 0


def _parse_gmono(sc: _Scanner, ctx: FieldCtx) -> int:
    pos = sc.pos
    sc.take()  # 'g'
    if ctx.m == 1:
        raise PolySyntaxError("generator symbol 'g' is invalid over a prime field", pos)
    k = 1
    if sc.peek() == "^":
        sc.take()
        k = sc.take_uint()
    return ctx.pow(ctx.gen_code, k)


def _parse_gpoly(sc: _Scanner, ctx: FieldCtx) -> int:
    """Parenthesized polynomial in g; returns the reduced element code."""
    acc = 0
    while True:
        ch = sc.peek()
        coeff = None
        k = 0
        first = True
        while True:
            ch = sc.peek()
            if ch.isdigit():
                pos = sc.pos
                val = sc.take_uint()
                if val >= ctx.p:
                    raise CoefficientOutOfRange(
                        f"coefficient {val} not in [0, {ctx.p}) at position {pos}")
                coeff = val if coeff is None else ctx.mul(coeff, val)
            elif ch == "g":
                item = _parse_gmono(sc, ctx)
                coeff = item if coeff is None else ctx.mul(coeff, item)
            else:
                if first:
                    raise PolySyntaxError("expected a coefficient term", sc.pos)
                break
            first = False
            if sc.peek() == "*":
                sc.take()
                continue
            break
        acc = ctx.add(acc, coeff if coeff is not None else 1)
        if sc.peek() == "+":
            sc.take()
            continue
        return acc
