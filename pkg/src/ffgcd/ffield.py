"""Exact arithmetic in prime fields F_p and extension fields F_{p^m}.

A field element is stored as an integer code in [0, q).  For prime fields the
code is the residue itself; for F_{p^m} it is the base-p encoding of the
coefficient vector in the generator symbol ``g``, little-endian, so that
ascending code order coincides with lexicographic order on the coefficient
tuple (c_{m-1}, ..., c_0).

Contexts built for the same (p, m) always use the canonical modulus: the
first monic irreducible of degree m over F_p in that lexicographic order.
Small extension fields additionally carry exp/log tables (for fast scalar
multiplication) and dense numpy operation tables that let polynomial code
vectorize coefficient arithmetic.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    CardinalityLimitExceeded,
    DegreeZero,
    DivisionByZero,
    IncompatibleCharacteristic,
    MixedContexts,
    NonPrime,
    NotASubfield,
    ZeroElement,
)

DEFAULT_CARDINALITY_CAP = 1 << 40

# exp/log tables are built for extension fields up to this cardinality
_LOG_TABLE_CAP = 1 << 16
# dense q*q numpy add/sub/mul tables (vector kernels) up to this cardinality
_VEC_TABLE_CAP = 1 << 10
# numpy convolution of residues stays inside int64 for primes below this
_VEC_PRIME_CAP = 1 << 21


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set covers all n < 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale: n up to ~2^40)."""
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p^m for prime p, or raise NotAPrimePower."""
    from .errors import NotAPrimePower

    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    fac = factor_int(q)
    if len(fac) != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    [(p, m)] = fac.items()
    return p, m


# ---------------------------------------------------------------------------
# vector kernels: coefficient arrays as numpy int64 element codes
# ---------------------------------------------------------------------------

class _PrimeKernel:
    """Vectorized mod-p arithmetic on int64 residue arrays."""

    def __init__(self, p: int):
        self.p = p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def scale(self, c: int, x):
        return (c * x) % self.p

    def conv(self, x, y):
        # full polynomial product; int64-safe because p < 2^21 and the
        # accumulated dot products stay below len * (p-1)^2 < 2^63
        if len(x) * (self.p - 1) ** 2 < (1 << 62):
            return np.convolve(x, y) % self.p
        out = np.zeros(len(x) + len(y) - 1, dtype=np.int64)
        lo, hi = (x, y) if len(x) <= len(y) else (y, x)
        for i, c in enumerate(lo):
            c = int(c)
            if c:
                out[i:i + len(hi)] = (out[i:i + len(hi)] + c * hi) % self.p
        return out


class _TableKernel:
    """Vectorized table-lookup arithmetic for small extension fields."""

    def __init__(self, add_t, sub_t, mul_t):
        self.add_t = add_t
        self.sub_t = sub_t
        self.mul_t = mul_t

    def add(self, x, y):
        return self.add_t[x, y]

    def sub(self, x, y):
        return self.sub_t[x, y]

    def scale(self, c: int, x):
        return self.mul_t[c, x]

    def conv(self, x, y):
        out = np.zeros(len(x) + len(y) - 1, dtype=np.int64)
        lo, hi = (x, y) if len(x) <= len(y) else (y, x)
        for i, c in enumerate(lo):
            c = int(c)
            if c:
                out[i:i + len(hi)] = self.add_t[out[i:i + len(hi)], self.mul_t[c, hi]]
        return out


# ---------------------------------------------------------------------------
# field contexts
# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable description of F_{p^m} plus scalar/vector code arithmetic.

    Not constructed directly; use :func:`make_field`.  Two contexts compare
    equal iff (p, m, modulus) coincide, and equal contexts are freely
    interchangeable.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus  # length m+1, little-endian, monic; None iff m == 1
        self.gen_code = p if m > 1 else None
        self._exp = None
        self._log = None
        self.kernel = None
        if m == 1:
            if p <= _VEC_PRIME_CAP:
                self.kernel = _PrimeKernel(p)
        else:
            if self.q <= _LOG_TABLE_CAP:
                self._build_log_tables()
            if self.q <= _VEC_TABLE_CAP:
                self._build_vec_tables()

    # -- representation-level helpers --------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        """Little-endian base-p coefficient vector of length m."""
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def undigits(self, digs) -> int:
        code = 0
        for d in reversed(list(digs)):
            code = code * self.p + d % self.p
        return code

    def _raw_mul(self, a: int, b: int) -> int:
        """Digit-level product reduced by the modulus; used to bootstrap tables."""
        p, m = self.p, self.m
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(m):
                    prod[k - m + j] = (prod[k - m + j] - c * mod[j]) % p
        return self.undigits(prod[:m])

    def _gen_mul(self, a: int) -> int:
        """Multiply a code by the generator g: shift digits and reduce once."""
        p, m = self.p, self.m
        digs = list(self.digits(a))
        lead = digs[-1]
        digs = [0] + digs[:-1]
        if lead:
            for j in range(m):
                digs[j] = (digs[j] - lead * self.modulus[j]) % p
        return self.undigits(digs)

    def _build_log_tables(self):
        q = self.q
        fac = factor_int(q - 1)
        # find a multiplicative generator by order checks
        gen = None
        for cand in range(2, q):
            if all(self._raw_pow(cand, (q - 1) // ell) != 1 for ell in fac):
                gen = cand
                break
        assert gen is not None
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            exp[i + q - 1] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        self._exp = exp
        self._log = log

    def _raw_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._raw_mul(acc, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return acc

    def _build_vec_tables(self):
        q, p, m = self.q, self.p, self.m
        codes = np.arange(q, dtype=np.int64)
        digs = np.zeros((q, m), dtype=np.int64)
        c = codes.copy()
        for i in range(m):
            digs[:, i] = c % p
            c //= p
        pows = p ** np.arange(m, dtype=np.int64)
        add_t = (((digs[:, None, :] + digs[None, :, :]) % p) * pows).sum(axis=2)
        sub_t = (((digs[:, None, :] - digs[None, :, :]) % p) * pows).sum(axis=2)
        logs = np.array(self._log, dtype=np.int64)
        exps = np.array(self._exp[:q - 1], dtype=np.int64)
        mul_t = exps[(logs[:, None] + logs[None, :]) % (q - 1)]
        mul_t[0, :] = 0
        mul_t[:, 0] = 0
        self.kernel = _TableKernel(add_t, sub_t, mul_t)
        # plain nested lists beat numpy scalar indexing for one-off lookups
        self._add_rows = add_t.tolist()
        self._mul_rows = mul_t.tolist()

    # -- scalar arithmetic on codes -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.kernel is not None:
            return self._add_rows[a][b]
        return self.undigits((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b)))

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.undigits(-x % self.p for x in self.digits(a))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.kernel is not None:
            return self._mul_rows[a][b]
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero field element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        acc = 1
        e = e % (self.q - 1) or self.q - 1
        while e:
            if e & 1:
                acc = self._raw_mul(acc, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return acc

    # -- element construction ------------------------------------------------

    def elem(self, code: int) -> "FqElem":
        return FqElem(self, code % self.q)

    def from_coeffs(self, coeffs) -> "FqElem":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"coefficient vector longer than extension degree {self.m}")
        coeffs += [0] * (self.m - len(coeffs))
        return FqElem(self, self.undigits(coeffs))

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    @property
    def gen(self) -> "FqElem":
        if self.m == 1:
            raise DegreeZero("prime field has no extension generator")
        return FqElem(self, self.p)

    def elements(self):
        """All field elements in ascending code order (desk-scale fields only)."""
        return (FqElem(self, c) for c in range(self.q))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[g]/({self.modulus_text()})"

    def modulus_text(self) -> str:
        if self.modulus is None:
            return ""
        return _symbol_poly_text(self.modulus, "g")


def _symbol_poly_text(coeffs, sym: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = sym if i == 1 else f"{sym}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


class FqElem:
    """Element of a :class:`FieldCtx`, identified by its integer code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise MixedContexts(f"elements of {self.ctx} and {other.ctx}")
            return other.code
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        return c if c is NotImplemented else FqElem(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        return c if c is NotImplemented else FqElem(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        return c if c is NotImplemented else FqElem(self.ctx, self.ctx.sub(c, self.code))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        return c if c is NotImplemented else FqElem(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        if c == 0:
            raise DivisionByZero("division by zero field element")
        return FqElem(self.ctx, self.ctx.mul(self.code, self.ctx.inv(c)))

    def __pow__(self, e: int):
        if e < 0:
            return FqElem(self.ctx, self.ctx.pow(self.ctx.inv(self.code), -e))
        return FqElem(self.ctx, self.ctx.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.ctx.p if -self.ctx.p < other < self.ctx.p else NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        if self.ctx.m == 1:
            return str(self.code)
        return _symbol_poly_text(self.coeffs, "g")

    def __repr__(self):
        return self.__str__()


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def make_field(p: int, m: int, cardinality_cap: int = DEFAULT_CARDINALITY_CAP) -> FieldCtx:
    """Construct F_{p^m} with the canonical (lexicographically least) modulus."""
    if m < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {m}")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if p ** m > cardinality_cap:
        raise CardinalityLimitExceeded(f"p^m = {p ** m} exceeds cap {cardinality_cap}")
    if m == 1:
        return FieldCtx(p, 1, None)
    mod = _canonical_modulus(p, m)
    return FieldCtx(p, m, mod)


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over F_p, lexicographic low-coefficient scan."""
    from .fqpoly import Poly
    from .irreducibles import is_irreducible

    base = FieldCtx(p, 1, None)
    for code in range(p ** m):
        digs = []
        c = code
        for _ in range(m):
            digs.append(c % p)
            c //= p
        coeffs = digs + [1]
        if is_irreducible(Poly(base, coeffs)):
            return tuple(coeffs)
    raise AssertionError("no irreducible of requested degree found")  # unreachable


def elem_arith(x: FqElem, y: FqElem, op: str) -> FqElem:
    """Dispatch one of {add, sub, mul, div} with context checking."""
    if not isinstance(x, FqElem) or not isinstance(y, FqElem):
        raise TypeError("elem_arith expects FqElem operands")
    if x.ctx != y.ctx:
        raise MixedContexts(f"elements of {x.ctx} and {y.ctx}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def elem_pow(x: FqElem, e: int) -> FqElem:
    """x^e by square-and-multiply; 0^0 = 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return x ** e


def multiplicative_order(x: FqElem) -> int:
    """Least e >= 1 with x^e = 1, found by descending through divisors of q-1."""
    if x.code == 0:
        raise ZeroElement("multiplicative order of zero")
    ctx = x.ctx
    e = ctx.q - 1
    for ell in factor_int(e):
        while e % ell == 0 and ctx.pow(x.code, e // ell) == 1:
            e //= ell
    return e


class Embedding:
    """Ring embedding F_{p^m} -> F_{p^M}, m | M, fixing the prime subfield."""

    def __init__(self, src: FieldCtx, dst: FieldCtx, image_of_generator: FqElem):
        self.src = src
        self.dst = dst
        self.image_of_generator = image_of_generator
        self._code_map: list[int] | None = None
        if src.q <= _LOG_TABLE_CAP:
            self._code_map = [self._apply_code(c) for c in range(src.q)]

    def _apply_code(self, code: int) -> int:
        dst, img = self.dst, self.image_of_generator.code
        acc = 0
        for d in reversed(self.src.digits(code)):
            acc = dst.add(dst.mul(acc, img), d)
        return acc

    def apply(self, x: FqElem) -> FqElem:
        if x.ctx != self.src:
            raise MixedContexts("element does not belong to the embedding source")
        if self._code_map is not None:
            return FqElem(self.dst, self._code_map[x.code])
        return FqElem(self.dst, self._apply_code(x.code))

    def apply_code(self, code: int) -> int:
        if self._code_map is not None:
            return self._code_map[code]
        return self._apply_code(code)

    def __repr__(self):
        return f"Embedding({self.src} -> {self.dst}, g -> {self.image_of_generator})"


def make_embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    """Embed src into dst via the lexicographically least root of src.modulus."""
    if src.p != dst.p:
        raise IncompatibleCharacteristic(f"characteristics {src.p} and {dst.p} differ")
    if dst.m % src.m != 0:
        raise NotASubfield(f"F_{src.q} is not a subfield of F_{dst.q}")
    if src.m == 1:
        return Embedding(src, dst, dst.one)
    if src == dst:
        return Embedding(src, dst, dst.gen)
    root = _least_modulus_root(src, dst)
    emb = Embedding(src, dst, FqElem(dst, root))
    return emb


def _least_modulus_root(src: FieldCtx, dst: FieldCtx) -> int:
    mod = src.modulus
    if dst.q <= _LOG_TABLE_CAP:
        for cand in range(dst.q):
            acc = 0
            for d in reversed(mod):
                acc = dst.add(dst.mul(acc, cand), d)
            if acc == 0:
                return cand
        raise AssertionError("modulus has no root in the target field")  # unreachable
    # large target: factor the lifted modulus and collect linear-factor roots
    from .fqpoly import Poly
    from .irreducibles import factorize

    lifted = Poly(dst, list(mod))
    roots = []
    for prime, _ in factorize(lifted).factors:
        if prime.degree == 1:
            roots.append(dst.neg(prime.coeff_code(0)))
    if not roots:
        raise AssertionError("modulus has no root in the target field")  # unreachable
    return min(roots)


def apply_embedding(emb: Embedding, x: FqElem) -> FqElem:
    return emb.apply(x)
