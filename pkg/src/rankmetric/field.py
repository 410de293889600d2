"""Exact arithmetic in GF(q) and its extensions GF(q^m).

Elements are integers.  In a field built as ``base[x]/(modulus)`` the element
``a`` stands for the polynomial whose coefficients are the base-``|base|``
digits of ``a`` (constant term first).  Because the nesting bottoms out at
GF(p), the base-p digits of ``a`` are always its coordinates over the prime
field, which is what makes addition a digit-wise operation at every level.

Multiplication goes through exp/log tables, built lazily on first use.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

from .errors import BasisMismatch, DegreeMismatch, NotPrime, ReducibleModulus

_ADD_TABLE_LIMIT = 256
_MUL_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**e``; raises ``NotPrime`` if it is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = _prime_factors(q)[0]
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomials over a field (coefficient lists, constant term first) -------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: Sequence[int], b: Sequence[int], F) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        quo[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bi))
        _trim(a)
    return quo, a


def poly_mul(a: Sequence[int], b: Sequence[int], F) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _trim(out)


def poly_mulmod(a, b, f, F) -> list[int]:
    return poly_divmod(poly_mul(a, b, F), f, F)[1]


def poly_powmod(a, k: int, f, F) -> list[int]:
    result = [1]
    base = poly_divmod(a, f, F)[1]
    while k:
        if k & 1:
            result = poly_mulmod(result, base, f, F)
        base = poly_mulmod(base, base, f, F)
        k >>= 1
    return result


def poly_gcd(a, b, F) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b, F)[1]
    return a


def is_irreducible(f: Sequence[int], F) -> bool:
    """Rabin's test for a monic polynomial over the finite field ``F``."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    Q = F.order
    x = [0, 1]

    def frob_iter(k):
        h = x
        for _ in range(k):
            h = poly_powmod(h, Q, f, F)
        return h

    for r in _prime_factors(n):
        h = frob_iter(n // r)
        diff = _trim([F.sub(hi, xi) for hi, xi in _zip_pad(h, x)])
        if len(poly_gcd(f, diff, F)) != 1:
            return False
    h = frob_iter(n)
    return not _trim([F.sub(hi, xi) for hi, xi in _zip_pad(h, x)])


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _digits(a: int, base: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, d = divmod(a, base)
        out.append(d)
    return out


def _from_digits(ds: Sequence[int], base: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * base + d
    return a


def default_modulus(base: "FiniteField", degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree over ``base``.

    Candidates are ordered by the integer whose base-``|base|`` digits are
    the non-leading coefficients (constant term least significant).
    """
    Q = base.order
    for c in range(Q**degree):
        f = _digits(c, Q, degree) + [1]
        if is_irreducible(f, base):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """GF(p) when ``base`` is None, otherwise ``base[x]/(modulus)``.

    Instances are immutable from the caller's point of view; the multiply
    tables are a private cache.
    """

    def __init__(self, p: int, modulus: Sequence[int] = (0, 1), base: "FiniteField | None" = None,
                 check: bool = True):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.base = base
        self.modulus = tuple(int(c) for c in modulus)
        self.degree = len(self.modulus) - 1
        if base is None:
            if self.degree != 1 or self.modulus[-1] != 1 or not 0 <= self.modulus[0] < p:
                raise DegreeMismatch("prime field modulus must be monic of degree 1")
            self.order = p
            self.e = 1
        else:
            if base.p != p:
                raise BasisMismatch("base field characteristic differs")
            if self.degree < 1:
                raise DegreeMismatch("modulus must have degree >= 1")
            if self.modulus[-1] != 1:
                raise DegreeMismatch("modulus must be monic")
            if any(not 0 <= c < base.order for c in self.modulus):
                raise DegreeMismatch("modulus coefficients outside the base field")
            if check and not is_irreducible(self.modulus, base):
                raise ReducibleModulus(f"{list(self.modulus)} is reducible over {base!r}")
            self.order = base.order**self.degree
            self.e = base.e * self.degree
        self.q = self.order
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._addt: list[list[int]] | None = None

    # -- identity ------------------------------------------------------------

    @classmethod
    def prime(cls, p: int) -> "FiniteField":
        return cls(p)

    def _key(self):
        if self.base is None:
            return (self.p,)
        return (self.p, self.modulus, self.base._key())

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_exp"] = state["_log"] = state["_addt"] = None
        return state

    @property
    def is_prime_field(self) -> bool:
        return self.base is None

    @property
    def sub_order(self) -> int:
        return self.p if self.base is None else self.base.order

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    # -- coordinates over the immediate base --------------------------------

    def digits(self, a: int) -> list[int]:
        """Coefficients of ``a`` over the base field, constant term first."""
        if self.base is None:
            return [a]
        return _digits(a, self.base.order, self.degree)

    def from_digits(self, ds: Sequence[int]) -> int:
        if self.base is None:
            return ds[0] % self.p
        return _from_digits(ds, self.base.order)

    # -- additive structure ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        if self.order <= _ADD_TABLE_LIMIT:
            if self._addt is None:
                self._addt = [[self._add_slow(x, y) for y in range(self.order)] for x in range(self.order)]
            return self._addt[a][b]
        return self._add_slow(a, b)

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        place = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        place = 1
        while a:
            a, da = divmod(a, p)
            out += ((p - da) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- multiplicative structure --------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        B = self.base
        prod = poly_mul(self.digits(a), self.digits(b), B)
        rem = poly_divmod(prod, self.modulus, B)[1]
        return self.from_digits(rem + [0] * (self.degree - len(rem)))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.base is None:
            return a * b % self.p
        return self._mul_poly(a, b)

    def _pow_raw(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            k >>= 1
        return result

    def _build_tables(self) -> None:
        n = self.order - 1
        factors = _prime_factors(n) if n > 1 else []
        g = 1
        for cand in range(1, self.order):
            if all(self._pow_raw(cand, n // r) != 1 for r in factors):
                g = cand
                break
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    def _tables(self):
        if self._exp is None:
            self._build_tables()
        return self._exp, self._log

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.base is None:
            return a * b % self.p
        if self.order > _MUL_TABLE_LIMIT:
            return self._mul_poly(a, b)
        exp, log = self._tables()
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        if self.order > _MUL_TABLE_LIMIT:
            return self._pow_raw(a, self.order - 2)
        exp, log = self._tables()
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if not a:
            return 0 if k else 1
        if self.base is None:
            return pow(a, k, self.p)
        if self.order > _MUL_TABLE_LIMIT:
            return self._pow_raw(a, k)
        exp, log = self._tables()
        return exp[(log[a] * k) % (self.order - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        """``a ** (|base| ** times)``; the identity on the base field."""
        return self.pow(a, self.sub_order**times)


def field_make(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """GF(p^e) with the given modulus, or the default one when omitted."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeMismatch("e must be >= 1")
    if modulus is not None and len(modulus) != e + 1:
        raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {e}")
    prime = FiniteField(p)
    if e == 1:
        if modulus is not None:
            # any monic linear polynomial gives the same prime field
            FiniteField(p, modulus)
        return prime
    if modulus is None:
        modulus = default_modulus(prime, e)
    return FiniteField(p, modulus, base=prime)


def field_from_order(q: int) -> FiniteField:
    p, e = prime_power(q)
    return field_make(p, e)


def extension(base: FiniteField, m: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """GF(q^m) as ``base[y]/(modulus)``; for ``m == 1`` returns ``base`` itself."""
    if m < 1:
        raise DegreeMismatch("extension degree must be >= 1")
    if modulus is not None and len(modulus) != m + 1:
        raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
    if m == 1 and modulus is None:
        return base
    if modulus is None:
        modulus = default_modulus(base, m)
    return FiniteField(base.p, modulus, base=base)


def _subfield_coords(v: int, base: FiniteField, ext: FiniteField) -> list[int]:
    """Coordinates of ``v`` over ``base`` in the polynomial basis of ``ext``."""
    if ext == base:
        return [v]
    return ext.digits(v)


@dataclass(frozen=True)
class ExtensionBasis:
    """A GF(q)-basis ``gammas`` of GF(q^m); ``ext`` must be built over ``base``."""

    base: FiniteField
    ext: FiniteField
    gammas: tuple[int, ...]
    _inv: tuple = dc_field(default=(), repr=False, compare=False)

    def __post_init__(self):
        from .linalg import inverse

        if self.ext != self.base and self.ext.base != self.base:
            raise BasisMismatch(f"{self.ext!r} is not an extension of {self.base!r}")
        m = self.m
        if len(self.gammas) != m:
            raise BasisMismatch(f"expected {m} basis elements, got {len(self.gammas)}")
        rows = [_subfield_coords(g, self.base, self.ext) for g in self.gammas]
        try:
            inv = inverse(rows, self.base)
        except ValueError:
            raise BasisMismatch("basis elements are linearly dependent over the base field") from None
        object.__setattr__(self, "gammas", tuple(self.gammas))
        object.__setattr__(self, "_inv", tuple(tuple(r) for r in inv))

    @property
    def m(self) -> int:
        return 1 if self.ext == self.base else self.ext.degree

    @classmethod
    def polynomial(cls, base: FiniteField, ext: FiniteField) -> "ExtensionBasis":
        """The basis ``1, y, ..., y^(m-1)``."""
        m = 1 if ext == base else ext.degree
        Q = base.order
        return cls(base, ext, tuple(Q**j for j in range(m)))


def ext_coords(v: int, basis: ExtensionBasis, ext: FiniteField | None = None) -> list[int]:
    """``(c_1..c_m)`` over the base field with ``v = sum c_j * gamma_j``."""
    if ext is not None and ext != basis.ext:
        raise BasisMismatch("element belongs to a different extension field")
    if not 0 <= v < basis.ext.order:
        raise BasisMismatch(f"{v} is not an element of {basis.ext!r}")
    F = basis.base
    poly = _subfield_coords(v, F, basis.ext)
    m = basis.m
    out = []
    for j in range(m):
        acc = 0
        for i in range(m):
            if poly[i]:
                acc = F.add(acc, F.mul(poly[i], basis._inv[i][j]))
        out.append(acc)
    return out


def ext_uncoords(coords: Sequence[int], basis: ExtensionBasis) -> int:
    """Inverse of ``ext_coords``."""
    if len(coords) != basis.m:
        raise BasisMismatch(f"expected {basis.m} coordinates")
    E = basis.ext
    acc = 0
    for c, g in zip(coords, basis.gammas):
        if c:
            acc = E.add(acc, E.mul(c, g))
    return acc
