"""Exact coefficient fields: GF(p), GF(p^d) and the rationals.

A field object owns the arithmetic; its elements are plain Python values
("raw" values) so that polynomial and matrix code can run without wrapper
overhead:

* ``PrimeField(p)``: ints in ``range(p)``;
* ``RationalField()``: ints or ``fractions.Fraction``;
* ``ExtensionField(p, d)``: ints in ``range(p**d)`` encoding the residue
  ``sum(a_i t^i)`` by its base-p digits, so the prime subfield embeds as
  the identity on ``range(p)``.

``field(x)`` wraps a raw value in a :class:`FieldElement` with operators, for
interactive use.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

DEFAULT_RATIONAL_BOUND = 2**16

# deterministic Miller-Rabin witnesses for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


class FieldError(ArithmeticError):
    pass


class Field:
    """Common interface of the coefficient fields."""

    is_field = True
    native = False  # raw values support +, -, * directly (then call reduce)
    characteristic: int
    order: int | None
    zero = 0
    one = 1

    def reduce(self, a):
        return a

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, n: int):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # elimination helpers: over a field every nonzero entry has length 1
    def length(self, a) -> int:
        return 0 if self.is_zero(a) else 1

    def degree(self, a) -> int:
        return -1 if self.is_zero(a) else 0

    @property
    def prime_field(self) -> "Field":
        return self

    def embed(self, a):
        """Map a raw value of the prime subfield into this field."""
        return a

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to another field")
            return value
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        return self.from_int(value)

    def check(self, a) -> None:
        """Raise if ``a`` is not a canonical raw value of this field."""

    def format(self, a) -> str:
        return str(a)


class PrimeField(Field):
    native = True

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree_over_prime = 1

    def __repr__(self) -> str:
        return f"GF({self.p})"

    @property
    def spec(self) -> str:
        return str(self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def reduce(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def from_int(self, n: int):
        return int(n) % self.p

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def check(self, a) -> None:
        if not isinstance(a, int) or not 0 <= a < self.p:
            raise FieldError(f"{a!r} is not an element of {self}")


class RationalField(Field):
    """The rationals, with bounded-integer random sampling."""

    native = True
    characteristic = 0
    order = None

    def __init__(self, bound: int = DEFAULT_RATIONAL_BOUND):
        self.bound = int(bound)

    def __repr__(self) -> str:
        return "QQ"

    @property
    def spec(self) -> str:
        return "q"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0 in QQ")
        return Fraction(a) / b

    def from_int(self, n):
        return n if isinstance(n, (int, Fraction)) else Fraction(n)

    def coerce(self, value):
        if isinstance(value, str):
            return Fraction(value)
        return self.from_int(value)

    def random(self, rng: random.Random):
        return rng.randint(-self.bound, self.bound)

    def check(self, a) -> None:
        if not isinstance(a, (int, Fraction)):
            raise FieldError(f"{a!r} is not a rational number")


# --- polynomials over GF(p) as coefficient lists, low degree first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod([c % p for c in prod], f, p)


def _poly_mod(a, f, p):
    a = _trim(list(a))
    df = len(f) - 1
    lead_inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, y in enumerate(f):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _poly_powmod(a, e, f, p):
    result, base = [1], _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _prime_divisors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` over GF(p) (coefficients low first)."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _poly_powmod(x, p**d, f, p) != _poly_mod(x, f, p):
        return False
    for q in _prime_divisors(d):
        h = _poly_powmod(x, p ** (d // q), f, p)
        diff = _trim([(a - b) % p for a, b in _zip_pad(h, x)])
        if len(_poly_gcd(f, diff, p)) != 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


@lru_cache(maxsize=None)
def find_irreducible(p: int, d: int) -> tuple[int, ...]:
    """The smallest monic irreducible polynomial of degree ``d`` over GF(p).

    Candidates ``t^d + a_{d-1} t^{d-1} + ... + a_0`` are scanned with the
    coefficient vector ``(a_{d-1}, ..., a_0)`` in ascending lexicographic order.
    Returns coefficients lowest degree first, including the leading 1.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be at least 1")
    for code in range(p**d):
        # code's base-p digits, most significant = a_{d-1}
        low = [(code // p**i) % p for i in range(d)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


_TABLE_LIMIT = 1024


class ExtensionField(Field):
    """GF(p^d) = GF(p)[t]/(f) for the smallest monic irreducible ``f``."""

    def __init__(self, p: int, d: int, modulus: tuple[int, ...] | None = None):
        p, d = int(p), int(d)
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if modulus is None:
            modulus = find_irreducible(p, d)
        elif len(modulus) != d + 1 or modulus[-1] != 1 or not is_irreducible(list(modulus), p):
            raise FieldError(f"{modulus} is not a monic irreducible of degree {d}")
        self.p, self.d = p, d
        self.modulus = tuple(modulus)
        self.characteristic = p
        self.order = p**d
        self.degree_over_prime = d
        self._prime = PrimeField(p)
        self._mul_table = None
        self._inv_table = None
        if self.order <= _TABLE_LIMIT:
            q = self.order
            self._mul_table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self._inv_table = [0] + [row.index(1) for row in self._mul_table[1:]]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.d})"

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.d}"

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtensionField) and (other.p, other.modulus) == (self.p, self.modulus)

    def __hash__(self) -> int:
        return hash(("GF", self.p, self.modulus))

    @property
    def prime_field(self) -> PrimeField:
        return self._prime

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.d):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def undigits(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)[: self.d]):
            v = v * self.p + c
        return v

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.undigits((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.undigits((x - y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a):
        if self.p == 2:
            return a
        return self.undigits((-x) % self.p for x in self.digits(a))

    def _mul_slow(self, a, b):
        prod = _poly_mulmod(_trim(self.digits(a)), _trim(self.digits(b)), list(self.modulus), self.p)
        return self.undigits(prod + [0] * (self.d - len(prod)))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.order - 2)

    def from_int(self, n: int):
        return int(n) % self.p

    def coerce(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) > self.d:
                raise FieldError(f"too many coefficients for {self}")
            return self.undigits([int(c) % self.p for c in value] + [0] * (self.d - len(value)))
        return self.from_int(value)

    def random(self, rng: random.Random):
        return rng.randrange(self.order)

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def generator(self) -> int:
        """The class of ``t``."""
        return self.p if self.d > 1 else self.from_int(-self.modulus[0])

    def frobenius(self, a):
        return self.pow(a, self.p)

    def check(self, a) -> None:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise FieldError(f"{a!r} is not an element of {self}")

    def format(self, a) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


class FieldElement:
    """A raw field value bound to its field, with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.field.eq(self.value, other.value)
        if isinstance(other, (int, Fraction)):
            return self.field.eq(self.value, self.field.coerce(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    @property
    def numerator(self) -> int:
        return Fraction(self.value).numerator

    @property
    def denominator(self) -> int:
        return Fraction(self.value).denominator

    def __repr__(self) -> str:
        return f"{self.field}({self.field.format(self.value)})"


QQ = RationalField()


def GF(q: int | str) -> Field:
    """``GF(5)``, ``GF(4)`` or ``GF("7919^2")``."""
    if isinstance(q, str):
        return parse_field(q)
    q = int(q)
    if is_prime(q):
        return PrimeField(q)
    for p in range(2, q + 1):
        if q % p == 0:
            d, r = 0, q
            while r % p == 0:
                r //= p
                d += 1
            if r != 1:
                break
            return ExtensionField(p, d)
    raise FieldError(f"{q} is not a prime power")


_SPEC = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field(spec: str) -> Field:
    """Parse ``q``/``QQ`` (rationals), ``<p>`` or ``<p>^<d>``."""
    s = spec.strip()
    if s.lower() in ("q", "qq", "0"):
        return RationalField()
    m = _SPEC.match(s)
    if not m:
        raise FieldError(f"invalid field spec {spec!r}")
    p = int(m.group(1))
    d = int(m.group(2) or 1)
    if not is_prime(p):
        raise FieldError(f"invalid field spec {spec!r}: {p} is not prime (write prime powers as p^d)")
    if d < 1:
        raise FieldError(f"invalid field spec {spec!r}")
    return PrimeField(p) if d == 1 else ExtensionField(p, d)


def random_element(field: Field, rng: random.Random):
    return field.random(rng)
