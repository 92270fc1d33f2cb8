"""Sparse multivariate polynomials over an exact field.

Variables are indexed by pairs ``(i, j)`` (the ``x_{ij}`` of the shifting
matrices).  A polynomial is a dict from packed monomials to nonzero raw
coefficients.  A packed monomial is one int holding the total degree in its
top 16-bit slot followed by one slot per variable, so

* multiplying monomials is integer addition,
* comparing packed ints is the graded lexicographic order,
* divisibility is a single guarded subtraction.

Exponents must stay below 2**15.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Mapping

from .fields import Field, PrimeField, RationalField

_BITS = 16
_MASK = (1 << _BITS) - 1


class PolyRing:
    """The ring ``F[x_v : v in variables]``.

    Implements the same element-level protocol as the fields (``add``,
    ``mul``, ``is_zero``...) plus ``gcd`` and ``exact_div`` so the elimination
    code can run over either.
    """

    is_field = False

    def __init__(self, field: Field, variables: Iterable[tuple[int, int]]):
        vs = tuple(sorted({(int(i), int(j)) for i, j in variables}))
        self.field = field
        self.variables = vs
        self.nvars = n = len(vs)
        self.index = {v: i for i, v in enumerate(vs)}
        self._shifts = [_BITS * (n - 1 - i) for i in range(n)]
        self._deg_shift = _BITS * n
        guard = 0
        for f in range(n + 1):
            guard |= 1 << (_BITS * f + _BITS - 1)
        self._guard = guard
        self._var_mono = [(1 << self._deg_shift) | (1 << s) for s in self._shifts]
        # coefficient fast paths
        self._p = field.p if isinstance(field, PrimeField) else None
        self._rational = isinstance(field, RationalField)
        self._native = field.native
        self.zero = MultiPoly(self, {})
        self.one = MultiPoly(self, {0: field.one})

    def __repr__(self) -> str:
        names = ", ".join(f"x_{{{i},{j}}}" for i, j in self.variables)
        return f"{self.field}[{names}]"

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and (self.field, self.variables) == (other.field, other.variables)

    def __hash__(self) -> int:
        return hash((self.field, self.variables))

    # --- monomials ---------------------------------------------------------

    def pack(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        m = sum(exps) << self._deg_shift
        for e, s in zip(exps, self._shifts):
            if e < 0 or e >= 1 << (_BITS - 1):
                raise ValueError(f"exponent {e} out of range")
            m |= e << s
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> s) & _MASK for s in self._shifts)

    def mono_degree(self, m: int) -> int:
        return m >> self._deg_shift

    def mono_divides(self, a: int, b: int) -> bool:
        g = self._guard
        return ((b | g) - a) & g == g

    def mono_gcd(self, a: int, b: int) -> int:
        return self.pack(min(x, y) for x, y in zip(self.unpack(a), self.unpack(b)))

    def var_exponent(self, m: int, i: int) -> int:
        return (m >> self._shifts[i]) & _MASK

    def var_power(self, i: int, e: int) -> int:
        return self._var_mono[i] * e

    # --- construction ------------------------------------------------------

    def gen(self, pair: tuple[int, int]) -> "MultiPoly":
        i = self.index[tuple(pair)]
        return MultiPoly(self, {self._var_mono[i]: self.field.one})

    def gens(self) -> list["MultiPoly"]:
        return [self.gen(v) for v in self.variables]

    def constant(self, c) -> "MultiPoly":
        if self.field.is_zero(c):
            return self.zero
        return MultiPoly(self, {0: c})

    def from_int(self, n: int) -> "MultiPoly":
        return self.constant(self.field.from_int(n))

    def from_dict(self, terms: Mapping[tuple[int, ...], object]) -> "MultiPoly":
        out = {}
        for exps, c in terms.items():
            c = self.field.coerce(c) if not isinstance(c, int) or self._p else c
            c = self._reduce(c)
            if not self.field.is_zero(c):
                out[self.pack(exps)] = c
        return MultiPoly(self, out)

    def _reduce(self, c):
        if self._p is not None:
            return c % self._p
        if self._rational and isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    # --- domain protocol ---------------------------------------------------

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a.terms

    def eq(self, a, b) -> bool:
        return a.terms == b.terms

    def length(self, a) -> int:
        return len(a.terms)

    def degree(self, a) -> int:
        return a.total_degree()

    def format(self, a) -> str:
        return str(a)

    def exact_div(self, a: "MultiPoly", b: "MultiPoly") -> "MultiPoly":
        q = self.try_div(a, b)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return q

    # --- normalization -----------------------------------------------------

    def normalize(self, a: "MultiPoly") -> "MultiPoly":
        """Canonical associate: monic in the leading term over a finite field,
        primitive integral with positive leading coefficient over QQ."""
        if not a.terms:
            return a
        lc = a.terms[max(a.terms)]
        if self._rational:
            den = 1
            for c in a.terms.values():
                if isinstance(c, Fraction):
                    den = den * c.denominator // igcd(den, c.denominator)
            ints = [int(c * den) for c in a.terms.values()]
            g = 0
            for c in ints:
                g = igcd(g, c)
                if g == 1:
                    break
            if lc < 0:
                g = -g
            if den == 1 and g == 1:
                return a
            return MultiPoly(self, {m: c // g for m, c in zip(a.terms, ints)})
        if self.field.eq(lc, self.field.one):
            return a
        return a.scale(self.field.inv(lc))

    # --- division ----------------------------------------------------------

    def try_div(self, a: "MultiPoly", b: "MultiPoly") -> "MultiPoly | None":
        """``a / b`` if ``b`` divides ``a`` exactly, else None."""
        bt = b.terms
        if not bt:
            raise ZeroDivisionError("division by the zero polynomial")
        at = a.terms
        if not at:
            return self.zero
        F = self.field
        if len(bt) == 1:
            (mb, cb), = bt.items()
            inv = F.inv(cb)
            out = {}
            divides = self.mono_divides
            mul = F.mul
            for m, c in at.items():
                if not divides(mb, m):
                    return None
                out[m - mb] = mul(c, inv) if not self._rational else _qdiv(c, cb)
            return MultiPoly(self, out)
        if len(at) < len(bt):
            return None
        lead_b = max(bt)
        if self.mono_degree(max(at)) < self.mono_degree(lead_b):
            return None
        lc_b = bt[lead_b]
        rest = [(m, c) for m, c in bt.items() if m != lead_b]
        divides = self.mono_divides
        p = self._p
        rational = self._rational
        r = dict(at)
        heap = [-m for m in r]
        heapq.heapify(heap)
        q = {}
        if p is not None:
            inv = pow(lc_b, -1, p)
        elif not rational:
            inv = F.inv(lc_b)
        while heap:
            m = -heapq.heappop(heap)
            c = r.pop(m, None)
            if c is None:
                continue
            if m < lead_b or not divides(lead_b, m):
                return None
            qm = m - lead_b
            if p is not None:
                qc = c * inv % p
            elif rational:
                qc = _qdiv(c, lc_b)
            else:
                qc = F.mul(c, inv)
            q[qm] = qc
            for mb, cb in rest:
                mm = qm + mb
                old = r.get(mm)
                if p is not None:
                    new = ((0 if old is None else old) - qc * cb) % p
                    zero = new == 0
                elif rational:
                    new = (0 if old is None else old) - qc * cb
                    zero = new == 0
                    if not zero and isinstance(new, Fraction) and new.denominator == 1:
                        new = new.numerator
                else:
                    new = F.sub(F.zero if old is None else old, F.mul(qc, cb))
                    zero = F.is_zero(new)
                if zero:
                    if old is not None:
                        del r[mm]
                else:
                    if old is None:
                        heapq.heappush(heap, -mm)
                    r[mm] = new
        return MultiPoly(self, q)

    # --- gcd ---------------------------------------------------------------

    def gcd(self, a: "MultiPoly", b: "MultiPoly") -> "MultiPoly":
        """A greatest common divisor in canonical (normalized) form."""
        if not a.terms:
            return self.normalize(b)
        if not b.terms:
            return self.normalize(a)
        if 0 in a.terms and len(a.terms) == 1 or 0 in b.terms and len(b.terms) == 1:
            return self.one
        if a.terms == b.terms:
            return self.normalize(a)
        ma, mb = a.monomial_content(), b.monomial_content()
        m = self.mono_gcd(ma, mb)
        a1 = a.shift_down(ma) if ma else a
        b1 = b.shift_down(mb) if mb else b
        g = self._gcd_nomono(a1, b1)
        if m:
            g = g.shift_up(m)
        return self.normalize(g)

    def gcd_many(self, polys: Iterable["MultiPoly"]) -> "MultiPoly":
        """gcd of several polynomials, stopping as soon as it is a unit."""
        ps = sorted((p for p in polys if p.terms), key=lambda p: (len(p.terms), p.total_degree()))
        if not ps:
            return self.zero
        if ps[0].is_constant():
            return self.one
        m = ps[0].monomial_content()
        for p in ps[1:]:
            if not m:
                break
            m = self.mono_gcd(m, p.monomial_content())
        if len(ps[0].terms) == 1:
            return self.normalize(MultiPoly(self, {m: self.field.one}))
        g = ps[0]
        for p in ps[1:]:
            g = self.gcd(g, p)
            if g.is_constant():
                return self.one
        return self.normalize(g)

    def _gcd_nomono(self, a: "MultiPoly", b: "MultiPoly") -> "MultiPoly":
        # neither input has a monomial factor
        if a.is_constant() or b.is_constant():
            return self.one
        if a.terms == b.terms:
            return a
        if len(b.terms) <= len(a.terms):
            if self.try_div(a, b) is not None:
                return b
        elif self.try_div(b, a) is not None:
            return a
        va, vb = a.variables_used(), b.variables_used()
        only = (va - vb) or (vb - va)
        if only:
            v = min(only)
            src, other = (a, b) if v in va else (b, a)
            g = other
            for c in sorted(src.coefficients_in(v).values(), key=lambda p: len(p.terms)):
                g = self.gcd(g, c)
                if g.is_constant():
                    return self.one
            return g
        v = min(va, key=lambda i: (max(a.degree_in(i), b.degree_in(i)), i))
        ca = self.gcd_many(a.coefficients_in(v).values())
        cb = self.gcd_many(b.coefficients_in(v).values())
        content = self.gcd(ca, cb)
        A = self.exact_div(a, ca) if not ca.is_constant() else a
        B = self.exact_div(b, cb) if not cb.is_constant() else b
        if A.degree_in(v) < B.degree_in(v):
            A, B = B, A
        while True:
            R = self._prem(A, B, v)
            if not R.terms:
                break
            if R.degree_in(v) == 0:
                return content
            A, B = B, self._primitive_part(R, v)
        return content * self._primitive_part(B, v)

    def _prem(self, A: "MultiPoly", B: "MultiPoly", v: int) -> "MultiPoly":
        db = B.degree_in(v)
        lcb = B.coefficients_in(v)[db]
        R = A
        while R.terms:
            dr = R.degree_in(v)
            if dr < db:
                break
            lcr = R.coefficients_in(v)[dr]
            R = lcb * R - (lcr.shift_up(self.var_power(v, dr - db))) * B
        return R

    def _primitive_part(self, R: "MultiPoly", v: int) -> "MultiPoly":
        c = self.gcd_many(R.coefficients_in(v).values())
        if c.is_constant():
            return R
        return self.exact_div(R, c)


def _qdiv(a, b):
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


class MultiPoly:
    """An element of a :class:`PolyRing`; treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # --- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("variable-set mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_int(other) if isinstance(other, int) else self.ring.constant(other)
        return NotImplemented

    def _combine(self, a: dict, b: dict, sign: int) -> "MultiPoly":
        ring = self.ring
        out = dict(a)
        p = ring._p
        if p is not None:
            for m, c in b.items():
                v = (out.get(m, 0) + sign * c) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        elif ring._rational:
            for m, c in b.items():
                v = out.get(m, 0) + sign * c
                if v:
                    if isinstance(v, Fraction) and v.denominator == 1:
                        v = v.numerator
                    out[m] = v
                else:
                    out.pop(m, None)
        else:
            F = ring.field
            op = F.add if sign > 0 else F.sub
            for m, c in b.items():
                v = op(out.get(m, F.zero), c)
                if F.is_zero(v):
                    out.pop(m, None)
                else:
                    out[m] = v
        return MultiPoly(ring, out)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            return other._combine(other.terms, self.terms, 1)
        return self._combine(self.terms, other.terms, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(self.terms, other.terms, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        F = self.ring.field
        return MultiPoly(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def scale(self, c) -> "MultiPoly":
        """Multiply by a raw field scalar."""
        ring = self.ring
        F = ring.field
        if F.is_zero(c):
            return ring.zero
        if ring._p is not None:
            p = ring._p
            return MultiPoly(ring, {m: v * c % p for m, v in self.terms.items()})
        if ring._rational:
            return MultiPoly(ring, {m: ring._reduce(v * c) for m, v in self.terms.items()})
        return MultiPoly(ring, {m: F.mul(v, c) for m, v in self.terms.items()})

    scalar_mul = scale

    def shift_up(self, mono: int) -> "MultiPoly":
        return MultiPoly(self.ring, {m + mono: c for m, c in self.terms.items()})

    def shift_down(self, mono: int) -> "MultiPoly":
        return MultiPoly(self.ring, {m - mono: c for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        ring = self.ring
        if not a or not b:
            return ring.zero
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if mb == 0:
                return MultiPoly(ring, a).scale(cb)
            return MultiPoly(ring, a).scale(cb).shift_up(mb)
        acc: dict = {}
        get = acc.get
        if ring._native:
            for m1, c1 in b.items():
                for m2, c2 in a.items():
                    m = m1 + m2
                    acc[m] = get(m, 0) + c1 * c2
            p = ring._p
            if p is not None:
                out = {}
                for m, c in acc.items():
                    c %= p
                    if c:
                        out[m] = c
            else:
                out = {m: ring._reduce(c) for m, c in acc.items() if c}
            return MultiPoly(ring, out)
        F = ring.field
        fadd, fmul, zero = F.add, F.mul, F.zero
        for m1, c1 in b.items():
            for m2, c2 in a.items():
                m = m1 + m2
                acc[m] = fadd(get(m, zero), fmul(c1, c2))
        return MultiPoly(ring, {m: c for m, c in acc.items() if not F.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_divide(self, other: "MultiPoly") -> "MultiPoly":
        return self.ring.exact_div(self, other)

    def __floordiv__(self, other):
        return self.ring.exact_div(self, self._coerce(other))

    # --- inspection --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self._coerce(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and 0 in t)

    def __len__(self) -> int:
        return len(self.terms)

    def length(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return self.ring.mono_degree(max(self.terms))

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        m = max(self.terms)
        return self.ring.unpack(m), self.terms[m]

    def constant_coefficient(self):
        return self.terms.get(0, self.ring.field.zero)

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        """(exponent vector, coefficient) pairs in descending monomial order."""
        unpack = self.ring.unpack
        return [(unpack(m), self.terms[m]) for m in sorted(self.terms, reverse=True)]

    def monomial_content(self) -> int:
        """The largest monomial dividing every term, packed."""
        ring = self.ring
        it = iter(self.terms)
        first = next(it, None)
        if first is None or first == 0:
            return 0
        exps = list(ring.unpack(first))
        for m in it:
            if m == 0:
                return 0
            for i, e in enumerate(ring.unpack(m)):
                if e < exps[i]:
                    exps[i] = e
            if not any(exps):
                return 0
        return ring.pack(exps)

    def variables_used(self) -> set[int]:
        ring = self.ring
        used = set()
        for m in self.terms:
            for i in range(ring.nvars):
                if i not in used and ring.var_exponent(m, i):
                    used.add(i)
        return used

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        ve = self.ring.var_exponent
        return max(ve(m, i) for m in self.terms)

    def coefficients_in(self, i: int) -> dict[int, "MultiPoly"]:
        """Write ``self`` as ``sum_e c_e x_i^e``; returns ``{e: c_e}``."""
        ring = self.ring
        shift, dshift = ring._shifts[i], ring._deg_shift
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = (m >> shift) & _MASK
            out.setdefault(e, {})[m - (e << shift) - (e << dshift)] = c
        return {e: MultiPoly(ring, t) for e, t in out.items()}

    def evaluate(self, assignment: Mapping[tuple[int, int], object], field: Field | None = None):
        """Substitute raw values of ``field`` (default: the coefficient field).

        Coefficients are embedded into ``field``, which must contain the
        coefficient field as its prime subfield (or equal it).
        """
        ring = self.ring
        F = field or ring.field
        used = self.variables_used()
        vals = {}
        for i in used:
            pair = ring.variables[i]
            if pair not in assignment:
                raise KeyError(f"no value assigned to x_{{{pair[0]},{pair[1]}}}")
            vals[i] = assignment[pair]
        total = F.zero
        for m, c in self.terms.items():
            t = F.embed(c)
            for i in used:
                e = ring.var_exponent(m, i)
                if e:
                    t = F.mul(t, F.pow(vals[i], e))
            total = F.add(total, t)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ring = self.ring
        F = ring.field
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                f"x_{{{i},{j}}}" + (f"^{e}" if e > 1 else "")
                for (i, j), e in zip(ring.variables, exps)
                if e
            )
            cs = F.format(c)
            if not mono:
                parts.append(cs)
            elif F.eq(c, F.one):
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def length(p: MultiPoly) -> int:
    return len(p.terms)


def total_degree(p: MultiPoly) -> int:
    return p.total_degree()


def gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p.ring.gcd(p, q)


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p.ring.exact_div(p, q)


def evaluate(p: MultiPoly, assignment, field: Field | None = None):
    return p.evaluate(assignment, field)
