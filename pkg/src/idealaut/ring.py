"""Exact arithmetic over the supported coefficient rings Z, Q and GF(p).

A ring is described by a :class:`Ring` value (use the ``ZZ`` and ``QQ``
singletons, or ``GF(p)`` for a prime field).  Elements are immutable
:class:`RingElement` wrappers around

  * arbitrary-precision ``int`` for Z,
  * ``fractions.Fraction`` (always reduced, positive denominator) for Q,
  * an ``int`` residue in ``[0, p)`` for GF(p).

The usual operators ``+ - * **`` are overloaded; plain Python ints coerce
into any ring (the canonical image of Z), but elements of two different
rings never mix silently; that raises :class:`~idealaut.errors.MixedRings`.
Division is deliberately restricted: use :meth:`RingElement.div_exact`,
which fails loudly when the quotient does not exist in the ring.

Canonical element order (used for deterministic output everywhere):
GF(p) by residue; Z and Q by (|numerator|, denominator, sign) with the
positive element first, so units list as ``1, -1`` and ``1 < -1 < 2``.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    CoefficientNotInRing,
    DivisionByZero,
    InexactDivision,
    MixedRings,
    NotAUnit,
    TheoryViolation,
    WrongRing,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
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


@dataclass(frozen=True)
class Ring:
    """Descriptor of a coefficient ring: kind 'Z', 'Q' or 'F' (with prime p)."""

    kind: str
    p: int | None = None

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    def __repr__(self):
        return f"Ring({self})"

    @property
    def char(self) -> int:
        return self.p if self.kind == "F" else 0

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def elem(self, value) -> "RingElement":
        """Coerce an int, Fraction, str or same-ring element into this ring."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise MixedRings(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, str):
            return self.from_str(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            elif self.kind == "Q":
                return RingElement(self, value)
            else:
                raise CoefficientNotInRing(f"{value} is not an element of {self}")
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if self.kind == "Z":
            return RingElement(self, value)
        if self.kind == "Q":
            return RingElement(self, Fraction(value))
        return RingElement(self, value % self.p)

    def from_str(self, text: str) -> "RingElement":
        """Parse element text: optional sign, digits, optional /denominator (Q only)."""
        body = text.strip()
        sign = 1
        if body[:1] in "+-":
            if body[0] == "-":
                sign = -1
            body = body[1:]
        num, slash, den = body.partition("/")
        if not num.isdigit() or (slash and not den.isdigit()):
            raise CoefficientNotInRing(f"malformed element literal {text!r} for {self}")
        if slash:
            if self.kind != "Q":
                raise CoefficientNotInRing(
                    f"fraction literal {text!r} is not an element of {self}"
                )
            if int(den) == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return self.elem(Fraction(sign * int(num), int(den)))
        return self.elem(sign * int(num))

    @property
    def has_finite_units(self) -> bool:
        return self.kind != "Q"

    def units(self) -> list["RingElement"]:
        """All units, canonically ordered.  Only for Z and GF(p)."""
        if self.kind == "Z":
            return [self.elem(1), self.elem(-1)]
        if self.kind == "F":
            return [self.elem(a) for a in range(1, self.p)]
        raise WrongRing("Q has infinitely many units")


ZZ = Ring("Z")
QQ = Ring("Q")


@functools.lru_cache(maxsize=None)
def GF(p: int) -> Ring:
    """The prime field with p elements; validates 2 <= p < 2**31 prime."""
    if not (2 <= p < 2**31 and is_prime(p)):
        raise WrongRing(f"modulus {p} is not a prime in [2, 2^31)")
    return Ring("F", p)


class RingElement:
    """Immutable exact element of a :class:`Ring`."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise MixedRings(f"cannot combine {self.ring} and {other.ring} elements")
            return other
        if isinstance(other, int):
            return self.ring.elem(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ring.kind == "F":
            return RingElement(self.ring, (self.value + other.value) % self.ring.p)
        return RingElement(self.ring, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.ring.kind == "F":
            return RingElement(self.ring, self.value * other.value % self.ring.p)
        return RingElement(self.ring, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        if self.ring.kind == "F":
            return RingElement(self.ring, -self.value % self.ring.p)
        return RingElement(self.ring, -self.value)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.ring.kind == "F":
            return RingElement(self.ring, pow(self.value, exponent, self.ring.p))
        return RingElement(self.ring, self.value**exponent)

    def div_exact(self, other) -> "RingElement":
        """Exact quotient; InexactDivision over Z when the divisor does not divide."""
        other = self.ring.elem(other)
        if other.is_zero:
            raise DivisionByZero(f"division by zero in {self.ring}")
        if self.ring.kind == "Z":
            q, r = divmod(self.value, other.value)
            if r:
                raise InexactDivision(f"{other.value} does not divide {self.value} in Z")
            return RingElement(self.ring, q)
        return self * other.inverse()

    def inverse(self) -> "RingElement":
        if not self.is_unit:
            raise NotAUnit(f"{self} is not a unit of {self.ring}")
        if self.ring.kind == "Z":
            return self
        if self.ring.kind == "Q":
            return RingElement(self.ring, 1 / self.value)
        return RingElement(self.ring, pow(self.value, -1, self.ring.p))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    @property
    def is_unit(self) -> bool:
        if self.ring.kind == "Z":
            return self.value in (1, -1)
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.elem(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return not self.is_zero

    def sort_key(self):
        """Canonical order: residue for GF(p); (|num|, den, sign) for Z and Q."""
        if self.ring.kind == "F":
            return (self.value,)
        num = self.value if self.ring.kind == "Z" else self.value.numerator
        den = 1 if self.ring.kind == "Z" else self.value.denominator
        return (abs(num), den, 0 if num >= 0 else 1)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}_{self.ring}"


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of GF(p)^x, found by trial against the factors of p-1."""
    if p == 2:
        return 1
    qs = _prime_factors(p - 1)
    for candidate in range(2, p):
        if all(pow(candidate, (p - 1) // q, p) != 1 for q in qs):
            return candidate
    raise TheoryViolation(f"no primitive root found modulo {p}")


def _discrete_log(p: int, base: int, target: int) -> int:
    # baby-step giant-step; base must generate GF(p)^x
    order = p - 1
    m = isqrt(order) + 1
    table = {}
    e = 1
    for j in range(m):
        table.setdefault(e, j)
        e = e * base % p
    giant = pow(base, -m, p)
    cur = target % p
    for i in range(m + 1):
        if cur in table:
            return (i * m + table[cur]) % order
        cur = cur * giant % p
    raise TheoryViolation(f"{target} is not a power of {base} mod {p}")


def unit_torsion(ring: Ring, g: int) -> list[RingElement]:
    """All units u with u**g == 1, canonically ordered.

    For Z and Q this is {1} (g odd) or {1, -1} (g even); for GF(p) the cyclic
    subgroup of order gcd(g, p-1).
    """
    if g < 1:
        raise ValueError("torsion exponent must be >= 1")
    if ring.kind in ("Z", "Q"):
        roots = [ring.elem(1)]
        if g % 2 == 0:
            roots.append(ring.elem(-1))
        return roots
    p = ring.p
    count = gcd(g, p - 1)
    step = pow(primitive_root(p), (p - 1) // count, p)
    values, cur = set(), 1
    for _ in range(count):
        values.add(cur)
        cur = cur * step % p
    if len(values) != count:
        raise TheoryViolation("torsion subgroup has wrong order")
    return [ring.elem(v) for v in sorted(values)]


def _int_nth_root(n: int, d: int) -> int:
    # floor d-th root of n >= 0 by integer Newton iteration
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0 or d == 1:
        return n
    x = 1 << (n.bit_length() // d + 1)
    while True:
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            return x
        x = y


def _exact_int_roots(v: int, d: int) -> list[int]:
    # all integer solutions of x**d == v
    if v == 0:
        return [0]
    if d % 2 == 0 and v < 0:
        return []
    r = _int_nth_root(abs(v), d)
    if r**d != abs(v):
        return []
    if d % 2 == 0:
        return [r, -r]
    return [r if v > 0 else -r]


def nth_roots(x: RingElement, d: int) -> list[RingElement]:
    """All solutions of y**d == x in x's ring, canonically ordered."""
    if d < 1:
        raise ValueError("root index must be >= 1")
    ring = x.ring
    if x.is_zero:
        return [ring.zero()]
    if ring.kind == "Z":
        roots = _exact_int_roots(x.value, d)
    elif ring.kind == "Q":
        nums = _exact_int_roots(x.value.numerator, d)
        dens = [r for r in _exact_int_roots(x.value.denominator, d) if r > 0]
        roots = [Fraction(a, b) for a in nums for b in dens]
    else:
        p = ring.p
        order = p - 1
        d_eff = d % order
        if d_eff == 0:
            return ring.units() if x.is_one else []
        base = primitive_root(p)
        k = _discrete_log(p, base, x.value)
        e = gcd(d_eff, order)
        if k % e:
            return []
        o2 = order // e
        y0 = k // e * pow(d_eff // e, -1, o2) % o2
        roots = sorted({pow(base, (y0 + i * o2) % order, p) for i in range(e)})
    out = [ring.elem(v) for v in roots]
    out.sort(key=RingElement.sort_key)
    return out
