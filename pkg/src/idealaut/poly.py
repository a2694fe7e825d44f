"""Dense exact univariate polynomials over Z, Q and GF(p).

Coefficients are stored ascending by exponent (``coeff(j)`` is the
coefficient of ``t**j``); the zero polynomial is the empty coefficient
list and reports ``degree() is None`` so callers must handle it
explicitly.  "Monic" means the leading coefficient is a *unit* of the
ring (so ``-t**2 + 1`` is monic over Z); :meth:`Poly.monic` rescales the
leading unit to 1.

Beyond the arithmetic operators this module provides affine substitution
``f(alpha*t + beta)`` (Horner over the polynomial ring), gcd, the
multiplicity-layer squarefree decomposition in characteristic 0 and p,
and the root-centroid utility :func:`center`.
"""

from math import gcd as _int_gcd

from .errors import (
    BothZero,
    ConstantPolynomial,
    DivisionByZero,
    InexactDivision,
    MixedRings,
    NotAUnit,
    NotMonic,
    TheoryViolation,
)
from .ring import QQ, ZZ, Ring, RingElement


class Poly:
    """Immutable dense polynomial; construct with coefficients ascending."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        cs = [ring.elem(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, val):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, (1,))

    @classmethod
    def t(cls, ring: Ring) -> "Poly":
        """The monomial t."""
        return cls(ring, (0, 1))

    @classmethod
    def from_roots(cls, ring: Ring, roots) -> "Poly":
        """prod (t - a) over the given roots, repetitions allowed."""
        out = cls.one(ring)
        for a in roots:
            out = out * cls(ring, (-ring.elem(a), ring.one()))
        return out

    # -- structure ----------------------------------------------------

    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> RingElement:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.ring.zero()

    def leading(self) -> RingElement:
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading().is_unit

    def monic(self) -> "Poly":
        """Rescale so the leading coefficient is exactly 1."""
        if not self.is_monic:
            raise NotMonic(f"leading coefficient of {self} is not a unit of {self.ring}")
        lead = self.leading()
        if lead.is_one:
            return self
        inv = lead.inverse()
        return Poly(self.ring, [c * inv for c in self.coeffs])

    def _require_same_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise MixedRings(f"polynomials over {self.ring} and {other.ring}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_same_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return Poly(self.ring, out)

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            s = self.ring.elem(other)
            return Poly(self.ring, [c * s for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_same_ring(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ring)
        zero = self.ring.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Poly.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder; each quotient step must be exact in the ring."""
        if not isinstance(other, Poly):
            return NotImplemented
        self._require_same_ring(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(other.coeffs):
            return Poly.zero(self.ring), self
        lead = other.leading()
        rem = list(self.coeffs)
        qlen = len(rem) - len(other.coeffs) + 1
        quot = [self.ring.zero()] * qlen
        for k in range(qlen - 1, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top.is_zero:
                continue
            q = top.div_exact(lead)
            quot[k] = q
            for j, c in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * c
        return Poly(self.ring, quot), Poly(self.ring, rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self divides other exactly."""
        if self.is_zero:
            return other.is_zero
        try:
            return (other % self).is_zero
        except InexactDivision:
            return False

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    # -- evaluation and substitution ----------------------------------

    def evaluate(self, x) -> RingElement:
        x = self.ring.elem(x)
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(self.ring, [c * j for j, c in enumerate(self.coeffs)][1:])

    def affine_substitute(self, alpha, beta) -> "Poly":
        """f(alpha*t + beta), computed exactly; alpha must be a unit."""
        alpha = self.ring.elem(alpha)
        beta = self.ring.elem(beta)
        if not alpha.is_unit:
            raise NotAUnit(f"{alpha} is not a unit of {self.ring}")
        if self.is_zero:
            return self
        image = Poly(self.ring, (beta, alpha))
        acc = Poly(self.ring, (self.coeffs[-1],))
        for c in reversed(self.coeffs[:-1]):
            acc = acc * image + Poly(self.ring, (c,))
        return acc

    def shifted(self, z) -> "Poly":
        """f(t + z)."""
        return self.affine_substitute(self.ring.one(), z)

    def root_multiplicity(self, a) -> int:
        """Multiplicity of a as a root (0 when f(a) != 0)."""
        a = self.ring.elem(a)
        if self.is_zero:
            raise DivisionByZero("every element is a root of the zero polynomial")
        linear = Poly(self.ring, (-a, self.ring.one()))
        count, cur = 0, self
        while not cur.evaluate(a):
            cur = cur // linear
            count += 1
            if cur.is_zero:
                break
        return count

    # -- conversions and text -----------------------------------------

    def map_ring(self, target: Ring) -> "Poly":
        """Re-interpret coefficients in another ring (must embed exactly)."""
        return Poly(target, [c.value for c in self.coeffs])

    def sort_key(self):
        return (len(self.coeffs), tuple(c.sort_key() for c in self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero:
                continue
            text = str(c)
            negative = text.startswith("-")
            mag = text[1:] if negative else text
            if j == 0:
                body = mag
            elif mag == "1":
                body = "t" if j == 1 else f"t^{j}"
            else:
                body = f"{mag}*t" if j == 1 else f"{mag}*t^{j}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.ring}, {self})"


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q/GF(p); primitive gcd with positive leading over Z."""
    f._require_same_ring(g)
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    ring = f.ring
    if ring.kind == "Z":
        h = gcd(f.map_ring(QQ), g.map_ring(QQ))
        return _clear_denominators(h)
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
        if not a.is_zero:
            a = a.monic()  # keeps Q coefficients small
    return a.monic()


def _clear_denominators(f: Poly) -> Poly:
    """Primitive integer polynomial with positive leading, proportional to f over Q."""
    if f.is_zero:
        return Poly.zero(ZZ)
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.value.denominator // _int_gcd(lcm, c.value.denominator)
    ints = [c.value.numerator * (lcm // c.value.denominator) for c in f.coeffs]
    content = 0
    for v in ints:
        content = _int_gcd(content, v)
    if ints[-1] < 0:
        content = -content
    return Poly(ZZ, [v // content for v in ints])


class SquarefreeDecomposition:
    """Multiplicity layers (f_m, m): f's monic form equals prod f_m**m."""

    __slots__ = ("ring", "layers")

    def __init__(self, ring: Ring, layers):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "layers", tuple(sorted(layers, key=lambda lm: lm[1])))

    def __setattr__(self, name, val):
        raise AttributeError("SquarefreeDecomposition is immutable")

    def expand(self) -> Poly:
        out = Poly.one(self.ring)
        for layer, m in self.layers:
            out = out * layer**m
        return out

    def squarefree_part(self) -> Poly:
        out = Poly.one(self.ring)
        for layer, _ in self.layers:
            out = out * layer
        return out

    def multiplicities(self) -> list[int]:
        return [m for _, m in self.layers]

    def __eq__(self, other):
        if not isinstance(other, SquarefreeDecomposition):
            return NotImplemented
        return self.ring == other.ring and self.layers == other.layers

    def __repr__(self):
        body = ", ".join(f"({layer}, {m})" for layer, m in self.layers)
        return f"SquarefreeDecomposition[{body}]"


def _require_monic_nonconstant(f: Poly):
    if f.is_zero or f.degree() == 0:
        raise ConstantPolynomial(f"{f} is constant")
    if not f.is_monic:
        raise NotMonic(f"leading coefficient of {f} is not a unit of {f.ring}")


def squarefree_decomposition(f: Poly) -> SquarefreeDecomposition:
    """Unique multiplicity-layer decomposition of a monic nonconstant polynomial."""
    _require_monic_nonconstant(f)
    ring = f.ring
    if ring.kind == "Z":
        rational = squarefree_decomposition(f.map_ring(QQ))
        layers = []
        for layer, m in rational.layers:
            for c in layer.coeffs:
                if c.value.denominator != 1:
                    raise TheoryViolation("monic integer polynomial has non-integer layer")
            layers.append((layer.map_ring(ring), m))
        return SquarefreeDecomposition(ring, layers)
    g = f.monic()
    if ring.char == 0:
        return SquarefreeDecomposition(ring, _yun(g))
    return SquarefreeDecomposition(ring, _squarefree_char_p(g))


def _yun(f: Poly):
    # Yun's algorithm; f monic with leading coefficient 1, char 0
    layers = []
    d = gcd(f, f.derivative())
    if d.degree() == 0:
        return [(f, 1)]
    w = f // d
    y = f.derivative() // d
    z = y - w.derivative()
    i = 1
    while w.degree() > 0:
        g = gcd(w, z) if not z.is_zero else w
        if g.degree() > 0:
            layers.append((g, i))
        w = w // g
        y = z // g
        z = y - w.derivative()
        i += 1
    return layers


def _pth_root(f: Poly) -> Poly:
    # inverse of Frobenius on GF(p)[t]: valid when f' == 0, i.e. f = g(t^p)
    p = f.ring.char
    root_coeffs = []
    for j, c in enumerate(f.coeffs):
        if j % p == 0:
            root_coeffs.append(c)  # c**(1/p) == c in GF(p)
        elif not c.is_zero:
            raise TheoryViolation("p-th root requested of a non-p-th-power")
    return Poly(f.ring, root_coeffs)


def _squarefree_char_p(f: Poly):
    p = f.ring.char
    layers = []
    scale = 1
    while True:
        d = f.derivative()
        if d.is_zero:
            f = _pth_root(f)
            scale *= p
            continue
        g = gcd(f, d)
        w = f // g
        i = 1
        while w.degree() > 0:
            y = gcd(w, g)
            layer = w // y
            if layer.degree() > 0:
                layers.append((layer, i * scale))
            w = y
            g = g // y
            i += 1
        if g.degree() == 0:
            return layers
        f = _pth_root(g)
        scale *= p


def center(f: Poly):
    """The element z with deg(f)*z = sum of roots (= -c_{n-1}), or None.

    Always exists over Q; over Z only when n divides c_{n-1}; over GF(p)
    with p | n only in the degenerate c_{n-1} = 0 case, where every z
    works and 0 is returned as the canonical choice.
    """
    _require_monic_nonconstant(f)
    g = f.monic()
    n = g.degree()
    ring = g.ring
    rhs = -g.coeff(n - 1)
    n_elem = ring.elem(n)
    if not n_elem.is_zero:
        try:
            return rhs.div_exact(n_elem)
        except InexactDivision:
            return None
    return ring.zero() if rhs.is_zero else None
