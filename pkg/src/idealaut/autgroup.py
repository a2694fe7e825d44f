"""Automorphism groups of the non-unital algebras generated by monic polynomials.

An affine map (alpha, beta) with alpha a unit acts on R[t] by t -> alpha*t
+ beta; it restricts to an automorphism of the ideal generated by a monic
nonconstant f exactly when f(alpha*t + beta) == alpha**deg(f) * f, which is
the single predicate everything here reduces to.

The group computation never searches blindly:

  * f = (t - a)**n with a in R: the group is all units acting around the
    fixed point a (returned symbolically as :class:`UnitsGroup`).
  * characteristic 0, or GF(p) with p not dividing n = deg(f): translate t
    so the coefficient of t**(n-1) vanishes (possible whenever the root
    centroid lies in R).  For such a centered polynomial any automorphism
    has beta = 0 and the condition becomes alpha**(n-j) = 1 for every
    nonzero coefficient c_j, so the alpha-set is exactly the unit torsion
    of the gap exponent gcd{n - j : c_j != 0}.
  * over Z when the centroid is not integral, units are just {1, -1}; beta
    is pinned by n*beta = (alpha - 1)*c_{n-1} and checked in full.
  * GF(p) with p | n: exhaustive scan of all (alpha, beta), which doubles
    as the reference path for the non-cyclic examples.

Every finite result is re-verified element-wise before it is returned.
"""

from functools import reduce
from math import gcd as _int_gcd

from .errors import (
    InexactDivision,
    MixedRings,
    NotAUnit,
    TheoryViolation,
    WrongRing,
)
from .poly import Poly, _require_monic_nonconstant, center, squarefree_decomposition
from .ring import Ring, RingElement, nth_roots, unit_torsion


class AffineMap:
    """The substitution t -> alpha*t + beta with alpha a unit."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha: RingElement, beta: RingElement):
        if not isinstance(alpha, RingElement) or not isinstance(beta, RingElement):
            raise TypeError("AffineMap takes two RingElements")
        if alpha.ring != beta.ring:
            raise MixedRings("alpha and beta live in different rings")
        if not alpha.is_unit:
            raise NotAUnit(f"{alpha} is not a unit of {alpha.ring}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, name, val):
        raise AttributeError("AffineMap is immutable")

    @classmethod
    def identity(cls, ring: Ring) -> "AffineMap":
        return cls(ring.one(), ring.zero())

    @property
    def ring(self) -> Ring:
        return self.alpha.ring

    @property
    def is_identity(self) -> bool:
        return self.alpha.is_one and self.beta.is_zero

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (a1,b1) o (a2,b2) = (a1*a2, b1 + a1*b2)."""
        return AffineMap(self.alpha * other.alpha, self.beta + self.alpha * other.beta)

    def inverse(self) -> "AffineMap":
        inv = self.alpha.inverse()
        return AffineMap(inv, -(inv * self.beta))

    def apply(self, x) -> RingElement:
        return self.alpha * x + self.beta

    def root_image(self, z) -> RingElement:
        """The induced action on roots: z -> (z - beta) / alpha."""
        return (self.ring.elem(z) - self.beta) * self.alpha.inverse()

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def sort_key(self):
        return (self.alpha.sort_key(), self.beta.sort_key())

    def __str__(self):
        return f"({self.alpha}, {self.beta})"

    def __repr__(self):
        return f"AffineMap{self}"


def verify_aut(f: Poly, m: AffineMap) -> bool:
    """Does (alpha, beta) restrict to an automorphism of the ideal of f?"""
    _require_monic_nonconstant(f)
    if m.ring != f.ring:
        raise MixedRings("map and polynomial live over different rings")
    return _is_automorphism(f, m)


def _is_automorphism(f: Poly, m: AffineMap) -> bool:
    n = f.degree()
    return f.affine_substitute(m.alpha, m.beta) == (m.alpha**n) * f


def single_root_form(f: Poly):
    """a when f is a unit times (t - a)**n with a in R, else None."""
    _require_monic_nonconstant(f)
    dec = squarefree_decomposition(f)
    if len(dec.layers) != 1:
        return None
    layer, _ = dec.layers[0]
    if layer.degree() != 1:
        return None
    return -layer.coeff(0)


class FiniteAutGroup:
    """Explicit finite automorphism group with cyclicity analysis."""

    __slots__ = ("elements", "order", "cyclic", "generator", "element_orders")

    def __init__(self, elements, order, cyclic, generator, element_orders):
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "cyclic", cyclic)
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "element_orders", element_orders)

    def __setattr__(self, name, val):
        raise AttributeError("FiniteAutGroup is immutable")

    kind = "finite"

    @classmethod
    def from_elements(cls, elements) -> "FiniteAutGroup":
        """Canonicalize an element list and analyze orders by composition."""
        unique = sorted(set(elements), key=AffineMap.sort_key)
        if not unique:
            raise TheoryViolation("automorphism group came out empty")
        member = set(unique)
        if not any(m.is_identity for m in unique):
            raise TheoryViolation("automorphism group misses the identity")
        size = len(unique)
        orders = []
        for m in unique:
            power, k = m, 1
            while not power.is_identity:
                power = power.compose(m)
                k += 1
                if k > size or power not in member:
                    raise TheoryViolation("element powers escape the group")
            orders.append((m, k))
        max_order = max(k for _, k in orders)
        cyclic = max_order == size
        generator = None
        if cyclic:
            generator = min(
                (m for m, k in orders if k == max_order), key=AffineMap.sort_key
            )
        return cls(tuple(unique), size, cyclic, generator, tuple(orders))

    def contains(self, m: AffineMap) -> bool:
        return m in set(self.elements)

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FiniteAutGroup):
            return NotImplemented
        return self.elements == other.elements

    def __repr__(self):
        body = ", ".join(str(m) for m in self.elements)
        return f"FiniteAutGroup[order {self.order}{', cyclic' if self.cyclic else ''}: {body}]"


class UnitsGroup:
    """All units of R acting around one fixed point a: {(u, (1-u)a)}.

    The symbolic form of the single-root case; stays unexpanded so Q's
    infinite unit group costs nothing.
    """

    __slots__ = ("fixed_point",)

    def __init__(self, fixed_point: RingElement):
        object.__setattr__(self, "fixed_point", fixed_point)

    def __setattr__(self, name, val):
        raise AttributeError("UnitsGroup is immutable")

    kind = "units_of_R"

    @property
    def ring(self) -> Ring:
        return self.fixed_point.ring

    @property
    def is_finite(self) -> bool:
        return self.ring.has_finite_units

    def order(self):
        if self.ring.kind == "Z":
            return 2
        if self.ring.kind == "F":
            return self.ring.p - 1
        return None

    def element_for(self, alpha) -> AffineMap:
        alpha = self.ring.elem(alpha)
        return AffineMap(alpha, (self.ring.one() - alpha) * self.fixed_point)

    def contains(self, m: AffineMap) -> bool:
        return m.beta == (self.ring.one() - m.alpha) * self.fixed_point

    def elements(self) -> tuple:
        if not self.is_finite:
            raise WrongRing("unit group of Q is infinite")
        maps = [self.element_for(u) for u in self.ring.units()]
        return tuple(sorted(maps, key=AffineMap.sort_key))

    def to_finite(self) -> FiniteAutGroup:
        return FiniteAutGroup.from_elements(self.elements())

    def __eq__(self, other):
        if not isinstance(other, UnitsGroup):
            return NotImplemented
        return self.fixed_point == other.fixed_point

    def __repr__(self):
        return f"UnitsGroup[fixed point {self.fixed_point} over {self.ring}]"


def groups_equal(a, b) -> bool:
    """Equality as sets of affine maps, expanding symbolic groups when finite."""
    if isinstance(a, UnitsGroup) and isinstance(b, UnitsGroup):
        return a == b
    if isinstance(a, UnitsGroup):
        a, b = b, a
    if isinstance(b, UnitsGroup):
        if not b.is_finite:
            return False
        return a.element_set() == frozenset(b.elements())
    return a.element_set() == b.element_set()


def _gap_exponent(centered: Poly) -> int:
    n = centered.degree()
    gaps = [n - j for j in range(n) if not centered.coeff(j).is_zero]
    if not gaps:
        raise TheoryViolation("gap exponent of t**n requested")
    return reduce(_int_gcd, gaps)


def compute_aut(f: Poly):
    """The full automorphism group of the ideal generated by monic f."""
    _require_monic_nonconstant(f)
    fm = f.monic()
    ring = fm.ring
    a = single_root_form(fm)
    if a is not None:
        return UnitsGroup(a)
    n = fm.degree()
    p = ring.char
    if p and n % p == 0:
        elements = _exhaustive_scan(fm)
    else:
        z0 = center(fm)
        if z0 is not None:
            centered = fm.shifted(z0)  # roots sum to zero now
            gap = _gap_exponent(centered)
            one = ring.one()
            elements = [
                AffineMap(alpha, (one - alpha) * z0)
                for alpha in unit_torsion(ring, gap)
            ]
        else:
            elements = _integer_units_scan(fm)
    group = FiniteAutGroup.from_elements(elements)
    for m in group.elements:
        if not _is_automorphism(fm, m):
            raise TheoryViolation(f"candidate {m} fails the defining identity")
    return group


def _exhaustive_scan(fm: Poly):
    # GF(p) with p | deg(f): try all p*(p-1) affine maps
    ring = fm.ring
    out = []
    for a in range(1, ring.p):
        alpha = ring.elem(a)
        for b in range(ring.p):
            m = AffineMap(alpha, ring.elem(b))
            if _is_automorphism(fm, m):
                out.append(m)
    return out


def _integer_units_scan(fm: Poly):
    # Z without an integral centroid: beta is pinned by the t**(n-1) coefficient
    ring = fm.ring
    n = fm.degree()
    n_elem = ring.elem(n)
    c_top = fm.coeff(n - 1)
    out = []
    for alpha in ring.units():
        try:
            beta = ((alpha - ring.one()) * c_top).div_exact(n_elem)
        except InexactDivision:
            continue
        m = AffineMap(alpha, beta)
        if _is_automorphism(fm, m):
            out.append(m)
    return out


def shift_conjugate(grp, z0):
    """Transport a group of f to the group of f(t - z0)."""
    if isinstance(grp, UnitsGroup):
        return UnitsGroup(grp.fixed_point + grp.ring.elem(z0))
    ring = grp.elements[0].ring
    z0 = ring.elem(z0)
    one = ring.one()
    moved = [
        AffineMap(m.alpha, (one - m.alpha) * z0 + m.beta) for m in grp.elements
    ]
    return FiniteAutGroup.from_elements(moved)


def _intersect_two(g1, g2):
    if isinstance(g1, UnitsGroup) and isinstance(g2, UnitsGroup):
        if g1 == g2:
            return g1
        ring = g1.ring
        return FiniteAutGroup.from_elements([AffineMap.identity(ring)])
    if isinstance(g1, UnitsGroup):
        g1, g2 = g2, g1
    if isinstance(g2, UnitsGroup):
        kept = [m for m in g1.elements if g2.contains(m)]
    else:
        member = g2.element_set()
        kept = [m for m in g1.elements if m in member]
    return FiniteAutGroup.from_elements(kept)


def layer_intersection(f: Poly):
    """Intersect the automorphism groups of the multiplicity layers of f.

    Equals compute_aut(f) by the layer structure theorem; computing it
    independently gives the cross-check exercised by the test suite.
    """
    _require_monic_nonconstant(f)
    dec = squarefree_decomposition(f.monic())
    groups = [compute_aut(layer) for layer, _ in dec.layers]
    return reduce(_intersect_two, groups)


def power_reduce(f: Poly):
    """Maximal (h, k) with f's monic form equal to h**k."""
    _require_monic_nonconstant(f)
    dec = squarefree_decomposition(f.monic())
    k = reduce(_int_gcd, dec.multiplicities())
    h = Poly.one(f.ring)
    for layer, m in dec.layers:
        h = h * layer ** (m // k)
    return h, k


class IsoWitness:
    """An affine map plus the unit lam with f(alpha*t + beta) = lam * g."""

    __slots__ = ("map", "lam")

    def __init__(self, map: AffineMap, lam: RingElement):
        object.__setattr__(self, "map", map)
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, name, val):
        raise AttributeError("IsoWitness is immutable")

    def __eq__(self, other):
        if not isinstance(other, IsoWitness):
            return NotImplemented
        return self.map == other.map and self.lam == other.lam

    def __hash__(self):
        return hash((self.map, self.lam))

    def __repr__(self):
        return f"IsoWitness(map={self.map}, lam={self.lam})"


class IsoWitnessFamily:
    """All witnesses between two single-root ideals: {(u, a - u*b) : u a unit}."""

    __slots__ = ("source_fixed_point", "target_fixed_point")

    def __init__(self, source_fixed_point, target_fixed_point):
        object.__setattr__(self, "source_fixed_point", source_fixed_point)
        object.__setattr__(self, "target_fixed_point", target_fixed_point)

    def __setattr__(self, name, val):
        raise AttributeError("IsoWitnessFamily is immutable")

    @property
    def ring(self) -> Ring:
        return self.source_fixed_point.ring

    def witness_for(self, alpha, degree: int) -> IsoWitness:
        alpha = self.ring.elem(alpha)
        beta = self.source_fixed_point - alpha * self.target_fixed_point
        return IsoWitness(AffineMap(alpha, beta), alpha**degree)

    def __repr__(self):
        return (
            f"IsoWitnessFamily[(u, {self.source_fixed_point} - "
            f"u*{self.target_fixed_point}) for every unit u]"
        )


def _ext_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _layer_shape(fm: Poly):
    dec = squarefree_decomposition(fm)
    return sorted((m, layer.degree()) for layer, m in dec.layers)


def _iso_candidates(fm: Poly, gm: Poly):
    # complete candidate list of (alpha, beta), canonically ordered
    ring = fm.ring
    n = fm.degree()
    p = ring.char
    if p and n % p == 0:
        for a in range(1, p):
            alpha = ring.elem(a)
            for b in range(p):
                yield alpha, ring.elem(b)
        return
    if ring.kind == "Z":
        n_elem = ring.elem(n)
        for alpha in ring.units():
            # t**(n-1) coefficients force n*beta = alpha*c^g - c^f
            rhs = alpha * gm.coeff(n - 1) - fm.coeff(n - 1)
            try:
                yield alpha, rhs.div_exact(n_elem)
            except InexactDivision:
                continue
        return
    z_f = center(fm)
    z_g = center(gm)
    if z_f is None or z_g is None:
        raise TheoryViolation("centroid missing over a field with invertible degree")
    centered_f = fm.shifted(z_f)
    centered_g = gm.shifted(z_g)
    support = [j for j in range(n) if not centered_g.coeff(j).is_zero]
    if [j for j in range(n) if not centered_f.coeff(j).is_zero] != support:
        return
    if not support:
        raise TheoryViolation("single-root forms must be handled before the centered search")
    # combine the conditions alpha**(n-j) = cF_j / cG_j into one d-th root problem
    exponent, value = None, None
    for j in support:
        e = n - j
        q = centered_f.coeff(j).div_exact(centered_g.coeff(j))
        if exponent is None:
            exponent, value = e, q
        else:
            g2, s, t = _ext_gcd(exponent, e)
            value = value**s * q**t
            exponent = g2
    for alpha in nth_roots(value, exponent):
        yield alpha, z_f - alpha * z_g


def _iso_prepare(f: Poly, g: Poly):
    _require_monic_nonconstant(f)
    _require_monic_nonconstant(g)
    if f.ring != g.ring:
        raise MixedRings("polynomials live over different rings")
    return f.monic(), g.monic()


def iso_test(f: Poly, g: Poly):
    """First isomorphism witness between the ideals of f and g, or None.

    The returned identity refers to the monic normalizations of f and g
    (which generate the same ideals): f(alpha*t + beta) = lam * g with
    lam = alpha**deg(f).
    """
    fm, gm = _iso_prepare(f, g)
    if fm.degree() != gm.degree():
        return None
    if _layer_shape(fm) != _layer_shape(gm):
        return None
    a_f = single_root_form(fm)
    a_g = single_root_form(gm)
    if (a_f is None) != (a_g is None):
        return None
    n = fm.degree()
    if a_f is not None:
        one = fm.ring.one()
        witness = AffineMap(one, a_f - a_g)
    else:
        witness = None
        for alpha, beta in _iso_candidates(fm, gm):
            if fm.affine_substitute(alpha, beta) == (alpha**n) * gm:
                witness = AffineMap(alpha, beta)
                break
        if witness is None:
            return None
    lam = witness.alpha**n
    if fm.affine_substitute(witness.alpha, witness.beta) != lam * gm:
        raise TheoryViolation("isomorphism witness fails its defining identity")
    return IsoWitness(witness, lam)


def all_iso_witnesses(f: Poly, g: Poly):
    """Every witness: a list, an IsoWitnessFamily (single-root over Q), or None."""
    first = iso_test(f, g)
    if first is None:
        return None
    fm, gm = _iso_prepare(f, g)
    n = fm.degree()
    target_group = compute_aut(gm)
    if isinstance(target_group, UnitsGroup):
        if not target_group.is_finite:
            return IsoWitnessFamily(single_root_form(fm), target_group.fixed_point)
        pool = target_group.elements()
    else:
        pool = target_group.elements
    witnesses = [
        IsoWitness(first.map.compose(e), (first.map.alpha * e.alpha) ** n) for e in pool
    ]
    witnesses.sort(key=lambda w: w.map.sort_key())
    return witnesses
