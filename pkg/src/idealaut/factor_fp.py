"""Irreducible factorization over GF(p) and the root-permutation view.

factor() runs squarefree decomposition, then distinct-degree splitting via
iterated Frobenius (gcd with t**(p**i) - t), then Cantor-Zassenhaus
equal-degree splitting.  The equal-degree stage is the only randomized
step; it draws from an explicit ``random.Random`` seeded per call
(DEFAULT_SEED unless overridden) so output is reproducible.  For p = 2
the splitting polynomial is the trace map instead of the (p**d - 1)/2
power.  Output is canonically ordered by (degree, coefficient order).

root_permutation() materializes how an ideal automorphism permutes the
GF(p)-roots of f, z -> (z - beta)/alpha, checking multiplicities match;
irreducible factors of degree >= 2 are tracked at factor level (their
roots live in extension fields, which this package never constructs).
"""

import random

from .autgroup import AffineMap, verify_aut
from .errors import ConstantPolynomial, NotAnAutomorphism, NotMonic, TheoryViolation, WrongRing
from .poly import Poly, gcd, squarefree_decomposition
from .ring import RingElement

DEFAULT_SEED = 1729


class FpFactorization:
    """Monic irreducible factors with multiplicities; product is f's monic form."""

    __slots__ = ("ring", "factors")

    def __init__(self, ring, factors):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self,
            "factors",
            tuple(sorted(factors, key=lambda fm: fm[0].sort_key())),
        )

    def __setattr__(self, name, val):
        raise AttributeError("FpFactorization is immutable")

    def expand(self) -> Poly:
        out = Poly.one(self.ring)
        for q, e in self.factors:
            out = out * q**e
        return out

    def linear_roots(self):
        """(root, multiplicity) for each degree-1 factor t - a."""
        return [(-q.coeff(0), e) for q, e in self.factors if q.degree() == 1]

    def nonlinear_factors(self):
        return [(q, e) for q, e in self.factors if q.degree() > 1]

    def __eq__(self, other):
        if not isinstance(other, FpFactorization):
            return NotImplemented
        return self.ring == other.ring and self.factors == other.factors

    def __repr__(self):
        body = ", ".join(f"({q})^{e}" if e > 1 else f"({q})" for q, e in self.factors)
        return f"FpFactorization[{body}]"


def _pow_mod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    result = Poly.one(base.ring)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result


def _random_poly(ring, max_degree: int, rng: random.Random) -> Poly:
    coeffs = [rng.randrange(ring.p) for _ in range(max_degree + 1)]
    return Poly(ring, coeffs)


def _distinct_degree(h: Poly):
    # h monic squarefree; yields (product of all degree-d factors, d)
    ring = h.ring
    p = ring.p
    t = Poly.t(ring)
    frob = t
    d = 1
    while 2 * d <= h.degree():
        frob = _pow_mod(frob, p, h)
        g = gcd(h, frob - t)
        if g.degree() > 0:
            yield g, d
            h = h // g
            frob = frob % h
        d += 1
    if h.degree() > 0:
        yield h, h.degree()


def _split_equal_degree(h: Poly, d: int, rng: random.Random):
    # h monic squarefree, all irreducible factors of degree d
    if h.degree() == d:
        return [h]
    p = h.ring.p
    while True:
        r = _random_poly(h.ring, 2 * d, rng)
        if r.degree() is None or r.degree() == 0:
            continue
        g = gcd(h, r)
        if 0 < g.degree() < h.degree():
            break
        if p == 2:
            s = r
            acc = r
            for _ in range(d - 1):
                acc = acc * acc % h
                s = s + acc
            g = gcd(h, s)
        else:
            s = _pow_mod(r, (p**d - 1) // 2, h)
            g = gcd(h, s - Poly.one(h.ring))
        if 0 < g.degree() < h.degree():
            break
    return _split_equal_degree(g, d, rng) + _split_equal_degree(h // g, d, rng)


def factor(f: Poly, seed: int = DEFAULT_SEED, rng: random.Random | None = None) -> FpFactorization:
    """Complete irreducible factorization of monic nonconstant f over GF(p)."""
    if f.ring.kind != "F":
        raise WrongRing(f"factorization implemented over prime fields only, not {f.ring}")
    if f.is_zero or f.degree() == 0:
        raise ConstantPolynomial(f"{f} is constant")
    if not f.is_monic:
        raise NotMonic(f"leading coefficient of {f} is not a unit")
    if rng is None:
        rng = random.Random(seed)
    fm = f.monic()
    pieces = []
    for layer, multiplicity in squarefree_decomposition(fm).layers:
        for same_degree, d in _distinct_degree(layer):
            for irreducible in _split_equal_degree(same_degree, d, rng):
                pieces.append((irreducible, multiplicity))
    result = FpFactorization(f.ring, pieces)
    if result.expand() != fm:
        raise TheoryViolation("factorization does not re-expand to the input")
    return result


class RootPermutation:
    """How an automorphism permutes the GF(p)-roots (and nonlinear factors) of f."""

    __slots__ = ("ring", "entries", "factor_entries")

    def __init__(self, ring, entries, factor_entries=()):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "entries", tuple(sorted(entries, key=lambda e: e[0].sort_key()))
        )
        object.__setattr__(
            self,
            "factor_entries",
            tuple(sorted(factor_entries, key=lambda e: e[0].sort_key())),
        )

    def __setattr__(self, name, val):
        raise AttributeError("RootPermutation is immutable")

    def mapping(self) -> dict:
        return {root: image for root, _, image in self.entries}

    def factor_mapping(self) -> dict:
        return {source: image for source, _, image in self.factor_entries}

    @property
    def is_identity(self) -> bool:
        return all(root == image for root, _, image in self.entries) and all(
            source == image for source, _, image in self.factor_entries
        )

    def then(self, other: "RootPermutation") -> "RootPermutation":
        """Apply self first, then other (left-to-right composition)."""
        step = other.mapping()
        entries = [(root, mult, step[image]) for root, mult, image in self.entries]
        fstep = other.factor_mapping()
        factor_entries = [
            (source, mult, fstep[image]) for source, mult, image in self.factor_entries
        ]
        return RootPermutation(self.ring, entries, factor_entries)

    def __eq__(self, other):
        if not isinstance(other, RootPermutation):
            return NotImplemented
        return self.entries == other.entries and self.factor_entries == other.factor_entries

    def __hash__(self):
        return hash((self.entries, self.factor_entries))

    def __repr__(self):
        parts = [f"{root}->{image}" for root, _, image in self.entries]
        parts += [f"[{source}]->[{image}]" for source, _, image in self.factor_entries]
        return f"RootPermutation({', '.join(parts)})"


def root_permutation(f: Poly, m: AffineMap, seed: int = DEFAULT_SEED) -> RootPermutation:
    """The permutation z -> (z - beta)/alpha of the roots of f induced by m."""
    if not verify_aut(f, m):
        raise NotAnAutomorphism(f"{m} does not preserve the ideal of {f}")
    factorization = factor(f.monic(), seed=seed)
    multiplicity: dict[RingElement, int] = {}
    for root, e in factorization.linear_roots():
        multiplicity[root] = e
    entries = []
    for root, e in multiplicity.items():
        image = m.root_image(root)
        if multiplicity.get(image) != e:
            raise TheoryViolation(
                f"root {root} (multiplicity {e}) maps to {image} with a different multiplicity"
            )
        entries.append((root, e, image))
    by_factor = {q: e for q, e in factorization.nonlinear_factors()}
    factor_entries = []
    for q, e in by_factor.items():
        image = q.affine_substitute(m.alpha, m.beta).monic()
        if by_factor.get(image) != e:
            raise TheoryViolation(
                f"factor {q} (multiplicity {e}) maps outside the factorization"
            )
        factor_entries.append((q, e, image))
    return RootPermutation(f.ring, entries, factor_entries)
