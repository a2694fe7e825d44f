"""Shared samplers for randomized structural tests (always explicitly seeded)."""

from idealaut import Poly, single_root_form


def random_monic(ring, degree, rng, bound=6):
    """Monic polynomial with leading coefficient 1 and small random coefficients."""
    if ring.kind == "F":
        coeffs = [rng.randrange(ring.p) for _ in range(degree)]
    else:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    return Poly(ring, coeffs + [1])


def random_from_roots(ring, rng, n_roots, max_mult=3, bound=5):
    """prod (t - a)**m over distinct random roots; returns (poly, [(root, mult)])."""
    if ring.kind == "F":
        pool = list(range(ring.p))
    else:
        pool = list(range(-bound, bound + 1))
    roots = rng.sample(pool, min(n_roots, len(pool)))
    assignment = [(a, rng.randint(1, max_mult)) for a in roots]
    f = Poly.one(ring)
    for a, m in assignment:
        f = f * Poly(ring, (-ring.elem(a), ring.one())) ** m
    return f, assignment


def random_multi_root_monic(ring, degree, rng, bound=6):
    """Random monic with at least two distinct roots in the algebraic closure."""
    while True:
        f = random_monic(ring, degree, rng, bound)
        if single_root_form(f) is None:
            return f


def random_split_with_center(ring, rng, n_roots, max_mult=3, bound=5):
    """Split polynomial with >= 2 distinct roots whose centroid lies in the ring.

    Over Z this rejects until the degree divides the root sum; over fields
    with the degree invertible the centroid always exists.
    """
    while True:
        f, assignment = random_from_roots(ring, rng, n_roots, max_mult, bound)
        if len(assignment) < 2:
            continue
        n = sum(m for _, m in assignment)
        s = sum(a * m for a, m in assignment)
        if ring.kind == "Z" and s % n != 0:
            continue
        if ring.kind == "F" and n % ring.p == 0:
            continue
        return f, assignment
