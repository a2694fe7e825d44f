#!/usr/bin/env python3
"""Isomorphism witnesses, finite-field factoring, and root permutations.

Two ideals I_f and I_g are isomorphic exactly when some substitution
t -> alpha*t + beta carries f onto a unit multiple of g; the witness
reported always satisfies f(alpha*t + beta) = alpha**deg(f) * g on the
monic normalizations.  Over GF(p) the same maps can be watched acting on
the actual roots.

Run:  python demos/tour_isomorphism_and_factoring.py
"""

from idealaut import (
    GF,
    QQ,
    ZZ,
    AffineMap,
    all_iso_witnesses,
    compute_aut,
    factor,
    iso_test,
    parse_poly,
    root_permutation,
    truncated_ideal_check,
)

print("=" * 72)
print("1. A shift witness and a scaling witness over Q")
print("=" * 72)
f = parse_poly("t^2 - 1", QQ)
g = parse_poly("t^2 - 2*t", QQ)
w = iso_test(f, g)
print(f"f = {f}, g = {g}")
print(f"witness: {w!r}  (f(t-1) = t^2 - 2t exactly)")
f2 = parse_poly("t^2 - 4", QQ)
w2 = iso_test(f2, f)
print(f"f = {f2}, g = {f}")
print(f"witness: {w2!r}")
print("Here alpha = 2 is not a root of unity: the roots -2, 2 must land on")
print("-1, 1, which takes a genuine scaling, and lam = 2^2 = 4.")
print(f"check: f(2t) = {f2.affine_substitute(2, 0)} = 4 * ({f})")
print(f"over Z the same pair is NOT isomorphic (2 is not a unit of Z): "
      f"{iso_test(parse_poly('t^2-4', ZZ), parse_poly('t^2-1', ZZ))}")

print()
print("=" * 72)
print("2. All witnesses = one witness composed with Aut of the target")
print("=" * 72)
for witness in all_iso_witnesses(f, g):
    print(f"  {witness!r}")
family = all_iso_witnesses(parse_poly("(t-3)^2", QQ), parse_poly("(t-1)^2", QQ))
print(f"single-root pairs give a whole family: {family!r}")

print()
print("=" * 72)
print("3. Factoring over GF(p), deterministically")
print("=" * 72)
F11 = GF(11)
h = parse_poly("(t^2+1)*(t^2+t+7)*(t-5)^2", F11)
fac = factor(h, seed=1729)
print(f"f = {h} over F11 (t^2+1 has no root mod 11)")
print(f"factors: {fac!r}")
print(f"re-expansion check: {fac.expand() == h.monic()}")
print(f"linear roots with multiplicities: {[(str(r), e) for r, e in fac.linear_roots()]}")

print()
print("=" * 72)
print("4. Automorphisms act as permutations of the roots")
print("=" * 72)
F7 = GF(7)
q = parse_poly("t^3 - 3*t^2 + 2*t", F7)
group = compute_aut(q)
print(f"f = {q} over F7, roots 0, 1, 2")
for m in group.elements:
    perm = root_permutation(q, m)
    print(f"  map {m}: {perm!r}")
print("Composition of maps matches composition of permutations (left-to-right):")
a, b = group.elements[0], group.elements[-1]
lhs = root_permutation(q, a.compose(b))
rhs = root_permutation(q, a).then(root_permutation(q, b))
print(f"  sigma(a o b) == sigma(a) then sigma(b): {lhs == rhs}")

print()
print("=" * 72)
print("5. The ideal-membership view, checked degree by degree")
print("=" * 72)
r = parse_poly("t^2 - 1", F7)
good = compute_aut(r).elements[-1]
print(f"f = {r} over F7; map {good}")
print(f"  every (alpha t + beta)^i * f(alpha t + beta) with i <= 8 stays divisible"
      f" by f: {truncated_ideal_check(r, good, 10)}")
bad = AffineMap(F7.elem(1), F7.elem(1))
print(f"  the translation {bad} fails already in low degree: "
      f"{truncated_ideal_check(r, bad, 4)}")
