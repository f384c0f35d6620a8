"""Seed-and-transform walkthrough.

Start from a five-entry chain whose roots mostly coincide, apply the
norm-preserving transform until all five are distinct, and check the
defining property of the result: drop any one square and the rest still
sum to a square.
"""

from exsquares import (coefficients, distinctify, generate_method1, isqrt,
                       reduce_chain, seed_n5_simple, transform,
                       validate_chain, validate_system)

t = 2
seed = seed_n5_simple(t)
print(f"seed at t = {t}:")
for x, y in seed.pairs:
    print(f"  x = {x:>4}  y = {y:>4}   x^2 + y^2 = {x * x + y * y}")
print(f"shared sum s = {seed.s}, valid: {validate_chain(seed).ok}")
print(f"distinct |x| values: {sorted(set(abs(x) for x in seed.xs))}")
print()

co = coefficients(seed)
print(f"transform coefficients P = {co.P}, S = {co.S}")
once = reduce_chain(transform(seed))
print("after one round the roots are", sorted(abs(x) for x in once.xs))
print("still only three distinct values; the sign split inside each")
print("repeated block is what the next round exploits")
print()

system = distinctify(seed)
print("after the second round, all five roots separate:")
for r, c in zip(system.roots, system.certificates):
    print(f"  {r:>14}  certificate {c}")
print(f"validator: {validate_system(system)}")
print()

print("excluding each square by hand:")
total = sum(r * r for r in system.roots)
for r in system.roots:
    rest = total - r * r
    print(f"  s - {r}^2 = {rest} = {isqrt(rest)}^2")
print()

print("the same driver covers other sizes; n = 9 at t = 3:")
nine = generate_method1(9, 3)
print(" ", sorted(nine.roots))
print(f"  validator: {validate_system(nine)}")
