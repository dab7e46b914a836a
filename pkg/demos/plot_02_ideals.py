"""
Ideals, closures and primeness
==============================

Subsets of states are closed under different absorption rules.  We list the
ideals of Z6, generate the least ideal around a seed and test primeness.
"""

from tgs import (IdealKind, StateSubset, enumerate_ideals, generate_ideal, is_prime,
                 is_semiprime, modular_product_model)

z6 = modular_product_model(6)

for kind in IdealKind:
    found = enumerate_ideals(z6, kind)
    print(f"{kind.value:>16}: {len(found)}  {found}")

# Closure: start from {3} and keep absorbing until nothing new appears.
seed = StateSubset.of(z6, [3])
print("chemical closure of {S3}:", generate_ideal(z6, seed, IdealKind.CHEMICAL))

# The even residues absorb everything but are not prime: 1*2*1*1*1 = 2 lands
# inside while all three state arguments are odd.
evens = StateSubset.of(z6, [0, 2, 4])
v = is_prime(z6, evens)
print("evens prime?", bool(v), v.reason, "at", v.witness)
print("evens semiprime?", bool(is_semiprime(z6, evens)))
