"""
Homomorphisms and images of ideals
==================================

A state map commuting with the operation carries reaction-closed sets to
reaction-closed sets.  Chemical ideals survive only when the map hits every
state; a small search finds a map that does not.
"""

from tgs import (IdealKind, StateMap, enumerate_homomorphisms, enumerate_ideals,
                 find_image_counterexample, image, is_chemical_ideal, modular_product_model)

z4, z2 = modular_product_model(4), modular_product_model(2)
# Same mediator list is required, so compare Z2 with itself and Z4 with itself.
for f in enumerate_homomorphisms(z2, z2):
    print("Z2 -> Z2:", f.mapping, "onto" if f.is_surjective() else "")

ends = enumerate_homomorphisms(z4, z4)
print(len(ends), "endomorphisms of Z4")
for f in ends:
    for I in enumerate_ideals(z4, IdealKind.CHEMICAL):
        ok = is_chemical_ideal(z4, image(f, I))
        if not ok:
            print("  image of", I, "under", f.mapping, "is not a chemical ideal")

w = find_image_counterexample(3, 1)
print("smallest counterexample:")
print("  domain table", w.domain.flat.tolist())
print("  codomain table", w.codomain.flat.tolist())
print("  map", w.f.mapping, "ideal", w.ideal, "fails at", w.failure)
print("restricted to onto maps:", find_image_counterexample(3, 1, surjective_only=True))
