"""The independent oracle: resolving the algebra as a module, generically.

Bimodules over the algebra are exactly right modules over its enveloping
algebra, whose basis is all 121 ordered pairs of basis paths with the
first factor multiplied in reverse. Feeding the regular bimodule to the
same structure-agnostic engine that resolved the simples produces a
minimal resolution with no hand-written differentials anywhere, which is
what makes it a fair referee for the explicit construction: the two
computations share no resolution code, only the arithmetic layer.
"""

import time

from quiverhh import (BimoduleResolution, EnvelopingAlgebra, Field,
                      build_algebra, generic_minimal_resolution,
                      preset_presentation)

table = build_algebra(preset_presentation("hecke_s4_qm1"), Field(2))
env = EnvelopingAlgebra(table)

print("enveloping algebra dimension:", env.dim)
print("idempotent vertex pairs:", [label for label, _ in env.algebra.idempotents])
print("radical power dimensions:", env.radical_power_dims())

# The engine resolves the regular bimodule degree by degree. Multiplicities
# of the projective pair summands must reproduce the explicit terms.
start = time.perf_counter()
oracle = generic_minimal_resolution(table, max_degree=11)
explicit = BimoduleResolution(table)

print("\nsummand multiplicities, generic vs explicit:")
for n in range(9):
    generic = {f"{i},{j}": m
               for (i, j), m in sorted(oracle.multiplicities(n).items())}
    hand = {f"{i},{j}": m
            for (i, j), m in sorted(explicit.summand_counts(n).items())}
    marker = "ok" if generic == hand else "DIFFER"
    print(f"  degree {n}:  {generic}   {marker}")

# Cohomology out of the generic resolution uses induced cochain maps that
# are computed from the engine's covers, again with no transcription in
# the loop. Over F2 this independently confirms the computed table from
# the previous demo, two below the recorded general-degree rows.
print("\ncohomology dimensions over F2, generic vs explicit:")
for n in range(11):
    a, b = oracle.hh_dim(n), explicit.hh_dim(n)
    marker = "ok" if a == b else "DIFFER"
    print(f"  degree {n:2d}:  generic {a:2d}   explicit {b:2d}   {marker}")

elapsed = time.perf_counter() - start
print(f"\noracle run took {elapsed:.2f}s; monomial products keep the "
      "121-dimensional linear algebra sparse")
