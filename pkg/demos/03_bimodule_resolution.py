"""The explicit bimodule resolution, term by term and map by map.

The algebra resolves itself over its enveloping algebra by projective
bimodules Ae_i (x) e_jA. The terms follow a closed form with period four
and the differentials are written down explicitly as short lists of
tensor-multiplication terms. This demo prints both, then runs the full
structural verification: composing to zero, exactness by a rank count,
and minimality (every image coefficient stays inside the radical).
"""

from quiverhh import (BimoduleResolution, Field, build_algebra,
                      preset_presentation, term_labels)
from quiverhh.bimodule import label_name

table = build_algebra(preset_presentation("hecke_s4_qm1"), Field(0))
resolution = BimoduleResolution(table)

# Summand labels per degree: a-summands are copies of Ae_1 (x) e_1A, the
# b and c summands mix the two vertices, the d summand is the vertex-2
# corner. Residues 1 and 2 mod 4 carry b and c, residues 0 and 3 carry d.
print("terms of the resolution:")
for n in range(9):
    labels = "  ".join(label_name(lab) for lab in term_labels(n))
    print(f"  degree {n}:  dim {resolution.term(n).dim:3d}   [{labels}]")

# Each differential sends a generator to a short signed combination of
# (left path) (x) generator (x) (right path) terms in the previous degree.
def word(w):
    return "*".join(w) if w else "1"

print("\ndifferential on the degree-1 and degree-2 generators:")
for n in (1, 2):
    for label, terms in resolution.generator_images(n).items():
        chunks = []
        for lw, target, rw, coeff in terms:
            sign = "-" if coeff < 0 else "+"
            chunks.append(f"{sign} {word(lw)} (x) {label_name(target)}"
                          f" (x) {word(rw)}")
        print(f"  d{n} {label_name(label):5s} = " + " ".join(chunks))

# The verification is a straight rank computation in exact arithmetic.
depth = 12
print(f"\nstructural verification to degree {depth}:")
print("  complex (d.d = 0):   ", resolution.verify_complex(depth)["ok"])
print("  exactness (ranks):   ", resolution.verify_exactness(depth)["ok"])
print("  minimality (radical):", resolution.verify_minimality(depth)["ok"])
print("  one-sided comparison:", resolution.compare_with_simples(depth)["ok"])

# Betti numbers: multiplicities of each projective bimodule per degree.
print("\nsummand multiplicities by vertex pair:")
for n in range(9):
    counts = resolution.summand_counts(n)
    cells = "  ".join(f"({i},{j}):{m}" for (i, j), m in sorted(counts.items()))
    print(f"  degree {n}:  {cells}")
