"""A tour of the algebra itself: basis, products, slices, center.

The preset algebra lives on two vertices with a loop eps at the first
vertex, an arrow alpha out to the second, and an arrow beta back. Paths
compose left to right, so alpha*beta is a cycle at vertex 1 and beta*alpha
is a cycle at vertex 2. Three relations cut the path algebra down to 11
dimensions: eps*alpha and beta*eps vanish, and the length-four cycle
alpha*beta*alpha*beta equals eps*eps.
"""

from quiverhh import Field, build_algebra, preset_presentation

presentation = preset_presentation("hecke_s4_qm1")
table = build_algebra(presentation, Field(0))

print("dimension:", table.dim)
print("basis paths:")
for i in range(table.dim):
    print(f"  {i:2d}  {table.path_str(i):24s} "
          f"{table.source_of(i)} -> {table.target_of(i)}")

# Multiplication happens in the quotient: the product of two basis paths
# either is a basis path again or collapses through the relations. The
# two-term relation shows up as a rewrite of the length-four cycle into
# the loop square, and pushing one step further kills it: eps^3 = 0, so
# eps^2 sits in radical degree 4 rather than 2.
eps = table.basis_element(2)
alpha = table.basis_element(3)
beta = table.basis_element(4)
print("\nalpha*beta*alpha*beta reduces to:", (alpha * beta * alpha * beta).pretty())
print("eps*alpha reduces to:", (eps * alpha).pretty())
print("eps^3 reduces to:", (eps * eps * eps).pretty())

# The corner slices e_i A e_j drive every dimension count later: each
# projective bimodule is a tensor product of a column slice and a row
# slice, so these four numbers are the whole bookkeeping.
print("\nslice dimensions e_i A e_j:", table.slice_dims())

# The center is 5-dimensional in every characteristic; these are the five
# elements the rest of the package pins the degree-0 cohomology against.
print("\ncenter basis:")
for z in table.center():
    print("  ", z.pretty())
