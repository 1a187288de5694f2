"""Chain isoperimetric profiles.

The profile at n is the worst filling volume among boundaries of norm at
most n.  Tabulating it means enumerating boundary candidates, certifying
membership in the boundary lattice, and filling each one exactly.
"""

import fillscope as fs
from fillscope.formats import emit_profile_csv
from fillscope.spaces import builtin_complex

print("== CP^2: no 3-chains at all, so both relevant profiles vanish ==")
cp2 = builtin_complex("cp2")
for q in (3, 4):
    table = fs.chain_profile(cp2, q, 5)
    print(f"dim {q}:", [e.value for e in table.entries])

print("\n== the 2-sphere as the boundary of a tetrahedron ==")
tetra = builtin_complex("tetra-boundary")
table = fs.chain_profile(tetra, 2, 6)
print(emit_profile_csv(table))

print("== the 2-sphere again, after barycentric subdivision ==")
from fillscope.spaces import builtin_simplicial

sd = fs.to_chain_complex(
    fs.barycentric_subdivide(builtin_simplicial("tetra-boundary")), name="sd-tetra"
)
table_sd = fs.chain_profile(sd, 2, 6)
print(emit_profile_csv(table_sd))

print("same space, different cell structure: the numbers differ,")
print("but only within affine scaling, as the next demo shows.")
