"""Build the bundled spaces and read off their exact homology.

Every object here is exact: boundary matrices over Python ints, homology
through Smith normal form.  Nothing is sampled or approximated.
"""

import fillscope as fs
from fillscope.spaces import builtin_complex


def describe(cc):
    counts = [cc.n_cells(d) for d in range(cc.top_dim + 1)]
    print(f"{cc.name or 'complex'}: cells {counts}, chi = {cc.euler_characteristic()}")
    for d in range(cc.top_dim + 1):
        betti, torsion = fs.homology_summary(cc, d)
        extra = f" + torsion {torsion}" if torsion else ""
        print(f"  H_{d} = Z^{betti}{extra}")


print("== boundary of the tetrahedron (a 2-sphere) ==")
describe(builtin_complex("tetra-boundary"))

print("\n== one-vertex CW torus ==")
describe(builtin_complex("torus-1vertex"))

print("\n== 7-vertex triangulated torus ==")
describe(builtin_complex("torus7"))

print("\n== CP^2 with cells in dimensions 0, 2, 4 ==")
describe(builtin_complex("cp2"))

print("\n== the boundary map in action ==")
tetra = builtin_complex("tetra-boundary")
face = fs.Chain(2, {"0,1,2": 1})
print(f"d({face!r}) = {fs.boundary(tetra, face)!r}")
print("d of d:", fs.boundary(tetra, fs.boundary(tetra, face)))

print("\n== projective plane: torsion shows up exactly ==")
rp2 = fs.ChainComplex(
    {0: ["v"], 1: ["a"], 2: ["f"]},
    {1: {"a": {}}, 2: {"f": {"a": 2}}},
    name="rp2",
)
describe(rp2)
