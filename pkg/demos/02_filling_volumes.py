"""Chain filling volumes with certificates.

FV(c) is the least L1 norm of an integer chain whose boundary is c.  The
solver certifies every answer: Exact results carry a witness chain, and
Infinite means lattice membership failed, which is a theorem about c, not
a timeout.
"""

import fillscope as fs
from fillscope.spaces import builtin_complex, builtin_simplicial

tetra = builtin_complex("tetra-boundary")

print("== filling a single face boundary on the 2-sphere ==")
c = fs.boundary(tetra, fs.Chain(2, {"0,1,2": 1}))
print("cycle:", c)
res = fs.fill_volume(tetra, 2, c)
print(f"FV = {res.value} with witness {res.witness}")

print("\n== the same answer from the brute-force oracle ==")
brute = fs.fill_volume_bruteforce(tetra, 2, c, norm_bound=3)
print(f"oracle FV = {brute.value} with witness {brute.witness}")

print("\n== bigger cycles cost more ==")
two_faces = fs.boundary(tetra, fs.Chain(2, {"0,1,2": 1, "0,1,3": 1}))
print("cycle norm:", fs.l1_norm(two_faces))
print("FV =", fs.fill_volume(tetra, 2, two_faces).value)

print("\n== a cycle that bounds nothing ==")
torus = builtin_complex("torus-1vertex")
res = fs.fill_volume(torus, 2, fs.Chain(1, {"a": 1}))
print("status for the loop a on the torus:", res.status)

print("\n== budgets degrade to certified lower bounds, never to guesses ==")
sd = fs.to_chain_complex(
    fs.barycentric_subdivide(builtin_simplicial("tetra-boundary")), name="sd"
)
# a hexagonal equator of the subdivided sphere: both sides hold 12 triangles
equator = fs.Chain(
    1,
    {
        "0,b(0,1)": 1,
        "1,b(0,1)": -1,
        "1,b(1,2,3)": 1,
        "b(2,3),b(1,2,3)": -1,
        "b(2,3),b(0,2,3)": 1,
        "0,b(0,2,3)": -1,
    },
)
full = fs.fill_volume(sd, 2, equator)
starved = fs.fill_volume(sd, 2, equator, fs.SearchBudget(max_nodes=0))
print(f"norm-6 equator, full search: {full.status}({full.value})")
print(f"norm-6 equator, zero budget: {starved.status}({starved.value})")
