import random

import pytest

import fillscope as fs
from fillscope.errors import InvariantError


def test_face_closure_and_counts(tetra_sc):
    assert [tetra_sc.n_simplices(d) for d in range(3)] == [4, 6, 4]
    # every face of every simplex is present
    for d in range(1, tetra_sc.dim + 1):
        for s in tetra_sc.simplices(d):
            for i in range(len(s)):
                assert tetra_sc.has_simplex(s[:i] + s[i + 1 :])


def test_rejects_unsorted_simplex():
    with pytest.raises(InvariantError):
        fs.SimplicialComplex(["a", "b"], [["b", "a"]])


def test_to_chain_complex_counts_and_dd(tetra_sc):
    cc = fs.to_chain_complex(tetra_sc)
    assert [cc.n_cells(d) for d in range(3)] == [4, 6, 4]
    # dd = 0 is validated on construction; spot-check one column anyway
    c = fs.boundary(cc, fs.boundary(cc, fs.Chain(2, {"0,1,2": 1})))
    assert c == fs.Chain(0)


def test_to_chain_complex_single_point():
    sc = fs.SimplicialComplex(["p"], [])
    cc = fs.to_chain_complex(sc)
    assert cc.top_dim == 0 and cc.n_cells(0) == 1


def test_to_chain_complex_torus7(torus7):
    cc = fs.to_chain_complex(torus7)
    assert [cc.n_cells(d) for d in range(3)] == [7, 21, 14]
    assert cc.euler_characteristic() == 0
    assert [fs.homology_summary(cc, d)[0] for d in range(3)] == [1, 2, 1]
    assert all(fs.homology_summary(cc, d)[1] == [] for d in range(3))


def test_subdivide_edge():
    sc = fs.SimplicialComplex(["a", "b"], [["a", "b"]])
    sd = fs.barycentric_subdivide(sc)
    assert sd.n_simplices(0) == 3
    assert sd.n_simplices(1) == 2


def test_subdivide_triangle_counts():
    sc = fs.SimplicialComplex(["a", "b", "c"], [["a", "b", "c"]])
    sd = fs.barycentric_subdivide(sc)
    assert [sd.n_simplices(d) for d in range(3)] == [7, 12, 6]


def test_subdivide_preserves_chi_and_homology(torus7):
    sd = fs.barycentric_subdivide(torus7)
    assert sd.euler_characteristic() == torus7.euler_characteristic()
    cc = fs.to_chain_complex(sd)
    assert [fs.homology_summary(cc, d) for d in range(3)] == [
        (1, []),
        (2, []),
        (1, []),
    ]


def test_subdivide_tetra_homology(tetra_sc):
    sd = fs.barycentric_subdivide(tetra_sc)
    assert sd.euler_characteristic() == 2
    cc = fs.to_chain_complex(sd)
    assert [fs.homology_summary(cc, d) for d in range(3)] == [
        (1, []),
        (0, []),
        (1, []),
    ]


def test_edge_path_triangle_graph(triangle):
    p = fs.edge_path_presentation(triangle)
    assert len(p.generators) == 1
    assert len(p.relators) == 0


def test_edge_path_full_2_simplex():
    sc = fs.SimplicialComplex(["0", "1", "2"], [["0", "1", "2"]])
    p = fs.edge_path_presentation(sc)
    assert len(p.generators) == 1
    assert len(p.relators) == 1
    assert p.relators[0].letters in ((1,), (-1,))


def test_edge_path_torus7(torus7):
    p = fs.edge_path_presentation(torus7)
    assert len(p.generators) == 21 - 6
    assert len(p.relators) == 14
    cc = fs.presentation_complex(p)
    betti, torsion = fs.homology_summary(cc, 1)
    assert (betti, torsion) == (2, [])


def test_edge_path_abelianization_matches_betti_randomized():
    rng = random.Random(23)
    done = 0
    while done < 10:
        nv = rng.randint(3, 5)
        verts = [str(i) for i in range(nv)]
        simps = []
        for a in range(nv):
            for b in range(a + 1, nv):
                if rng.random() < 0.7:
                    simps.append([verts[a], verts[b]])
                for c in range(b + 1, nv):
                    if rng.random() < 0.4:
                        simps.append([verts[a], verts[b], verts[c]])
        sc = fs.SimplicialComplex(verts, simps)
        if not fs.is_connected(sc) or sc.dim < 1:
            continue
        done += 1
        p = fs.edge_path_presentation(sc)
        pc = fs.presentation_complex(p)
        want = fs.homology_summary(fs.to_chain_complex(sc), 1)[0]
        assert fs.homology_summary(pc, 1)[0] == want


def test_edge_path_disconnected_raises():
    sc = fs.SimplicialComplex(["a", "b"], [])
    with pytest.raises(InvariantError):
        fs.edge_path_presentation(sc)


def test_edge_path_with_explicit_tree(triangle):
    p = fs.edge_path_presentation(triangle, tree={("0", "2"), ("1", "2")})
    assert len(p.generators) == 1
    assert p.generators[0] == "0-1"
    with pytest.raises(InvariantError):
        fs.edge_path_presentation(triangle, tree={("0", "1")})
    with pytest.raises(InvariantError):
        fs.edge_path_presentation(triangle, tree={("0", "1"), ("9", "10")})


def test_permutation_assignment_rejects_non_permutation():
    with pytest.raises(InvariantError):
        fs.PermutationAssignment(2, {("a", "b"): (0, 0)})
    with pytest.raises(InvariantError):
        fs.PermutationAssignment(0, {})


def test_presentation_complex_columns(pres_trivial, pres_z2):
    cc = fs.presentation_complex(pres_trivial)
    assert cc.boundary_matrix(2) == [[1]]
    cc2 = fs.presentation_complex(pres_z2)
    assert cc2.boundary_matrix(2) == [[0], [0]]
    p3 = fs.Presentation(["x"], [fs.Word((1, 1, 1))])
    assert fs.presentation_complex(p3).boundary_matrix(2) == [[3]]


def test_cover_swap_is_hexagon(triangle):
    pa = fs.PermutationAssignment.from_partial(triangle, 2, {("1", "2"): (1, 0)})
    cover = fs.build_cover(triangle, pa)
    assert [cover.n_simplices(d) for d in range(2)] == [6, 6]
    assert fs.is_connected(cover)
    assert cover.euler_characteristic() == 2 * triangle.euler_characteristic()


def test_cover_identity_is_disjoint_copies(triangle):
    pa = fs.PermutationAssignment.identity(triangle, 2)
    cover = fs.build_cover(triangle, pa)
    assert len(fs.connected_components(cover)) == 2
    assert [cover.n_simplices(d) for d in range(2)] == [6, 6]


def test_cover_degree_one_is_isomorphic_copy(torus7):
    pa = fs.PermutationAssignment.identity(torus7, 1)
    cover = fs.build_cover(torus7, pa)
    assert [cover.n_simplices(d) for d in range(3)] == [
        torus7.n_simplices(d) for d in range(3)
    ]
    assert fs.is_connected(cover)


def test_cover_counts_every_fiber(tetra_sc):
    pa = fs.PermutationAssignment.from_partial(tetra_sc, 3, {})
    cover = fs.build_cover(tetra_sc, pa)
    for d in range(tetra_sc.dim + 1):
        assert cover.n_simplices(d) == 3 * tetra_sc.n_simplices(d)
    assert cover.euler_characteristic() == 3 * tetra_sc.euler_characteristic()


def test_cover_inconsistent_assignment_names_simplex(tetra_sc):
    perms = {("0", "1"): (1, 0)}  # single swapped edge of a 2-simplex
    pa = fs.PermutationAssignment.from_partial(tetra_sc, 2, perms)
    with pytest.raises(InvariantError, match=r"2-simplex \(0,1,2\)"):
        fs.build_cover(tetra_sc, pa)


def test_cover_connectivity_matches_transitivity():
    # with identity on a spanning tree, the cover is connected exactly when
    # the assigned permutations generate a transitive group
    rng = random.Random(41)
    k = 5
    circle = fs.SimplicialComplex(
        [str(i) for i in range(k)],
        [sorted([str(i), str((i + 1) % k)]) for i in range(k)],
    )
    tree = fs.spanning_tree(circle)
    non_tree = [e for e in circle.edges() if e not in tree]
    for d in (2, 3, 4):
        for _ in range(8):
            perm = list(range(d))
            rng.shuffle(perm)
            pa = fs.PermutationAssignment.from_partial(
                circle, d, {non_tree[0]: tuple(perm)}
            )
            cover = fs.build_cover(circle, pa)
            orbit = {0}
            frontier = [0]
            while frontier:
                x = frontier.pop()
                for nxt in (perm[x],):
                    if nxt not in orbit:
                        orbit.add(nxt)
                        frontier.append(nxt)
                inv = perm.index(x)
                if inv not in orbit:
                    orbit.add(inv)
                    frontier.append(inv)
            transitive = len(orbit) == d
            assert fs.is_connected(cover) == transitive


def _random_chain(rng, cc, dim, size=4):
    cells = cc.cells(dim)
    return fs.Chain(
        dim,
        {cells[rng.randrange(len(cells))]: rng.randint(-3, 3) for _ in range(size)},
    )


def test_pushforward_commutes_on_hexagon_cover(triangle):
    rng = random.Random(17)
    pa = fs.PermutationAssignment.from_partial(triangle, 2, {("1", "2"): (1, 0)})
    cover = fs.build_cover(triangle, pa)
    base_cc = fs.to_chain_complex(triangle)
    cover_cc = fs.to_chain_complex(cover)
    for _ in range(25):
        c = _random_chain(rng, cover_cc, 1)
        lhs = fs.cover_pushforward(fs.boundary(cover_cc, c))
        rhs = fs.boundary(base_cc, fs.cover_pushforward(c))
        assert lhs == rhs


def test_pushforward_commutes_on_torus_cover(torus7):
    # coboundary monodromy sigma^(phi(v) - phi(u)) is consistent on every
    # 2-simplex, which makes a valid 3-sheeted cover of the torus
    rng = random.Random(19)
    phi = {v: rng.randrange(3) for v in torus7.vertices}
    sigma = (1, 2, 0)

    def power(k):
        p = (0, 1, 2)
        for _ in range(k % 3):
            p = tuple(sigma[x] for x in p)
        return p

    perms = {(u, v): power(phi[v] - phi[u]) for u, v in torus7.edges()}
    pa = fs.PermutationAssignment(3, perms)
    cover = fs.build_cover(torus7, pa)
    base_cc = fs.to_chain_complex(torus7)
    cover_cc = fs.to_chain_complex(cover)
    for _ in range(20):
        for dim in (1, 2):
            c = _random_chain(rng, cover_cc, dim)
            lhs = fs.cover_pushforward(fs.boundary(cover_cc, c))
            rhs = fs.boundary(base_cc, fs.cover_pushforward(c))
            assert lhs == rhs


def test_spanning_tree_is_deterministic(torus7):
    assert fs.spanning_tree(torus7) == fs.spanning_tree(torus7)
