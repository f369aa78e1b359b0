"""Shared fan and support builders for the test suite."""

from itertools import combinations, product

from toric_hodge.fans import Fan


def fan_projective(m):
    """Fan of m-dimensional projective space: unit rays plus their negative sum."""
    rays = [tuple(int(i == j) for i in range(m)) for j in range(m)] + [
        tuple([-1] * m)
    ]
    cones = tuple(sorted(combinations(range(m + 1), m)))
    return Fan(dim=m, rays=tuple(rays), maximal_cones=cones)


def fan_product(a: Fan, b: Fan) -> Fan:
    rays = [r + tuple([0] * b.dim) for r in a.rays] + [
        tuple([0] * a.dim) + r for r in b.rays
    ]
    shift = len(a.rays)
    cones = []
    for ca in a.maximal_cones:
        for cb in b.maximal_cones:
            cones.append(tuple(sorted(ca + tuple(i + shift for i in cb))))
    return Fan(dim=a.dim + b.dim, rays=tuple(rays), maximal_cones=tuple(sorted(cones)))


def fan_p1():
    return fan_projective(1)


def fan_p2():
    return fan_projective(2)


def fan_p3():
    return fan_projective(3)


def fan_p1p1():
    return fan_product(fan_projective(1), fan_projective(1))


def fan_p2p1():
    return fan_product(fan_projective(2), fan_projective(1))


def fan_p3p1():
    return fan_product(fan_projective(3), fan_projective(1))


def fan_p1p1p1():
    return fan_product(fan_p1p1(), fan_projective(1))


def fan_wps_1423():
    return Fan(
        dim=3,
        rays=((-4, -2, -3), (1, 0, 0), (0, 1, 0), (0, 0, 1)),
        maximal_cones=((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)),
    )


def fan_octahedron():
    """Complete non-simplicial fan: normal fan of the octahedron (cube cones)."""
    rays = tuple(sorted(product((-1, 1), repeat=3)))
    cones = []
    for axis in range(3):
        for sign in (-1, 1):
            cone = tuple(
                sorted(i for i, r in enumerate(rays) if r[axis] == sign)
            )
            cones.append(cone)
    return Fan(dim=3, rays=rays, maximal_cones=tuple(sorted(cones)))


def polygon_fan(n):
    """Complete 2D fan with n rays on the upper/lower slopes (n even >= 4)."""
    half = n // 2
    rays = [(1, i) for i in range(half)] + [(-1, -i) for i in range(half)]
    rays = [r for r in rays]
    # order rays by angle for consecutive cones
    import math

    rays.sort(key=lambda r: math.atan2(r[1], r[0]) % (2 * math.pi))
    cones = tuple(
        tuple(sorted((i, (i + 1) % len(rays)))) for i in range(len(rays))
    )
    return Fan(dim=2, rays=tuple(rays), maximal_cones=cones)


def simplex_support(m, d):
    """Exponents of a generic degree-d equation on projective m-space."""
    return tuple(
        sorted(q for q in product(range(d + 1), repeat=m) if sum(q) <= d)
    )


def product_support(blocks):
    """Multidegree support on a product of projective spaces.

    `blocks` is a sequence of (dimension, degree) pairs; the result lives in
    the direct sum of the block lattices.
    """
    parts = [simplex_support(m, d) for m, d in blocks]
    out = []
    for combo in product(*parts):
        point = ()
        for piece in combo:
            point = point + piece
        out.append(point)
    return tuple(sorted(out))


def unimodular_matrix(dim, rng, steps=6):
    """Random unimodular integer matrix from elementary operations."""
    mat = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for t in range(dim):
            mat[i][t] += c * mat[j][t]
    if rng.random() < 0.5 and dim >= 2:
        mat[0], mat[1] = mat[1], mat[0]
    return mat


def apply_matrix(mat, point):
    dim = len(point)
    return tuple(sum(mat[i][j] * point[j] for j in range(dim)) for i in range(dim))


def forms_fixture_corpus():
    """(name, fan, supports) fixtures spanning k in {0,1,2}, m in {1,2,3}."""
    p1, p2, p3 = fan_p1(), fan_p2(), fan_p3()
    p1p1, p2p1, p1cubed = fan_p1p1(), fan_p2p1(), fan_p1p1p1()
    pw = fan_wps_1423()
    s = simplex_support
    corpus = [
        ("p1_k0", p1, []),
        ("p1_d2", p1, [s(1, 2)]),
        ("p1_d3", p1, [s(1, 3)]),
        ("p1_d2_d2", p1, [s(1, 2), s(1, 2)]),
        ("p2_k0", p2, []),
        ("p2_cubic", p2, [s(2, 3)]),
        ("p2_conic", p2, [s(2, 2)]),
        ("p2_conic_conic", p2, [s(2, 2), s(2, 2)]),
        ("p2_line_cubic", p2, [s(2, 1), s(2, 3)]),
        ("p1p1_k0", p1p1, []),
        ("p1p1_11", p1p1, [product_support([(1, 1), (1, 1)])]),
        ("p1p1_21", p1p1, [product_support([(1, 2), (1, 1)])]),
        ("p1p1_11_11", p1p1, [product_support([(1, 1), (1, 1)])] * 2),
        ("p3_k0", p3, []),
        ("p3_quadric", p3, [s(3, 2)]),
        ("p3_cubic", p3, [s(3, 3)]),
        ("p3_quadric_quadric", p3, [s(3, 2), s(3, 2)]),
        ("p2p1_k0", p2p1, []),
        ("p2p1_11", p2p1, [product_support([(2, 1), (1, 1)])]),
        ("p2p1_21_11", p2p1, [product_support([(2, 2), (1, 1)]),
                              product_support([(2, 1), (1, 1)])]),
        ("p1cubed_k0", p1cubed, []),
        ("p1cubed_111", p1cubed, [product_support([(1, 1), (1, 1), (1, 1)])]),
        ("wps1423_k0", pw, []),
        ("wps1423_d12", pw, [wps_support_1423(12)]),
    ]
    return corpus


def wps_support_1423(d):
    """Support of a generic weighted-degree-d equation on P(1,4,2,3),
    dehomogenized at the weight-1 variable."""
    pts = []
    for a in range(d // 4 + 1):
        for b in range(d // 2 + 1):
            for c in range(d // 3 + 1):
                if 4 * a + 2 * b + 3 * c <= d:
                    pts.append((a, b, c))
    return tuple(sorted(pts))
