"""Fans as combinatorial objects, plus support/fan interaction.

A fan is stored by its primitive ray generators and its maximal cones; a
cone is just a sorted tuple of ray indices.  Structural predicates
(complete / simplicial / regular), simplicial refinement, restriction of
Newton-polytope supports to cones, adaptedness, degree vectors, and the
reduction of a support system to a torus orbit all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import (
    Polytope,
    cone_extreme_rays,
    det_int,
    dot,
    kernel_basis_columns,
    primitive,
    rank_of,
    saturation_data,
    smith_normal_form,
    vec_sub,
)

Cone = tuple  # sorted tuple of ray indices into the parent fan's ray list


@dataclass(frozen=True)
class Fan:
    """Complete combinatorial description of a fan in Z^dim."""

    dim: int
    rays: tuple  # tuple of primitive integer vectors
    maximal_cones: tuple  # tuple of sorted index tuples

    def __post_init__(self):
        object.__setattr__(
            self, "maximal_cones", tuple(tuple(sorted(c)) for c in self.maximal_cones)
        )

    def ray_matrix(self, cone):
        return [list(self.rays[i]) for i in cone]


@dataclass(frozen=True)
class DegreeMatrix:
    """Per-equation, per-ray integers d[i][j] = -min <ray_j, M_i>."""

    rows: tuple  # tuple of int tuples, one row per equation

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


@dataclass(frozen=True)
class TorusCIProblem:
    """A complete-intersection problem inside a torus (C*)^m.

    Only the supports matter: all invariants computed downstream are those
    of a system with generic coefficients on these supports.
    """

    m: int
    supports: tuple  # tuple of tuples of lattice points in Z^m

    def __post_init__(self):
        object.__setattr__(
            self,
            "supports",
            tuple(tuple(sorted(set(tuple(q) for q in s))) for s in self.supports),
        )
        for s in self.supports:
            if not s:
                raise ValueError("empty support set in torus problem")
            for q in s:
                if len(q) != self.m:
                    raise ValueError("support point of wrong dimension")

    @property
    def k(self):
        return len(self.supports)


# ---------------------------------------------------------------------------
# cone geometry


def cone_hrep(fan: Fan, cone: Cone):
    """H-representation of cone(rays): (equalities, inequalities).

    The cone is {x : e.x = 0 for all equalities, n.x >= 0 for all
    inequalities}; normals are primitive integer vectors.
    """
    dim = fan.dim
    rays = [fan.rays[i] for i in cone]
    if not rays:
        eqs = [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
        return tuple(eqs), ()
    rank, coord = saturation_data(rays, dim)
    eqs = []
    if rank < dim:
        basis, _ = kernel_basis_columns(rays, dim)
        eqs = [primitive(u) for u in basis]
    reduced = [coord(r) for r in rays]
    duals = cone_extreme_rays(reduced, rank) if rank else []
    snf = smith_normal_form([list(v) for v in rays])
    right = snf.right
    ineqs = []
    for a in duals:
        w = tuple(sum(right[i][j] * a[j] for j in range(rank)) for i in range(dim))
        ineqs.append(primitive(w))
    return tuple(eqs), tuple(sorted(ineqs))


def cone_contains(fan: Fan, cone: Cone, vector) -> bool:
    eqs, ineqs = cone_hrep(fan, cone)
    return all(dot(e, vector) == 0 for e in eqs) and all(
        dot(n, vector) >= 0 for n in ineqs
    )


def cone_facet_ray_sets(fan: Fan, cone: Cone):
    """Ray-index sets of the facets (maximal proper faces) of a cone."""
    if not cone:
        return []
    _, ineqs = cone_hrep(fan, cone)
    out = []
    seen = set()
    for n in ineqs:
        tight = tuple(i for i in cone if dot(n, fan.rays[i]) == 0)
        if tight not in seen:
            seen.add(tight)
            out.append(tight)
    if not ineqs:
        # the cone is a linear subspace only when invalid; the zero face
        out.append(())
    return out


def cone_faces(fan: Fan, cone: Cone):
    """All faces of a cone, each as a sorted tuple of ray indices."""
    cone = tuple(sorted(cone))
    if not cone:
        return {()}
    rays = [fan.rays[i] for i in cone]
    if rank_of(rays) == len(rays):  # simplicial: faces are the subsets
        faces = set()
        for size in range(len(cone) + 1):
            faces.update(combinations(cone, size))
        return faces
    facets = [frozenset(f) for f in cone_facet_ray_sets(fan, cone)]
    closed = {frozenset(cone)}
    frontier = [frozenset(cone)]
    while frontier:
        nxt = []
        for face in frontier:
            for f in facets:
                inter = face & f
                if inter not in closed:
                    closed.add(inter)
                    nxt.append(inter)
        frontier = nxt
    return {tuple(sorted(f)) for f in closed}


def all_cones(fan: Fan):
    """Every cone of the fan (all faces of all maximal cones), sorted."""
    cones = set()
    for c in fan.maximal_cones:
        cones |= cone_faces(fan, c)
    return sorted(cones, key=lambda c: (len(c), c))


# ---------------------------------------------------------------------------
# validation and predicates


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple

    @property
    def first_violation(self):
        return self.problems[0] if self.problems else None


def validate(fan: Fan) -> ValidationReport:
    """Check ray primitivity/distinctness and that cones meet in faces."""
    problems = []
    seen = set()
    for idx, ray in enumerate(fan.rays):
        if len(ray) != fan.dim:
            problems.append(f"ray {idx} has wrong dimension")
            continue
        if all(x == 0 for x in ray):
            problems.append(f"ray {idx} is zero")
            continue
        if primitive(ray) != tuple(ray):
            problems.append(f"ray {idx} is not primitive")
        if tuple(ray) in seen:
            problems.append(f"ray {idx} duplicates an earlier ray")
        seen.add(tuple(ray))
    if problems:
        return ValidationReport(False, tuple(problems))

    used = set()
    for cone in fan.maximal_cones:
        if len(set(cone)) != len(cone):
            problems.append(f"cone {cone} repeats a ray index")
            continue
        if any(i < 0 or i >= len(fan.rays) for i in cone):
            problems.append(f"cone {cone} has an out-of-range ray index")
            continue
        used.update(cone)
        rays = [fan.rays[i] for i in cone]
        if cone:
            eqs, ineqs = cone_hrep(fan, cone)
            span_rank = rank_of(rays)
            hrep_rank = rank_of([list(e) for e in eqs] + [list(n) for n in ineqs])
            if hrep_rank < fan.dim:
                problems.append(f"cone {cone} is not strongly convex")
                continue
            for i in cone:
                others = tuple(j for j in cone if j != i)
                if others and cone_contains(fan, others, fan.rays[i]):
                    problems.append(
                        f"ray {i} is redundant in cone {cone}"
                    )
    if problems:
        return ValidationReport(False, tuple(problems))

    missing = set(range(len(fan.rays))) - used
    if missing:
        problems.append(f"rays {sorted(missing)} appear in no maximal cone")
        return ValidationReport(False, tuple(problems))

    for a, b in combinations(range(len(fan.maximal_cones)), 2):
        ca, cb = fan.maximal_cones[a], fan.maximal_cones[b]
        if not _intersection_is_common_face(fan, ca, cb):
            problems.append(f"cones {ca} and {cb} do not meet in a common face")
            return ValidationReport(False, tuple(problems))
    return ValidationReport(not problems, tuple(problems))


def _intersection_is_common_face(fan: Fan, ca: Cone, cb: Cone) -> bool:
    eqs_a, ine_a = cone_hrep(fan, ca)
    eqs_b, ine_b = cone_hrep(fan, cb)
    normals = []
    for e in eqs_a + eqs_b:
        normals.append(tuple(e))
        normals.append(tuple(-x for x in e))
    normals.extend(ine_a)
    normals.extend(ine_b)
    try:
        inter_rays = cone_extreme_rays(normals, fan.dim)
    except ValueError:
        return False  # intersection contains a line: impossible for valid fans
    for cone in (ca, cb):
        if not _is_face_of(fan, cone, inter_rays):
            return False
    return True


def _is_face_of(fan: Fan, cone: Cone, sub_rays) -> bool:
    """Is cone(sub_rays) a face of the fan cone `cone`?"""
    for r in sub_rays:
        if not cone_contains(fan, cone, r):
            return False
    z = tuple(sum(r[j] for r in sub_rays) for j in range(fan.dim)) if sub_rays else None
    _, ineqs = cone_hrep(fan, cone)
    if z is None:
        tight = list(ineqs)
    else:
        tight = [n for n in ineqs if dot(n, z) == 0]
    face_members = [
        i for i in cone if all(dot(n, fan.rays[i]) == 0 for n in tight)
    ]
    face_set = {tuple(fan.rays[i]) for i in face_members}
    return face_set == {tuple(r) for r in sub_rays}


def is_simplicial(fan: Fan) -> bool:
    return all(
        rank_of([fan.rays[i] for i in c]) == len(c) for c in fan.maximal_cones
    )


def is_regular(fan: Fan) -> bool:
    """Simplicial with every cone's rays extendable to a lattice basis."""
    if not is_simplicial(fan):
        return False
    for cone in fan.maximal_cones:
        mat = fan.ray_matrix(cone)
        if len(cone) == fan.dim:
            if abs(det_int(mat)) != 1:
                return False
        else:
            snf = smith_normal_form(mat)
            if any(d != 1 for d in snf.diag):
                return False
    return True


def is_complete(fan: Fan) -> bool:
    """Pure m-dimensional, every ridge shared by exactly two cones, connected."""
    if not fan.maximal_cones:
        return fan.dim == 0
    for cone in fan.maximal_cones:
        if rank_of([fan.rays[i] for i in cone]) != fan.dim:
            return False
    ridge_owners = {}
    for idx, cone in enumerate(fan.maximal_cones):
        for facet in cone_facet_ray_sets(fan, cone):
            ridge_owners.setdefault(frozenset(facet), []).append(idx)
    for owners in ridge_owners.values():
        if len(owners) != 2:
            return False
    adj = {i: set() for i in range(len(fan.maximal_cones))}
    for owners in ridge_owners.values():
        a, b = owners
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(fan.maximal_cones)


# ---------------------------------------------------------------------------
# normal fan and simplicial refinement


def normal_fan(poly: Polytope, ambient_dim: int) -> Fan:
    """Complete fan dual to a full-dimensional polytope.

    The maximal cone attached to a vertex v consists of the directions p
    whose minimum over the polytope is attained at v; its generators are the
    inward facet normals tight at v.
    """
    if poly.dim != ambient_dim or poly.ambient_dim != ambient_dim:
        raise ValueError("normal fan requires a full-dimensional polytope")
    facets = list(poly.facets)
    rays = tuple(primitive(n) for n, _ in facets)
    cones = []
    for v in poly.vertices:
        tight = tuple(
            sorted(i for i, (n, b) in enumerate(facets) if dot(n, v) == b)
        )
        cones.append(tight)
    return Fan(dim=ambient_dim, rays=rays, maximal_cones=tuple(sorted(set(cones))))


def stellar_subdivide_to_simplicial(fan: Fan) -> Fan:
    """Simplicial refinement by repeated star subdivision.

    Deterministic rule: pick the non-simplicial face of smallest dimension
    (ties broken by lexicographically smallest ray-index tuple) and star
    subdivide at the primitive sum of its rays.  Subdividing minimal
    non-simplicial faces first guarantees termination; for fans whose
    non-simplicial cones have simplicial facets this picks the maximal cones
    themselves.  Rays of the input all survive and the support is unchanged.
    """
    current = fan
    for _ in range(10000):
        bad = []
        seen = set()
        for cone in current.maximal_cones:
            if rank_of([current.rays[i] for i in cone]) == len(cone):
                continue
            for face in cone_faces(current, cone):
                if face in seen:
                    continue
                seen.add(face)
                rays = [current.rays[i] for i in face]
                rk = rank_of(rays)
                if rk != len(face):
                    bad.append((rk, face))
        if not bad:
            return current
        _, face = min(bad)
        rho = primitive(
            tuple(
                sum(current.rays[i][j] for i in face) for j in range(current.dim)
            )
        )
        if rho in current.rays:
            raise RuntimeError("subdivision ray already present; fan is invalid")
        new_rays = current.rays + (rho,)
        rho_idx = len(current.rays)
        new_max = []
        for cone in current.maximal_cones:
            if cone_contains(current, cone, rho):
                for facet in cone_facet_ray_sets(current, cone):
                    if not cone_contains(current, facet, rho):
                        new_max.append(tuple(sorted(facet + (rho_idx,))))
            else:
                new_max.append(cone)
        current = Fan(
            dim=current.dim, rays=new_rays, maximal_cones=tuple(sorted(set(new_max)))
        )
    raise RuntimeError("stellar subdivision did not terminate")


# ---------------------------------------------------------------------------
# supports, degrees, adaptedness, orbit reduction


def degrees_of(fan: Fan, supports) -> DegreeMatrix:
    """d[i][j] = -min over the i-th support of the pairing with ray j."""
    rows = []
    for s in supports:
        if not s:
            raise ValueError("empty support set")
        rows.append(tuple(-min(dot(ray, q) for q in s) for ray in fan.rays))
    return DegreeMatrix(tuple(rows))


def restrict_supports(fan: Fan, cone: Cone, supports, degrees: DegreeMatrix):
    """Facial restriction: points attaining the minimum on every ray of the cone."""
    out = []
    for i, s in enumerate(supports):
        pts = tuple(
            sorted(
                q
                for q in s
                if all(dot(fan.rays[j], q) == -degrees[i][j] for j in cone)
            )
        )
        out.append(pts)
    return out


@dataclass(frozen=True)
class AdaptedSubfan:
    per_cone: dict  # cone tuple -> bool
    whole_fan: bool
    maximal_adapted: tuple

    def __iter__(self):  # (per-cone map, subfan) unpacking convenience
        return iter((self.per_cone, self.maximal_adapted))


def adapted_subfan(fan: Fan, supports) -> AdaptedSubfan:
    """Cones on which every restricted support stays nonempty.

    Such cones always form a subfan because restriction only grows when
    passing to a face.  The whole fan is adapted exactly when all maximal
    cones are.
    """
    degrees = degrees_of(fan, supports)
    per_cone = {}
    for cone in all_cones(fan):
        restricted = restrict_supports(fan, cone, supports, degrees)
        per_cone[cone] = all(len(r) > 0 for r in restricted)
    adapted = [c for c, ok in per_cone.items() if ok]
    maximal_adapted = tuple(
        sorted(
            c
            for c in adapted
            if not any(set(c) < set(d) for d in adapted)
        )
    )
    whole = all(per_cone[c] for c in fan.maximal_cones)
    return AdaptedSubfan(per_cone=per_cone, whole_fan=whole, maximal_adapted=maximal_adapted)


def orbit_problem(fan: Fan, cone: Cone, supports, degrees: DegreeMatrix) -> TorusCIProblem:
    """Restrict a support system to a torus orbit.

    The restricted supports are computed facially; restrictions that vanish
    identically (empty facial support) impose no condition on the orbit and
    are dropped.  Surviving supports are translated into the orbit's
    character lattice, i.e. the sublattice of Z^m orthogonal to the cone's
    rays, expressed in an integral basis.  The result is a torus problem of
    dimension m - dim(cone).
    """
    cone = tuple(sorted(cone))
    restricted = restrict_supports(fan, cone, supports, degrees)
    survivors = [s for s in restricted if s]
    if not cone:
        return TorusCIProblem(m=fan.dim, supports=tuple(survivors))
    rays = [fan.rays[i] for i in cone]
    srank = rank_of(rays)
    basis, coord = kernel_basis_columns(rays, fan.dim)
    new_dim = fan.dim - srank
    reduced = []
    for s in survivors:
        base = min(s)
        coords = sorted(coord(vec_sub(q, base)) for q in s)
        rebase = coords[0]
        reduced.append(tuple(vec_sub(c, rebase) for c in coords))
    return TorusCIProblem(m=new_dim, supports=tuple(reduced))
