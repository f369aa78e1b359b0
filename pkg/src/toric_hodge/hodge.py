"""Hodge-Deligne tables for complete intersections in tori and their
compactifications.

`epq_c_ci` computes the compactly supported table e_c^{pq} of a generic
complete intersection Y* in (C*)^m with prescribed Newton supports, by
induction on the torus dimension and the number of equations:

  1. a singleton support or an overdetermined system gives the empty variety;
  2. no equations gives the torus itself;
  3. supports spanning a lower-dimensional lattice split off a torus factor
     (Kuenneth convolution after rewriting in the saturated lattice);
  4. below the middle weight the ordinary table agrees with the torus,
     corrected by inclusion-exclusion over proper sub-collections of the
     equations (a Lefschetz-type connectivity argument);
  5. duality transports those values to the compactly supported table above
     the middle;
  6. the problem is compactified inside the simplicially refined normal fan
     of the Minkowski sum of the supports, and every boundary orbit is
     solved recursively;
  7. the compact table of the closure is completed across the middle
     anti-diagonal using the signed Euler characteristics of the p-form
     sheaves;
  8. subtracting the boundary recovers e_c of the open part everywhere,
     which must reproduce step 5 above the middle (checked).

`hodge_compact` sums e_c over all torus orbits of a complete simplicial
fan, yielding the Hodge diamond h^{pq} = (-1)^{p+q} e^{pq} of a compact
quasi-smooth complete intersection.  Restrictions that vanish identically
on an orbit impose no condition there and simply drop from the orbit's
system; orbits with no surviving equations contribute full subtori.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import ConsistencyError
from .fans import (
    Fan,
    TorusCIProblem,
    all_cones,
    degrees_of,
    is_complete,
    is_simplicial,
    normal_fan,
    orbit_problem,
    stellar_subdivide_to_simplicial,
    validate,
)
from .forms import chi_alt
from .hilbert import build_context
from .hodge_tables import EPQTable, zero_table
from .lattice import affine_lattice_reduction, minkowski_support

_epq_memo: dict = {}


def clear_epq_memo() -> None:
    """Drop all cached tables (results are unchanged by doing so)."""
    _epq_memo.clear()


def epq_torus(m: int, mode: str) -> EPQTable:
    """e^{pq} of the torus (C*)^m, ordinary or compactly supported.

    Cohomology is exterior on m classes of type (1,1); compact support
    flips the sign pattern through duality.
    """
    if m < 0:
        raise ValueError("negative torus dimension")
    if mode not in ("ordinary", "compact"):
        raise ValueError(f"unknown mode {mode!r}")
    ent = [[0] * (m + 1) for _ in range(m + 1)]
    for p in range(m + 1):
        if mode == "ordinary":
            ent[p][p] = (-1) ** p * comb(m, p)
        else:
            ent[p][p] = (-1) ** (m - p) * comb(m, p)
    return EPQTable(tuple(tuple(r) for r in ent), mode)


def _memo_key(problem: TorusCIProblem):
    return (problem.m, tuple(sorted(problem.supports)))


def epq_c_ci(problem: TorusCIProblem) -> EPQTable:
    """Compactly supported e^{pq} of a generic toric complete intersection."""
    key = _memo_key(problem)
    cached = _epq_memo.get(key)
    if cached is not None:
        return cached
    table = _epq_c_ci_compute(problem)
    if not table.is_symmetric():
        raise ConsistencyError("compactly supported table lost (p,q)-symmetry")
    _epq_memo[key] = table
    return table


def _epq_c_ci_compute(problem: TorusCIProblem) -> EPQTable:
    m = problem.m
    k = problem.k
    n = m - k

    # 1. generic fibers empty: a single monomial never vanishes on the torus,
    #    and an overdetermined generic system has no solutions
    if any(len(s) == 1 for s in problem.supports) or k > m:
        return zero_table(n, "compact")
    # 2. no equations
    if k == 0:
        return epq_torus(m, "compact")
    # 3. split off the torus factor complementary to the affine span
    red = affine_lattice_reduction(problem.supports)
    if red.rank < m:
        inner = epq_c_ci(TorusCIProblem(m=red.rank, supports=red.supports))
        return inner.convolve(epq_torus(m - red.rank, "compact"), "compact")

    # 4. ordinary values below the middle
    torus = epq_torus(m, "ordinary")
    sub_tables = {}
    for size in range(1, k):
        for picks in combinations(range(k), size):
            sub = TorusCIProblem(
                m=m, supports=tuple(problem.supports[i] for i in picks)
            )
            sub_tables[picks] = epq_c_ci(sub)

    def e_lower(p, q):  # e^{pq}(Y*) for p + q < n
        acc = torus.get(p, q)
        for picks, tab in sub_tables.items():
            n_sub = m - len(picks)
            acc -= (-1) ** (len(picks) - 1) * tab.get(n_sub - p, n_sub - q)
        return (-1) ** (k - 1) * acc

    # 5. duality: e_c above the middle
    def e_c_upper(p, q):  # p + q > n
        return e_lower(n - p, n - q)

    # 6. compactify and solve the boundary
    delta = minkowski_support(problem.supports)
    fan = stellar_subdivide_to_simplicial(normal_fan(delta, m))
    degrees = degrees_of(fan, problem.supports)
    boundary = zero_table(n, "compact")
    for cone in all_cones(fan):
        if not cone:
            continue
        piece = epq_c_ci(orbit_problem(fan, cone, problem.supports, degrees))
        if piece.bound > n:
            raise ConsistencyError("boundary orbit exceeds the expected dimension")
        boundary = boundary.add(piece)

    # 7. table of the compactified variety
    ebar = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q > n:
                ebar[p][q] = e_c_upper(p, q) + boundary.get(p, q)
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n:
                ebar[p][q] = ebar[n - p][n - q]
    ctx = build_context(fan)
    for p in range(n + 1):
        ep = (-1) ** p * chi_alt(ctx, degrees, p)
        ebar[p][n - p] = ep - sum(ebar[p][q] for q in range(n + 1) if q != n - p)

    # 8. recover the open part; re-derive the upper triangle as a check
    e_c = [
        [ebar[p][q] - boundary.get(p, q) for q in range(n + 1)] for p in range(n + 1)
    ]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q > n and e_c[p][q] != e_c_upper(p, q):
                raise ConsistencyError(
                    f"duality mismatch at {(p, q)}: assembled {e_c[p][q]}, "
                    f"dual of the open part {e_c_upper(p, q)}"
                )
    return EPQTable(tuple(tuple(r) for r in e_c), "compact")


def hodge_compact(fan: Fan, supports) -> EPQTable:
    """Hodge diamond of a compact quasi-smooth toric complete intersection.

    The fan must be complete and simplicial; the answer is the generic one
    for the given supports.  e^{pq} is accumulated orbit by orbit and turned
    into h^{pq} = (-1)^{p+q} e^{pq}; negative or asymmetric output, or mass
    above the expected dimension, is reported as a consistency failure.
    """
    report = validate(fan)
    if not report.ok:
        raise ValueError(f"invalid fan: {report.first_violation}")
    if not is_complete(fan):
        raise ValueError("hodge_compact requires a complete fan")
    if not is_simplicial(fan):
        raise ValueError("hodge_compact requires a simplicial fan")
    supports = tuple(tuple(sorted(set(tuple(q) for q in s))) for s in supports)
    for s in supports:
        if not s:
            raise ValueError("empty support set")
        for q in s:
            if len(q) != fan.dim:
                raise ValueError("support point of wrong dimension")
    k = len(supports)
    n = fan.dim - k
    if n < 0:
        raise ValueError("more equations than the ambient dimension")
    degrees = degrees_of(fan, supports)
    acc = zero_table(n, "compact")
    for cone in all_cones(fan):
        piece = epq_c_ci(orbit_problem(fan, cone, supports, degrees))
        acc = acc.add(piece)
    if acc.bound > n:
        for p in range(acc.size):
            for q in range(acc.size):
                if (p > n or q > n) and acc.get(p, q) != 0:
                    raise ConsistencyError(
                        "orbit decomposition carries mass above the expected dimension"
                    )
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            val = (-1) ** (p + q) * acc.get(p, q)
            if val < 0:
                raise ConsistencyError(f"negative Hodge number at {(p, q)}")
            h[p][q] = val
    table = EPQTable(tuple(tuple(r) for r in h), "hodge")
    if not table.is_symmetric():
        raise ConsistencyError("Hodge table is not symmetric")
    return table
