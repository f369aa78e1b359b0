"""Hodge diamonds of classical complete intersections, two ways.

Every diamond below is computed twice: once through the weighted
projective residue formulas, once through the orbit-by-orbit toric engine
running on the fan of projective space.  The two engines share nothing but
the definition, so agreement is a strong end-to-end check.

Run:  python3 demos/classical_diamonds.py
"""

from itertools import product

from toric_hodge import hodge_compact, wps_hodge
from toric_hodge.cli import render_diamond
from toric_hodge.fans import Fan


def projective_fan(m):
    rays = [tuple(int(i == j) for i in range(m)) for j in range(m)]
    rays.append(tuple([-1] * m))
    from itertools import combinations

    return Fan(m, tuple(rays), tuple(combinations(range(m + 1), m)))


def degree_support(m, d):
    return [q for q in product(range(d + 1), repeat=m) if sum(q) <= d]


CASES = [
    ("cubic curve in the plane (elliptic)", 2, [3]),
    ("quadric surface in 3-space", 3, [2]),
    ("cubic surface", 3, [3]),
    ("quartic surface (K3)", 3, [4]),
    ("intersection of a quadric and a cubic in 4-space (K3)", 4, [2, 3]),
    ("quintic threefold", 4, [5]),
]


def main():
    for title, m, degrees in CASES:
        weights = tuple([1] * (m + 1))
        via_residues = wps_hodge(weights, degrees)
        via_orbits = hodge_compact(
            projective_fan(m), [degree_support(m, d) for d in degrees]
        )
        agree = via_residues.entries == via_orbits.entries
        print(f"{title}  [degrees {degrees}]")
        print(render_diamond(via_orbits))
        print(f"residue engine agrees: {agree}")
        print()


if __name__ == "__main__":
    main()
