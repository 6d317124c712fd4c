"""Edge curvature of the named families, computed exactly.

Every value below is an exact rational produced by the limit-free LP engine;
the transport-based slope engine recomputes each one as a cross-check. Watch
the classic patterns appear: complete graphs give n/(n-1), hypercubes give
2/d, long cycles are flat.
"""

from riccikit import families
from riccikit.curvature import kappa_lly, kappa_lly_slope


def show(label, g, edge):
    u, v = edge
    lp = kappa_lly(g, u, v)
    slope = kappa_lly_slope(g, u, v)
    marker = "ok" if lp == slope else "MISMATCH"
    print(f"  {label:<16} edge {u}-{v}: kappa = {str(lp):>6}   [slope engine: {marker}]")


def main():
    print("Complete graphs: kappa = n/(n-1)")
    for n in (2, 3, 4, 5, 6):
        g, _ = families.complete(n)
        show(f"K_{n}", g, (0, 1))

    print("\nHypercubes: kappa = 2/d")
    for d in (1, 2, 3, 4):
        g, _ = families.hypercube(d)
        show(f"Q_{d}", g, (0, 1))

    print("\nCycles: flat from length 6 on, positive before")
    for n in (3, 4, 5, 6, 7):
        g, _ = families.cycle(n)
        show(f"C_{n}", g, (0, 1))

    print("\nPrisms and antiprisms")
    for n in (3, 4, 5):
        g, _ = families.prism(n)
        show(f"prism({n})", g, (0, 1))
    for n in (3, 4, 5):
        g, _ = families.antiprism(n)
        show(f"antiprism({n})", g, (0, 1))

    g, _ = families.icosahedron()
    print("\nIcosahedron")
    show("icosahedron", g, (0, 1))


if __name__ == "__main__":
    main()
