"""Structure checkers: caps, failing-inequality certificates, and the audit.

Positively curved graphs satisfy a neighborhood-expansion inequality on
every edge and every subset S of the smaller endpoint's other neighbors.
When the inequality fails, a three-valued Lipschitz function built from S
certifies non-positive curvature; the sweep below finds such a certificate
on a star whose leaf carries two pendants, and the curvature engine
confirms what the certificate promises.
"""

from riccikit.curvature import curvature_report, kappa_lly
from riccikit.graphs import Graph
from riccikit.structure import degree_audit, detect_caps, instance_to_json_dict, lemma4_sweep
from riccikit import families


def main():
    # star center 0 with leaves 1..6; leaf 1 carries pendants 7 and 8
    g = Graph([(0, i) for i in range(1, 7)] + [(1, 7), (1, 8)])
    print("star-with-pendants sweep:")
    failing = lemma4_sweep(g)
    print(f"  {len(failing)} failing instance(s); the smallest:")
    smallest = min(failing, key=lambda f: (f.s, f.subset))
    print(f"  {instance_to_json_dict(smallest)}")
    kappa = kappa_lly(g, smallest.x, smallest.y)
    print(f"  certificate bound: kappa <= {smallest.witness.nabla}")
    print(f"  engine value:      kappa  = {kappa}\n")

    print("positively curved graphs sweep clean:")
    for label, (h, _) in [("icosahedron", families.icosahedron()),
                          ("extremal 17-vertex", families.figure1())]:
        print(f"  {label}: {len(lemma4_sweep(h))} failing instances")

    print("\ncap detection around the extremal graph's hub:")
    fig, rot = families.figure1()
    records = detect_caps(fig, rot, 16, span_max=4)
    by_kind = {}
    for rec in records:
        by_kind.setdefault((rec.span, rec.kind), 0)
        by_kind[rec.span, rec.kind] += 1
    for (span, kind), count in sorted(by_kind.items()):
        print(f"  span {span} {kind}: {count}")

    print("\nmax-degree audit across families:")
    for label, (h, hrot) in [("extremal 17-vertex", families.figure1()),
                             ("icosahedron", families.icosahedron()),
                             ("hexagon", families.cycle(6))]:
        rep = curvature_report(h, rot=hrot, mode="lly")
        audit = degree_audit(h, rep)
        print(f"  {label:<20} applicable={audit.applicable!s:<5} passed={audit.passed} "
              f"({audit.note})")


if __name__ == "__main__":
    main()
