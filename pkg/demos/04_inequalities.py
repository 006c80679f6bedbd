"""Machine-verified comparison inequalities on a small corpus.

Three families are checked: the three-exponent comparison, the
volume-normalized comparison, and the k-slot interpolation. Each report
carries lhs, rhs, a normalized slack, and a verdict; equality cases are
classified geometrically (ball / ellipsoid / generic).
"""

from collections import Counter

import curvfun as cf


def main():
    bodies = [
        cf.make_ball(2),
        cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse(2,1)"),
        cf.make_ellipsoid(2, cf.ellipsoid_matrix([3.0, 1.0]), label="ellipse(3,1)"),
        cf.make_perturbed_ball(2, mode=3, eps=0.05, label="wavy disk"),
        cf.make_ellipsoid(3, cf.ellipsoid_matrix([2.0, 1.0, 1.0]),
                          label="ellipsoid(2,1,1)"),
    ]

    print("== one report in detail ==")
    rep = cf.verify_holder_three(bodies[3], cf.WeightIndex.zero(2), 1.0, 0.0, 4.0)
    print("claim=%s body=%s" % (rep.claim, rep.body_label))
    print("lhs=%.10f rhs=%.10f slack=%.3e verdict=%s equality_case=%s"
          % (rep.lhs, rep.rhs, rep.slack, rep.verdict, rep.equality_case))

    print()
    print("== hypothesis guard ==")
    rep = cf.verify_holder_three(bodies[0], cf.WeightIndex.zero(2), 4.0, 0.0, 1.0)
    print("reversed exponents give:", rep.verdict)

    print()
    print("== full suite over the corpus ==")
    reports = cf.run_verification_suite(bodies)
    counts = Counter(r.verdict for r in reports)
    print("%d reports: %s" % (len(reports), dict(counts)))

    print()
    print("== worst slack per claim family (over 'holds' verdicts) ==")
    worst = {}
    for r in reports:
        if r.verdict == "holds":
            worst[r.claim] = min(worst.get(r.claim, float("inf")), r.slack)
    for claim in sorted(worst):
        print("%-12s min slack %.3e" % (claim, worst[claim]))

    print()
    print("equality verdicts sit exactly on balls and ellipsoids;")
    print("the k-slot interpolation needs constant support, so only balls")


if __name__ == "__main__":
    main()
