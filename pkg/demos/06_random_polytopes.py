"""Random inscribed polytopes and the volume-deficit limit.

Sampling N boundary points from the curvature-matched density and taking
the convex hull leaves a volume deficit that shrinks like N^(-2/(n-1)).
Rescaled by that rate, the expected deficit has a limit equal to
c_n Z^(2/(n-1)) omega^p(K), tying the Monte Carlo experiment back to the
weighted functional. On the unit disk with p = 1 everything is explicit:
c_2 = 1/2, Z = 2 pi, omega = 2 pi, so the limit is 4 pi^3.
"""

import math

import numpy as np

import curvfun as cf


def main():
    disk = cf.make_ball(2)
    ellipse = cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse(2,1)")

    print("== matched density on the disk ==")
    dens = cf.boundary_density(disk, p=1.0)
    print("density values: all %.1f (max dev %.1e)"
          % (dens.values[0], np.max(np.abs(dens.values - 1.0))))
    print("normalizer Z = %.12f (2*pi = %.12f)" % (dens.normalizer, 2 * math.pi))
    print("rejection envelope %.3f (safety %.1f over a flat target)"
          % (dens.envelope, dens.safety))

    print()
    print("== node identity on the ellipse, p = 2 ==")
    check = cf.density_functional_identity(cf.boundary_density(ellipse, p=2.0))
    print("lhs %.12f  rhs %.12f  rel error %.2e" % (check.lhs, check.rhs, check.rel_error))

    print()
    print("== rejection sampling on the ellipse ==")
    pts, stats = cf.sample_boundary(cf.boundary_density(ellipse, p=1.0),
                                    2000, seed=5, return_stats=True)
    print("accepted %d of %d proposals (rate %.3f)"
          % (stats.accepted, stats.proposals, stats.acceptance_rate))
    print("sample of boundary points: %s" % np.array2string(pts[:3], precision=4))

    print()
    print("== deficit scaling on the disk ==")
    print("  N     E[deficit]   N^2 * E[deficit]")
    for n_points in (100, 200, 400):
        est = cf.expected_deficit(dens, n_points, trials=400, seed=3)
        print("%5d   %.6f     %.4f +- %.4f"
              % (est.n_points, est.mean, est.scaled_mean, est.scaled_stderr))
    print("the raw deficit shrinks like N^-2 while the rescaled column settles")

    print()
    print("== extrapolated limit vs the closed form ==")
    mc = cf.interpretation_check(disk, p=1.0, n_schedule=(200, 400, 800),
                                 trials=600, seed=2026)
    print("extrapolated %.4f vs target %.4f (rel error %.4f)"
          % (mc.extrapolated, mc.target, mc.rel_error))
    print("target decomposes as c_2 * Z^2 * omega = %.1f * %.4f * %.4f = 4 pi^3 = %.4f"
          % (mc.constant, mc.normalizer ** 2, mc.functional, 4 * math.pi ** 3))

    mc = cf.interpretation_check(ellipse, p=1.0, n_schedule=(200, 400, 800),
                                 trials=600, seed=2027)
    print("ellipse: extrapolated %.2f vs target %.2f (rel error %.4f)"
          % (mc.extrapolated, mc.target, mc.rel_error))


if __name__ == "__main__":
    main()
