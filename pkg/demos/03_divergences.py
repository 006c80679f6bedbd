"""f-divergences of the two cone measures of a convex body.

The body-side density q and polar-side density p live on the weighting
measure mu of a chosen index. Their f-divergences recover the functional
family: the Hellinger integral at alpha = p/(n+p) equals omega^p, and the
Kullback-Leibler divergences measure how far the body is from an ellipsoid.
"""

import math

import numpy as np

import curvfun as cf


def main():
    z = cf.WeightIndex.zero(2)
    ellipse = cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse(2,1)")
    wavy = cf.make_perturbed_ball(2, mode=3, eps=0.05, label="wavy disk")

    print("== cone densities on the ellipse ==")
    pair = cf.cone_densities(ellipse, z)
    print("ratio p/q is constant on ellipsoids: spread = %.3g"
          % float(np.ptp(pair.ratio)))
    print("value 1/(prod a)^2 = %.6f" % pair.ratio[0])

    print()
    print("== Hellinger bridge: H_{p/(n+p)}(P,Q) = omega^p ==")
    for p in (0.5, 1.0, 2.0, 7.0):
        alpha = p / (2 + p)
        lhs = cf.hellinger(wavy, z, alpha)
        rhs = cf.weighted_asa(wavy, z, p).value
        print("p=%-4s  hellinger=%.12f  omega^p=%.12f" % (p, lhs, rhs))

    print()
    print("== Kullback-Leibler: raw and normalized ==")
    for body in (ellipse, wavy):
        raw = cf.kl_divergence(body, z, "PQ")
        norm = cf.kl_divergence(body, z, "PQ", normalized=True)
        print("%-12s  raw=%.8f   normalized=%.3g" % (body.label, raw, norm))
    print("(closed form on the ellipse: -2 pi log 2 = %.8f)"
          % (-2 * math.pi * math.log(2)))
    print("normalized KL is zero exactly on ellipsoids and positive otherwise")

    print()
    print("== adjoint generators swap the direction ==")
    for gen in (cf.kl_generator(), cf.power_generator(2.0), cf.sqrt_generator()):
        qp = cf.f_divergence(wavy, z, gen, direction="QP")
        star = cf.f_divergence(wavy, z, cf.adjoint(gen), direction="PQ")
        print("%-12s  D_f(Q,P)=%.10f   D_f*(P,Q)=%.10f" % (gen.name, qp, star))

    print()
    print("== Jensen comparison against the mass ratio ==")
    for gen in (cf.sqrt_generator(), cf.kl_generator(), cf.linear_generator(2.0, 1.0)):
        out = cf.jensen_bound(wavy, z, gen)
        print("%-12s shape=%-8s lhs=%.6f rhs=%.6f gap=%+.2e holds=%s"
              % (gen.name, out.shape, out.lhs, out.rhs, out.gap, out.holds))


if __name__ == "__main__":
    main()
