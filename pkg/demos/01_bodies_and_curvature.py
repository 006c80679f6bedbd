"""Build the three body families and read off their curvature data.

Every body is represented by its support function h together with analytic
first and second derivatives of the 1-homogeneous extension. The curvature
engine turns that into boundary points, principal curvature radii, and the
normalized symmetric functions s_j, with the dual array H_j = s_{n-1-j}/s_{n-1}.
"""

import numpy as np

import curvfun as cf


def main():
    ball = cf.make_ball(2)
    ellipse = cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse(2,1)")
    wavy = cf.make_perturbed_ball(2, mode=3, eps=0.05, label="wavy disk")

    print("== support and curvature at a few directions ==")
    for body in (ball, ellipse, wavy):
        print(body.label)
        for theta in (0.0, np.pi / 3, np.pi / 2):
            u = np.array([np.cos(theta), np.sin(theta)])
            pt = cf.curvature_at(body, u)
            print("  theta=%5.2f  h=%.6f  radius=%.6f  boundary x=(%.4f, %.4f)"
                  % (theta, pt.h, pt.radii[0], pt.x[0], pt.x[1]))

    print()
    print("== the duality H_j * s_top = s_{n-1-j}, checked on a grid ==")
    rule = cf.default_rule(3)
    ellipsoid = cf.make_ellipsoid(3, cf.ellipsoid_matrix([2.0, 1.0, 1.0]),
                                  label="ellipsoid(2,1,1)")
    h, x, radii, s, H = cf.curvature_arrays(ellipsoid, rule.nodes)
    worst = np.max(np.abs(H * s[:, -1][:, None] - s[:, ::-1]))
    print("worst deviation on %d nodes: %.3g" % (len(rule), worst))

    print()
    print("== volumes, polar volumes, centroids ==")
    for body in (ball, ellipse, wavy, ellipsoid):
        c = cf.centroid(body)
        print("%-16s vol=%.6f  polar vol=%.6f  centroid=%s"
              % (body.label, cf.body_volume(body), cf.polar_volume(body),
                 np.round(c, 10).tolist()))

    print()
    print("== construction guards ==")
    try:
        cf.make_perturbed_ball(2, mode=3, eps=0.2)
    except cf.BodyConstructionError as exc:
        print("eps=0.2 rejected:", exc)


if __name__ == "__main__":
    main()
