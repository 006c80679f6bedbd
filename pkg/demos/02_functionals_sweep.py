"""Sweep the weighted functional in p and check it against closed forms.

On centered ellipsoids the classical (zero-index) functional has the closed
form sigma_n (prod a_i)^((n-p)/(n+p)), interpolating between n*vol at p=0 and
n*vol(polar) at p=inf. Scaling a body by a multiplies the value by a^q with
q = n(n-p)/(n+p) - k, independent of the weight index.
"""

import math

import curvfun as cf


def main():
    ellipse = cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse(2,1)")

    print("== classical sweep on the (2,1) ellipse ==")
    print("   p      computed       closed form")
    for p in (-1.0, 0.0, 0.5, 1.0, 2.0, 4.0, 7.0, math.inf):
        got = cf.asa(ellipse, p).value
        want = 2 * math.pi * (0.5 if p == math.inf else 2.0 ** ((2 - p) / (2 + p)))
        print("%5s   %.10f  %.10f" % (p, got, want))

    print()
    print("== weighted indices on the unit ball: always c_n * sigma ==")
    ball = cf.make_ball(3)
    for index in (cf.WeightIndex(0, 0.0, (0, 0)), cf.WeightIndex(2, 1.0, (2, 0)),
                  cf.WeightIndex(2, -0.5, (0, 1)), cf.WeightIndex(3, 4.0, (1, 1))):
        got = cf.weighted_asa(ball, index, 1.5).value
        print("m=%d k=%4.1f i=%s  c_n=%d   value=%.8f   c_n*sigma=%.8f"
              % (index.m, index.k, index.i, index.c_n, got, index.c_n * 4 * math.pi))

    print()
    print("== homogeneity: omega(aK) / omega(K) vs a^q ==")
    wavy = cf.make_perturbed_ball(2, mode=3, eps=0.05)
    index = cf.WeightIndex(1, 0.5, (1,))
    for p in (1.0, 3.0, math.inf):
        q = cf.homogeneity_degree(2, p, index.k)
        base = cf.weighted_asa(wavy, index, p).value
        for a in (0.5, 2.0):
            scaled = cf.weighted_asa(cf.transform(wavy, a), index, p).value
            print("p=%-4s a=%.1f   ratio=%.10f   a^q=%.10f"
                  % (p, a, scaled / base, a ** q))


if __name__ == "__main__":
    main()
