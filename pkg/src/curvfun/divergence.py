"""f-divergences of the cone measures attached to a convex body.

Relative to the weighting measure mu of a WeightIndex, the two densities

    p_K = H_{n-1} / h^n   (cone measure of the polar side)
    q_K = h               (cone measure of the body)

make (P_K, Q_K) a pair of finite measures on the boundary.  For a convexity
generator f the divergence is

    D_f(P_K, Q_K) = integral of f(p_K/q_K) * q_K dmu,

whose sphere-side integrand uses p_K/q_K = 1/(s_{n-1} h^(n+1)), the
reciprocal of the Petty ratio.  The adjoint generator f*(t) = t f(1/t)
swaps the two arguments, Hellinger integrals interpolate the total masses,
and the Hellinger exponent alpha = p/(n+p) reproduces the weighted L_p
affine surface area.
"""

import math
from dataclasses import dataclass

import numpy as np

from .functionals import WeightIndex, mu_density, weighted_asa, _check_index, _power
from .geometry import curvature_grid
from .quadrature import default_rule, integrate

__all__ = [
    "DivergenceGenerator",
    "ConeDensityPair",
    "adjoint",
    "kl_generator",
    "neg_log_generator",
    "power_generator",
    "sqrt_generator",
    "linear_generator",
    "cone_densities",
    "f_divergence",
    "kl_divergence",
    "hellinger",
    "renyi",
    "JensenBound",
    "jensen_bound",
    "check_shape",
]


@dataclass(frozen=True)
class DivergenceGenerator:
    """A generator f on (0, inf) with declared shape and boundary limits.

    Attributes:
        name: identifier used in reports.
        fn: vectorized callable on positive arrays.
        shape: "convex", "concave" or "linear".
        f_at_0: limit of f at 0+ (may be inf).
        fstar_at_0: limit of the adjoint t*f(1/t) at 0+ (may be inf).
    """

    name: str
    fn: object
    shape: str
    f_at_0: float
    fstar_at_0: float

    def __post_init__(self):
        if self.shape not in ("convex", "concave", "linear"):
            raise ValueError("shape must be convex, concave or linear")

    def __call__(self, t):
        return self.fn(t)


def adjoint(gen):
    """The adjoint generator f*(t) = t * f(1/t).

    Shape is preserved and the boundary limits swap; the adjoint of the
    adjoint is pointwise the original.
    """
    inner = gen.fn

    def fn(t):
        t = np.asarray(t, dtype=float)
        return t * inner(1.0 / t)

    name = gen.name[4:-1] if gen.name.startswith("adj(") else "adj(%s)" % gen.name
    return DivergenceGenerator(name=name, fn=fn, shape=gen.shape,
                               f_at_0=gen.fstar_at_0, fstar_at_0=gen.f_at_0)


def kl_generator():
    """f(t) = t log t, the Kullback-Leibler generator (convex)."""
    return DivergenceGenerator(
        name="kl", fn=lambda t: t * np.log(t), shape="convex",
        f_at_0=0.0, fstar_at_0=math.inf)


def neg_log_generator():
    """f(t) = -log t, the reverse Kullback-Leibler generator (convex)."""
    return DivergenceGenerator(
        name="neg-log", fn=lambda t: -np.log(t), shape="convex",
        f_at_0=math.inf, fstar_at_0=0.0)


def power_generator(alpha):
    """f(t) = t^alpha: convex outside [0, 1], concave inside, linear at ends."""
    alpha = float(alpha)
    if alpha in (0.0, 1.0):
        shape = "linear"
    elif 0.0 < alpha < 1.0:
        shape = "concave"
    else:
        shape = "convex"
    if alpha > 0:
        at0 = 0.0
    elif alpha == 0:
        at0 = 1.0
    else:
        at0 = math.inf
    beta = 1.0 - alpha  # adjoint of t^a is t^(1-a)
    if beta > 0:
        star0 = 0.0
    elif beta == 0:
        star0 = 1.0
    else:
        star0 = math.inf
    return DivergenceGenerator(
        name="power(%g)" % alpha, fn=lambda t: _power(np.asarray(t, dtype=float), alpha),
        shape=shape, f_at_0=at0, fstar_at_0=star0)


def sqrt_generator():
    """f(t) = sqrt(t) (concave); its Jensen bound goes the upper way."""
    gen = power_generator(0.5)
    return DivergenceGenerator(name="sqrt", fn=gen.fn, shape="concave",
                               f_at_0=0.0, fstar_at_0=0.0)


def linear_generator(a=1.0, b=0.0):
    """f(t) = a*t + b, for which every divergence is an exact moment."""
    a, b = float(a), float(b)
    return DivergenceGenerator(
        name="linear(%g,%g)" % (a, b), fn=lambda t: a * np.asarray(t, dtype=float) + b,
        shape="linear", f_at_0=b, fstar_at_0=a)


def check_shape(gen, grid=None):
    """Sampled sanity check of the declared shape.

    Not a proof; evaluates f on a logarithmic grid and inspects the signs
    of the second divided differences (plain second differences would test
    convexity in log t instead, since the grid is non-uniform).
    """
    if grid is None:
        grid = np.geomspace(1e-3, 1e3, 121)
    t = np.asarray(grid, dtype=float)
    vals = np.asarray(gen(t), dtype=float)
    d1 = (vals[1:-1] - vals[:-2]) / (t[1:-1] - t[:-2])
    d2 = (vals[2:] - vals[1:-1]) / (t[2:] - t[1:-1])
    second = (d2 - d1) / (t[2:] - t[:-2])
    tol = 1e-9 * (1.0 + np.abs(d1) + np.abs(d2)) / (t[2:] - t[:-2])
    if gen.shape == "convex":
        return bool(np.all(second >= -tol))
    if gen.shape == "concave":
        return bool(np.all(second <= tol))
    return bool(np.all(np.abs(second) <= tol))


@dataclass(frozen=True)
class ConeDensityPair:
    """Node-wise cone measure densities and weighting measure of a body.

    Attributes:
        p: density H_{n-1}/h^n per node (polar-side cone measure).
        q: density h per node (body-side cone measure).
        mu: weighting measure density against the sphere measure per node.
        ratio: p/q = 1/(s_{n-1} h^(n+1)), the reciprocal Petty ratio.
    """

    p: np.ndarray
    q: np.ndarray
    mu: np.ndarray
    ratio: np.ndarray
    body_label: str
    index: WeightIndex
    rule_name: str


def cone_densities(body, index, rule=None):
    """Evaluate both cone densities and the mu weights on the rule nodes."""
    _check_index(body, index)
    if rule is None:
        rule = default_rule(body.dim)
    g = curvature_grid(body, rule)
    n = body.dim
    q = g.h
    p = 1.0 / (g.s_top * _power(g.h, float(n)))
    ratio = 1.0 / (g.s_top * _power(g.h, float(n + 1)))
    mu = mu_density(body, index, rule)
    return ConeDensityPair(p=p, q=q, mu=mu, ratio=ratio,
                           body_label=body.label, index=index,
                           rule_name=rule.name)


def f_divergence(body, index, gen, rule=None, direction="PQ"):
    """D_f(P_K, Q_K) = integral of f(p/q) q dmu (or with roles swapped).

    Args:
        direction: "PQ" for D_f(P, Q), "QP" for D_f(Q, P).
    """
    if rule is None:
        rule = default_rule(body.dim)
    pair = cone_densities(body, index, rule)
    if direction == "PQ":
        vals = np.asarray(gen(pair.ratio), dtype=float) * pair.q
    elif direction == "QP":
        vals = np.asarray(gen(1.0 / pair.ratio), dtype=float) * pair.p
    else:
        raise ValueError("direction must be 'PQ' or 'QP', got %r" % direction)
    return integrate(rule, vals * pair.mu)


def kl_divergence(body, index, direction="PQ", rule=None, normalized=False):
    """Kullback-Leibler divergence of the cone measure pair.

    With normalized=True both measures are rescaled to probability measures
    first, which makes the result nonnegative (it vanishes exactly when the
    Petty ratio is constant, that is on centered ellipsoids).
    """
    if rule is None:
        rule = default_rule(body.dim)
    pair = cone_densities(body, index, rule)
    if direction == "PQ":
        num, den, logr = pair.p, pair.q, np.log(pair.ratio)
    elif direction == "QP":
        num, den, logr = pair.q, pair.p, -np.log(pair.ratio)
    else:
        raise ValueError("direction must be 'PQ' or 'QP', got %r" % direction)
    if not normalized:
        return integrate(rule, num * logr * pair.mu)
    mass_num = integrate(rule, num * pair.mu)
    mass_den = integrate(rule, den * pair.mu)
    raw = integrate(rule, num * logr * pair.mu)
    return raw / mass_num + math.log(mass_den / mass_num)


def hellinger(body, index, alpha, rule=None):
    """Hellinger integral of order alpha: integral of p^alpha q^(1-alpha) dmu.

    At alpha = p/(n+p) this equals the weighted L_p affine surface area;
    alpha=0 and alpha=1 give the total masses of Q and P.
    """
    alpha = float(alpha)
    if rule is None:
        rule = default_rule(body.dim)
    pair = cone_densities(body, index, rule)
    vals = _power(pair.p, alpha) * _power(pair.q, 1.0 - alpha)
    return integrate(rule, vals * pair.mu)


def renyi(body, index, alpha, rule=None):
    """Renyi divergence log(Hellinger_alpha) / (alpha - 1) for alpha != 1."""
    alpha = float(alpha)
    if alpha == 1.0:
        raise ValueError("Renyi divergence is undefined at alpha = 1")
    return math.log(hellinger(body, index, alpha, rule)) / (alpha - 1.0)


@dataclass(frozen=True)
class JensenBound:
    """Comparison of D_f(P, Q) against the Jensen value of the mass ratio.

    rhs is f(omega^inf / omega^0) * omega^0 (the literal Jensen bound for
    the q-weighted mean of the density ratio); rhs_stated is the same with
    a 1/n multiplier, recorded because the two conventions circulate.
    Concave generators satisfy lhs <= rhs, convex ones the reverse, linear
    ones equality.
    """

    lhs: float
    rhs: float
    rhs_stated: float
    gap: float
    holds: bool
    shape: str


def jensen_bound(body, index, gen, rule=None, tol=1e-10):
    """Evaluate the Jensen comparison for a generator of declared shape."""
    if rule is None:
        rule = default_rule(body.dim)
    lhs = f_divergence(body, index, gen, rule)
    om0 = weighted_asa(body, index, 0.0, rule).value
    ominf = weighted_asa(body, index, math.inf, rule).value
    arg = np.asarray([ominf / om0])
    rhs = float(np.asarray(gen(arg), dtype=float)[0]) * om0
    gap = rhs - lhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    if gen.shape == "concave":
        holds = gap >= -tol * scale
    elif gen.shape == "convex":
        holds = gap <= tol * scale
    else:
        holds = abs(gap) <= tol * scale
    return JensenBound(lhs=lhs, rhs=rhs, rhs_stated=rhs / body.dim,
                       gap=gap, holds=holds, shape=gen.shape)
