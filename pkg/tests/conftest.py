import numpy as np
import pytest

import curvfun as cf


@pytest.fixture(scope="session")
def rule2():
    return cf.default_rule(2)


@pytest.fixture(scope="session")
def rule3():
    return cf.default_rule(3)


@pytest.fixture(scope="session")
def ball2():
    return cf.make_ball(2)


@pytest.fixture(scope="session")
def ball3():
    return cf.make_ball(3)


@pytest.fixture(scope="session")
def ellipse21():
    return cf.make_ellipsoid(2, cf.ellipsoid_matrix([2.0, 1.0]), label="ellipse21")


@pytest.fixture(scope="session")
def ellipse31():
    return cf.make_ellipsoid(2, cf.ellipsoid_matrix([3.0, 1.0]), label="ellipse31")


@pytest.fixture(scope="session")
def ellipsoid211():
    return cf.make_ellipsoid(3, cf.ellipsoid_matrix([2.0, 1.0, 1.0]), label="ellipsoid211")


@pytest.fixture(scope="session")
def pball02():
    return cf.make_perturbed_ball(2, mode=3, eps=0.02, label="pball02")


@pytest.fixture(scope="session")
def pball05():
    return cf.make_perturbed_ball(2, mode=3, eps=0.05, label="pball05")


@pytest.fixture(scope="session")
def pball10():
    return cf.make_perturbed_ball(2, mode=3, eps=0.1, label="pball10")


@pytest.fixture(scope="session")
def pball3d():
    return cf.make_perturbed_ball(3, mode=3, eps=0.02, label="pball3d")


@pytest.fixture(scope="session")
def corpus2(ball2, ellipse21, ellipse31, pball02, pball05):
    return [ball2, ellipse21, ellipse31, pball02, pball05]


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260819)
