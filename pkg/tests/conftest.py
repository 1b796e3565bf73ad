import pytest

from hopfcyc import (
    GroupLike,
    counit_character,
    cyclic_group,
    group_algebra,
    regular_comodule_algebra,
    scalar_coefficients,
    sweedler_h4,
    symmetric_group,
    trivial_hopf,
    unit_group_like,
)
from hopfcyc.corpus import get_bicrossed, get_hopf, sweedler_sign_character


@pytest.fixture(scope="session")
def H4():
    return sweedler_h4()


@pytest.fixture(scope="session")
def H4_eps(H4):
    return counit_character(H4)


@pytest.fixture(scope="session")
def H4_one(H4):
    return unit_group_like(H4)


@pytest.fixture(scope="session")
def H4_g(H4):
    return GroupLike(H4, H4.space.basis_vector(1), name="g")


@pytest.fixture(scope="session")
def H4_sgn(H4):
    return sweedler_sign_character(H4)


@pytest.fixture(scope="session")
def KZ2():
    return get_hopf("kZ2")


@pytest.fixture(scope="session")
def KZ3():
    return get_hopf("kZ3")


@pytest.fixture(scope="session")
def KS3():
    return get_hopf("kS3")


@pytest.fixture(scope="session")
def bicrossed_f3():
    return get_bicrossed("bicrossed-s3-f3")


@pytest.fixture(scope="session")
def bicrossed_f2():
    return get_bicrossed("bicrossed-s3-f2")


@pytest.fixture(scope="session")
def trivial_instance():
    """(H, A, M) for the smallest comodule-algebra complex."""
    from hopfcyc import trivial_comodule_algebra

    Hk = trivial_hopf()
    A = trivial_comodule_algebra(Hk)
    M = scalar_coefficients(Hk, counit_character(Hk), unit_group_like(Hk))
    return Hk, A, M
