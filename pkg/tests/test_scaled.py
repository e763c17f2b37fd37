import math

import numpy as np
from hypothesis import given, strategies as st

from tracemaps.scaled import ScaledMatrix, ScaledScalar

finite = st.floats(-1e6, 1e6, allow_nan=False)


@given(finite, finite)
def test_arithmetic_matches_float(a, b):
    A, B = ScaledScalar(a), ScaledScalar(b)
    assert math.isclose(float(A + B), a + b, rel_tol=1e-12, abs_tol=1e-9)
    assert math.isclose(float(A - B), a - b, rel_tol=1e-12, abs_tol=1e-9)
    assert math.isclose(float(A * B), a * b, rel_tol=1e-12, abs_tol=1e-300)


@given(finite.filter(lambda v: v != 0))
def test_normalised(a):
    m = ScaledScalar(a).mantissa
    assert 1.0 <= abs(m) < 2.0


def test_huge_values():
    x = ScaledScalar(1.5, 10**7)
    y = x * x
    assert y.exponent >= 2 * 10**7
    assert math.isclose(y.log(), 2 * (math.log(1.5) + 10**7 * math.log(2)))
    assert float(y) == math.inf
    assert (x + ScaledScalar(1.0)) == x


def test_zero():
    z = ScaledScalar(0.0)
    assert z.sign == 0 and float(z + 3) == 3.0


def test_matrix_power():
    M = np.array([[1.1, 0.3], [0.2, 0.9]])
    S = ScaledMatrix(M) ** 7
    assert np.allclose(S.to_array(), np.linalg.matrix_power(M, 7))
    assert math.isclose(S.trace().log(), math.log(np.trace(np.linalg.matrix_power(M, 7))))
