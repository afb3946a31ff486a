import pytest
from hypothesis import given, settings, strategies as st

from multischur.exactalg import Scalar, variables
from multischur.shapes import Partition, negate_alphabet, transpose
from multischur.supersym import e_elem, h_complete, h_super, p_power, supersym_schur

x1, x2, x3 = variables("x1 x2 x3")
y1, y2 = variables("y1 y2")


def test_h_complete_small():
    assert h_complete(0, (x1, x2)) == Scalar.one()
    assert h_complete(1, (x1, x2)) == x1 + x2
    assert h_complete(2, (x1, x2)) == x1**2 + x1 * x2 + x2**2
    assert h_complete(2, ()) == Scalar.zero()
    assert h_complete(-1, (x1,)) == Scalar.zero()


def test_e_elem_small():
    assert e_elem(0, (x1, x2)) == Scalar.one()
    assert e_elem(1, (x1, x2)) == x1 + x2
    assert e_elem(2, (x1, x2)) == x1 * x2
    assert e_elem(3, (x1, x2)) == Scalar.zero()


def test_h_is_symmetric_in_the_alphabet():
    assert h_complete(3, (x1, x2, x3)) == h_complete(3, (x3, x1, x2))
    assert e_elem(2, (x1, x2, x3)) == e_elem(2, (x2, x3, x1))


@given(st.integers(min_value=0, max_value=5))
@settings(max_examples=12, deadline=None)
def test_h_one_letter_recurrence(n):
    # h_n(a, b) = h_n(a) + b h_{n-1}(a, b)
    a = (x1, x2)
    ab = (x1, x2, x3)
    assert h_complete(n, ab) == h_complete(n, a) + x3 * h_complete(n - 1, ab)


def test_h_super_reduces_to_h_and_e():
    assert h_super(2, (x1, x2), ()) == h_complete(2, (x1, x2))
    # h_n(0/y) = e_n(-y)
    assert h_super(2, (), (y1, y2)) == y1 * y2
    assert h_super(1, (), (y1, y2)) == -(y1 + y2)
    assert h_super(2, (), (y1, y2)) == e_elem(2, negate_alphabet((y1, y2)))


def test_h_super_signs():
    # h_i(x/y) = sum_k (-1)^k h_{i-k}(x) e_k(y)
    want = h_complete(2, (x1, x2)) - h_complete(1, (x1, x2)) * e_elem(1, (y1,))
    assert h_super(2, (x1, x2), (y1,)) == want
    assert h_super(0, (x1,), (y1,)) == Scalar.one()
    assert h_super(-2, (x1,), (y1,)) == Scalar.zero()


def test_h_super_cancellation():
    # a letter present on both sides drops out
    assert h_super(3, (x1, x2), (x2,)) == h_complete(3, (x1,))


@given(st.integers(min_value=0, max_value=6))
@settings(max_examples=14, deadline=None)
def test_h_super_convolution(n):
    # splitting both alphabets splits h as a convolution
    lhs = h_super(n, (x1, x2), (y1, y2))
    rhs = Scalar.zero()
    for i in range(n + 1):
        rhs = rhs + h_super(i, (x1,), (y1,)) * h_super(n - i, (x2,), (y2,))
    assert lhs == rhs


def test_p_power():
    assert p_power(2, (x1, x2), (y1,)) == x1**2 + x2**2 - y1**2
    with pytest.raises(ValueError):
        p_power(0, (x1,), ())


def test_supersym_schur_single_row_and_column():
    assert supersym_schur(Partition((2,)), (x1, x2), ()) == h_complete(2, (x1, x2))
    assert supersym_schur(Partition((1, 1)), (x1, x2), ()) == x1 * x2
    assert supersym_schur(Partition(()), (x1,), (y1,)) == Scalar.one()


def test_supersym_schur_vanishing():
    # too many rows for a pure x alphabet
    assert supersym_schur(Partition((1, 1)), (x1,), ()) == Scalar.zero()
    assert supersym_schur(Partition((1, 1, 1)), (x1, x2), ()) == Scalar.zero()
    # but a y letter unlocks the extra row
    assert supersym_schur(Partition((1, 1)), (x1,), (y1,)) != Scalar.zero()


def test_supersym_schur_transpose_duality():
    for lam in [Partition((1,)), Partition((2,)), Partition((2, 1)), Partition((3, 1))]:
        sign = Scalar.from_rational((-1) ** lam.weight)
        lhs = supersym_schur(lam, (x1, x2), (y1,))
        rhs = sign * supersym_schur(transpose(lam), (y1,), (x1, x2))
        assert lhs == rhs
