import pytest

from pdakit.gf import FieldSpec, is_prime

ORDERS = (2, 3, 4, 5, 7, 8, 9)


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    """Every supported order forms a field; checked over all element triples."""
    f = FieldSpec.for_order(q)
    els = list(f.elements())
    assert els == list(range(q))
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            assert f.add(f.sub(a, b), b) == a
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", ORDERS)
def test_no_zero_divisors(q):
    f = FieldSpec.for_order(q)
    for a in range(1, q):
        for b in range(1, q):
            assert f.mul(a, b) != 0


def test_prime_field_arithmetic():
    f5 = FieldSpec.for_order(5)
    assert f5.add(2, 4) == 1
    assert f5.mul(3, 4) == 2
    assert f5.inv(3) == 2
    assert f5.neg(2) == 3
    assert f5.sub(1, 3) == 3


def test_extension_field_f4():
    # with x^2 + x + 1: element 2 is x, so x*x = x + 1 = 3 and x*(x+1) = 1
    f4 = FieldSpec.for_order(4)
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1
    assert f4.inv(2) == 3
    assert f4.inv(3) == 2
    assert f4.add(2, 3) == 1
    assert f4.neg(3) == 3  # characteristic 2


def test_extension_field_f8():
    # with x^3 + x + 1: 2 is x, 4 is x^2, so x * x^2 = x + 1 = 3
    f8 = FieldSpec.for_order(8)
    assert f8.mul(2, 2) == 4
    assert f8.mul(2, 4) == 3
    for a in range(1, 8):
        assert f8.mul(a, f8.inv(a)) == 1


def test_extension_field_f9():
    # with x^2 + 1: 3 is x, so x*x = -1 = 2
    f9 = FieldSpec.for_order(9)
    assert f9.mul(3, 3) == 2
    assert f9.neg(1) == 2
    assert f9.add(3, 3) == 6


def test_inverse_of_zero_rejected():
    for q in ORDERS:
        with pytest.raises(ZeroDivisionError):
            FieldSpec.for_order(q).inv(0)


@pytest.mark.parametrize("q", (0, 1, 6, 10, 12, 15, -4))
def test_unsupported_orders_rejected(q):
    with pytest.raises(ValueError):
        FieldSpec.for_order(q)


def test_reducible_modulus_rejected():
    # x^2 = x * x is reducible over F_2
    with pytest.raises(ValueError, match="reducible"):
        FieldSpec(4, 2, 2, (0, 0, 1))
    # x^2 + 2 = (x+1)(x+2) over F_3
    with pytest.raises(ValueError, match="reducible"):
        FieldSpec(9, 3, 2, (2, 0, 1))


def test_malformed_spec_rejected():
    with pytest.raises(ValueError):
        FieldSpec(4, 4, 1, (0, 1))  # characteristic not prime
    with pytest.raises(ValueError):
        FieldSpec(8, 2, 2, (1, 1, 1))  # q != p^d
    with pytest.raises(ValueError):
        FieldSpec(4, 2, 2, (1, 1, 2))  # not monic
    with pytest.raises(ValueError):
        FieldSpec(4, 2, 2, (3, 1, 1))  # coefficient out of range
    with pytest.raises(ValueError):
        FieldSpec(4, 2, 2, (1, 1))  # wrong degree


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
