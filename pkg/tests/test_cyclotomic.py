import cmath
from fractions import Fraction

import pytest

from zesting.cyclotomic import CycNum, as_root_of_unity, cyc, parse, root_of_unity, sqrt_int


def close(a, b):
    return abs(complex(a) - complex(b)) < 1e-9


def test_roots_canonical_form():
    z = root_of_unity(9)
    assert z ** 9 == 1
    assert sum((z ** k for k in range(9)), CycNum.from_rational(0)) == 0
    # promotion does not change equality
    assert root_of_unity(3) == root_of_unity(18, 6)
    assert root_of_unity(4) == root_of_unity(8, 2)


def test_arith_matches_complex():
    a = root_of_unity(18, 3) * 2 - 1
    b = root_of_unity(8, 5) + Fraction(1, 3)
    for val, ref in [(a + b, complex(a) + complex(b)), (a * b, complex(a) * complex(b)),
                     (a / b, complex(a) / complex(b)), (a - b, complex(a) - complex(b))]:
        assert close(val, ref)


def test_conjugate_and_galois():
    z = root_of_unity(7, 2)
    assert z.conjugate() == z ** -1
    assert z.galois(3) == root_of_unity(7, 6)
    assert close((z + 1).conjugate(), complex(z + 1).conjugate())


def test_as_root_of_unity():
    assert as_root_of_unity(root_of_unity(12, 5)) == (12, 5)
    assert as_root_of_unity(-root_of_unity(3)) == (6, 5)
    assert as_root_of_unity(root_of_unity(3) + 1) == (6, 1)
    assert as_root_of_unity(CycNum.from_rational(2)) is None
    assert root_of_unity(18, 4).turns() == Fraction(2, 9)


@pytest.mark.parametrize("m", [2, 3, 5, 6, 8, 12, 24])
def test_sqrt_int(m):
    r = sqrt_int(m)
    assert r * r == m
    assert close(r, m ** 0.5)


def test_parse_round_trip():
    for v in [root_of_unity(9, 7), sqrt_int(3) - 2, CycNum.from_rational(Fraction(-5, 2)), root_of_unity(16, 15)]:
        assert parse(str(v)) == v
        assert cyc(v.to_json()) == v
    assert parse("zeta(3)^2") == root_of_unity(3, 2)


def test_inverse_exact():
    x = sqrt_int(2) + root_of_unity(5)
    assert x * x.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        CycNum.from_rational(0).inverse()


def test_hash_consistent_with_eq():
    assert hash(root_of_unity(3)) == hash(root_of_unity(6, 2))
    assert len({root_of_unity(4), root_of_unity(8, 2), root_of_unity(12, 3)}) == 1
