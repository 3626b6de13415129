import pytest
from sympy.ntheory import legendre_symbol, sqrt_mod
from hpfg.FiniteField.ff_core import (
    PrimeModulus,
    FieldElement,
    as_modulus,
    add,
    sub,
    mul,
    neg,
    inverse,
    power,
    legendre,
    sqrt_mod_p,
)
from hpfg.Util.param_util import ConfigError, ModulusMismatchError


class TestPrimeModulus(object):
    def test_valid(self):
        modulus = PrimeModulus(7)
        assert modulus.p == 7
        assert int(modulus) == 7
        assert modulus == PrimeModulus(7)
        assert as_modulus(modulus) is modulus
        assert as_modulus(11) == PrimeModulus(11)

    @pytest.mark.parametrize("p", [2, 1, 0, -7, 9, 15, 2**31 + 11, "seven"])
    def test_invalid(self, p):
        with pytest.raises(ConfigError):
            PrimeModulus(p)

    def test_p3_admitted(self):
        assert PrimeModulus(3).p == 3

    def test_quadratic_roots(self):
        modulus = PrimeModulus(7)
        # (X - 2)(X - 5) = X^2 - 7X + 10 = X^2 + 3
        assert modulus.quadratic_roots(1, 0, 3) == [2, 5]
        assert modulus.quadratic_roots(1, 0, 1) == []
        assert modulus.quadratic_roots(1, -4, 4) == [2]
        with pytest.raises(ValueError):
            modulus.quadratic_roots(0, 1, 1)


def test_field_ops():
    a, b = FieldElement(3, 5), FieldElement(4, 5)
    assert add(a, b) == 2
    assert add(a, b).value == 2
    assert sub(a, b) == FieldElement(4, 5)
    assert mul(FieldElement(0, 5), b) == 0
    assert neg(FieldElement(0, 5)) == 0
    assert neg(a) == 2
    assert a + 4 == 2
    assert 4 + a == 2
    assert 1 - a == 3
    assert (a / b) * b == a
    assert 1 / a == inverse(a)
    assert FieldElement(-1, 5).value == 4


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        FieldElement(1, 5) + FieldElement(1, 7)
    with pytest.raises(ModulusMismatchError):
        mul(FieldElement(2, 5), FieldElement(2, 7))
    with pytest.raises(ModulusMismatchError):
        PrimeModulus(5).element(FieldElement(1, 7))


def test_inverse():
    assert inverse(FieldElement(3, 7)) == 5
    with pytest.raises(ZeroDivisionError):
        inverse(FieldElement(0, 7))
    with pytest.raises(ZeroDivisionError):
        FieldElement(3, 7) / 0
    for p in [3, 5, 7, 11, 13, 101]:
        for a in range(1, p):
            element = FieldElement(a, p)
            assert element * inverse(element) == 1


def test_power():
    p = 13
    for a in range(1, p):
        element = FieldElement(a, p)
        assert power(element, 0) == 1
        assert power(element, p - 1) == 1
        assert power(element, -1) == inverse(element)
        assert power(element, -3) * power(element, 3) == 1
        assert element**5 == element * element * element * element * element
    assert power(FieldElement(2, 101), 100) == 1
    assert power(FieldElement(0, 7), 3) == 0
    with pytest.raises(ZeroDivisionError):
        power(FieldElement(0, 7), -1)


def test_legendre():
    assert legendre(FieldElement(2, 7)) == 1
    assert legendre(FieldElement(3, 7)) == -1
    assert legendre(FieldElement(0, 7)) == 0
    for p in [3, 5, 7, 13, 17, 101]:
        residues = [a for a in range(1, p) if legendre(FieldElement(a, p)) == 1]
        assert len(residues) == (p - 1) // 2
        for a in range(1, p):
            assert legendre(FieldElement(a, p)) == legendre_symbol(a, p)


def test_legendre_multiplicative():
    p = 23
    for a in range(1, p):
        for b in range(1, p):
            ea, eb = FieldElement(a, p), FieldElement(b, p)
            assert legendre(ea * eb) == legendre(ea) * legendre(eb)


def test_sqrt_mod_p():
    assert sqrt_mod_p(FieldElement(2, 7)) == [3, 4]
    assert sqrt_mod_p(FieldElement(0, 7)) == [0]
    assert sqrt_mod_p(FieldElement(3, 7)) == []
    # both branches: p = 3 mod 4 and p = 1 mod 4 (17 and 97 need several Tonelli-Shanks steps)
    for p in [3, 5, 7, 11, 13, 17, 41, 97, 101]:
        for a in range(p):
            element = FieldElement(a, p)
            found = sqrt_mod_p(element)
            assert element in [r * r for r in found] or found == []
            assert element in sqrt_mod_p(element * element)
            assert [r.value for r in found] == sorted(sqrt_mod(a, p, all_roots=True) or [])


def test_sqrt_large_prime():
    p = 2**31 - 1
    element = FieldElement(123456789, p)
    square = element * element
    assert element in sqrt_mod_p(square)
    p = 998244353
    element = FieldElement(31, p)
    assert element in sqrt_mod_p(element * element)


def test_ordering_and_hash():
    a, b = FieldElement(2, 11), FieldElement(9, 11)
    assert a < b
    assert sorted([b, a]) == [a, b]
    assert len({a, FieldElement(13, 11)}) == 1
    assert int(b) == 9
    assert not FieldElement(0, 11)
    assert repr(a) == "FieldElement(2, 11)"


if __name__ == "__main__":
    pytest.main()
