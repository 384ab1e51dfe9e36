from collections import Counter

import pytest

from nhv import sl2rep
from nhv.sl2rep import GradedCharacter, OmegaMonomialOrder


def test_omega_order():
    o = OmegaMonomialOrder(3, 2)
    assert o.subsets == [(1, 2), (1, 3), (2, 3)]
    assert o.minimal() == (1, 2) and o.maximal() == (2, 3)
    assert o.rank(0b110) == 3


def test_characters():
    assert sl2rep.conabla_character(6) == GradedCharacter({0: 1, 2: 1, 4: 1, 6: 1})
    # [n]! up to a shift: nh_2 has T-degrees 0 and -2
    assert sl2rep.nilcoxeter_character(3) == GradedCharacter({0: 1, -2: 2, -4: 2, -6: 1})
    ch = sl2rep.conabla_tensor_character(2, 4)
    assert ch == GradedCharacter({0: 1, 2: 2, 4: 3})


def test_conabla_action_is_sl2():
    # [e, f] = h on the tensor power model, checked on a few monomials
    def app(op, vec):
        out = Counter()
        for k, c in vec.items():
            for k2, c2 in sl2rep.conabla_action(op, k).items():
                out[k2] += c * c2
        return {k: v for k, v in out.items() if v}

    for b in [(0, 0), (1, 0), (2, 3), (0, 5)]:
        v = {b: 1}
        ef = Counter(app("e", app("f", v)))
        ef.subtract(app("f", app("e", v)))
        assert {k: c for k, c in ef.items() if c} == app("h", v)


@pytest.mark.parametrize("n", [1, 2])
def test_sl2_suite(n):
    assert sl2rep.verify_sl2_suite(n, 8, words=3).passed


def test_h_on_T_has_negative_sign():
    rep = sl2rep.an_relations_check(2, words=2)
    assert rep.passed
    assert any(c.name == "h(T1)" and c.rhs == "-2*T1" for c in rep.checks)


@pytest.mark.parametrize("n,m", [(1, 0), (1, 1), (2, 1), (3, 2)])
def test_filtrations(n, m):
    assert sl2rep.filtration_check(n, m, 8).passed
    assert sl2rep.an_filtration_check(n, m, 6).passed


def test_weyl_dimension():
    assert sl2rep.weyl_dimension((4,)) == 5
    assert sl2rep.weyl_dimension((1, 1)) == 8
    assert sl2rep.weyl_dimension((2, 0)) == 6


def test_highest_weights_n2():
    hws, dim = sl2rep.highest_weights(2, 2)
    assert dim == 14
    assert hws == Counter({(1,): 1, (2,): 1, (3,): 1, (4,): 1})
    hws, dim = sl2rep.highest_weights(2, 4)
    assert dim == 18
    assert sorted(hws) == [(2,), (3,), (4,), (5,)]


def test_minus_reading():
    assert sl2rep.minus_reading_matches(2, 6)
    scan = sl2rep.conjecture_scan(2, 4)
    assert scan.status == "info"
    assert all(c.equal for c in scan.checks if "minus" in c.name or "dimension" in c.name)
    assert not all(c.equal for c in scan.checks if "plus" in c.name)


def test_n3_scan_runs():
    scan = sl2rep.conjecture_scan(3, 2)
    assert all(c.equal for c in scan.checks if "dimension" in c.name)


def test_bad_m():
    with pytest.raises(ValueError):
        sl2rep.filtration_check(2, 3)
