import pytest

from nhv import ktheory as kt
from nhv.ktheory import K0Vector, VermaVector
from nhv.parser import parse_expr

PRIMES = [3, 5, 7]


@pytest.mark.parametrize("p", PRIMES)
def test_verma_model_relations(p):
    assert kt.verify_uqsl2(p, "Verma").passed


@pytest.mark.parametrize("p", PRIMES)
def test_verma_model_other_weights(p):
    for hw in (kt.lam(p, 1, 0), kt.lam(p, 1, 3), kt.lam(p, 2, -1)):
        assert kt.verify_uqsl2(p, "Verma", hw).passed


@pytest.mark.parametrize("p", PRIMES)
def test_k0_model_only_the_commutator_is_off(p):
    rep = kt.verify_uqsl2(p, "K0")
    bad = {c.name.split(" on ")[0] for c in rep.failures()}
    assert bad == {"EF - FE = (K - K^-1)/(q - q^-1)"}
    assert kt.rescaled_relation_report(p).passed


@pytest.mark.parametrize("p", PRIMES)
def test_iso_on_f_and_k(p):
    rep = kt.verify_iso(p)
    for c in rep.checks:
        if c.name.startswith(("Phi(F", "Phi(K", "Phi invertible")):
            assert c.equal, c.name


@pytest.mark.parametrize("p", PRIMES)
def test_k0_e_is_verma_e_times_q_minus_qinv(p):
    hw = kt.default_hw(p)
    s = kt.q_minus_qinv(p)
    for r in range(p):
        b = K0Vector.basis(p, r)
        lhs = kt.iso_map(kt.k0_E(b))
        rhs = kt.verma_E(kt.iso_map(b), hw).scale(s)
        assert lhs == rhs


def test_k_eigenvalues():
    p = 5
    v = K0Vector.basis(p, 2)
    assert kt.k0_K(v) == v.scale(kt.lam(p, 1, -5))
    assert kt.k0_K(kt.k0_K(v), -1) == v


def test_f_shifts_and_kills_top():
    p = 3
    assert kt.k0_F(K0Vector.basis(p, 0)) == K0Vector.basis(p, 1)
    assert kt.k0_F(K0Vector.basis(p, p - 1)) == K0Vector.zero(p)


E_CLASSES = {
    (3, 1): "-q^3*l - q*l - q*l^-1",
    (3, 2): "-q*l - q^3*l^-1 - q*l^-1",
    (5, 1): "-q^7*l - q^5*l - q^3*l - q*l - q*l^-1",
    (5, 2): "-q^5*l - q^3*l - q*l - q^3*l^-1 - q*l^-1",
    (5, 3): "-q^3*l - q*l - q^5*l^-1 - q^3*l^-1 - q*l^-1",
    (5, 4): "-q*l - q^7*l^-1 - q^5*l^-1 - q^3*l^-1 - q*l^-1",
}


@pytest.mark.parametrize("p,n", sorted(E_CLASSES))
def test_e_class_values(p, n):
    cls, rep = kt.categorified_E_class(n, p)
    assert rep.passed
    assert cls.to_text() == E_CLASSES[(p, n)]
    # the same class written as [n](l q^-n - l^-1 q^n) in the parser
    qn = "+".join(f"q^{n - 1 - 2 * k}" for k in range(n))
    assert cls == parse_expr(f"({qn})*(l*q^-{n} - l^-1*q^{n})", 0, "k0", p=p)


@pytest.mark.parametrize("p", [7])
def test_e_class_p7(p):
    for n in range(1, p):
        cls, rep = kt.categorified_E_class(n, p)
        assert rep.passed
        assert cls == kt.e_coefficient(p, n)


def test_e_class_rejects_bad_n():
    with pytest.raises(ValueError):
        kt.categorified_E_class(3, 3)


@pytest.mark.parametrize("n,p", [(1, 3), (2, 3), (2, 5), (3, 5)])
def test_d_matrix_consistency(n, p):
    assert kt.d_matrix_consistency(n, p, 4).passed


def test_block_weights():
    assert [kt.block_weight(3, j) for j in (1, 2, 3)] == [2, 0, -2]


def test_vector_text():
    p = 3
    v = K0Vector.basis(p, 1) + K0Vector.basis(p, 2).scale(kt.lam(p, 1, 0))
    assert v.to_text() == "A1 + (l)*A2"
    assert VermaVector.basis(p, 0).to_text() == "m0"
    assert parse_expr("A1 + l*A2", 0, "k0", p=p) == v
