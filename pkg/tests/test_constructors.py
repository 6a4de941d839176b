import numpy as np
import pytest

from sameorder import (
    AmbiguousCenter,
    BadParameter,
    InvalidAction,
    affine_cyclic,
    alternating,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frobenius_field,
    frobenius_inversion,
    from_cayley_table,
    generalized_quaternion,
    holomorph_cyclic,
    order_spectrum,
    same_order_type,
    semidihedral,
    semidirect_product,
    sl2,
    symmetric,
)


def spectrum(group):
    return order_spectrum(group).counts


def tau(group):
    return same_order_type(order_spectrum(group))


def test_every_constructor_output_passes_full_validation():
    samples = [
        cyclic(1),
        cyclic(12),
        dihedral(16),
        generalized_quaternion(32),
        semidihedral(16),
        symmetric(4),
        alternating(5),
        sl2(3),
        elementary_abelian(3, 2),
        direct_product(cyclic(7), generalized_quaternion(8)),
        frobenius_inversion(3, 2, "c4"),
        frobenius_field(2, 2, 3),
        holomorph_cyclic(8),
        central_product(dihedral(8), dihedral(16)),
        affine_cyclic(5, 2),
    ]
    for g in samples:
        from_cayley_table(g.table, g.label, check_level="full")


def test_cyclic():
    assert cyclic(1).size == 1
    assert tau(cyclic(8)) == (1, 2, 4)
    assert tau(cyclic(12)) == (1, 2, 4)
    with pytest.raises(BadParameter):
        cyclic(0)
    with pytest.raises(BadParameter):
        cyclic(513)


def test_dihedral():
    assert spectrum(dihedral(6)) == spectrum(symmetric(3))
    assert tau(dihedral(6)) == (1, 2, 3)
    d16 = spectrum(dihedral(16))
    assert d16[2] == 9 and d16[4] == 2
    d8 = spectrum(dihedral(8))
    assert d8[2] == 5 and d8[4] == 2
    for bad in (2, 3, 7, 514):
        with pytest.raises(BadParameter):
            dihedral(bad)


def test_generalized_quaternion():
    assert tau(generalized_quaternion(8)) == (1, 6)
    assert tau(generalized_quaternion(16)) == (1, 4, 10)
    for k in (3, 4, 5, 6):
        g = generalized_quaternion(2**k)
        assert spectrum(g)[4] == 2 * (1 + 2 ** (k - 2))
        assert spectrum(g)[2] == 1  # unique involution
    for bad in (4, 12, 24, 1024):
        with pytest.raises(BadParameter):
            generalized_quaternion(bad)


def test_semidihedral():
    sd16 = spectrum(semidihedral(16))
    assert sd16[2] == 5 and sd16[4] == 6
    assert sum(spectrum(semidihedral(32)).values()) == 32
    for bad in (8, 24, 1024):
        with pytest.raises(BadParameter):
            semidihedral(bad)


def test_symmetric_and_alternating():
    assert tau(symmetric(3)) == (1, 2, 3)
    assert tau(alternating(5)) == (1, 15, 20, 24)
    assert symmetric(1).size == 1
    assert alternating(2).size == 1
    assert alternating(4).size == 12
    with pytest.raises(BadParameter):
        symmetric(0)
    with pytest.raises(BadParameter):
        symmetric(6)  # 720 elements exceeds the table cap
    with pytest.raises(BadParameter):
        alternating(8)


def test_sl2():
    g = sl2(3)
    assert g.size == 24
    assert tau(g) == (1, 6, 8)
    assert spectrum(sl2(2)) == spectrum(symmetric(3))
    # the identity matrix (1,0,0,1) is the group identity
    elems = [
        (a, b, c, d)
        for a in range(3)
        for b in range(3)
        for c in range(3)
        for d in range(3)
        if (a * d - b * c) % 3 == 1
    ]
    assert elems[g.identity] == (1, 0, 0, 1)
    with pytest.raises(BadParameter):
        sl2(4)
    with pytest.raises(BadParameter):
        sl2(11)


def test_elementary_abelian():
    assert spectrum(elementary_abelian(2, 1)) == {1: 1, 2: 1}
    assert tau(elementary_abelian(3, 2)) == (1, 8)
    assert spectrum(elementary_abelian(2, 3))[2] == 7
    with pytest.raises(BadParameter):
        elementary_abelian(4, 2)
    with pytest.raises(BadParameter):
        elementary_abelian(2, 10)


def test_direct_product():
    g = direct_product(cyclic(7), generalized_quaternion(8))
    assert g.size == 56
    assert tau(g) == (1, 6, 36)
    assert spectrum(direct_product(cyclic(2), symmetric(3))) == {1: 1, 2: 7, 3: 2, 6: 2}
    assert spectrum(direct_product(cyclic(1), symmetric(3))) == spectrum(symmetric(3))
    with pytest.raises(BadParameter):
        direct_product(cyclic(32), cyclic(32))


def test_semidirect_trivial_action_matches_direct_product():
    n, h = cyclic(5), cyclic(4)
    trivial = [list(range(5)) for _ in range(4)]
    assert np.array_equal(
        semidirect_product(n, h, trivial).table, direct_product(n, h).table
    )


def test_semidirect_inversion_gives_s3():
    n = cyclic(3)
    action = [[0, 1, 2], [0, 2, 1]]
    g = semidirect_product(n, cyclic(2), action)
    assert spectrum(g) == {1: 1, 2: 3, 3: 2}


def test_semidirect_double_inversion_frobenius():
    n = elementary_abelian(3, 2)
    action = [list(range(9)), [int(v) for v in n.inverses]]
    g = semidirect_product(n, cyclic(2), action)
    assert spectrum(g)[3] == 8


def test_invalid_actions_rejected():
    n, h = cyclic(4), cyclic(2)
    with pytest.raises(InvalidAction, match="permutation"):
        semidirect_product(n, h, [[0, 1, 2, 3], [0, 1, 1, 3]])
    with pytest.raises(InvalidAction, match="automorphism"):
        semidirect_product(n, h, [[0, 1, 2, 3], [1, 2, 3, 0]])
    with pytest.raises(InvalidAction, match="trivially"):
        semidirect_product(n, h, [[0, 3, 2, 1], [0, 1, 2, 3]])
    inv5 = [0, 4, 3, 2, 1]
    with pytest.raises(InvalidAction, match="homomorphism"):
        semidirect_product(cyclic(5), cyclic(4), [list(range(5)), inv5, inv5, list(range(5))])
    with pytest.raises(InvalidAction, match="shape"):
        semidirect_product(n, h, [[0, 1, 2, 3]])


def test_frobenius_inversion():
    assert tau(frobenius_inversion(3, 1, "c2")) == (1, 2, 3)
    g = frobenius_inversion(3, 1, "c4")
    assert g.size == 12
    assert spectrum(g) == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}
    assert tau(g) == (1, 2, 6)
    d10 = spectrum(frobenius_inversion(5, 1, "c2"))
    assert d10[2] == 5 and d10[5] == 4
    with pytest.raises(BadParameter):
        frobenius_inversion(2, 1, "c2")
    with pytest.raises(BadParameter):
        frobenius_inversion(3, 1, "c8")
    with pytest.raises(BadParameter):
        frobenius_inversion(3, 5, "c4")  # 972 elements


def test_frobenius_field():
    assert spectrum(frobenius_field(2, 2, 3)) == {1: 1, 2: 3, 3: 8}
    g = frobenius_field(7, 1, 3)
    assert spectrum(g)[7] == 6 and spectrum(g)[3] == 14
    assert spectrum(frobenius_field(2, 4, 5))[2] == 15
    with pytest.raises(BadParameter):
        frobenius_field(3, 1, 2)  # even complement order is not in the family
    with pytest.raises(BadParameter):
        frobenius_field(3, 1, 5)  # 5 does not divide 3 - 1
    with pytest.raises(BadParameter):
        frobenius_field(2, 5, 31)  # 992 elements


@pytest.mark.parametrize("p,t,q", [(2, 2, 3), (2, 4, 5), (7, 1, 3), (5, 2, 3), (3, 3, 13)])
def test_frobenius_field_action_is_fixed_point_free(p, t, q):
    g = frobenius_field(p, t, q)
    orders = [g.element_order(x) for x in range(g.size)]
    # free action: everything outside the kernel has order exactly q
    assert sorted(set(orders)) == sorted([1, p, q])
    assert orders.count(q) == (q - 1) * p**t


def test_holomorph_cyclic():
    hol8 = holomorph_cyclic(8)
    assert hol8.size == 32
    assert tau(hol8) == (1, 8, 15)
    assert spectrum(holomorph_cyclic(3)) == spectrum(symmetric(3))
    assert holomorph_cyclic(2).size == 2
    assert holomorph_cyclic(1).size == 1
    with pytest.raises(BadParameter):
        holomorph_cyclic(65)
    with pytest.raises(BadParameter):
        holomorph_cyclic(33)  # 660 elements


def test_central_product():
    g = central_product(dihedral(8), dihedral(16))
    assert g.size == 64
    assert tau(g) == (1, 16, 31)
    assert central_product(generalized_quaternion(8), generalized_quaternion(8)).size == 32
    assert central_product(cyclic(6), dihedral(8)).size == 24
    with pytest.raises(AmbiguousCenter):
        central_product(cyclic(3), dihedral(8))  # no involution at all
    with pytest.raises(AmbiguousCenter):
        central_product(elementary_abelian(2, 2), dihedral(8))  # three involutions


def test_affine_cyclic():
    assert spectrum(affine_cyclic(3, 2)) == spectrum(symmetric(3))
    assert spectrum(affine_cyclic(5, 2)) == {1: 1, 2: 5, 4: 10, 5: 4}
    assert np.array_equal(affine_cyclic(7, 1).table, cyclic(7).table)
    with pytest.raises(BadParameter):
        affine_cyclic(6, 2)
    with pytest.raises(BadParameter):
        affine_cyclic(257, 256)  # order-2 unit but 514 elements


def test_padded_witnesses_form_the_expected_progressions():
    for base in (holomorph_cyclic(8), central_product(dihedral(8), dihedral(16))):
        g = base
        for _ in range(3):
            n = g.size
            assert tau(g) == (1, n // 4, n // 2 - 1)
            if 2 * n > 512:
                break
            g = direct_product(cyclic(2), g)


def test_product_orders_multiply():
    a, b = symmetric(3), cyclic(9)
    assert direct_product(a, b).size == 54
    assert central_product(dihedral(8), dihedral(16)).size == 8 * 16 // 2
