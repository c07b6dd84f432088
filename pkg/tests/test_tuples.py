"""Tuple validation and the cocycle spaces H, E, W."""

import random

import pytest

from helpers import rand_h_elem, rand_tuple, unit_scalar_tuple
from parcoh.cyclo import CycloField
from parcoh.errors import ProductNotOne, TooFewPoints, TupleError
from parcoh.linalg import Matrix, vec_mat
from parcoh.tuples import (MatTuple, common_fixed_space, dual_tuple, e_space,
                           h_space, validate_tuple, w_space)


def _scalar(field, x):
    return Matrix.scalar(field, 1, x)


def test_validate_accepts_good_tuple():
    F = CycloField(3)
    z = F.zeta()
    g = validate_tuple([_scalar(F, z)] * 3)  # z^3 = 1
    assert g.r == 3 and g.dim == 1


def test_validate_rejects_bad_product():
    F = CycloField(3)
    z = F.zeta()
    with pytest.raises(ProductNotOne):
        validate_tuple([_scalar(F, z), _scalar(F, z), _scalar(F, z * z)])


def test_validate_rejects_short_tuples():
    F = CycloField(3)
    z = F.zeta()
    with pytest.raises(TooFewPoints):
        validate_tuple([_scalar(F, z), _scalar(F, z * z)])


def test_validate_rejects_singular_entry():
    F = CycloField(3)
    bad = Matrix.zero(F, 1, 1)
    with pytest.raises(TupleError):
        validate_tuple([bad, _scalar(F, F.one()), _scalar(F, F.one())])


def test_cocycle_space_dimensions_for_scalar_tuples():
    rng = random.Random(301)
    for _ in range(30):
        F = CycloField(rng.choice([3, 4, 5, 8, 12]))
        r = rng.randint(3, 7)
        g, _ = unit_scalar_tuple(F, r, rng)
        assert h_space(g).dim == r - 1
        assert e_space(g).dim == 1
        assert w_space(g).dim == r - 2


def test_h_space_elements_satisfy_both_conditions():
    rng = random.Random(302)
    F = CycloField(3)
    for _ in range(10):
        g = rand_tuple(F, 4, 2, rng)
        H = h_space(g)
        d, r = g.dim, g.r
        ident = Matrix.identity(F, d)
        for _ in range(3):
            v = rand_h_elem(H, rng)
            blocks = [tuple(v[i * d:(i + 1) * d]) for i in range(r)]
            # each block lies in the image of g_i - 1
            for i, b in enumerate(blocks):
                from parcoh.linalg import solve_row
                assert solve_row(g.mats[i] - ident, b) is not None
            # the twisted sum telescopes to zero
            total = tuple(F.zero() for _ in range(d))
            for i in range(r):
                suffix = ident
                for j in range(i + 1, r):
                    suffix = suffix * g.mats[j]
                total = tuple(x + y for x, y in
                              zip(total, vec_mat(blocks[i], suffix)))
            assert all(not x for x in total)


def test_e_space_is_the_image_of_the_coboundary():
    rng = random.Random(303)
    F = CycloField(4)
    g = rand_tuple(F, 4, 2, rng)
    E = e_space(g)
    H = h_space(g)
    ident = Matrix.identity(F, 2)
    # the coboundary of every ambient vector lands in E (and in H)
    for _ in range(5):
        from helpers import rand_element
        v = tuple(rand_element(F, rng) for _ in range(2))
        flat = []
        for m in g.mats:
            flat.extend(vec_mat(v, m - ident))
        assert E.contains(tuple(flat))
        assert H.contains(tuple(flat))
    assert H.contains_subspace(E)


def test_dual_tuple_is_an_involution_with_product_one():
    rng = random.Random(304)
    F = CycloField(3)
    for _ in range(8):
        g = rand_tuple(F, rng.randint(3, 5), rng.randint(1, 3), rng)
        gs = dual_tuple(g)
        validate_tuple(list(gs.mats))
        for a, b in zip(g.mats, gs.mats):
            assert b == a.inverse().transpose()
        back = dual_tuple(gs)
        assert all(x == y for x, y in zip(back.mats, g.mats))


def test_conjugate_entries_is_entrywise():
    F = CycloField(3)
    z = F.zeta()
    g = MatTuple(F, 1, [_scalar(F, z)] * 3)
    gbar = g.conjugate_entries()
    assert gbar.mats[0][0, 0] == z.conjugate()
    again = gbar.conjugate_entries()
    assert all(x == y for x, y in zip(again.mats, g.mats))


def test_common_fixed_space():
    F = CycloField(3)
    z = F.zeta()
    g, _ = unit_scalar_tuple(F, 4, random.Random(305))
    assert common_fixed_space(g).dim == 0
    # lower unitriangular blocks all fix the first coordinate vector
    one, zero = F.one(), F.zero()
    a = Matrix.from_rows(F, [[one, zero], [z, one]])
    b = Matrix.from_rows(F, [[one, zero], [one, one]])
    c = (a * b).inverse()
    g2 = MatTuple(F, 2, [a, b, c])
    fixed = common_fixed_space(g2)
    assert fixed.dim == 1
    assert fixed.contains((one, zero))


def test_suffix_products():
    # suffix_products()[i-1] is g_(i+1)*...*g_r, the last one the identity
    rng = random.Random(306)
    F = CycloField(3)
    g = rand_tuple(F, 4, 2, rng)
    suff = g.suffix_products()
    ident = Matrix.identity(F, 2)
    assert len(suff) == g.r
    assert suff[-1] == ident
    for i in range(g.r):
        expect = ident
        for j in range(i + 1, g.r):
            expect = expect * g.mats[j]
        assert suff[i] == expect
