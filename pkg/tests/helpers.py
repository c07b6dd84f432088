"""Seeded random generators shared across the test suite.

Every generator takes an explicit random.Random so a failing case can be
replayed from the seed printed by the calling test.
"""

from fractions import Fraction

from parcoh.braid import BraidWord
from parcoh.cyclo import CycloField
from parcoh.linalg import Matrix, vec_add, vec_scale
from parcoh.tuples import MatTuple


def rand_element(field, rng, span=2):
    """Random field element with small integer coordinates."""
    x = field.zero()
    for k in range(field.degree):
        c = rng.randint(-span, span)
        if c:
            x = x + field.from_rational(c) * field.zeta(k)
    return x


def rand_nonzero(field, rng, span=2):
    while True:
        x = rand_element(field, rng, span)
        if x:
            return x


def rand_invertible(field, n, rng, span=2):
    while True:
        rows = [[rand_element(field, rng, span) for _ in range(n)]
                for _ in range(n)]
        m = Matrix.from_rows(field, rows)
        if m.is_invertible():
            return m


def rand_tuple(field, r, d, rng, span=1):
    """Invertible r-tuple of d x d matrices with product 1."""
    mats = [rand_invertible(field, d, rng, span) for _ in range(r - 1)]
    prod = mats[0]
    for m in mats[1:]:
        prod = prod * m
    mats.append(prod.inverse())
    return MatTuple(field, d, mats)


def unit_scalar_tuple(field, r, rng):
    """Rank-one tuple of roots of unity, all entries != 1, product 1.

    Returns (tuple, exponents); entry i is zeta^exponents[i].
    """
    n = field.n
    while True:
        exps = [rng.randrange(1, n) for _ in range(r - 1)]
        last = -sum(exps) % n
        if last:
            exps.append(last)
            break
    mats = [Matrix.scalar(field, 1, field.zeta(e)) for e in exps]
    return MatTuple(field, 1, mats), exps


def sl2_tuple(field, r, rng, shears=2):
    """Tuple of determinant-one 2x2 matrices with product 1.

    Each entry is a product of random elementary shears, so the whole
    tuple preserves the standard alternating form.
    """
    def shear():
        a = rand_element(field, rng, 1)
        if rng.random() < 0.5:
            return Matrix.from_rows(field, [[field.one(), a],
                                            [field.zero(), field.one()]])
        return Matrix.from_rows(field, [[field.one(), field.zero()],
                                        [a, field.one()]])

    mats = []
    for _ in range(r - 1):
        m = shear()
        for _ in range(shears - 1):
            m = m * shear()
        mats.append(m)
    prod = mats[0]
    for m in mats[1:]:
        prod = prod * m
    mats.append(prod.inverse())
    return MatTuple(field, 2, mats)


def rand_combo(rows, field, rng, span=3):
    """Random integer combination of the given row vectors."""
    out = [field.zero()] * len(rows[0])
    for row in rows:
        c = rng.randint(-span, span)
        if c:
            out = vec_add(out, vec_scale(row, field.from_rational(c)))
    return tuple(out)


def rand_h_elem(H, rng, span=3):
    """Random element of a cocycle subspace, zero if H is trivial."""
    if H.dim == 0:
        return tuple(H.field.zero() for _ in range(H.ambient_dim))
    return rand_combo(list(H.basis), H.field, rng, span)


def rand_braid(strands, rng, length=None):
    """Random braid word; generator indices run over 1..strands-1."""
    if length is None:
        length = rng.randint(1, 6)
    letters = []
    for _ in range(length):
        i = rng.randrange(1, strands)
        letters.append((i, 1) if rng.random() < 0.5 else (i, -1))
    return BraidWord(strands, letters)


def rand_rational(rng, span=4):
    return Fraction(rng.randint(-span, span), rng.choice([1, 2, 3]))
