"""The cup-product pairing on W, its Hermitian variant, exact signatures.

The pairing of a parabolic cocycle phi for the dual tuple g* with a
parabolic cocycle psi for g is

    phi cup psi = sum_i ( <v*_i, v'_i>
                  + sum_{j<i} <v*_j g*_{j+1}...g*_{i-1} (g*_i - 1), v'_i> )

where v'_i solves v'_i (g_i - 1) = v_i (any solution works; the value is
independent of the lift and of representatives mod E).  <,> is the
standard coordinate pairing.

Hermitian form on W_g: (phi, psi) = -i * (kappa(conj(phi)) cup psi),
computed after coercing to Q(zeta_m) with m = lcm(n, 4) so that
i = zeta_m^(m/4) exists.  kappa sends a block v to conj(v)*J^T, the
coordinate form of the map V-bar -> V* induced by the Hermitian form
x, y -> x*J*conj(y)^T on V.

The form is conjugate-linear in the first argument and linear in the
second, so on W coordinates (rows) the value is conj(x)*G*y^T and a
monodromy matrix M preserves it iff conj(M)*G*M^T = G.  With these
conventions the signature formula of predicted_signature holds exactly:
signature(gram_on_W(g)) == predicted_signature(g), checked over random
rank-one root-of-unity tuples in the test suite.
"""

from fractions import Fraction
from math import lcm

from .cyclo import CycloField
from .errors import (FieldLacksI, FormNotInvariant, NonzeroH0, NotHermitian,
                     NotParabolic, NotRootOfUnity, TupleMismatch)
from .linalg import (Matrix, dot, kernel_left, rref, vec_add, vec_conj,
                     vec_is_zero, vec_mat, vec_scale, vec_sub)
from .tuples import MatTuple, common_fixed_space, dual_tuple, w_space


def lift_parabolic(g_i, v_i):
    """A deterministic v' with v'*(g_i - 1) = v_i; NotParabolic if none."""
    from .linalg import solve_row
    ident = Matrix.identity(g_i.field, g_i.rows)
    x = solve_row(g_i - ident, v_i)
    if x is None:
        raise NotParabolic("block is not in the image of g_i - 1")
    return x


def _blocks(v, r, d):
    return [tuple(v[i * d:(i + 1) * d]) for i in range(r)]


def cup_pairing(gstar, g, phi, psi, lifts=None):
    """The cup product of phi (cocycle for g*) with psi (cocycle for g).

    lifts, if given, must solve lifts[i]*(g_i - 1) = psi block i; any
    choice gives the same value, which the test suite exercises.
    """
    if gstar != dual_tuple(g):
        raise TupleMismatch("first tuple is not the dual of the second")
    d, r = g.dim, g.r
    vs = _blocks(phi, r, d)
    ws = _blocks(psi, r, d)
    if lifts is None:
        lifts = [lift_parabolic(g.mats[i], ws[i]) for i in range(r)]
    else:
        ident = Matrix.identity(g.field, d)
        for i in range(r):
            if vec_mat(lifts[i], g.mats[i] - ident) != ws[i]:
                raise NotParabolic("lift %d does not solve v'(g-1) = v"
                                   % (i + 1))
    total = g.field.zero()
    # T_i = sum_{j<i} v*_j g*_{j+1}...g*_{i-1}, built incrementally
    T = tuple(g.field.zero() for _ in range(d))
    for i in range(r):
        term = dot(vs[i], lifts[i])
        ident = Matrix.identity(g.field, d)
        term = term + dot(vec_mat(T, gstar.mats[i] - ident), lifts[i])
        total = total + term
        T = vec_add(vec_mat(T, gstar.mats[i]), vs[i])
    return total


def cycle_to_cocycle(g, w_list):
    """Blocks v_i = w_i - w_(i-1)*g_i, cyclically (w_0 means w_r)."""
    assert len(w_list) == g.r
    out = []
    for i in range(g.r):
        prev = w_list[i - 1]  # i = 0 wraps to w_r
        out.append(vec_sub(w_list[i], vec_mat(prev, g.mats[i])))
    flat = []
    for b in out:
        flat.extend(b)
    return tuple(flat)


_KINDS = ("bilinear-symmetric", "bilinear-alternating", "hermitian")


class SesquiData:
    """An invariant form on V: a kind tag plus its Gram matrix J."""

    __slots__ = ("kind", "J")

    def __init__(self, kind, J):
        assert kind in _KINDS
        self.kind = kind
        self.J = J

    def check(self, g):
        """Verify shape, symmetry and g-invariance; raises FormNotInvariant."""
        J = self.J
        if J.rows != J.cols or J.rows != g.dim:
            raise FormNotInvariant("J is not %dx%d" % (g.dim, g.dim))
        if not J.is_invertible():
            raise FormNotInvariant("J is singular")
        if self.kind == "bilinear-symmetric" and J != J.transpose():
            raise FormNotInvariant("J is not symmetric")
        if self.kind == "bilinear-alternating" and J != -J.transpose():
            raise FormNotInvariant("J is not alternating")
        if self.kind == "hermitian" and J != J.conj_transpose():
            raise FormNotInvariant("J is not conjugate-symmetric")
        for k, m in enumerate(g.mats):
            tau = m.conj_transpose() if self.kind == "hermitian" else m.transpose()
            if m * J * tau != J:
                raise FormNotInvariant("g_%d does not preserve the form" % (k + 1))


class GramResult:
    __slots__ = ("G", "kind", "wspace")

    def __init__(self, G, kind, wspace):
        self.G = G
        self.kind = kind
        self.wspace = wspace


def _kappa_image(v_blocks, Jt, conj_first):
    out = []
    for b in v_blocks:
        bb = vec_conj(b) if conj_first else b
        out.extend(vec_mat(bb, Jt))
    return tuple(out)


def gram_on_W(g, form):
    """Gram matrix of the induced form on the W_g representative basis."""
    form.check(g)
    hermitian = form.kind == "hermitian"
    if hermitian:
        m = lcm(g.field.n, 4)
        big = CycloField(m)
        try:
            g = g.coerce(big)
            J = form.J.coerce(big)
        except Exception as e:
            raise FieldLacksI(str(e))
        i_elem = big.zeta(m // 4)
    else:
        J = form.J
    ws = w_space(g)
    gstar = dual_tuple(g)
    Hstar = None
    Jt = J.transpose()
    d, r = g.dim, g.r
    entries = []
    for rep_k in ws.chart.reps:
        row = []
        blocks = _blocks(rep_k, r, d)
        phi = _kappa_image(blocks, Jt, conj_first=hermitian)
        # kappa of a parabolic cocycle for g must be parabolic for g*
        if Hstar is None:
            from .tuples import h_space
            Hstar = h_space(gstar)
        assert Hstar.contains(phi), "kappa image left H_(g*); form not invariant?"
        for rep_l in ws.chart.reps:
            val = cup_pairing(gstar, g, phi, rep_l)
            if hermitian:
                val = -i_elem * val
            row.append(val)
        entries.append(tuple(row))
    n = ws.dim
    G = Matrix.from_rows(g.field, entries) if n else Matrix.zero(g.field, 0, 0)
    if hermitian:
        kind = "hermitian"
    elif form.kind == "bilinear-symmetric":
        kind = "bilinear-alternating"
    else:
        kind = "bilinear-symmetric"
    return GramResult(G, kind, ws)


class SignatureResult:
    __slots__ = ("p", "q", "nullity")

    def __init__(self, p, q, nullity):
        self.p = p
        self.q = q
        self.nullity = nullity

    def as_pair(self):
        return (self.p, self.q)

    def __repr__(self):
        if self.nullity:
            return "(%d, %d; nullity %d)" % (self.p, self.q, self.nullity)
        return "(%d, %d)" % (self.p, self.q)


def signature(gram):
    """Exact inertia of a Hermitian Gram matrix by congruence reduction.

    Every pivot sign decision goes through the symbolic-then-interval
    sign routine; zero diagonals are repaired with the transvection
    row_j += G[j][l]*row_l, whose new diagonal entry 2*|G[j][l]|^2 is
    positive in any conjugation-closed field.
    """
    if isinstance(gram, GramResult):
        if gram.kind != "hermitian":
            raise NotHermitian("signature needs a hermitian Gram result")
        G = gram.G
    else:
        G = gram
    if G != G.conj_transpose():
        raise NotHermitian("matrix is not conjugate-symmetric")
    n = G.rows
    rows = [list(G.row(i)) for i in range(n)]

    def addrow(j, l, c):
        # row_j += c*row_l, then col_j += conj(c)*col_l
        rows[j] = [x + c * y for x, y in zip(rows[j], rows[l])]
        cc = c.conjugate()
        for x in range(n):
            rows[x][j] = rows[x][j] + cc * rows[x][l]

    def swap(j, l):
        rows[j], rows[l] = rows[l], rows[j]
        for x in range(n):
            rows[x][j], rows[x][l] = rows[x][l], rows[x][j]

    p = q = nullity = 0
    for k in range(n):
        if not rows[k][k]:
            hit = None
            for j in range(k + 1, n):
                if rows[j][j]:
                    hit = j
                    break
            if hit is not None:
                swap(k, hit)
            else:
                pair = None
                for j in range(k, n):
                    for l in range(j + 1, n):
                        if rows[j][l]:
                            pair = (j, l)
                            break
                    if pair:
                        break
                if pair is None:
                    nullity += n - k
                    break
                j, l = pair
                addrow(j, l, rows[j][l])
                if j != k:
                    swap(k, j)
        piv = rows[k][k]
        s = piv.sign()
        assert s != 0
        if s > 0:
            p += 1
        else:
            q += 1
        inv = piv.inverse()
        for j in range(k + 1, n):
            if rows[j][k]:
                addrow(j, k, -(rows[j][k] * inv))
    return SignatureResult(p, q, nullity)


def predicted_signature(g, eigen_exponents=None):
    """The signature formula from the tuple's root-of-unity eigenvalues.

    eigen_exponents: per matrix, a list of d integers k meaning the
    eigenvalue zeta_n^k with multiplicity as listed.  For d = 1 the
    exponents are read off the entries.  The claimed spectrum is
    verified exactly via kernel dimensions.  Requires H^0 = 0.
    """
    n = g.field.n
    d = g.dim
    if common_fixed_space(g).dim != 0:
        raise NonzeroH0("tuple has nonzero common fixed space")
    if eigen_exponents is None:
        if d != 1:
            raise NotRootOfUnity(
                "eigenvalue exponents must be supplied when d > 1")
        eigen_exponents = []
        for m in g.mats:
            x = m[0, 0]
            for k in range(n):
                if x == g.field.zeta(k):
                    eigen_exponents.append([k])
                    break
            else:
                raise NotRootOfUnity("entry %s is not a power of zeta_%d"
                                     % (x, n))
    assert len(eigen_exponents) == g.r
    for mi, (m, exps) in enumerate(zip(g.mats, eigen_exponents)):
        if len(exps) != d:
            raise NotRootOfUnity("matrix %d: expected %d eigenvalues"
                                 % (mi + 1, d))
        mult = {}
        for k in exps:
            mult[k % n] = mult.get(k % n, 0) + 1
        for k, cnt in mult.items():
            eig = Matrix.scalar(g.field, d, g.field.zeta(k))
            if kernel_left(m - eig).dim != cnt:
                raise NotRootOfUnity(
                    "matrix %d: zeta_%d^%d is not an eigenvalue of "
                    "multiplicity %d" % (mi + 1, n, k, cnt))
    mu_sum = Fraction(0)
    mubar_sum = Fraction(0)
    for exps in eigen_exponents:
        for k in exps:
            mu = Fraction(k % n, n)
            mu_sum += mu
            mubar_sum += (1 - mu) if mu > 0 else Fraction(0)
    p = mu_sum - d
    q = mubar_sum - d
    assert p.denominator == 1 and q.denominator == 1, \
        "signature formula did not give integers"
    return (int(p), int(q))
