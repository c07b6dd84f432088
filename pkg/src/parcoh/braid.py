"""Braid words, their action on tuples, and the maps Phi and Psi.

Words act left to right (first letter first), matching path composition
"first alpha then beta" and the right action of linear maps on row
vectors: applying Phi(g, b) then Phi(g^b, b') multiplies the matrices in
that order, v -> v*M*M'.
"""

import re

from .errors import (BraidSyntaxError, DoesNotPreserveE, IndexOutOfRange,
                     StrandMismatch)
from .linalg import Matrix, block_diag, vec_mat

_LETTER = re.compile(r"^b(\d+)(?:\^(-?\d+))?$")


class BraidWord:
    """A freely reduced word in the generators b1..b(strands-1)."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters):
        self.strands = strands
        self.letters = tuple(letters)  # pairs (index, +1 or -1)

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.letters == other.letters

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        assert self.strands == other.strands
        return BraidWord(self.strands,
                         _free_reduce(self.letters + other.letters))

    def inverse(self):
        return BraidWord(self.strands,
                         [(i, -e) for i, e in reversed(self.letters)])

    def __repr__(self):
        if not self.letters:
            return "<empty braid>"
        return " ".join("b%d" % i if e == 1 else "b%d^-1" % i
                        for i, e in self.letters)


def _free_reduce(letters):
    out = []
    for i, e in letters:
        if out and out[-1][0] == i and out[-1][1] == -e:
            out.pop()
        else:
            out.append((i, e))
    return out


def parse_braid(text, strands):
    """Parse a whitespace-separated word like "b3 b2^2 b3^-1"."""
    letters = []
    for tok in text.split():
        m = _LETTER.match(tok)
        if not m:
            raise BraidSyntaxError("bad braid letter %r" % tok)
        idx = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= idx <= strands - 1:
            raise IndexOutOfRange(
                "generator b%d out of range for %d strands" % (idx, strands))
        sign = 1 if power >= 0 else -1
        letters.extend([(idx, sign)] * abs(power))
    return BraidWord(strands, _free_reduce(letters))


def _check_strands(g, beta):
    if beta.strands != g.r - 1:
        raise StrandMismatch("braid on %d strands cannot act on an r=%d tuple"
                             % (beta.strands, g.r))


def _act_letter(g, idx, exp):
    """One generator (or inverse) acting on the tuple, new MatTuple."""
    mats = list(g.mats)
    i = idx - 1  # 0-based position
    a, b = mats[i], mats[i + 1]
    if exp == 1:
        mats[i], mats[i + 1] = b, b.inverse() * a * b
    else:
        mats[i], mats[i + 1] = a * b * a.inverse(), a
    return type(g)(g.field, g.dim, mats)


def act_on_tuple(g, beta):
    """The right action g^beta, letters applied left to right."""
    _check_strands(g, beta)
    for idx, exp in beta.letters:
        g = _act_letter(g, idx, exp)
    return g


class ChainMap:
    """A linear map on flattened V^r coordinates between two cocycle spaces."""

    __slots__ = ("domain_tuple", "codomain_tuple", "matrix")

    def __init__(self, domain_tuple, codomain_tuple, matrix):
        self.domain_tuple = domain_tuple
        self.codomain_tuple = codomain_tuple
        self.matrix = matrix

    def apply(self, v):
        return vec_mat(v, self.matrix)

    def compose(self, other):
        """self then other (domains must chain)."""
        assert other.domain_tuple == self.codomain_tuple
        return ChainMap(self.domain_tuple, other.codomain_tuple,
                        self.matrix * other.matrix)

    def __repr__(self):
        return "ChainMap(%d x %d)" % (self.matrix.rows, self.matrix.cols)


def _phi_letter_matrix(g, idx):
    """Ambient matrix of Phi(g, b_idx): H_g -> H_(g^b_idx).

    Blocks: position idx-1 receives v_(idx+1); position idx receives
    v_(idx+1)*(1 - g_(idx+1)^-1 g_idx g_(idx+1)) + v_idx*g_(idx+1);
    everything else passes through.
    """
    d, r = g.dim, g.r
    f = g.field
    i = idx - 1
    gi, gi1 = g.mats[i], g.mats[i + 1]
    conj = gi1.inverse() * gi * gi1
    ident = Matrix.identity(f, d)
    blocks = {}
    for j in range(r):
        if j not in (i, i + 1):
            blocks[(j, j)] = ident
    blocks[(i + 1, i)] = ident
    blocks[(i, i + 1)] = gi1
    blocks[(i + 1, i + 1)] = ident - conj
    out = Matrix.zero(f, r * d, r * d)
    ent = list(out.entries)
    for (bi, bj), m in blocks.items():
        for a in range(d):
            row = m.row(a)
            for b in range(d):
                ent[(bi * d + a) * (r * d) + bj * d + b] = row[b]
    return Matrix(f, r * d, r * d, ent)


def phi_on_H(g, beta):
    """Phi(g, beta): H_g -> H_(g^beta) as an ambient ChainMap.

    Positive letters use the generator formula; an inverse letter inverts
    the generator matrix taken at the intermediate tuple it maps from.
    """
    _check_strands(g, beta)
    current = g
    total = Matrix.identity(g.field, g.r * g.dim)
    for idx, exp in beta.letters:
        if exp == 1:
            step = _phi_letter_matrix(current, idx)
            current = _act_letter(current, idx, 1)
        else:
            nxt = _act_letter(current, idx, -1)
            # Phi(nxt, b_idx) maps H_nxt to H_current; invert it
            step = _phi_letter_matrix(nxt, idx).inverse()
            current = nxt
        total = total * step
    return ChainMap(g, current, total)


def psi(g, h):
    """Psi(g, h): H_(h g h^-1) -> H_g, blockwise right multiplication by h."""
    if not h.is_invertible():
        from .errors import NotInvertible
        raise NotInvertible("conjugating matrix is singular")
    domain = g.conjugated(h)
    mat = block_diag(g.field, [h] * g.r)
    return ChainMap(domain, g, mat)


def induced_on_W(chain_map, dom, cod):
    """Matrix of the induced map W_dom -> W_cod in the chart bases.

    Verifies that the chain map sends H into H and E into E first.
    """
    assert dom.tuple == chain_map.domain_tuple
    assert cod.tuple == chain_map.codomain_tuple
    for v in dom.H.basis:
        if not cod.H.contains(chain_map.apply(v)):
            raise DoesNotPreserveE("image of an H basis vector leaves H")
    for v in dom.E.basis:
        if not cod.E.contains(chain_map.apply(v)):
            raise DoesNotPreserveE("image of an E basis vector leaves E")
    rows = []
    for rep in dom.chart.reps:
        rows.append(cod.chart.coords(chain_map.apply(rep)))
    if not rows:
        return Matrix.zero(chain_map.matrix.field, 0, cod.dim)
    return Matrix.from_rows(chain_map.matrix.field, rows)
