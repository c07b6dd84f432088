"""Monodromy representation on W_g from braid words and twist matrices.

A variation is the tuple g plus, for each base generator gamma, a braid
word phi(gamma) and an invertible matrix chi(gamma) subject to the
compatibility condition g^(phi(gamma)) = (chi gamma... chi^-1), i.e. the
braid moves the tuple exactly as conjugation by chi(gamma) undoes.  The
monodromy matrix is the W-quotient of Phi(g, phi(gamma)) followed by
Psi(g, chi(gamma)).
"""

from .braid import act_on_tuple, induced_on_W, phi_on_H, psi
from .errors import IncompatibleSpec, UnknownGenerator
from .tuples import w_space


class VariationSpec:
    __slots__ = ("tuple", "generators")

    def __init__(self, g, generators):
        self.tuple = g
        self.generators = tuple(generators)  # (name, BraidWord, Matrix)

    def names(self):
        return [name for name, _, _ in self.generators]


class MonodromyRep:
    __slots__ = ("wspace", "images")

    def __init__(self, wspace, images):
        self.wspace = wspace
        self.images = tuple(images)  # (name, Matrix on W)

    def image_by_name(self, name):
        for gname, m in self.images:
            if gname == name:
                return m
        raise UnknownGenerator("no generator named %r" % name)


def check_compatibility(spec):
    """Per-generator report: (name, ok, first failing tuple index or None)."""
    g = spec.tuple
    report = []
    for name, beta, chi in spec.generators:
        moved = act_on_tuple(g, beta)
        conj = g.conjugated(chi)
        bad = None
        for i in range(g.r):
            if moved.mats[i] != conj.mats[i]:
                bad = i + 1
                break
        report.append((name, bad is None, bad))
    return report


def _generator_matrix(g, wspace, beta, chi):
    ph = phi_on_H(g, beta)
    ps = psi(g, chi)
    if ph.codomain_tuple != ps.domain_tuple:
        raise IncompatibleSpec(
            "braid image of the tuple does not match conjugation by chi")
    return induced_on_W(ph.compose(ps), wspace, wspace)


def monodromy_generators(spec):
    """The monodromy matrices of all named generators on W_g."""
    report = check_compatibility(spec)
    bad = [name for name, ok, _ in report if not ok]
    if bad:
        raise IncompatibleSpec("compatibility fails for: %s" % ", ".join(bad))
    g = spec.tuple
    ws = w_space(g)
    images = []
    for name, beta, chi in spec.generators:
        images.append((name, _generator_matrix(g, ws, beta, chi)))
    return MonodromyRep(ws, images)


def eta(spec, word):
    """Monodromy of a word over generator names, e.g. "g1 g2^-1 g1".

    Matrices compose in path order: the first name's matrix multiplies
    first (row vectors act from the left).
    """
    rep = monodromy_generators(spec)
    if not word.split():
        from .linalg import Matrix
        return Matrix.identity(spec.tuple.field, rep.wspace.dim)
    total = None
    for tok in word.split():
        name, power = tok, 1
        if "^" in tok:
            name, p = tok.split("^", 1)
            try:
                power = int(p)
            except ValueError:
                raise UnknownGenerator("bad power in token %r" % tok)
        m = rep.image_by_name(name)
        if power < 0:
            m = m.inverse()
            power = -power
        for _ in range(power):
            total = m if total is None else total * m
    if total is None:
        from .linalg import Matrix
        return Matrix.identity(spec.tuple.field, rep.wspace.dim)
    return total
