"""Command-line front end.

Subcommands: w-basis, monodromy, gram, verify, picard.  All output is
exact element literals, either human-readable text or --json.  Exit
codes: 0 ok, 1 usage, 2 tuple/file validation, 3 compatibility,
4 form, 5 golden or library-invariant mismatch.
"""

import argparse
import json
import sys

from . import picard as picard_mod
from .braid import BraidWord, act_on_tuple, phi_on_H
from .cyclo import format_element
from .duality import (cup_pairing, gram_on_W, lift_parabolic,
                      predicted_signature, signature)
from .errors import (BraidSyntaxError, DoesNotPreserveE, FieldLacksI,
                     FormNotInvariant, IncompatibleSpec, LiteralSyntaxError,
                     NonzeroH0, NotASubspace, NotHermitian, NotParabolic,
                     NotRootOfUnity, ProblemFileError, StrandMismatch,
                     TupleError, TupleMismatch, UnknownGenerator)
from .linalg import Matrix, kernel_left, vec_add, vec_mat
from .monodromy import VariationSpec, check_compatibility, monodromy_generators
from .problem import (load_problem, matrix_from_json, matrix_to_json,
                      vector_to_json)
from .tuples import dual_tuple, e_space, h_space, w_space


def _fmt_vec(v):
    return "[" + ", ".join(format_element(x) for x in v) + "]"


def _print_matrix(m, indent="  "):
    for i in range(m.rows):
        print(indent + _fmt_vec(m.row(i)))


def _err(msg):
    print("error: %s" % msg, file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the documented code is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        _err(message)
        raise SystemExit(1)


def _basis_coords(ws, basis_vectors):
    """Coordinate matrix P of explicit basis classes; rows = coords."""
    want = ws.tuple.r * ws.tuple.dim
    rows = []
    for k, v in enumerate(basis_vectors):
        if len(v) != want:
            raise NotASubspace("basis vector %d has wrong length" % (k + 1))
        if not ws.H.contains(v):
            raise NotASubspace(
                "basis vector %d is not a parabolic cocycle" % (k + 1))
        rows.append(ws.chart.coords(v))
    if len(rows) != ws.dim:
        raise NotASubspace("need %d basis classes, got %d"
                           % (ws.dim, len(rows)))
    P = Matrix.from_rows(ws.tuple.field, rows)
    if not P.is_invertible():
        raise NotASubspace("basis classes are linearly dependent mod E")
    return P


def cmd_w_basis(args):
    problem = load_problem(args.file)
    ws = w_space(problem.tuple)
    if args.json:
        doc = {
            "cyclotomic_order": problem.field.n,
            "r": problem.tuple.r,
            "dimension": problem.dim,
            "dim_H": ws.H.dim,
            "dim_E": ws.E.dim,
            "dim_W": ws.dim,
            "basis": [vector_to_json(rep) for rep in ws.chart.reps],
        }
        print(json.dumps(doc, indent=2))
    else:
        print("field: Q(zeta_%d), r = %d, dimension = %d"
              % (problem.field.n, problem.tuple.r, problem.dim))
        print("dim H = %d" % ws.H.dim)
        print("dim E = %d" % ws.E.dim)
        print("dim W = %d" % ws.dim)
        if ws.dim:
            print("class representatives:")
            for rep in ws.chart.reps:
                print("  " + _fmt_vec(rep))
    return 0


def cmd_monodromy(args):
    problem = load_problem(args.file)
    if problem.generators is None:
        _err('problem file has no "braids" section')
        return 1
    if args.basis == "explicit" and problem.basis is None:
        _err('--basis explicit requires a "basis" section in the file')
        return 1
    spec = VariationSpec(problem.tuple, problem.generators)
    report = check_compatibility(spec)
    if not all(ok for _, ok, _ in report):
        for name, ok, bad in report:
            if ok:
                print("compatibility %s: ok" % name, file=sys.stderr)
            else:
                print("compatibility %s: FAIL at tuple entry %d"
                      % (name, bad), file=sys.stderr)
        return 3
    rep = monodromy_generators(spec)
    mats = list(rep.images)
    if not mats:
        if args.json:
            print(json.dumps({"matrices": []}, indent=2))
        return 0
    if args.basis == "explicit":
        P = _basis_coords(rep.wspace, problem.basis)
        Pinv = P.inverse()
        mats = [(name, P * m * Pinv) for name, m in mats]
    if args.conjugate is not None:
        k = rep.wspace.dim
        try:
            data = json.loads(args.conjugate)
        except json.JSONDecodeError as e:
            _err("--conjugate is not valid JSON: %s" % e)
            return 1
        C = matrix_from_json(problem.field, data, k, k, "--conjugate")
        if not C.is_invertible():
            _err("--conjugate matrix is singular")
            return 1
        Cinv = C.inverse()
        mats = [(name, C * m * Cinv) for name, m in mats]
    if args.json:
        doc = {"dim_W": rep.wspace.dim,
               "matrices": [{"name": name, "matrix": matrix_to_json(m)}
                            for name, m in mats]}
        print(json.dumps(doc, indent=2))
    else:
        for name, m in mats:
            print("%s:" % name)
            _print_matrix(m)
    return 0


def _predicted_pair(g, eigenvalues):
    """(predicted, predicted for the conjugate character) or a note."""
    n = g.field.n
    try:
        if eigenvalues is not None:
            pred = predicted_signature(g, eigenvalues)
            conj_eig = [[(-k) % n for k in row] for row in eigenvalues]
            pred_conj = predicted_signature(g.conjugate_entries(), conj_eig)
        elif g.dim == 1:
            pred = predicted_signature(g)
            pred_conj = predicted_signature(g.conjugate_entries())
        else:
            return None, None, "no eigenvalue data"
    except NonzeroH0:
        return None, None, "H^0 is nonzero"
    return pred, pred_conj, None


def cmd_gram(args):
    problem = load_problem(args.file)
    if problem.form is None:
        _err('problem file has no "form" section')
        return 1
    hermitian = problem.form.kind == "hermitian"
    if args.hermitian and not hermitian:
        _err("--hermitian given but the file form kind is %r"
             % problem.form.kind)
        return 1
    if args.bilinear and hermitian:
        _err("--bilinear given but the file form kind is hermitian")
        return 1
    res = gram_on_W(problem.tuple, problem.form)
    G = res.G
    if problem.basis is not None:
        # the hermitian route may enlarge the field, so move the file basis
        # into the w-space's own field before taking coordinates
        big = res.wspace.tuple.field
        basis = [[x.coerce(big) for x in v] for v in problem.basis]
        P = _basis_coords(res.wspace, basis)
        G = (P.conj() * G * P.transpose()) if hermitian \
            else (P * G * P.transpose())
    doc = {"kind": res.kind, "dim_W": res.wspace.dim,
           "cyclotomic_order": G.field.n,
           "gram": matrix_to_json(G)}
    sig = None
    pred = pred_conj = note = None
    if hermitian:
        sig = signature(G)
        pred, pred_conj, note = _predicted_pair(problem.tuple,
                                                problem.eigenvalues)
        doc["signature"] = list(sig.as_pair())
        doc["nullity"] = sig.nullity
        if pred is not None:
            doc["predicted_signature"] = list(pred)
            doc["predicted_signature_conjugate_character"] = list(pred_conj)
    if args.json:
        print(json.dumps(doc, indent=2))
        return 0
    print("kind: %s" % res.kind)
    print("gram matrix over Q(zeta_%d):" % G.field.n)
    _print_matrix(G)
    if hermitian:
        print("signature: (%d, %d)" % sig.as_pair())
        if sig.nullity:
            print("nullity: %d" % sig.nullity)
        if pred is not None:
            print("predicted signature: (%d, %d)" % pred)
            print("predicted signature (conjugate character): (%d, %d)"
                  % pred_conj)
        else:
            print("predicted signature: not applicable (%s)" % note)
    return 0


def _verify_checks(problem):
    """Yield (name, ok, exit_code_on_failure) for the invariant suite."""
    g = problem.tuple
    field, r, d = g.field, g.r, g.dim
    ws = w_space(g)
    yield ("tuple validation", True, 2)

    if problem.generators is not None:
        spec = VariationSpec(g, problem.generators)
        for name, ok, bad in check_compatibility(spec):
            yield ("compatibility %s" % name, ok, 3)

    H = h_space(g)

    def maps_equal(a, b):
        return all(vec_mat(v, a.matrix) == vec_mat(v, b.matrix)
                   for v in H.basis)

    # Artin relations, as maps on H
    ok = True
    for i in range(1, r - 3):
        left = BraidWord(r - 1, [(i, 1), (i + 1, 1), (i, 1)])
        right = BraidWord(r - 1, [(i + 1, 1), (i, 1), (i + 1, 1)])
        if not maps_equal(phi_on_H(g, left), phi_on_H(g, right)):
            ok = False
    for i in range(1, r - 2):
        for j in range(i + 2, r - 2):
            ab = BraidWord(r - 1, [(i, 1), (j, 1)])
            ba = BraidWord(r - 1, [(j, 1), (i, 1)])
            if not maps_equal(phi_on_H(g, ab), phi_on_H(g, ba)):
                ok = False
    yield ("braid relations on H", ok, 5)

    # cocycle rule on the file's words (split at the midpoint)
    ok = True
    words = [beta for _, beta, _ in problem.generators or []]
    for beta in words:
        if len(beta.letters) < 2:
            continue
        k = len(beta.letters) // 2
        w1 = BraidWord(beta.strands, beta.letters[:k])
        w2 = BraidWord(beta.strands, beta.letters[k:])
        first = phi_on_H(g, w1)
        second = phi_on_H(act_on_tuple(g, w1), w2)
        if not maps_equal(first.compose(second), phi_on_H(g, beta)):
            ok = False
    yield ("cocycle rule on file words", ok, 5)

    # each elementary letter maps E into E of the moved tuple
    ok = True
    for i in range(1, r - 1):
        beta = BraidWord(r - 1, [(i, 1)])
        ph = phi_on_H(g, beta)
        Emoved = e_space(act_on_tuple(g, beta))
        for v in e_space(g).basis:
            if not Emoved.contains(vec_mat(v, ph.matrix)):
                ok = False
    yield ("E preserved by braid letters", ok, 5)

    # cup value does not depend on the choice of lifts
    gs = dual_tuple(g)
    Hs = h_space(gs)
    ok = True
    if H.dim and Hs.dim:
        phi_elt = Hs.basis[0]
        psi_elt = H.basis[-1]
        blocks = [tuple(psi_elt[i * d:(i + 1) * d]) for i in range(r)]
        base_lifts = [lift_parabolic(g.mats[i], blocks[i]) for i in range(r)]
        value = cup_pairing(gs, g, phi_elt, psi_elt, lifts=base_lifts)
        ident = Matrix.identity(field, d)
        for i in range(r):
            ker = kernel_left(g.mats[i] - ident)
            for kv in ker.basis:
                shifted = list(base_lifts)
                shifted[i] = vec_add(shifted[i], kv)
                if cup_pairing(gs, g, phi_elt, psi_elt,
                               lifts=shifted) != value:
                    ok = False
    yield ("cup independent of lifts", ok, 5)

    if problem.form is not None:
        try:
            problem.form.check(g)
            yield ("form invariance on V", True, 4)
            form_ok = True
        except FormNotInvariant as e:
            yield ("form invariance on V (%s)" % e, False, 4)
            form_ok = False
        if form_ok and problem.generators is not None and ws.dim:
            res = gram_on_W(g, problem.form)
            spec = VariationSpec(g, problem.generators)
            rep = monodromy_generators(spec)
            ok = True
            for name, m in rep.images:
                m = m.coerce(res.G.field)
                if problem.form.kind == "hermitian":
                    good = (m.conj() * res.G * m.transpose()) == res.G
                else:
                    good = (m * res.G * m.transpose()) == res.G
                if not good:
                    ok = False
            yield ("monodromy preserves the W form", ok, 5)


def cmd_verify(args):
    problem = load_problem(args.file)
    failures = []
    checks = []
    for name, ok, code in _verify_checks(problem):
        checks.append({"name": name, "ok": ok})
        if not args.json:
            print("%s %s" % ("PASS" if ok else "FAIL", name))
        if not ok:
            failures.append(code)
    if args.json:
        print(json.dumps({"ok": not failures, "checks": checks}, indent=2))
    if failures:
        return failures[0]
    if not args.json:
        print("all checks passed")
    return 0


def cmd_picard(args):
    ok, checks = picard_mod.golden_report()
    if args.json:
        doc = {
            "ok": ok,
            "checks": [{"name": n, "ok": good, "detail": detail}
                       for n, good, detail in checks],
            "matrices": [
                {"name": name, "matrix": matrix_to_json(m)}
                for name, m in zip(picard_mod.GENERATOR_NAMES,
                                   picard_mod.computed_matrices_published_basis())],
            "gram": matrix_to_json(picard_mod.computed_gram_published_basis()),
            "signatures": {k: {kk: list(vv) for kk, vv in v.items()}
                           for k, v in picard_mod.golden_signatures().items()},
        }
        print(json.dumps(doc, indent=2))
    else:
        for name, good, detail in checks:
            line = "%s %s" % ("PASS" if good else "FAIL", name)
            if detail:
                line += " (%s)" % detail
            print(line)
        print("picard golden data %s" %
              ("reproduced exactly" if ok else "MISMATCH"))
    return 0 if ok else 5


def build_parser():
    p = _Parser(prog="parcoh",
                description="Exact parabolic cohomology of local systems "
                            "on a punctured sphere: braid monodromy, "
                            "duality pairing, Hermitian signature.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("w-basis", help="dimensions and basis of W")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_w_basis)

    q = sub.add_parser("monodromy", help="monodromy matrices on W")
    q.add_argument("file")
    q.add_argument("--basis", choices=("auto", "explicit"), default="auto")
    q.add_argument("--conjugate", metavar="MATRIX",
                   help="post-conjugate output by this matrix literal "
                        "(JSON rows of element literals)")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_monodromy)

    q = sub.add_parser("gram", help="Gram matrix of the duality form on W")
    kind = q.add_mutually_exclusive_group(required=True)
    kind.add_argument("--hermitian", action="store_true")
    kind.add_argument("--bilinear", action="store_true")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_gram)

    q = sub.add_parser("verify", help="run the invariant suite on a file")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("picard", help="check the built-in golden system")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_picard)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as e:
        _err(str(e))
        return 1
    except ProblemFileError as e:
        _err(str(e))
        return 2
    except (TupleError, LiteralSyntaxError, BraidSyntaxError, StrandMismatch,
            NotASubspace, NotRootOfUnity, NotParabolic, TupleMismatch,
            UnknownGenerator) as e:
        _err(str(e))
        return 2
    except IncompatibleSpec as e:
        _err(str(e))
        return 3
    except (FormNotInvariant, FieldLacksI, NotHermitian) as e:
        _err(str(e))
        return 4
    except DoesNotPreserveE as e:
        _err(str(e))
        return 5


if __name__ == "__main__":
    sys.exit(main())
