"""Command line front end.

Every command reads its inputs as JSON documents (inline, or a path to a
file) and writes exactly one JSON document to stdout.  Exit status: 0 on
success or PASS, 1 on a FAIL verdict or an exhausted search, 2 on bad input
or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable

from . import jsonio
from .errors import BudgetExceededError, MukaiError, NotFoundError
from .exceptional_collections import (
    check_exceptional_collection_necessary,
    find_isotropic_sequence,
    standard_test_set,
)
from .gallery import run_gallery
from .k3 import k3_square, pullback
from .lattice import GramLattice, e10_preset, load_gram, pair
from .mukai import (
    MukaiVector,
    dual,
    from_chern,
    is_exceptional,
    mukai_pair,
    square,
    twist,
)
from .picard import (
    CurveTestSet,
    DivisorClass,
    Irreducible,
    ample_criteria,
    classify_free_system,
    is_ample_wrt,
    rr_line_bundle,
)
from .polarization import DEFAULT_KMAX, find_coprime_ample, verify_certificate
from .reflection import reflect, reflect_via_sequences

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Context:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.lattice: GramLattice = load_gram(args.lattice) if args.lattice else e10_preset()
        self._test_set: CurveTestSet | None = None

    @property
    def test_set(self) -> CurveTestSet:
        if self._test_set is None:
            if self.args.test_set:
                doc = jsonio.load_document(self.args.test_set)
                self._test_set = jsonio.parse_test_set(doc, self.lattice)
            else:
                self._test_set = standard_test_set(self.lattice)
        return self._test_set

    def doc(self, name: str) -> Any:
        try:
            return jsonio.load_document(getattr(self.args, name))
        except jsonio.InputError as exc:
            raise jsonio.InputError(name, str(exc)) from None

    def vector(self, name: str):
        return jsonio.parse_vector(self.doc(name), self.lattice, name)

    def divisor(self, name: str) -> DivisorClass:
        return jsonio.parse_divisor(self.doc(name), self.lattice, name)


Result = tuple[dict, int]


def cmd_pair(ctx: Context) -> Result:
    L = ctx.lattice
    x = jsonio.parse_coords(ctx.doc("x"), "x", L.rank)
    y = jsonio.parse_coords(ctx.doc("y"), "y", L.rank)
    return {"pair": pair(L, x, y)}, EXIT_OK


def cmd_chi(ctx: Context) -> Result:
    return {"chi": mukai_pair(ctx.vector("v"), ctx.vector("w"), ctx.lattice)}, EXIT_OK


def cmd_from_chern(ctx: Context) -> Result:
    doc = ctx.doc("chern")
    if not isinstance(doc, dict):
        raise jsonio.InputError("chern", "expected a JSON object")
    for key in ("r", "c2"):
        if isinstance(doc.get(key), bool) or not isinstance(doc.get(key), int):
            raise jsonio.InputError(f"chern.{key}", "expected an integer")
    D = jsonio.parse_divisor(doc, ctx.lattice, "chern")
    return jsonio.vector_to_json(from_chern(doc["r"], D, doc["c2"], ctx.lattice)), EXIT_OK


def cmd_dual(ctx: Context) -> Result:
    return jsonio.vector_to_json(dual(ctx.vector("v"))), EXIT_OK


def cmd_twist(ctx: Context) -> Result:
    return jsonio.vector_to_json(twist(ctx.vector("v"), ctx.divisor("m"), ctx.lattice)), EXIT_OK


def cmd_reflect(ctx: Context) -> Result:
    return jsonio.vector_to_json(reflect(ctx.vector("v"))), EXIT_OK


def cmd_reflect_seq(ctx: Context) -> Result:
    return jsonio.vector_to_json(reflect_via_sequences(ctx.vector("v"))), EXIT_OK


def cmd_pullback(ctx: Context) -> Result:
    w = pullback(ctx.vector("v"))
    out = jsonio.k3_vector_to_json(w)
    out["k3_square"] = k3_square(w, ctx.lattice)
    return out, EXIT_OK


def cmd_is_exceptional(ctx: Context) -> Result:
    v = ctx.vector("v")
    return {"exceptional": is_exceptional(v, ctx.lattice), "square": square(v, ctx.lattice)}, EXIT_OK


def cmd_find_polarization(ctx: Context) -> Result:
    v = ctx.vector("v")
    T = ctx.test_set
    Hseed = ctx.divisor("hseed") if ctx.args.hseed else DivisorClass(T.cone_ref, 0)
    cert = find_coprime_ample(v, Hseed, T, ctx.args.kmax)
    failures = verify_certificate(cert, v, T)
    verdict = "FAIL" if failures else "PASS"
    print(f"{verdict}: independent re-verification of the certificate", file=sys.stderr)
    out = {"certificate": jsonio.certificate_to_json(cert), "verification": verdict, "failures": failures}
    return out, EXIT_FAIL if failures else EXIT_OK


def cmd_isotropic_seq(ctx: Context) -> Result:
    seq = find_isotropic_sequence(ctx.lattice, ctx.args.length, ctx.args.bound)
    return {"sequence": jsonio.sequence_to_json(seq), "gram": seq.gram_matrix(ctx.lattice)}, EXIT_OK


def cmd_check_collection(ctx: Context) -> Result:
    vs = jsonio.parse_vector_list(ctx.doc("vectors"), ctx.lattice, "vectors")
    rep = check_exceptional_collection_necessary(vs, ctx.lattice)
    return jsonio.report_to_json(rep), EXIT_OK if rep.verdict == "PASS" else EXIT_FAIL


def cmd_rr(ctx: Context) -> Result:
    return {"rr": rr_line_bundle(ctx.divisor("divisor"), ctx.lattice)}, EXIT_OK


def cmd_classify(ctx: Context) -> Result:
    res = classify_free_system(ctx.divisor("divisor"), ctx.lattice)
    if isinstance(res, Irreducible):
        return {"type": "irreducible"}, EXIT_OK
    return {"type": "pencil", "k": res.k, "p": list(res.P)}, EXIT_OK


def cmd_ample_criteria(ctx: Context) -> Result:
    D = ctx.divisor("divisor")
    T = ctx.test_set
    out: dict[str, Any] = dict(ample_criteria(D, T))
    out["ample_wrt_test_set"] = is_ample_wrt(D, T)
    return out, EXIT_OK


def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, DivisorClass):
        return jsonio.divisor_to_json(obj)
    if isinstance(obj, MukaiVector):
        return jsonio.vector_to_json(obj)
    if isinstance(obj, (tuple, list)):
        return [_plain(a) for a in obj]
    return obj


def cmd_gallery(ctx: Context) -> Result:
    entries = run_gallery()
    examples = []
    for e in entries:
        verdict = "PASS" if e.passed else "FAIL"
        print(f"{verdict}: {e.name}", file=sys.stderr)
        examples.append(
            {
                "name": e.name,
                "verdict": verdict,
                "checks": {
                    k: {"expected": _plain(exp), "computed": _plain(got)}
                    for k, (exp, got) in e.checks.items()
                },
            }
        )
    ok = all(e.passed for e in entries)
    return {"examples": examples, "verdict": "PASS" if ok else "FAIL"}, EXIT_OK if ok else EXIT_FAIL


COMMANDS: dict[str, tuple[Callable[[Context], Result], list[str], str]] = {
    "pair": (cmd_pair, ["x", "y"], "lattice pairing of two coordinate vectors"),
    "chi": (cmd_chi, ["v", "w"], "Euler pairing chi(v, w) of two Mukai vectors"),
    "from-chern": (cmd_from_chern, ["chern"], 'Mukai vector from {"r", "d", "eps", "c2"}'),
    "dual": (cmd_dual, ["v"], "Mukai vector of the dual"),
    "twist": (cmd_twist, ["v", "m"], "twist by a line bundle"),
    "reflect": (cmd_reflect, ["v"], "reflection R(v), closed form"),
    "reflect-seq": (cmd_reflect_seq, ["v"], "reflection through the exact sequences"),
    "pullback": (cmd_pullback, ["v"], "pullback to the K3 double cover"),
    "is-exceptional": (cmd_is_exceptional, ["v"], "r > 0 and v^2 = 1"),
    "find-polarization": (cmd_find_polarization, ["v"], "ample H' with gcd(H'.D, r) = 1"),
    "isotropic-seq": (cmd_isotropic_seq, [], "search for an isotropic sequence"),
    "check-collection": (cmd_check_collection, ["vectors"], "chi-level exceptional collection check"),
    "rr": (cmd_rr, ["divisor"], "chi(O(D)) = 1 + D^2/2"),
    "classify": (cmd_classify, ["divisor"], "irreducible or k times a genus one pencil"),
    "ample-criteria": (cmd_ample_criteria, ["divisor"], "nef and D^2 >= 6 criteria"),
    "gallery": (cmd_gallery, [], "recompute the worked reflection examples"),
}


def _add_common(p: argparse.ArgumentParser, default: Any) -> None:
    p.add_argument("--lattice", default=default, help="Gram matrix file (default: E10 preset)")
    p.add_argument("--test-set", default=default, help="curve test set JSON (default: ten half-pencils)")
    p.add_argument(
        "--kmax", type=int, default=DEFAULT_KMAX if default is None else default, help="k budget"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mukai-enriques",
        description="Exact Mukai-lattice calculus on Enriques surfaces. Inputs are inline JSON or file paths.",
    )
    _add_common(parser, None)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, positionals, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common])
        for pos in positionals:
            sp.add_argument(pos)
        if name == "find-polarization":
            sp.add_argument("hseed", nargs="?", default=None, help="ample seed divisor (default: cone_ref)")
        if name == "isotropic-seq":
            sp.add_argument("--length", type=int, default=10)
            sp.add_argument("--bound", type=int, default=2)
    return parser


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        ctx = Context(args)
        return handler(ctx)
    except (BudgetExceededError, NotFoundError) as exc:
        return {"error": str(exc), "invariant": exc.invariant}, EXIT_FAIL
    except MukaiError as exc:
        out = {"error": str(exc), "invariant": exc.invariant}
        if isinstance(exc, jsonio.InputError):
            out["field"] = exc.field
        return out, EXIT_INPUT
    except (OSError, ValueError) as exc:
        return {"error": str(exc), "invariant": "input"}, EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    out, code = run(argv)
    if "error" in out:
        print(f"error: {out['error']}", file=sys.stderr)
    sys.stdout.write(json.dumps(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
