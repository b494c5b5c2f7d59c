"""Batch command line front end (installed as ``operad-forge``).

Verbs cover enumeration, differentials, homology summaries, the three
verification suites, DOT export, and the CSV+PNG report writer.  Output is
line-oriented JSON unless ``--format table`` asks for something readable.
Exit codes: 0 success, 1 a verification found a violation, 2 bad usage or
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import homology, morphism, reporting, trees
from .differential import d_sum, d_tree

USAGE_VERBS = (
    "enumerate", "fvector", "betti", "diff", "d-squared",
    "verify-ocha", "verify-mu", "verify-oc", "export-dot", "report",
)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="operad-forge",
        description="exact computations in the two-coloured tree operad")
    sub = top.add_subparsers(dest="verb", metavar="|".join(USAGE_VERBS))

    def add(name, help_, *, p=False, q=False, n=False, fmt=False,
            inp=False, max_arity=False, max_word=False, outdir=False):
        sp = sub.add_parser(name, help=help_)
        if p:
            sp.add_argument("--p", type=int, default=None,
                            help="number of spatial leaves")
        if q:
            sp.add_argument("--q", type=int, default=None,
                            help="number of planar leaves")
        if n:
            sp.add_argument("--n", type=int, default=None,
                            help="spatial arity (single-colour strata)")
        if fmt:
            sp.add_argument("--format", choices=("json", "dot", "table"),
                            default="json")
        if inp:
            sp.add_argument("--input", default=None,
                            help="path to a JSON file (tree or family)")
        if max_arity:
            sp.add_argument("--max-arity", type=int, default=4)
        if max_word:
            sp.add_argument("--max-word", type=int, default=4)
        if outdir:
            sp.add_argument("--outdir", default=".")
        return sp

    add("enumerate", "list canonical trees of one stratum",
        p=True, q=True, n=True, fmt=True)
    add("fvector", "stratum counts by codimension", p=True, q=True, fmt=True)
    add("betti", "exact Betti numbers of one mixed stratum",
        p=True, q=True, fmt=True)
    add("diff", "differential of a tree (corolla or --input file)",
        p=True, q=True, n=True, fmt=True, inp=True)
    add("d-squared", "verify d² = 0 on one stratum",
        p=True, q=True, n=True)
    add("verify-ocha", "check a structure-constant family two ways",
        inp=True, max_word=True)
    add("verify-mu", "projection checks: chain map, module action, basis",
        p=True, q=True, max_arity=True)
    add("verify-oc", "class-level relations among the generators",
        max_arity=True)
    add("export-dot", "Graphviz drawing of a tree", p=True, q=True, n=True,
        inp=True)
    add("report", "CSV summary plus PNG charts for one stratum",
        p=True, q=True, outdir=True)
    return top


def _emit(doc, fmt="json"):
    if fmt == "table":
        if isinstance(doc, dict):
            for k, v in doc.items():
                print(f"{k}: {v}")
        else:
            print(doc)
    else:
        print(json.dumps(doc))


def _fail(parser, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    parser.print_usage(sys.stderr)
    return 2


def _load_tree(path):
    with open(path) as fh:
        doc = json.load(fh)
    if isinstance(doc, dict) and "tree" in doc:
        doc = doc["tree"]
    sign, t = trees.from_json_dict(doc)
    return sign, t


def _pick_stratum(args, parser, need_tree=False):
    """(kind, trees) for --p/--q vs --n, or None + exit code on bad combos."""
    has_pq = args.p is not None and args.q is not None
    has_n = getattr(args, "n", None) is not None
    if has_pq == has_n:
        return None, _fail(parser, "give either --p and --q, or --n")
    if has_n:
        return ("spatial", trees.enumerate_spatial_rooted(args.n)), 0
    return ("mixed", trees.enumerate_planar_rooted(args.p, args.q)), 0


def _tree_doc(t):
    return {"tree": trees.to_json_dict(t), "text": trees.serialize(t),
            "codim": trees.internal_edge_count(t)}


def _cmd_enumerate(args, parser) -> int:
    stratum, code = _pick_stratum(args, parser)
    if stratum is None:
        return code
    _, pool = stratum
    if args.format == "table":
        for k, t in enumerate(pool):
            print(f"{k:4d}  codim {trees.internal_edge_count(t)}  "
                  f"{trees.serialize(t)}")
        print(f"total {len(pool)}")
    else:
        for t in pool:
            _emit(_tree_doc(t))
    return 0


def _cmd_fvector(args, parser) -> int:
    if args.p is None or args.q is None:
        return _fail(parser, "fvector needs --p and --q")
    doc = homology.complex_report(args.p, args.q)
    if args.format == "table":
        print(f"f-vector: {' '.join(map(str, doc['f_vector']))}")
        print(f"euler:    {doc['euler']}")
    else:
        _emit({"fvector": doc["f_vector"], "euler": doc["euler"]})
    return 0


def _cmd_betti(args, parser) -> int:
    if args.p is None or args.q is None:
        return _fail(parser, "betti needs --p and --q")
    bet = homology.betti(args.p, args.q)
    if args.format == "table":
        print(f"betti: {' '.join(map(str, bet))}")
    else:
        _emit({"betti": bet})
    return 0


def _input_tree(args, parser):
    """Tree from --input, or the corolla named by --p/--q/--n."""
    if args.input is not None:
        try:
            sign, t = _load_tree(args.input)
        except (OSError, ValueError, trees.TreeError) as exc:
            return None, _fail(parser, f"bad tree input: {exc}")
        if sign != 1:
            return None, _fail(parser, "input tree is not canonically sorted")
        return t, 0
    if getattr(args, "n", None) is not None:
        return trees.spatial_corolla(args.n), 0
    if args.p is not None and args.q is not None:
        return trees.mixed_corolla(args.p, args.q), 0
    return None, _fail(parser, "give --input, --n, or --p and --q")


def _cmd_diff(args, parser) -> int:
    t, code = _input_tree(args, parser)
    if t is None:
        return code
    terms = sorted(d_tree(t).items(), key=lambda kv: trees.serialize(kv[0]))
    if args.format == "table":
        for u, c in terms:
            print(f"{str(c):>4}  {trees.serialize(u)}")
    else:
        for u, c in terms:
            _emit({"tree": trees.to_json_dict(u), "text": trees.serialize(u),
                   "coef": str(c)})
    return 0


def _cmd_d_squared(args, parser) -> int:
    stratum, code = _pick_stratum(args, parser)
    if stratum is None:
        return code
    kind, pool = stratum
    bad = []
    for t in pool:
        if not d_sum(d_tree(t)).is_zero():
            bad.append(trees.serialize(t))
    doc = {"check": "d-squared", "stratum": kind, "trees": len(pool),
           "ok": not bad}
    if bad:
        doc["failures"] = bad[:10]
    _emit(doc)
    return 0 if not bad else 1


def _cmd_verify_ocha(args, parser) -> int:
    from .coderivation import check_equivalence, family_from_json
    if args.input is None:
        return _fail(parser, "verify-ocha needs --input <family.json>")
    try:
        with open(args.input) as fh:
            family = family_from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        return _fail(parser, f"bad family input: {exc}")
    rep = check_equivalence(family, max_word=args.max_word)
    _emit({"check": "ocha-equivalence", "max_word": rep.max_word,
           "relations_ok": rep.relations_ok,
           "min_relation_arity": rep.min_relation_arity,
           "d_squared_ok": rep.d_squared_ok,
           "min_word_length": rep.min_word_length,
           "detectors_agree": rep.equivalent})
    if not rep.equivalent:
        return 1    # the two detectors must never disagree
    return 0 if rep.relations_ok else 1


def _cmd_verify_mu(args, parser) -> int:
    bad = 0
    rep = morphism.check_chain_map()
    _emit({"check": "chain-map", "cases": rep["cases"],
           "literal_zero": rep["literal_zero"],
           "class_level_zero": rep["class_level_zero"],
           "failures": len(rep["failures"])})
    bad += len(rep["failures"])
    rep = morphism.check_module_morphism(bound=args.max_arity)
    _emit({"check": "module-morphism", "cases": rep["cases"],
           "failures": len(rep["failures"])})
    bad += len(rep["failures"])
    if args.p is not None and args.q is not None:
        rep = morphism.phi_basis(args.p, args.q).verify()
        _emit({"check": "phi-basis", "p": args.p, "q": args.q,
               "dims": rep["dims"], "betti": rep["betti"],
               "failures": len(rep["failures"])})
        bad += len(rep["failures"])
    return 0 if not bad else 1


def _cmd_verify_oc(args, parser) -> int:
    rep = morphism.verify_oc_relations(bound=args.max_arity)
    for w in rep["witnesses"]:
        _emit({"check": "oc-relation", "relation": w["relation"], "ok": True})
    for f in rep["failures"]:
        _emit({"check": "oc-relation", "relation": f.get("relation"),
               "ok": False})
    return 0 if not rep["failures"] else 1


def _cmd_export_dot(args, parser) -> int:
    t, code = _input_tree(args, parser)
    if t is None:
        return code
    sys.stdout.write(reporting.tree_to_dot(t))
    return 0


def _cmd_report(args, parser) -> int:
    if args.p is None or args.q is None:
        return _fail(parser, "report needs --p and --q")
    paths = reporting.write_report(args.p, args.q, args.outdir)
    for path in paths:
        _emit({"wrote": path})
    return 0


_DISPATCH = {
    "enumerate": _cmd_enumerate,
    "fvector": _cmd_fvector,
    "betti": _cmd_betti,
    "diff": _cmd_diff,
    "d-squared": _cmd_d_squared,
    "verify-ocha": _cmd_verify_ocha,
    "verify-mu": _cmd_verify_mu,
    "verify-oc": _cmd_verify_oc,
    "export-dot": _cmd_export_dot,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _DISPATCH[args.verb](args, parser)
    except trees.TreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
