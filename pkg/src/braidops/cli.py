"""Command-line entry point exposing every subsystem for batch computation.

Exit codes: 0 success (or property verified), 1 verification failure,
2 usage error.  All JSON output is key-sorted so identical inputs produce
byte-identical results.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import braids, chords, colored, trees
from .associator import (
    Associator,
    associator_from_json,
    associator_to_json,
    check_hexagons,
    check_pentagon,
    grouplike_residual,
    phi_eval,
    solve_associator,
)
from .chords import DKElement, dk_from_json, dk_insert, dk_restrict, dk_to_json, format_dk
from .coherence import (
    CoherenceTypeError,
    algebra_from_json,
    build_s3_discrete,
    build_z2_discrete,
    build_z2_graded,
    check_coherence,
)
from .diagrams import check_papb_coherence
from .mixed import PaPBPrimeElement, apply_phi, compose_prime, rho
from .parenthesized import (
    PaBMorphism,
    PaPBAlgebra,
    decompose,
    evaluate_word,
    papb_from_json,
    papb_to_json,
    to_generator_word,
    word_to_sexpr,
)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _read_json(args) -> dict:
    if args.infile and args.infile != "-":
        with open(args.infile) as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _pab_from_json(data: dict) -> PaBMorphism:
    return PaBMorphism(trees.parse_tree(data["src"]), trees.parse_tree(data["tgt"]),
                       braids.braid_from_json(data["braid"]))


def _pab_to_json(mor: PaBMorphism) -> dict:
    return {"src": trees.show_tree(mor.src), "tgt": trees.show_tree(mor.tgt),
            "braid": braids.braid_to_json(mor.braid)}


def _element_from_json(data: dict) -> PaPBPrimeElement:
    return PaPBPrimeElement(trees.parse_tree(data["u_src"]), trees.parse_tree(data["u_tgt"]),
                            _pab_from_json(data["x"]),
                            trees.parse_tree(data["mu_src"]), trees.parse_tree(data["mu_tgt"]))


def _element_to_json(e: PaPBPrimeElement) -> dict:
    return {"u_src": trees.show_tree(e.u_src), "u_tgt": trees.show_tree(e.u_tgt),
            "x": _pab_to_json(e.x),
            "mu_src": trees.show_tree(e.mu_src), "mu_tgt": trees.show_tree(e.mu_tgt)}


# -- braid ----------------------------------------------------------------------


def cmd_braid_eq(args) -> int:
    a = braids.parse_braid(args.word1, args.strands)
    b = braids.parse_braid(args.word2, args.strands)
    equal = braids.braids_equal(a, b)
    _emit(args, {"equal": equal}, "equal" if equal else "not equal")
    return 0 if equal else 1


def cmd_braid_perm(args) -> int:
    b = braids.parse_braid(args.word, args.strands)
    perm = b.permutation()
    _emit(args, {"images": list(perm.images)},
          " ".join(f"{i}->{perm(i)}" for i in range(1, args.strands + 1)))
    return 0


def cmd_braid_cable(args) -> int:
    b = braids.parse_braid(args.word, args.strands)
    out = braids.cable(b, args.position, args.width)
    _emit(args, braids.braid_to_json(out),
          f"{braids.format_braid(out)} on {out.strands} strands")
    return 0


# -- tree -----------------------------------------------------------------------


def cmd_tree_graft(args) -> int:
    outer = trees.parse_tree(args.outer)
    inner = trees.parse_tree(args.inner)
    kind, slot = args.slot[0], int(args.slot[1:])
    if kind == "c":
        out = trees.graft_closed(outer, slot, inner)
    elif kind == "o":
        out = trees.graft_open(outer, slot, inner)
    else:
        raise SystemExit(2)
    _emit(args, {"tree": trees.show_tree(out)}, trees.show_tree(out))
    return 0


def cmd_tree_omega(args) -> int:
    ob = trees.omega(trees.parse_tree(args.tree))
    _emit(args, colored.shuffle_object_to_json(ob), str(ob))
    return 0


def cmd_tree_enum(args) -> int:
    items = trees.enumerate_trees(args.open, args.closed, args.units)
    payload = {"count": len(items), "trees": sorted(trees.show_tree(t) for t in items)}
    _emit(args, payload, "\n".join(payload["trees"] + [f"count: {len(items)}"]))
    return 0


# -- copb -----------------------------------------------------------------------


def cmd_copb_compose(args) -> int:
    data = _read_json(args)
    f = colored.copb_from_json(data["f"])
    g = colored.copb_from_json(data["g"])
    out = colored.copb_compose(g, f)
    _emit(args, colored.copb_to_json(out), json.dumps(colored.copb_to_json(out), sort_keys=True))
    return 0


def cmd_copb_insert(args) -> int:
    data = _read_json(args)
    outer = colored.copb_from_json(data["outer"])
    if data["color"] == "c":
        inner = colored.CoBMorphism(tuple(data["inner"]["src"]), tuple(data["inner"]["tgt"]),
                                    braids.braid_from_json(data["inner"]["braid"]))
        out = colored.copb_insert_closed(outer, int(data["slot"]), inner)
    else:
        out = colored.copb_insert_open(outer, int(data["slot"]),
                                       colored.copb_from_json(data["inner"]))
    _emit(args, colored.copb_to_json(out), json.dumps(colored.copb_to_json(out), sort_keys=True))
    return 0


def cmd_copb_restrict(args) -> int:
    data = _read_json(args)
    mor = colored.copb_from_json(data["morphism"])
    if data["which"] == "c":
        out = colored.restrict_unit_closed(mor, int(data["slot"]))
    else:
        out = colored.restrict_unit_open(mor, int(data["slot"]))
    _emit(args, colored.copb_to_json(out), json.dumps(colored.copb_to_json(out), sort_keys=True))
    return 0


# -- papb -----------------------------------------------------------------------


def cmd_papb_decompose(args) -> int:
    mor = papb_from_json(_read_json(args))
    mu, x_open, x_closed, mu_prime = decompose(mor)
    payload = {
        "mu": papb_to_json(mu),
        "mu_prime": papb_to_json(mu_prime),
        "x_open": None if x_open is None else
        {"src": trees.show_tree(x_open[0]), "tgt": trees.show_tree(x_open[1])},
        "x_closed": None if x_closed is None else _pab_to_json(x_closed),
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_papb_words(args) -> int:
    mor = papb_from_json(_read_json(args))
    word = to_generator_word(mor)
    ok = evaluate_word(word, PaPBAlgebra()).equals(mor)
    payload = {"word": word_to_sexpr(word), "self_evaluation": ok}
    _emit(args, payload, payload["word"])
    return 0 if ok else 1


def cmd_papb_selftest(args) -> int:
    results = check_papb_coherence()
    for name in sorted(results):
        print(f"{name}: {'ok' if results[name] else 'FAIL'}")
    return 0 if all(results.values()) else 1


# -- cd -------------------------------------------------------------------------


def cmd_cd_normalize(args) -> int:
    e = dk_from_json(_read_json(args))
    _emit(args, dk_to_json(e), format_dk(e))
    return 0


def cmd_cd_insert(args) -> int:
    data = _read_json(args)
    out = dk_insert(dk_from_json(data["outer"]), int(data["strand"]),
                    dk_from_json(data["inner"]))
    _emit(args, dk_to_json(out), format_dk(out))
    return 0


def cmd_cd_restrict(args) -> int:
    data = _read_json(args)
    out = dk_restrict(dk_from_json(data["element"]), int(data["strand"]))
    _emit(args, dk_to_json(out), format_dk(out))
    return 0


def cmd_cd_dims(args) -> int:
    dim = chords.dimension_of_degree(args.strands, args.degree)
    _emit(args, {"dimension": dim}, str(dim))
    return 0


# -- assoc ----------------------------------------------------------------------


def cmd_assoc_solve(args) -> int:
    assoc = solve_associator(args.mu, args.degree)
    print(json.dumps(associator_to_json(assoc), sort_keys=True))
    return 0


def cmd_assoc_check(args) -> int:
    assoc = associator_from_json(_read_json(args))
    pent = check_pentagon(assoc)
    h1, h2 = check_hexagons(assoc)
    grp = grouplike_residual(assoc)
    ok = pent.is_zero() and h1.is_zero() and h2.is_zero() and not grp
    if args.json:
        print(json.dumps({"pentagon": format_dk(pent), "hexagon1": format_dk(h1),
                          "hexagon2": format_dk(h2), "grouplike": not grp,
                          "valid": ok}, sort_keys=True))
    else:
        print(f"pentagon: {format_dk(pent)}, hexagon1: {format_dk(h1)}, "
              f"hexagon2: {format_dk(h2)}")
    return 0 if ok else 1


def cmd_assoc_eval(args) -> int:
    data = _read_json(args)
    assoc = associator_from_json(data["associator"])
    mor = _pab_from_json(data["morphism"])
    out = phi_eval(assoc, mor)
    _emit(args, dk_to_json(out.element), format_dk(out.element))
    return 0


# -- mixed ----------------------------------------------------------------------


def cmd_mixed_rho(args) -> int:
    e = _element_from_json(_read_json(args))
    sh = rho(e)
    payload = {"shifted": sh.shifted, "ordinary": sh.ordinary,
               "payload": _pab_to_json(sh.payload)}
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_mixed_compose(args) -> int:
    data = _read_json(args)
    outer = _element_from_json(data["outer"])
    inners = [_element_from_json(d) for d in data["inners"]]
    out = compose_prime(outer, inners)
    print(json.dumps(_element_to_json(out), sort_keys=True))
    return 0


def cmd_mixed_apply_phi(args) -> int:
    data = _read_json(args)
    assoc = associator_from_json(data["associator"])
    e = _element_from_json(data["element"])
    out = apply_phi(assoc, e)
    payload = {"u_src": trees.show_tree(out.u_src), "u_tgt": trees.show_tree(out.u_tgt),
               "alpha": {"src": trees.show_tree(out.alpha.src),
                         "tgt": trees.show_tree(out.alpha.tgt),
                         "element": dk_to_json(out.alpha.element)},
               "mu_src": trees.show_tree(out.mu_src), "mu_tgt": trees.show_tree(out.mu_tgt)}
    print(json.dumps(payload, sort_keys=True))
    return 0


# -- voronov / coherence ----------------------------------------------------------


def cmd_voronov_check(args) -> int:
    from .chords import grouplike_check
    from .voronov import PaPOperad, build_cd_pap_instance

    vp = build_cd_pap_instance(args.degree)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        m1 = rng.randint(1, 2)
        prim = DKElement.zero(m1, args.degree)
        for (i, j) in chords.dk_generators(m1):
            prim = prim + DKElement.generator(m1, args.degree, i, j).scale(rng.randint(-2, 2))
        p1 = prim.exp()
        e = vp.make(p1, PaPOperad().identity(1))
        if not vp.equal(vp.insert_open(e, 1, vp.identity_open()), e):
            failures += 1
        if not vp.equal(vp.insert_closed(e, 1, vp.identity_closed()), e):
            failures += 1
        if not grouplike_check(vp.insert_open(e, 1, e).p_part):
            failures += 1
    print(f"voronov axiom suite: {args.count} instances, {failures} failures")
    return 0 if failures == 0 else 1


def cmd_coherence_check(args) -> int:
    if args.builtin:
        data = {"z2": build_z2_discrete, "z2-graded": build_z2_graded,
                "s3": build_s3_discrete}[args.builtin]()
    else:
        data = algebra_from_json(_read_json(args))
    try:
        report = check_coherence(data, strict_units=args.strict_units)
    except CoherenceTypeError as exc:
        print(f"rejected at typing: {exc}")
        return 1
    for name in sorted(report.families):
        fails = report.families[name]
        print(f"{name}: {'ok' if not fails else 'FAIL'} "
              f"({report.instances_checked[name]} instances)")
        for idx, key in fails:
            print(f"  failing instance {idx} at {key}")
    return 0 if report.passed else 1


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidops",
                                     description="exact workbench for braid, chord and "
                                                 "coherence computations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def add_infile(p):
        p.add_argument("--in", dest="infile", default="-", help="input file (default stdin)")
        add_json(p)

    braid = sub.add_parser("braid").add_subparsers(dest="sub", required=True)
    p = braid.add_parser("eq")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--strands", type=int, required=True)
    add_json(p)
    p.set_defaults(fn=cmd_braid_eq)
    p = braid.add_parser("perm")
    p.add_argument("word")
    p.add_argument("--strands", type=int, required=True)
    add_json(p)
    p.set_defaults(fn=cmd_braid_perm)
    p = braid.add_parser("cable")
    p.add_argument("word")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--position", type=int, required=True)
    p.add_argument("--width", type=int, required=True)
    add_json(p)
    p.set_defaults(fn=cmd_braid_cable)

    tree = sub.add_parser("tree").add_subparsers(dest="sub", required=True)
    p = tree.add_parser("graft")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--slot", required=True, help="e.g. c2 or o1")
    add_json(p)
    p.set_defaults(fn=cmd_tree_graft)
    p = tree.add_parser("omega")
    p.add_argument("tree")
    add_json(p)
    p.set_defaults(fn=cmd_tree_omega)
    p = tree.add_parser("enum")
    p.add_argument("--open", type=int, required=True)
    p.add_argument("--closed", type=int, required=True)
    p.add_argument("--units", action="store_true")
    add_json(p)
    p.set_defaults(fn=cmd_tree_enum)

    copb = sub.add_parser("copb").add_subparsers(dest="sub", required=True)
    for name, fn in (("compose", cmd_copb_compose), ("insert", cmd_copb_insert),
                     ("restrict", cmd_copb_restrict)):
        p = copb.add_parser(name)
        add_infile(p)
        p.set_defaults(fn=fn)

    papb = sub.add_parser("papb").add_subparsers(dest="sub", required=True)
    p = papb.add_parser("decompose")
    add_infile(p)
    p.set_defaults(fn=cmd_papb_decompose)
    p = papb.add_parser("words")
    add_infile(p)
    p.set_defaults(fn=cmd_papb_words)
    p = papb.add_parser("coherence-selftest")
    add_json(p)
    p.set_defaults(fn=cmd_papb_selftest)

    cd = sub.add_parser("cd").add_subparsers(dest="sub", required=True)
    for name, fn in (("normalize", cmd_cd_normalize), ("insert", cmd_cd_insert),
                     ("restrict", cmd_cd_restrict)):
        p = cd.add_parser(name)
        add_infile(p)
        p.set_defaults(fn=fn)
    p = cd.add_parser("dims")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    add_json(p)
    p.set_defaults(fn=cmd_cd_dims)

    assoc = sub.add_parser("assoc").add_subparsers(dest="sub", required=True)
    p = assoc.add_parser("solve")
    p.add_argument("--mu", default="1")
    p.add_argument("--degree", type=int, default=3)
    add_json(p)
    p.set_defaults(fn=cmd_assoc_solve)
    p = assoc.add_parser("check")
    add_infile(p)
    p.set_defaults(fn=cmd_assoc_check)
    p = assoc.add_parser("eval")
    add_infile(p)
    p.set_defaults(fn=cmd_assoc_eval)

    mixed = sub.add_parser("mixed").add_subparsers(dest="sub", required=True)
    for name, fn in (("rho", cmd_mixed_rho), ("compose", cmd_mixed_compose),
                     ("apply-phi", cmd_mixed_apply_phi)):
        p = mixed.add_parser(name)
        add_infile(p)
        p.set_defaults(fn=fn)

    vor = sub.add_parser("voronov").add_subparsers(dest="sub", required=True)
    p = vor.add_parser("check")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    add_json(p)
    p.set_defaults(fn=cmd_voronov_check)

    coh = sub.add_parser("coherence").add_subparsers(dest="sub", required=True)
    p = coh.add_parser("check")
    p.add_argument("--builtin", choices=("z2", "z2-graded", "s3"))
    p.add_argument("--strict-units", action="store_true",
                   help="also require strict units preserved by the comparison functor")
    add_infile(p)
    p.set_defaults(fn=cmd_coherence_check)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, AssertionError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
