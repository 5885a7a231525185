"""Command line interface.

Exit status: 0 when every check passes, 1 when a mathematical check
fails, 2 when the input cannot be read or does not fit the schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from .action import ActionError, AssumptionError, choose_representatives, classify_arrow, validate_action
from .canvas import build_canvas, homology
from .cuts import CutError, enumerate_cuts, has_enough_cuts, induce_cut, is_cut, is_G_invariant, truncated_presentation
from .cyclo import OrderMismatchError
from .gen import FIXTURES, TensorError, fixture, gen_tensor, gen_type_a
from .io import (FormatError, action_from_json, action_to_json, dumps, qp_from_json, qp_to_json,
                 quiver_from_json, quiver_to_json, skew_provenance, to_dot)
from .qp import QuiverError
from .sga import verify_generator_identities
from .skew import build_skew_qp, dual_action, roundtrip

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def split_ids(text: str) -> list[str]:
    """Split on commas that are not inside brackets, so "(0,0,3)" stays whole."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def _load_qp(path: str):
    return qp_from_json(_load_json(path))


def _load_qp_action(args):
    w = _load_qp(args.qp)
    g = action_from_json(_load_json(args.action), w.quiver)
    zo = getattr(args, "zeta_order", None)
    if zo is not None and zo != g.order:
        raise InputError(f"--zeta-order {zo} does not match the action order {g.order}")
    if w.order != g.order:
        if all(c.is_rational() for _, c in w.items()):
            w = w.with_order(g.order)
        else:
            raise InputError(f"potential is over Q(zeta_{w.order}) but the action has order {g.order}")
    reps = None
    if getattr(args, "reps", None):
        try:
            reps = choose_representatives(g, split_ids(args.reps))
        except ValueError as e:
            raise InputError(f"--reps: {e}") from None
    return w, g, reps


def _emit(args, text: str, payload):
    if getattr(args, "json", False):
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_validate(args) -> int:
    w, g, _ = _load_qp_action(args)
    report = validate_action(w, g)
    text = str(report) + f"\nassumptions: {'PASS' if report.ok else 'FAIL'}"
    _emit(args, text, {"ok": report.ok, "checks": report.to_dict()})
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_skew(args) -> int:
    w, g, reps = _load_qp_action(args)
    sk = build_skew_qp(w, g, reps)
    qp = qp_to_json(sk.potential)
    prov = skew_provenance(sk)
    if args.out:
        FilePath(args.out).write_text(dumps(qp))
        prov_path = args.provenance or str(FilePath(args.out).with_suffix("")) + ".provenance.json"
        FilePath(prov_path).write_text(dumps(prov))
    else:
        sys.stdout.write(dumps(qp))
        if args.provenance:
            FilePath(args.provenance).write_text(dumps(prov))
    if args.dual:
        FilePath(args.dual).write_text(dumps(action_to_json(dual_action(sk))))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    w, g, reps = _load_qp_action(args)
    rt = roundtrip(w, g, reps)
    chi_ok = validate_action(rt.skew.potential, rt.dual).ok
    lines = [
        f"Q_G: {len(rt.skew.quiver.vertices)} vertices, {len(rt.skew.quiver.arrows)} arrows, {len(rt.skew.potential)} cycles",
        f"dual action valid: {str(chi_ok).lower()}",
        f"phi is a quiver isomorphism: {str(rt.is_isomorphism).lower()}",
        f"phi(W_G_hat) == W: {str(rt.match).lower()}",
    ]
    payload = {"dual_action_valid": chi_ok, "isomorphism": rt.is_isomorphism, "match": rt.match,
               "phi": {"vertices": rt.vertex_map, "arrows": rt.arrow_map}}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if rt.match and chi_ok else EXIT_FAIL


def cmd_verify(args) -> int:
    w, g, reps = _load_qp_action(args)
    sk = build_skew_qp(w, g, reps)
    report = verify_generator_identities(sk)
    rows, payload = [], []
    width = max((len(c.arrow) for c in report.checks), default=5)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        rows.append(f"{c.arrow:<{width}}  type {c.kind}  {status}  {c.form}")
        entry = {"arrow": c.arrow, "type": c.kind, "form": c.form, "passed": c.passed}
        if not c.passed:
            rows.append(f"    lhs - rhs = {c.difference()}")
            entry["difference"] = str(c.difference())
        payload.append(entry)
    rows.append(f"identities: {'PASS' if report.ok else 'FAIL'} ({len(report.checks)} checks)")
    _emit(args, "\n".join(rows), {"ok": report.ok, "checks": payload})
    return EXIT_OK if report.ok else EXIT_FAIL


def _cut_arg(args, q):
    if not args.cut:
        raise InputError("--cut is required")
    cut = split_ids(args.cut)
    unknown = [a for a in cut if a not in q.arrows]
    if unknown:
        raise InputError(f"--cut mentions unknown arrows {unknown}")
    return frozenset(cut)


def cmd_cuts(args) -> int:
    if args.cuts_cmd == "list":
        w = _load_qp(args.qp)
        g = action_from_json(_load_json(args.action), w.quiver) if args.action else None
        if g is not None and w.order != g.order:
            w = w.with_order(g.order)
        cuts = enumerate_cuts(w, g)
        enough = has_enough_cuts(w, g)
        lines = [",".join(sorted(c)) for c in cuts]
        kind = "G-invariant cuts" if g else "cuts"
        lines.append(f"{len(cuts)} {kind}; enough {kind}: {'yes' if enough else 'no'}")
        _emit(args, "\n".join(lines), {"cuts": [sorted(c) for c in cuts], "enough": enough})
        return EXIT_OK
    if args.cuts_cmd == "induce":
        w, g, reps = _load_qp_action(args)
        cut = _cut_arg(args, w.quiver)
        if not is_cut(w, cut) or not is_G_invariant(cut, g):
            print("input is not a G-invariant cut", file=sys.stderr)
            return EXIT_FAIL
        sk = build_skew_qp(w, g, reps)
        cg = induce_cut(cut, sk)
        ok = is_cut(sk.potential, cg)
        ordered = [a for a in sk.quiver.arrows if a in cg]
        _emit(args, ",".join(ordered) + f"\ninduced cut is a cut: {str(ok).lower()}",
              {"cut": ordered, "is_cut": ok})
        return EXIT_OK if ok else EXIT_FAIL
    w = _load_qp(args.qp)
    cut = _cut_arg(args, w.quiver)
    if not is_cut(w, cut):
        print("input is not a cut", file=sys.stderr)
        return EXIT_FAIL
    tp = truncated_presentation(w, cut)
    out = quiver_to_json(tp.quiver)
    out["relations"] = [
        {"arrow": a, "relation": [{"path": list(p.arrows), "coeff": c.to_terms()} for p, c in rel.items()]}
        for a, rel in tp.relations
    ]
    out["zeta_order"] = w.order
    sys.stdout.write(dumps(out))
    return EXIT_OK


def cmd_canvas(args) -> int:
    if args.action:
        w, g, reps = _load_qp_action(args)
        if args.skew:
            w = build_skew_qp(w, g, reps).potential
    else:
        w = _load_qp(args.qp)
    c = build_canvas(w)
    h = homology(c)
    lines = [
        f"cells: {len(c.vertices)} / {len(c.edges)} / {len(c.faces)}",
        f"euler characteristic: {c.euler_characteristic}",
        f"betti numbers: b0={h.b0} b1={h.b1} b2={h.b2}",
        f"H1 torsion: {list(h.torsion) if h.torsion else 'none'}",
        f"H1 = 0: {str(h.h1_trivial).lower()} (necessary, not sufficient, for simple connectivity)",
    ]
    payload = {"cells": [len(c.vertices), len(c.edges), len(c.faces)], "euler": c.euler_characteristic,
               "betti": [h.b0, h.b1, h.b2], "torsion": list(h.torsion), "h1_trivial": h.h1_trivial}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _write_bundle(args, b) -> int:
    qp, act = qp_to_json(b.potential), action_to_json(b.action)
    extra = {}
    if b.reps is not None:
        extra["representatives"] = list(b.reps.all)
    if b.cuts:
        extra["cuts"] = {k: sorted(v) for k, v in b.cuts.items()}
    if args.out:
        FilePath(args.out + ".qp.json").write_text(dumps(qp))
        FilePath(args.out + ".action.json").write_text(dumps(act))
        if extra:
            FilePath(args.out + ".extra.json").write_text(dumps(extra))
    else:
        sys.stdout.write(dumps({"qp": qp, "action": act, **extra}))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.gen_cmd == "typeA":
        if args.s < 1:
            raise InputError("--s must be at least 1")
        return _write_bundle(args, gen_type_a(args.s))
    if args.gen_cmd == "fixture":
        return _write_bundle(args, fixture(args.name))
    factors = []
    for qf, gf in ((args.q1, args.inv1), (args.q2, args.inv2)):
        q = quiver_from_json(_load_json(qf), connected=False)
        factors.append(action_from_json(_load_json(gf), q))
    try:
        b = gen_tensor(*factors)
    except TensorError as e:
        raise InputError(f"{e} (witness {e.witness!r})" if e.witness else str(e)) from None
    return _write_bundle(args, b)


def cmd_export(args) -> int:
    w = _load_qp(args.qp)
    highlight = set(split_ids(args.cut)) if args.cut else set()
    if not args.action:
        sys.stdout.write(to_dot(w.quiver, highlight=highlight))
        return EXIT_OK
    w, g, reps = _load_qp_action(args)
    sk = build_skew_qp(w, g, reps) if args.skew else None
    if sk is None:
        reps = reps or choose_representatives(g)
        labels = {}
        for a in w.quiver.arrows:
            c = classify_arrow(g, reps, a)
            labels[a] = f"{a} [type {c.kind}]" if c.kind else f"{a} [orbit of {c.rep}]"
        sys.stdout.write(to_dot(w.quiver, labels, highlight))
        return EXIT_OK
    labels = {}
    for lab, (a, _) in sk.arrow_origin.items():
        labels[lab] = f"{lab} [type {sk.arrow_classes[a].kind}]"
    if highlight:
        highlight = set(induce_cut(highlight, sk))
    sys.stdout.write(to_dot(sk.quiver, labels, highlight, name="Q_G"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewqp", description="Skew group quivers with potential for cyclic actions.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def qp_action(sp, action_required=True):
        sp.add_argument("qp", help="quiver with potential (JSON)")
        if action_required:
            sp.add_argument("action", help="cyclic action (JSON)")
        sp.add_argument("--reps", help="representative vertices, comma separated")
        sp.add_argument("--zeta-order", type=int, help="expected order of the action")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("validate", help="check the standing assumptions on an action")
    qp_action(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("skew", help="build the skew group QP")
    qp_action(sp)
    sp.add_argument("-o", "--out", help="write the skew QP here instead of stdout")
    sp.add_argument("--provenance", help="write the label provenance sidecar here")
    sp.add_argument("--dual", help="write the dual action here")
    sp.set_defaults(func=cmd_skew)

    sp = sub.add_parser("roundtrip", help="apply the construction twice and compare with the input")
    qp_action(sp)
    sp.set_defaults(func=cmd_roundtrip)

    sp = sub.add_parser("verify", help="check the generator identities in the skew group algebra")
    qp_action(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cuts", help="cuts of a potential")
    cs = sp.add_subparsers(dest="cuts_cmd", required=True)
    c1 = cs.add_parser("list", help="enumerate cuts (G-invariant with --action)")
    c1.add_argument("qp")
    c1.add_argument("--action")
    c1.add_argument("--json", action="store_true")
    c2 = cs.add_parser("induce", help="induced cut on the skew QP")
    qp_action(c2)
    c2.add_argument("--cut")
    c3 = cs.add_parser("truncate", help="truncated Jacobian presentation")
    c3.add_argument("qp")
    c3.add_argument("--cut")
    sp.set_defaults(func=cmd_cuts)

    sp = sub.add_parser("canvas", help="cell counts, Euler characteristic and homology")
    sp.add_argument("qp")
    sp.add_argument("action", nargs="?")
    sp.add_argument("--skew", action="store_true", help="use the skew QP (needs the action)")
    sp.add_argument("--reps")
    sp.add_argument("--zeta-order", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_canvas)

    sp = sub.add_parser("gen", help="generate example QPs")
    gs = sp.add_subparsers(dest="gen_cmd", required=True)
    g1 = gs.add_parser("typeA", help="triangle quiver Q^(s) with its rotation")
    g1.add_argument("--s", type=int, required=True)
    g1.add_argument("-o", "--out", help="file prefix for .qp.json and .action.json")
    g2 = gs.add_parser("tensor", help="tensor product of two acyclic quivers")
    for k in ("--q1", "--q2", "--inv1", "--inv2"):
        g2.add_argument(k, required=True)
    g2.add_argument("-o", "--out")
    g3 = gs.add_parser("fixture", help="a bundled example")
    g3.add_argument("name", choices=sorted(FIXTURES))
    g3.add_argument("-o", "--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("export", help="Graphviz rendering of Q or Q_G")
    sp.add_argument("qp")
    sp.add_argument("action", nargs="?")
    sp.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    sp.add_argument("--skew", action="store_true", help="render the skew quiver")
    sp.add_argument("--cut", help="arrows to draw dashed")
    sp.add_argument("--reps")
    sp.add_argument("--zeta-order", type=int)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        if getattr(args, "skew", False) and not getattr(args, "action", None):
            raise InputError("--skew needs an action file")
        return args.func(args)
    except (InputError, FormatError, ActionError, QuiverError, OrderMismatchError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (AssumptionError, CutError) as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
