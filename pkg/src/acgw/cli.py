"""Command-line interface.

Exit codes: 0 for success (including negative verdicts such as "not
exact"), 1 for semantic failures (invalid documents, unknown names,
unsupported capabilities), 2 for usage errors (bad arguments, missing
files).
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import ChainComplex
from .core import AcgwError, CapabilityError
from .documents import Document, ParseError, parse, serialize, validate_document
from .homology import (
    h_on_map,
    homology_obj,
    homology_size,
    is_exact,
    is_quasi_iso,
)
from .oracle import (
    GenConfig,
    gen_chain_map,
    gen_complex,
    gen_composable_chain_maps,
    gen_exact_complex,
    gen_hor_mor,
    gen_linear_complex,
    gen_ses,
    gen_snake_strong,
    gen_snake_weak,
    gen_ver_mor,
    rank_homology_dims,
)
from .render import render_dot
from .snake import (
    ExactZigzag,
    les_of_ses,
    snake_strong,
    snake_weak,
    validate_snake_strong,
    validate_snake_weak,
    zigzag_exactness,
    zigzag_is_exact,
)

__all__ = ["main"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Document:
    return parse(_read_text(path))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "output", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        doc = _load(args.file)
        problems = validate_document(doc)
    except ParseError as exc:
        problems = [str(exc)]
    payload = {"ok": not problems, "problems": problems}
    lines = problems if problems else ["ok"]
    _emit(args, payload, lines)
    return 0 if not problems else 1


def _selected_complexes(doc: Document, name: str | None) -> list[tuple[str, ChainComplex]]:
    if name is None:
        return list(doc.complexes)
    return [(name, doc.complex_named(name))]


def cmd_homology(args) -> int:
    doc = _load(args.file)
    inst = doc.inst
    lines: list[str] = []
    payload: dict = {}
    failed_law = False
    for name, cx in _selected_complexes(doc, args.name):
        record: dict = {"homology": {}, "size_law": True}
        for i in cx.degrees():
            h = homology_obj(cx, i)
            lines.append(f"H_{i}({name}) = {inst.obj_label(h)}")
            record["homology"][str(i)] = {
                "size": inst.obj_size(h),
                "label": inst.obj_label(h),
            }
            expected = (
                inst.obj_size(cx.obj(i))
                - inst.obj_size(cx.transition(i).obj)
                - inst.obj_size(cx.transition(i + 1).obj)
            )
            if inst.obj_size(h) != expected:
                record["size_law"] = False
        if record["size_law"]:
            lines.append(f"{name}: size law |H_i| = |X_i| - |T_i| - |T_i+1| holds")
        else:
            lines.append(f"{name}: size law VIOLATED")
            failed_law = True
        payload[name] = record
    _emit(args, payload, lines)
    return 1 if failed_law else 0


def cmd_exact(args) -> int:
    doc = _load(args.file)
    lines = []
    payload = {}
    for name, cx in _selected_complexes(doc, args.name):
        bad = [i for i in cx.degrees() if homology_size(cx, i) > 0]
        payload[name] = {"exact": not bad, "nonzero_degrees": bad}
        if bad:
            lines.append(f"{name}: not exact (homology at {', '.join(map(str, bad))})")
        else:
            lines.append(f"{name}: exact")
    _emit(args, payload, lines)
    return 0


def _zigzag_report(inst, zz: ExactZigzag) -> tuple[dict, list[str]]:
    lines = []
    flags = zigzag_exactness(zz)
    for j, obj in enumerate(zz.objects):
        if j in zz.non_exact_positions:
            verdict = "(exactness not claimed)"
        else:
            verdict = "exact" if flags[j] else "NOT exact"
        lines.append(f"{zz.labels[j]}: {inst.obj_label(obj)}  [{verdict}]")
        if j < len(zz.transitions):
            t = zz.transitions[j]
            lines.append(
                f"  --[{zz.transition_labels[j]}: {inst.obj_label(t.obj)}]-->"
            )
    ok = zigzag_is_exact(zz)
    lines.append(
        "zigzag exact at all claimed positions" if ok else "zigzag NOT exact"
    )
    payload = {
        "objects": [inst.obj_label(o) for o in zz.objects],
        "labels": list(zz.labels),
        "transition_objects": [inst.obj_label(t.obj) for t in zz.transitions],
        "exact_at": flags,
        "not_claimed": sorted(zz.non_exact_positions),
        "exact": ok,
    }
    return payload, lines


def cmd_snake(args) -> int:
    doc = _load(args.file)
    chosen: list[tuple[str, str]] = []
    for name, _ in doc.snakes_weak:
        chosen.append((name, "weak"))
    for name, _ in doc.snakes_strong:
        chosen.append((name, "strong"))
    if args.name is not None:
        chosen = [(n, k) for n, k in chosen if n == args.name]
        if not chosen:
            raise AcgwError(f"document has no snake named {args.name!r}")
    lines: list[str] = []
    payload: dict = {}
    status = 0
    for name, kind in chosen:
        lines.append(f"snake {kind} {name}:")
        if kind == "weak":
            inp = doc.snake_weak_named(name)
            problems = validate_snake_weak(inp)
        else:
            inp = doc.snake_strong_named(name)
            problems = validate_snake_strong(inp)
        if problems:
            payload[name] = {"problems": problems}
            lines += [f"  {p}" for p in problems]
            status = 1
            continue
        zz = snake_weak(inp) if kind == "weak" else snake_strong(inp)
        record, sub = _zigzag_report(doc.inst, zz)
        payload[name] = record
        lines += ["  " + s for s in sub]
    _emit(args, payload, lines)
    return status


def cmd_les(args) -> int:
    doc = _load(args.file)
    ses = doc.ses_named(args.ses)
    zz = les_of_ses(ses)
    payload, lines = _zigzag_report(doc.inst, zz)
    _emit(args, payload, lines)
    return 0


def cmd_map_homology(args) -> int:
    doc = _load(args.file)
    f = doc.map_named(args.map)
    inst = doc.inst
    degrees = [args.degree] if args.degree is not None else list(f.source.degrees())
    lines = []
    payload: dict = {"degrees": {}}
    for i in degrees:
        span = h_on_map(f, i)
        lines.append(
            f"H_{i}: {inst.obj_label(span.source)} <= "
            f"{inst.obj_label(span.middle)} -> {inst.obj_label(span.target)}"
        )
        payload["degrees"][str(i)] = {
            "source": inst.obj_label(span.source),
            "middle": inst.obj_label(span.middle),
            "target": inst.obj_label(span.target),
        }
    qiso = is_quasi_iso(f)
    payload["quasi_isomorphism"] = qiso
    lines.append(f"quasi-isomorphism: {'yes' if qiso else 'no'}")
    _emit(args, payload, lines)
    return 0


def cmd_oracle(args) -> int:
    doc = _load(args.file)
    lines = []
    payload = {}
    all_agree = True
    for name, cx in _selected_complexes(doc, args.name):
        by_rank = rank_homology_dims(cx)
        structural = {i: homology_size(cx, i) for i in cx.degrees()}
        agree = by_rank == structural
        all_agree = all_agree and agree
        payload[name] = {
            "rank": {str(i): v for i, v in by_rank.items()},
            "structural": {str(i): v for i, v in structural.items()},
            "agree": agree,
        }
        for i in cx.degrees():
            lines.append(
                f"{name} degree {i}: structural {structural[i]}, rank {by_rank[i]}"
            )
        if not agree:
            lines.append(f"{name}: MISMATCH between structural homology and ranks")
    lines.append(
        "oracle and framework agree at all degrees"
        if all_agree
        else "oracle and framework DISAGREE"
    )
    _emit(args, payload, lines)
    return 0 if all_agree else 1


def cmd_render(args) -> int:
    doc = _load(args.file)
    dot = render_dot(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


_GEN_KINDS = (
    "complex",
    "exact",
    "hor",
    "ver",
    "map",
    "pair",
    "ses",
    "snake-weak",
    "snake-strong",
)


def cmd_gen(args) -> int:
    cfg = GenConfig(
        seed=args.seed,
        max_size=args.size,
        instance=args.instance,
        prime=args.prime,
    )
    if args.instance == "linear" and args.kind not in ("complex", "exact"):
        print(
            f"gen --instance linear supports only --kind complex or exact, "
            f"not {args.kind!r}",
            file=sys.stderr,
        )
        return 2
    inst_doc: Document
    if args.kind in ("complex", "exact"):
        if args.instance == "linear":
            cx, _ = gen_linear_complex(cfg, exact=args.kind == "exact")
        elif args.kind == "complex":
            cx, _ = gen_complex(cfg)
        else:
            cx = gen_exact_complex(cfg)
        inst_doc = Document(
            cx.inst,
            args.instance,
            args.prime if args.instance == "linear" else 2,
            complexes=(("X", cx),),
        )
    elif args.kind == "hor":
        f = gen_hor_mor(cfg)
        inst_doc = Document(
            f.source.inst,
            "set",
            2,
            complexes=(("X", f.source), ("Y", f.target)),
            hors=(("f", f),),
        )
    elif args.kind == "ver":
        g = gen_ver_mor(cfg)
        inst_doc = Document(
            g.source.inst,
            "set",
            2,
            complexes=(("Z", g.source), ("Y", g.target)),
            vers=(("g", g),),
        )
    elif args.kind == "map":
        f = gen_chain_map(cfg)
        inst_doc = Document(
            f.source.inst,
            "set",
            2,
            complexes=(("X", f.source), ("Z", f.middle), ("Y", f.target)),
            maps=(("F", f),),
        )
    elif args.kind == "pair":
        f, g = gen_composable_chain_maps(cfg)
        inst_doc = Document(
            f.source.inst,
            "set",
            2,
            complexes=(
                ("X", f.source),
                ("U", f.middle),
                ("Y", f.target),
                ("V", g.middle),
                ("W", g.target),
            ),
            maps=(("F", f), ("G", g)),
        )
    elif args.kind == "ses":
        ses = gen_ses(cfg)
        inst_doc = Document(
            ses.sub.source.inst,
            "set",
            2,
            complexes=(("X", ses.sub.source), ("Y", ses.sub.target)),
            hors=(("f", ses.sub),),
            seses=(("S", "f"),),
        )
    elif args.kind == "snake-weak":
        s = gen_snake_weak(cfg)
        inst_doc = Document(s.inst, "set", 2, snakes_weak=(("S", s),))
    else:  # snake-strong
        s = gen_snake_strong(cfg)
        inst_doc = Document(s.inst, "set", 2, snakes_strong=(("S", s),))
    sys.stdout.write(serialize(inst_doc))
    return 0


# ---------------------------------------------------------------------------
# Parser and entry point.
# ---------------------------------------------------------------------------


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--output", choices=("text", "json"), default="text", help="report format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acgw",
        description="Complexes and homology over double-exact instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document for problems")
    p.add_argument("file", help="document path, or - for stdin")
    _add_output(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("homology", help="homology of every complex")
    p.add_argument("file")
    p.add_argument("--name", help="restrict to one complex")
    _add_output(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("exact", help="exactness verdict for every complex")
    p.add_argument("file")
    p.add_argument("--name", help="restrict to one complex")
    _add_output(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("snake", help="run the snake construction of a document")
    p.add_argument("file")
    p.add_argument("--name", help="restrict to one snake input")
    _add_output(p)
    p.set_defaults(func=cmd_snake)

    p = sub.add_parser("les", help="long exact sequence of a short exact sequence")
    p.add_argument("file")
    p.add_argument("--ses", required=True, help="name of the ses section")
    _add_output(p)
    p.set_defaults(func=cmd_les)

    p = sub.add_parser("map-homology", help="induced homology span of a chain map")
    p.add_argument("file")
    p.add_argument("--map", required=True, help="name of the map section")
    p.add_argument("--degree", type=int, help="restrict to one degree")
    _add_output(p)
    p.set_defaults(func=cmd_map_homology)

    p = sub.add_parser("oracle", help="cross-check homology against matrix ranks")
    p.add_argument("file")
    p.add_argument("--name", help="restrict to one complex")
    _add_output(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="emit Graphviz dot source")
    p.add_argument("file")
    p.add_argument("-o", "--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", help="emit a random document")
    p.add_argument("--kind", choices=_GEN_KINDS, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=8, help="object size bound")
    p.add_argument("--instance", choices=("set", "linear"), default="set")
    p.add_argument("--prime", type=int, default=2)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AcgwError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
