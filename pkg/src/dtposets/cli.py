"""Command-line interface.

Structured input and output is JSON with a ``"type"`` field (``quiver``,
``poset``, ``triangulation``, ``seed``, ``dt``, ``polynomial``...).
Quiver and triangulation arguments accept a file path, ``-`` for stdin, or
``builtin:<name>`` for one of the bundled examples.

Exit status: 0 on success, 1 on bad input, 2 when a verification fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import gallery
from .families import (Triangulation, ascendant_tree, lift3d_poset, qn_extended, qn_quiver,
                       quiver_from_triangulation, surface_arc_poset)
from .poset import (ZERO_LABEL, LabeledPoset, PosetError, attach, ideal_function, label_text,
                    parse_label, relabel, truncate_zeros)
from .quiver import Quiver
from .seedtrack import (Mode, NotReddening, SeedError, dt_transform, g_matrix, initial_seed,
                        mutate_sequence, search_reddening)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass
class Job:
    command: str
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# loading

BUILTIN_QUIVERS: dict[str, Callable[[], Quiver]] = {
    "twice-punctured-disk": gallery.twice_punctured_disk,
    "double-arrow": gallery.double_arrow_quiver,
    "glued": gallery.glued_quiver,
    "markov": gallery.markov_quiver,
    "markov-cover": gallery.markov_cover,
    "local-two-puncture": gallery.local_two_puncture_quiver,
    "a2": lambda: Quiver.from_arrows(["1", "2"], [("1", "2")]),
}

BUILTIN_TRIANGULATIONS: dict[str, Callable[[], Triangulation]] = {
    "tetrahedron": gallery.tetrahedron,
    "annulus": gallery.annulus,
    "hexagon-fan": lambda: gallery.fan(6),
    "punctured-square": lambda: gallery.punctured_polygon(4),
}


def _read_json(source: str) -> dict:
    try:
        text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}") from None


def _expect(data: dict, kind: str) -> dict:
    if data.get("type", kind) != kind:
        raise InputError(f"expected a {kind}, got {data.get('type')!r}")
    return data


def load_quiver(source: str) -> Quiver:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name.startswith("qn") and name[2:].rstrip("x").isdigit():
            n = int(name[2:].rstrip("x"))
            return qn_extended(n) if name.endswith("x") else qn_quiver(n)
        if name not in BUILTIN_QUIVERS:
            raise InputError(f"unknown builtin quiver {name!r}; have {sorted(BUILTIN_QUIVERS)} and qnN")
        return BUILTIN_QUIVERS[name]()
    try:
        return Quiver.from_structured(_expect(_read_json(source), "quiver"))
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad quiver: {exc}") from None


def load_triangulation(source: str) -> Triangulation:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        if name not in BUILTIN_TRIANGULATIONS:
            raise InputError(f"unknown builtin triangulation {name!r}; have {sorted(BUILTIN_TRIANGULATIONS)}")
        return BUILTIN_TRIANGULATIONS[name]()
    try:
        return Triangulation.from_structured(_expect(_read_json(source), "triangulation"))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad triangulation: {exc}") from None


def _variables(data: dict) -> tuple[dict[str, int] | None, dict[int, str] | None]:
    names = data.get("variables")
    if not names:
        return None, None
    return {str(n): i for i, n in enumerate(names)}, {i: str(n) for i, n in enumerate(names)}


def load_poset(source: str) -> tuple[LabeledPoset, list[str] | None]:
    data = _expect(_read_json(source), "poset")
    fwd, _ = _variables(data)
    try:
        return LabeledPoset.from_structured(data, fwd), data.get("variables")
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad poset: {exc}") from None


def poset_doc(p: LabeledPoset, variables) -> dict:
    names = dict(enumerate(variables)) if variables else None
    doc = {"type": "poset"}
    if variables:
        doc["variables"] = list(variables)
    doc.update(p.to_structured(names))
    return doc


def _sequence(q: Quiver, text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(q.index(v.strip()) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _triple(text: str) -> tuple[int, int, int]:
    try:
        a, b, c = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--vertex expects a,b,c, got {text!r}") from None
    return a, b, c


# ---------------------------------------------------------------------------
# output


def emit(args, doc: dict, text: str, dot: str | None = None) -> None:
    fmt = args.out
    if fmt == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif fmt == "dot":
        if dot is None:
            raise InputError("this command has no DOT rendering")
        sys.stdout.write(dot)
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_mutate(args) -> int:
    q = load_quiver(args.quiver)
    out = q.mutate_sequence(_sequence(q, args.seq))
    doc = {"type": "quiver", **out.to_structured()}
    text = "\n".join(f"{out.names[s]} -> {out.names[t]}" + (f" x{m}" if m > 1 else "")
                     for s, t, m in out.arrows())
    emit(args, doc, text, out.to_dot())
    return EXIT_OK


def cmd_seed(args) -> int:
    q = load_quiver(args.quiver)
    s = mutate_sequence(initial_seed(q), _sequence(q, args.seq))
    doc = {"type": "seed", **s.to_structured()}
    lines = []
    names = q.mutable_part().names
    for i, name in enumerate(names):
        lines.append(f"{name}: c={list(s.C[i])} g={list(g_matrix(s)[i])} "
                     f"F={s.F[i].to_text(dict(enumerate(names)))}")
    emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_search(args) -> int:
    q = load_quiver(args.quiver)
    seq = search_reddening(q, args.depth, Mode(args.mode))
    names = q.mutable_part().names
    found = None if seq is None else [names[k] for k in seq]
    doc = {"type": "search", "mode": args.mode, "depth": args.depth, "sequence": found}
    emit(args, doc, "none" if found is None else ",".join(found))
    return EXIT_OK


def cmd_dt(args) -> int:
    q = load_quiver(args.quiver)
    if args.seq:
        seq = _sequence(q, args.seq)
    else:
        seq = search_reddening(q, args.depth, Mode(args.mode))
        if seq is None:
            emit(args, {"type": "dt", "sequence": None}, "none")
            return EXIT_OK
    try:
        res = dt_transform(q, seq)
    except (NotReddening, SeedError) as exc:
        raise InputError(str(exc)) from None
    names = res.quiver.names
    texts = res.to_text()
    doc = {"type": "dt", "sequence": [names[k] for k in seq],
           "sigma": {names[j]: names[res.sigma[j]] for j in range(len(names))},
           "F": {names[i]: t for i, t in enumerate(texts)}}
    emit(args, doc, "\n".join(f"F{names[i]} = {t}" for i, t in enumerate(texts)))
    return EXIT_OK


def cmd_poset(args) -> int:
    if args.acyclic:
        q = load_quiver(args.acyclic)
        p = ascendant_tree(q, q.index(args.vertex))
        variables = list(q.mutable_part().names)
    elif args.surface:
        tri = load_triangulation(args.surface)
        q = quiver_from_triangulation(tri)
        p = surface_arc_poset(tri, args.vertex)
        variables = list(q.names)
    elif args.qn:
        if not args.n:
            raise InputError("--qn needs --n")
        p = lift3d_poset(args.n, *_triple(args.vertex))
        variables = list(qn_quiver(args.n).names)
    else:
        raise InputError("choose one of --acyclic, --surface, --qn")
    _emit_poset(args, p, variables)
    return EXIT_OK


def _emit_poset(args, p: LabeledPoset, variables) -> None:
    names = dict(enumerate(variables)) if variables else None
    emit(args, poset_doc(p, variables), _poset_text(p, names), p.to_dot(names))


def _poset_text(p: LabeledPoset, names) -> str:
    lines = [f"{e} [{label_text(p.labels[e], names)}]" for e in p.topological_order()]
    lines += [f"{u} > {l}" for u, l in p.covers]
    return "\n".join(lines)


def cmd_idealfn(args) -> int:
    p, variables = load_poset(args.poset)
    f = ideal_function(p)
    names = dict(enumerate(variables)) if variables else None
    emit(args, {"type": "polynomial", "text": f.to_text(names), "terms": f.to_structured()},
         f.to_text(names))
    return EXIT_OK


def _label_map(variables) -> dict[str, int] | None:
    return {str(n): i for i, n in enumerate(variables)} if variables else None


def cmd_truncate(args) -> int:
    p, variables = load_poset(args.poset)
    fwd = _label_map(variables)
    zeros = {parse_label("X" + v.strip(), fwd) for v in args.zero.split(",") if v.strip()}
    out = truncate_zeros(relabel(p, {v: ZERO_LABEL for v in zeros}), check=True)
    _emit_poset(args, out, variables)
    return EXIT_OK


def cmd_relabel(args) -> int:
    p, variables = load_poset(args.poset)
    fwd = _label_map(variables)
    mapping = {}
    for pair in args.map.split(","):
        if "=" not in pair:
            raise InputError(f"--map expects old=new pairs, got {pair!r}")
        a, b = pair.split("=", 1)
        mapping[parse_label("X" + a.strip(), fwd)] = parse_label(
            "0" if b.strip() == "0" else "X" + b.strip(), fwd)
    _emit_poset(args, relabel(p, mapping), variables)
    return EXIT_OK


def cmd_attach(args) -> int:
    p, variables = load_poset(args.poset)
    fwd = _label_map(variables)
    target = parse_label("X" + args.at, fwd)
    pieces = []
    for item in args.piece:
        path, _, mult = item.partition(":")
        piece, piece_vars = load_poset(path)
        if piece_vars and variables and list(piece_vars) != list(variables):
            raise InputError(f"{path} uses different variables")
        pieces.append((piece, int(mult or 1)))
    _emit_poset(args, attach(p, target, pieces), variables)
    return EXIT_OK


def cmd_web(args) -> int:
    from .webs import boundary_measurement, build_web, factor_phi
    from .families import qn_vertices
    if not args.n:
        raise InputError("web needs --n")
    W = build_web(args.n)
    names = dict(enumerate(qn_quiver(args.n).names))
    faces = [_triple(args.vertex)] if args.vertex else qn_vertices(args.n)
    doc = {"type": "web", "n": args.n, "faces": {}}
    lines = []
    for v in faces:
        M = boundary_measurement(W, v)
        N, phi = factor_phi(M)
        key = "({},{},{})".format(*v)
        doc["faces"][key] = {"M": M.to_text(names), "N": N.to_text(names), "Phi": phi.to_text(names),
                             "terms": len(M.terms())}
        lines += [f"{key}: {len(M.terms())} terms", f"  N   = {N.to_text(names)}",
                  f"  Phi = {phi.to_text(names)}"]
    emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES, VerifyConfig, run_all, run_suite
    cfg = VerifyConfig(seed=args.seed, slow=args.slow, search_depth=args.depth)
    if args.n:
        cfg.qn_sizes = (args.n,)
    if args.suite == "all":
        results = run_all(cfg)
    elif args.suite in SUITES:
        results = [run_suite(args.suite, cfg)]
    else:
        raise InputError(f"unknown suite {args.suite!r}; have {', '.join(SUITES)} or all")
    doc = {"type": "verify", "suites": [
        {"suite": r.key, "passed": r.passed, "elapsed": round(r.elapsed, 3),
         "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in r.checks]}
        for r in results]}
    emit(args, doc, "\n".join(line for r in results for line in r.lines()))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_dot(args) -> int:
    source = args.input
    if source.startswith("builtin:"):
        sys.stdout.write(load_quiver(source).to_dot())
        return EXIT_OK
    data = _read_json(source)
    kind = data.get("type")
    if kind == "quiver":
        sys.stdout.write(Quiver.from_structured(data).to_dot())
    elif kind == "poset":
        p, variables = load_poset(source)
        sys.stdout.write(p.to_dot(dict(enumerate(variables)) if variables else None))
    else:
        raise InputError(f"cannot render {kind!r} as DOT")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtposets", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("text", "structured", "dot"), default="text")
    common.add_argument("--depth", type=int, default=12)
    common.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.REDDENING.value)
    common.add_argument("--n", type=int)
    common.add_argument("--vertex")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", parents=[common], help="mutate a quiver along a sequence")
    p.add_argument("quiver")
    p.add_argument("seq", nargs="?", default="")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("seed", parents=[common], help="c-vectors, g-vectors and F after a sequence")
    p.add_argument("quiver")
    p.add_argument("seq", nargs="?", default="")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("search", parents=[common], help="search for a reddening or maximal green sequence")
    p.add_argument("quiver")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dt", parents=[common], help="DT F-polynomials")
    p.add_argument("quiver")
    p.add_argument("--seq")
    p.set_defaults(func=cmd_dt)

    p = sub.add_parser("poset", parents=[common], help="build a family poset")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--acyclic", metavar="QUIVER")
    group.add_argument("--surface", metavar="TRIANGULATION")
    group.add_argument("--qn", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("idealfn", parents=[common], help="ideal function of a poset")
    p.add_argument("poset")
    p.set_defaults(func=cmd_idealfn)

    p = sub.add_parser("truncate", parents=[common], help="set labels to zero and cut the anti-ideal")
    p.add_argument("poset")
    p.add_argument("--zero", required=True, help="comma-separated variables")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("relabel", parents=[common], help="substitute labels")
    p.add_argument("poset")
    p.add_argument("--map", required=True, help="old=new pairs, comma-separated; new may be 0")
    p.set_defaults(func=cmd_relabel)

    p = sub.add_parser("attach", parents=[common], help="attach pointed posets above a label")
    p.add_argument("poset")
    p.add_argument("--at", required=True)
    p.add_argument("--piece", action="append", required=True, help="PATH[:multiplicity]")
    p.set_defaults(func=cmd_attach)

    p = sub.add_parser("web", parents=[common], help="boundary measurements on the Q_n web")
    p.set_defaults(func=cmd_web)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--slow", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", parents=[common], help="render a quiver or poset as DOT")
    p.add_argument("input")
    p.set_defaults(func=cmd_dot)
    return parser


def dispatch(job: Job) -> int:
    argv = [job.command]
    for key, value in job.options.items():
        if key == "args":
            argv += [str(v) for v in value]
        elif value is True:
            argv.append(f"--{key}")
        elif value not in (None, False):
            argv += [f"--{key}", str(value)]
    return main(argv)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.depth < 0:
        print("error: --depth must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, ValueError, PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
