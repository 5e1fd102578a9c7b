"""Command line interface.

Exit codes: 0 success, 1 invalid input (unreadable files, parse errors,
bad arguments), 2 precondition violations (wrong graph shape for an
operation), 64 unknown subcommand.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dihedral import (
    AbelianNormalForm,
    normal_form,
    root_bound_search,
    words_equal,
)
from .errors import ArtinError, PreconditionError, WordFormatError
from .gog import GraphOfGroups, build_jsj, collapse_jsj, dihedral_jsj
from .graphs import big_chunks, parse_graph, retract_word
from .invariants import aut_acylindrically_hyperbolic, compare, profile
from .presentations import (
    abelianize,
    artin_presentation,
    gog_presentation,
    render_presentation,
    simplify_identifications,
)
from .splitting import splits_over_cyclic
from .words import Word


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(payload: dict, text: str, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _gog_text(gog: GraphOfGroups) -> str:
    lines = []
    for v in gog.vertices:
        group = v.group.describe() if v.group is not None else "(structure only)"
        lines.append(f"{v.color} vertex {v.id}: {group}")
    for e in gog.edges:
        desc = e.edge_group.describe() if e.edge_group is not None else "(structure only)"
        inj = (
            " with images " + ", ".join(w.to_text() for w in e.injections)
            if e.injections is not None
            else ""
        )
        stable = f" (stable letter {e.stable_letter})" if e.stable_letter else ""
        lines.append(f"edge {e.ends[0]} -- {e.ends[1]}: {desc}{inj}{stable}")
    from .gog import betti_number

    lines.append(f"betti: {betti_number(gog)}")
    for sym, word in gog.legend:
        lines.append(f"where {sym} = {word.to_text()}")
    return "\n".join(lines) + "\n"


def _write_dot(gog: GraphOfGroups, path: str):
    dot = gog.to_dot()
    if path == "-":
        sys.stdout.write(dot)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dot)


def _cmd_validate(args) -> int:
    g = _load_graph(args.file)
    payload = {
        "vertices": list(g.vertices),
        "edges": [[u, v, m] for u, v, m in g.edges],
        "connected": g.is_connected(),
    }
    text = (
        f"ok: {len(g.vertices)} vertices, {len(g.edges)} edges,"
        f" {'connected' if g.is_connected() else 'disconnected'}"
    )
    _emit(payload, text, args.json)
    return 0


def _cmd_chunks(args) -> int:
    g = _load_graph(args.file)
    decomp = big_chunks(g)
    lines = [
        f"chunk {i}: {{{','.join(c.vertices)}}} {cls}"
        for i, (c, cls) in enumerate(zip(decomp.chunks, decomp.classes()))
    ]
    lines.append("separating: " + (" ".join(decomp.separating) or "(none)"))
    _emit(decomp.to_json_dict(), "\n".join(lines), args.json)
    return 0


def _cmd_split(args) -> int:
    g = _load_graph(args.file)
    verdict = splits_over_cyclic(g)
    lines = [f"verdict: {verdict.verdict}", f"ends: {verdict.ends}"]
    if verdict.vertex is not None:
        lines.append(
            f"witness: amalgam over <{verdict.vertex}> of the parabolics"
            f" on {{{','.join(verdict.left)}}} and {{{','.join(verdict.right)}}}"
        )
    if verdict.label is not None:
        lines.append(f"witness: single edge with label {verdict.label}")
    if verdict.components is not None:
        lines.append(
            "witness: free product over components "
            + " ".join("{" + ",".join(c) + "}" for c in verdict.components)
        )
    _emit(verdict.to_json_dict(), "\n".join(lines), args.json)
    return 0


def _cmd_jsj(args) -> int:
    g = _load_graph(args.file)
    gog = build_jsj(g)
    if args.collapsed:
        gog = collapse_jsj(gog)
    if args.dot:
        _write_dot(gog, args.dot)
        if args.dot != "-":
            print(f"wrote {args.dot}")
        return 0
    _emit(gog.to_json_dict(), _gog_text(gog), args.json)
    return 0


def _cmd_dihedral_jsj(args) -> int:
    gog = dihedral_jsj(args.label)
    if args.dot:
        _write_dot(gog, args.dot)
        if args.dot != "-":
            print(f"wrote {args.dot}")
        return 0
    pres = gog_presentation(gog)
    text = _gog_text(gog) + "presentation: " + render_presentation(pres)
    payload = gog.to_json_dict()
    payload["presentation"] = {
        "generators": list(pres.generators),
        "relators": [r.to_text() for r in pres.relators],
    }
    _emit(payload, text, args.json)
    return 0


def _cmd_abelianize(args) -> int:
    g = _load_graph(args.file)
    if args.of_jsj:
        pres = gog_presentation(build_jsj(g))
        source = "fundamental group of the decomposition"
    else:
        pres = artin_presentation(g)
        source = "vertex presentation"
    shape = abelianize(pres)
    payload = {"source": source, "abelianization": shape.to_json_dict()}
    _emit(payload, f"{shape.describe()} (from the {source})", args.json)
    return 0


def _cmd_presentation(args) -> int:
    g = _load_graph(args.file)
    if args.of_jsj:
        pres = gog_presentation(build_jsj(g))
        if args.simplify:
            pres = simplify_identifications(pres)
    else:
        pres = artin_presentation(g)
    payload = {
        "generators": list(pres.generators),
        "relators": [r.to_text() for r in pres.relators],
    }
    _emit(payload, render_presentation(pres), args.json)
    return 0


def _cmd_profile(args) -> int:
    g = _load_graph(args.file)
    p = profile(g)
    d = p.to_json_dict()
    lines = [f"{key}: {value}" for key, value in d.items()]
    _emit(d, "\n".join(lines), args.json)
    return 0


def _cmd_compare(args) -> int:
    p = profile(_load_graph(args.file1))
    q = profile(_load_graph(args.file2))
    verdict = compare(p, q)
    lines = [f"verdict: {verdict.verdict}"]
    lines += [f"reason: {r}" for r in verdict.reasons]
    lines += [f"note: {n}" for n in verdict.notes]
    _emit(verdict.to_json_dict(), "\n".join(lines), args.json)
    return 0


def _cmd_acylindrical(args) -> int:
    g = _load_graph(args.file)
    verdict = aut_acylindrically_hyperbolic(g)
    lines = [f"acylindrically hyperbolic: {'yes' if verdict.value else 'no'}"]
    if verdict.witness:
        lines.append(f"witness: ({verdict.witness[0]}, {verdict.witness[1]})")
    lines.append(f"reason: {verdict.reason}")
    _emit(verdict.to_json_dict(), "\n".join(lines), args.json)
    return 0


def _nf_payload(n: int, nf) -> dict:
    if isinstance(nf, AbelianNormalForm):
        return {"label": n, "a_exp": nf.a_exp, "b_exp": nf.b_exp}
    return {
        "label": n,
        "central": nf.central,
        "syllables": [[s, e] for s, e in nf.syllables],
    }


def _cmd_dihedral_nf(args) -> int:
    w = Word.from_text(args.word)
    nf = normal_form(args.label, w)
    _emit(_nf_payload(args.label, nf), str(nf), args.json)
    return 0


def _cmd_dihedral_eq(args) -> int:
    u = Word.from_text(args.word1)
    v = Word.from_text(args.word2)
    equal = words_equal(args.label, u, v)
    _emit({"equal": equal}, "equal" if equal else "different", args.json)
    return 0


def _cmd_retract(args) -> int:
    g = _load_graph(args.file)
    decomp = big_chunks(g)
    if not 0 <= args.chunk < len(decomp.chunks):
        raise PreconditionError(
            f"chunk index {args.chunk} out of range; the graph has"
            f" {len(decomp.chunks)} chunks"
        )
    w = Word.from_text(args.word)
    out = retract_word(g, decomp.chunks[args.chunk], w)
    _emit({"word": out.to_text()}, out.to_text(), args.json)
    return 0


def _cmd_root_search(args) -> int:
    hits = root_bound_search(args.label, args.max_len, args.max_degree)
    m = args.label // 2
    payload = {
        "label": args.label,
        "max_length": args.max_len,
        "max_degree": args.max_degree,
        "counterexamples": [
            {"word": w.to_text(), "degree": k, "a_exp": i, "z_exp": j}
            for w, k, (i, j) in hits
        ],
    }
    if hits:
        text = "\n".join(
            f"counterexample: ({w.to_text()})^{k} = a^{i} z^{j}"
            for w, k, (i, j) in hits
        )
    else:
        text = (
            f"no counterexamples: no primitive element of <a, z> has a root of"
            f" degree {m + 1}..{args.max_degree} among words up to length {args.max_len}"
        )
    _emit(payload, text, args.json)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="artin", description="Artin group splittings toolkit")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("validate", _cmd_validate, "parse a graph file and summarize it")
    p.add_argument("file")

    p = add("chunks", _cmd_chunks, "chunk decomposition with classification")
    p.add_argument("file")

    p = add("split", _cmd_split, "decide splittability over cyclic subgroups")
    p.add_argument("file")

    p = add("jsj", _cmd_jsj, "JSJ graph of groups of the Artin group")
    p.add_argument("file")
    p.add_argument("--collapsed", action="store_true", help="collapse loops and red edges")
    p.add_argument("--dot", metavar="PATH", help="write Graphviz output to PATH ('-' for stdout)")

    p = add("dihedral-jsj", _cmd_dihedral_jsj, "JSJ of the dihedral group on a label")
    p.add_argument("label", type=int)
    p.add_argument("--dot", metavar="PATH", help="write Graphviz output to PATH ('-' for stdout)")

    p = add("abelianize", _cmd_abelianize, "abelianization of the Artin group")
    p.add_argument("file")
    p.add_argument("--of-jsj", action="store_true", help="use the decomposition's fundamental group")

    p = add("presentation", _cmd_presentation, "print a finite presentation")
    p.add_argument("file")
    p.add_argument("--of-jsj", action="store_true", help="fundamental group of the decomposition")
    p.add_argument("--simplify", action="store_true", help="eliminate identification relators")

    p = add("profile", _cmd_profile, "isomorphism-invariant profile")
    p.add_argument("file")

    p = add("compare", _cmd_compare, "compare two profiles with certified reasons")
    p.add_argument("file1")
    p.add_argument("file2")

    p = add("acylindrical", _cmd_acylindrical, "acylindrical hyperbolicity of Aut")
    p.add_argument("file")

    p = add("dihedral-nf", _cmd_dihedral_nf, "normal form in a dihedral Artin group")
    p.add_argument("label", type=int)
    p.add_argument("word")

    p = add("dihedral-eq", _cmd_dihedral_eq, "equality of two dihedral words")
    p.add_argument("label", type=int)
    p.add_argument("word1")
    p.add_argument("word2")

    p = add("retract", _cmd_retract, "retract a word onto a chunk")
    p.add_argument("file")
    p.add_argument("chunk", type=int)
    p.add_argument("word")

    p = add("root-search", _cmd_root_search, "search for roots violating the root bound")
    p.add_argument("label", type=int)
    p.add_argument("max_len", type=int)
    p.add_argument("max_degree", type=int)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        message = str(err)
        print(f"error: {message}", file=sys.stderr)
        if "invalid choice" in message:
            return 64
        return 1
    if not getattr(args, "fn", None):
        parser.print_help()
        return 1
    try:
        return args.fn(args)
    except (OSError, WordFormatError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except PreconditionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ArtinError as err:
        print(f"error: {err}", file=sys.stderr)
        return _classify(err)
    return 0


def _classify(err: ArtinError) -> int:
    from .errors import DisconnectedGraphError, GraphFormatError

    if isinstance(err, GraphFormatError):
        return 1
    if isinstance(err, DisconnectedGraphError):
        return 2
    return 1


if __name__ == "__main__":
    sys.exit(main())
