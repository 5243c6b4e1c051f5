"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 only inconclusive outcomes,
3 a definitive refutation from ``equal``, 64 a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .congruence import bfs_equal, invariant_vector
from .groupalgebra import AlgebraError, RepSpec, make_canonical_rep, make_flat_rep, phi_eval
from .permutations import PermHom, PermutationError, eval_hom
from .presentations import Family, PresentationError, build_presentation
from .schreier import SchreierError, build_transversal, rewrite_f
from .verifier import (
    SUITES,
    RepRejected,
    VerificationError,
    VerificationReport,
    fuzz_roundtrip,
    merge_reports,
    verify_lemma_action,
    verify_phi_abc,
    verify_presentation_under_images,
    verify_reduction_formulas,
    verify_schreier_golden,
    verify_submonoid_presentation,
)
from .words import Alphabet, WordError, expand_word, parse_word

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2, 3, 64

#: algebra-heavy suites default to n = 3, image suites to n = 4
DEFAULT_N = {"phi-abc": 3, "fuzz": 3, "images": 4, "reductions": 4, "submonoid": 4,
             "schreier": 4, "lemma": 4}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, n_default: int | None = 3):
    p.add_argument("--n", type=int, default=n_default, help="number of strands")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write the report here instead of standard output")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stvb", description="Presentations, rewriting and verification "
                     "for singular twisted virtual braids.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("present", help="print a presentation")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    _common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--hom", choices=("phi1", "phi2", "phi3"), default="phi1")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-length", type=int, default=20)
    p.add_argument("--rep", default="canonical",
                   help="canonical, flat or a JSON file holding a representation")
    _common(p, None)

    p = sub.add_parser("image", help="image of a word under a hom or the invariant vector")
    p.add_argument("--hom", required=True, choices=[h.value for h in PermHom] + ["invariants"])
    p.add_argument("--tag", default="braid", choices=("braid", "braid-group"))
    p.add_argument("word")
    _common(p)

    p = sub.add_parser("rewrite", help="Schreier rewriting into kernel generators")
    p.add_argument("--hom", required=True, choices=("phi1", "phi2", "phi3"))
    p.add_argument("--open", action="store_true",
                   help="accept words outside the kernel and drop the coset residue")
    p.add_argument("word")
    _common(p)

    p = sub.add_parser("expand", help="expand a submonoid word into braid letters")
    p.add_argument("--tag", required=True, choices=("sub-p", "sub-h", "sub-m", "sub-pg"))
    p.add_argument("word")
    _common(p)

    p = sub.add_parser("phi", help="image in Q[a, b, c][S_n]")
    p.add_argument("--rep", default="canonical")
    p.add_argument("word")
    _common(p)

    p = sub.add_parser("equal", help="bounded search for a derivation of u = v")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--maxlen", type=int)
    p.add_argument("u")
    p.add_argument("v")
    _common(p)

    p = sub.add_parser("transversal", help="list the Schreier transversal")
    _common(p)

    p = sub.add_parser("fuzz", help="rewrite/expand round trips on random kernel words")
    p.add_argument("--hom", choices=("phi1", "phi2", "phi3"), default="phi1")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-length", type=int, default=20)
    _common(p)
    return parser


def _emit(args, payload_json, text: str):
    out = json.dumps(payload_json, indent=2, sort_keys=True) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


def _load_rep(name: str, n: int) -> RepSpec:
    if name == "canonical":
        return make_canonical_rep(n)
    if name == "flat":
        return make_flat_rep(n)
    try:
        with open(name, encoding="utf-8") as fh:
            spec = RepSpec.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"--rep: cannot read representation from {name}: {exc}") from exc
    if spec.n != n:
        raise UsageError(f"--rep: representation is on {spec.n} strands, --n is {n}")
    return spec


def _report_exit(report: VerificationReport) -> int:
    s = report.summary
    if s["fail"]:
        return EXIT_FAIL
    if s["unknown"]:
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_present(args) -> int:
    p = build_presentation(args.family, args.n)
    _emit(args, {"family": p.family.value, "n": p.n, "relations": p.to_json(),
                 "notes": list(p.notes)}, p.to_text())
    return EXIT_OK


def _cmd_verify(args) -> int:
    suite = args.suite
    n = args.n if args.n is not None else DEFAULT_N[suite]
    if suite == "images":
        if args.family is None:
            raise UsageError("--family is required for the images suite")
        report = verify_presentation_under_images(args.family, n)
    elif suite == "reductions":
        report = verify_reduction_formulas(n, bfs_budget=args.budget)
    elif suite == "phi-abc":
        spec = _load_rep(args.rep, n)
        try:
            report = verify_phi_abc(n, spec)
        except RepRejected as exc:
            _emit(args, {"suite": "phi-abc", "error": str(exc), "witness": exc.witness()},
                  f"representation rejected: {exc}")
            return EXIT_FAIL
    elif suite == "submonoid":
        if args.family is None:
            reports = [verify_submonoid_presentation(f, n, args.budget)
                       for f in ("stvp", "stvh", "m", "stvpg")]
            report = merge_reports("submonoid", reports)
        else:
            report = verify_submonoid_presentation(args.family, n, args.budget)
    elif suite == "schreier":
        report = verify_schreier_golden(n)
    elif suite == "lemma":
        report = verify_lemma_action(n)
    else:
        report = fuzz_roundtrip(n, args.samples, args.max_length, args.seed, args.hom)
    _emit(args, report.to_json(), report.to_text())
    return _report_exit(report)


def _cmd_image(args) -> int:
    w = parse_word(args.word, args.tag, args.n)
    if args.hom == "invariants":
        vec = invariant_vector(w)
        payload = vec.to_json()
        text = " ".join(f"{k}={v}" for k, v in payload.items())
    else:
        perm = eval_hom(w, args.hom)
        payload = {"hom": args.hom, "word": str(w), "image": list(perm.images)}
        text = f"{perm.oneline()} = {perm.cycle_notation()}"
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_rewrite(args) -> int:
    w = parse_word(args.word, Alphabet.BRAID, args.n)
    f = rewrite_f(w, args.hom, closed=not args.open)
    _emit(args, {"hom": args.hom, "word": str(w), "rewritten": str(f)}, str(f) or "e")
    return EXIT_OK


def _cmd_expand(args) -> int:
    w = parse_word(args.word, args.tag, args.n)
    e = expand_word(w)
    _emit(args, {"word": str(w), "tag": e.tag.value, "expanded": str(e)}, str(e) or "e")
    return EXIT_OK


def _cmd_phi(args) -> int:
    spec = _load_rep(args.rep, args.n)
    w = parse_word(args.word, Alphabet.BRAID, args.n)
    x = phi_eval(w, spec)
    _emit(args, {"word": str(w), "value": x.to_json()}, str(x))
    return EXIT_OK


def _cmd_equal(args) -> int:
    p = build_presentation(args.family, args.n)
    u, v = parse_word(args.u, p.tag, args.n), parse_word(args.v, p.tag, args.n)
    res = bfs_equal(p, u, v, budget=args.budget, maxlen=args.maxlen)
    payload = {"family": p.family.value, "n": p.n, "u": str(u), "v": str(v), **res.to_json()}
    if res.derivation is not None:
        lines = [f"{res.status} in {len(res.derivation)} steps"]
        for st, w in zip(res.derivation.steps, res.derivation.words[1:]):
            lines.append(f"  {st.label:6} {st.direction} @{st.pos}: {w or 'e'}")
        text = "\n".join(lines)
    elif res.refuted_by:
        text = f"refuted by {', '.join(res.refuted_by)}"
    else:
        text = f"unknown after {res.states} states"
    _emit(args, payload, text)
    return {"equivalent": EXIT_OK, "refuted": EXIT_REFUTED}.get(res.status, EXIT_UNKNOWN)


def _cmd_transversal(args) -> int:
    elems = build_transversal(args.n)
    payload = [{"choice": list(e.choice), "word": str(e.word), "perm": list(e.perm.images)}
               for e in elems]
    text = "\n".join(f"{e.choice} {e} {e.perm.oneline()}" for e in elems)
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    report = fuzz_roundtrip(args.n, args.samples, args.max_length, args.seed, args.hom)
    _emit(args, report.to_json(), report.to_text())
    return _report_exit(report)


COMMANDS = {
    "present": _cmd_present,
    "verify": _cmd_verify,
    "image": _cmd_image,
    "rewrite": _cmd_rewrite,
    "expand": _cmd_expand,
    "phi": _cmd_phi,
    "equal": _cmd_equal,
    "transversal": _cmd_transversal,
    "fuzz": _cmd_fuzz,
}

_INPUT_ERRORS = (WordError, PermutationError, PresentationError, SchreierError,
                 AlgebraError, VerificationError)


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.n is not None and args.n < 2:
            raise UsageError(f"--n must be at least 2, got {args.n}")
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except _INPUT_ERRORS as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
