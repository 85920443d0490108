"""Command-line front end.

Exit codes: 0 success, 1 a check failed (relations, witness, classify),
2 usage or input error. JSON output is a single document on stdout;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .braid import BraidWord, format_word, parse_word
from .diagram import render
from .errors import BraidRepError
from .laurent import as_poly, var
from .path_oracle import path_matrix
from .polymatrix import PolyMatrix
from .rep import Kind, RepSpec, classify_case, cubic_residual, evaluate, make_spec, spec_from_block
from .search import DEFAULT_MODULUS, SearchConfig, format_result, search_kernel
from .verify import check_relations, verify_kernel_witness

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# applied after --stdin so that explicit flags > stdin values > defaults
DEFAULTS = {"spec": "simple", "limit": 100, "seed": 0, "jobs": 1, "modulus": DEFAULT_MODULUS}


@dataclass
class OutputEnvelope:
    format: str
    payload: Any
    exit_code: int = EXIT_OK
    text: str = ""

    def render(self) -> str:
        if self.format == "json":
            return json.dumps(self.payload)
        return self.text


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--stdin", action="store_true",
                        help="read inputs from stdin: a JSON object of flag values, or the word text")

    def add(name, help, *, n=True, spec=False, word=False):
        p = sub.add_parser(name, help=help, parents=[common])
        if n:
            p.add_argument("--n", type=int)
        if spec:
            p.add_argument("--spec", choices=[k.value for k in Kind])
            p.add_argument("--params", default=None, help="JSON object of parameter polynomials")
        if word:
            p.add_argument("--word", default=None)
        return p

    parser = argparse.ArgumentParser(prog="braidrep", description="Braid group representations over Laurent rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    add("eval", "image of a braid word", spec=True, word=True)
    add("oracle", "image under the simple representation by path analysis", word=True)
    add("relations", "check the braid relations symbolically", spec=True)
    add("classify", "classify a 2x2 block [[a, b], [c, d]]", n=False, spec=True)
    add("residual", "cubic residual of a 2x2 block", n=False, spec=True)
    add("witness", "certify a kernel witness", spec=True, word=True)
    s = add("search", "search for kernel witnesses", spec=True)
    s.add_argument("--max-len", type=int)
    s.add_argument("--limit", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--jobs", type=int)
    s.add_argument("--modulus", type=int)
    add("diagram", "ASCII picture of a braid word", word=True)
    return parser


def _merge_stdin(args: argparse.Namespace, text: str) -> None:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict):
        for key, value in data.items():
            attr = key.replace("-", "_")
            if key == "params" and isinstance(value, dict):
                value = json.dumps(value)
            if getattr(args, attr, None) is None:
                setattr(args, attr, value)
    elif hasattr(args, "word"):
        args.word = text.strip()
    else:
        raise UsageError("stdin is not a JSON object")


def _require(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _params(args) -> dict:
    if not getattr(args, "params", None):
        return {}
    try:
        data = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("--params must be a JSON object")
    return {k: as_poly(v) for k, v in data.items()}


def _raw_block(args) -> tuple:
    params = _params(args)
    return tuple(params.get(name, var(name)) for name in "abcd")


def _spec(args) -> RepSpec:
    if args.spec == Kind.RAW.value:
        return spec_from_block(*_raw_block(args))
    return make_spec(args.spec, _params(args))


def _word(args) -> BraidWord:
    return parse_word(_require(args, "word"), _require(args, "n"))


def _matrix_envelope(fmt: str, m: PolyMatrix) -> OutputEnvelope:
    return OutputEnvelope(fmt, m.to_strings(), EXIT_OK, m.format())


def _cmd_eval(args):
    return _matrix_envelope(args.format, evaluate(_spec(args), _word(args)))


def _cmd_oracle(args):
    return _matrix_envelope(args.format, path_matrix(_word(args)))


def _cmd_relations(args):
    n = _require(args, "n")
    if args.spec == Kind.RAW.value:
        spec = make_spec(Kind.RAW, dict(zip("abcd", _raw_block(args))))
    else:
        spec = _spec(args)
    report = check_relations(spec, n, force=True)
    lines = ["PASS" if report.passed else "FAIL"]
    if report.cubic_failures:
        lines.append("cubic failures at i = " + ", ".join(map(str, report.cubic_failures)))
    if report.commuting_failures:
        lines.append("commuting failures at " + ", ".join(f"({i},{j})" for i, j in report.commuting_failures))
    code = EXIT_OK if report.passed else EXIT_FAILED
    return OutputEnvelope(args.format, report.to_dict(), code, "\n".join(lines))


def _block_from_args(args) -> tuple:
    if args.spec == Kind.RAW.value:
        return _raw_block(args)
    (p, q), (r, s) = _spec(args).block.entries
    return p, q, r, s


def _cmd_classify(args):
    label = classify_case(*_block_from_args(args))
    code = EXIT_OK if label.admissible else EXIT_FAILED
    return OutputEnvelope(args.format, label.to_dict(), code, f"{label.label.value}: {label.reason}")


def _cmd_residual(args):
    return _matrix_envelope(args.format, cubic_residual(*_block_from_args(args)))


def _cmd_witness(args):
    witness = verify_kernel_witness(_spec(args), _word(args))
    text = "CERTIFIED" if witness.certified else "NOT CERTIFIED"
    if not witness.certified:
        text += (
            f"\nimage is identity: {witness.image_is_identity}"
            f"\nburau image nontrivial: {witness.burau_image_nontrivial}"
        )
    code = EXIT_OK if witness.certified else EXIT_FAILED
    return OutputEnvelope(args.format, witness.to_dict(), code, text)


def _cmd_search(args):
    config = SearchConfig(
        n=_require(args, "n"),
        max_len=_require(args, "max_len"),
        spec=_spec(args),
        seed=args.seed,
        modulus=args.modulus,
        limit=args.limit,
        jobs=args.jobs,
    )
    result = search_kernel(config)
    payload = {"config": config.to_dict(), **result.to_dict()}
    return OutputEnvelope(args.format, payload, EXIT_OK, format_result(result))


def _cmd_diagram(args):
    w = _word(args)
    text = render(w)
    return OutputEnvelope(args.format, {"word": format_word(w), "n": w.n, "diagram": text}, EXIT_OK, text)


COMMANDS = {
    "eval": _cmd_eval,
    "oracle": _cmd_oracle,
    "relations": _cmd_relations,
    "classify": _cmd_classify,
    "residual": _cmd_residual,
    "witness": _cmd_witness,
    "search": _cmd_search,
    "diagram": _cmd_diagram,
}


def run(argv: Sequence[str] | None = None, stdin_text: str | None = None) -> OutputEnvelope:
    """Parse ``argv`` and dispatch; never raises for bad input (exit code 2)."""
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return OutputEnvelope("text", None, code)
    try:
        if args.stdin:
            _merge_stdin(args, sys.stdin.read() if stdin_text is None else stdin_text)
        defaults = dict(DEFAULTS)
        if args.command in ("classify", "residual"):
            defaults["spec"] = Kind.RAW.value
        for key, value in defaults.items():
            if hasattr(args, key) and getattr(args, key) is None:
                setattr(args, key, value)
        return COMMANDS[args.command](args)
    except (UsageError, BraidRepError, ValueError, TypeError) as exc:
        print(f"braidrep {args.command}: error: {exc}", file=sys.stderr)
        return OutputEnvelope(args.format, None, EXIT_USAGE)


def main(argv: Sequence[str] | None = None) -> int:
    envelope = run(argv)
    if envelope.payload is not None or envelope.text:
        print(envelope.render())
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())
