"""Command-line interface: JSON jobs in, JSON result documents out.

Subcommands: compare, game solve, game play, positivize, monomialize.
Every run emits one result document with a top-level schema_version of 1:

    {"schema_version": 1, "status": "ok"|"error",
     "payload": ..., "diagnostics": [...], "trace": [{"J": [...], "j": ...}]}

Rationals travel as strings "p/q" (or "p"); integers as JSON numbers while
they fit exactly in a double, as decimal strings beyond that.  Exit codes:
0 ok, 1 malformed input, 2 validation failure, 3 step limit exceeded,
4 interactive session aborted.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction

from .engine import (Adversary, FirstIndex, Interactive, MaxGrowth, Scripted,
                     SeededRandom, run_pair)
from .errors import InteractiveAborted, StepLimitExceeded, ValidationError
from .game import solve
from .monomials import ValuedRing, apply_substitution, monomialize, polynomial
from .ordered_group import (GroupBasis, GroupElement, GroupOrder, lexvec,
                            positivize_all, validate_order)
from .tau import Comparability
from .transforms import compose_trace, intvec, natvec

SCHEMA_VERSION = 1
_EXACT_DOUBLE = 2 ** 53  # integers beyond this are emitted as decimal strings

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_VALIDATION = 2
EXIT_STEP_LIMIT = 3
EXIT_ABORTED = 4


class MalformedInput(Exception):
    """Structurally unusable job document."""


# ---------------------------------------------------------------------------
# decoding helpers

def _field(doc, name):
    if not isinstance(doc, dict) or name not in doc:
        raise MalformedInput(f"missing field {name!r}")
    return doc[name]


def _as_int(value, what) -> int:
    if isinstance(value, bool):
        raise MalformedInput(f"{what} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise MalformedInput(f"{what} is not a decimal integer: {value!r}")
    raise MalformedInput(f"{what} must be an integer or decimal string")


def _as_int_list(value, what) -> list[int]:
    if not isinstance(value, list):
        raise MalformedInput(f"{what} must be a list")
    return [_as_int(x, what) for x in value]


def _as_rational(value, what) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise MalformedInput(f"{what} must be an integer or a 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"{what} is not a rational: {value!r}")
    raise MalformedInput(f"{what} must be an integer or a 'p/q' string")


# ---------------------------------------------------------------------------
# encoding helpers

def _encode_int(x: int):
    return x if -_EXACT_DOUBLE < x < _EXACT_DOUBLE else str(x)


def _encode_vec(v):
    return [_encode_int(x) for x in v]


def _encode_matrix(m):
    return [_encode_vec(row) for row in m]


def _encode_lexvec(v):
    return [str(c) for c in v]


def _encode_trace(steps):
    return [{"J": sorted(s.J), "j": s.j} for s in steps]


def _format_vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def _format_set(J) -> str:
    return "{" + ",".join(str(i) for i in sorted(J)) + "}"


# ---------------------------------------------------------------------------
# adversaries

def _build_adversary(doc, args, *, allow_interactive, infile) -> Adversary:
    descriptor = doc.get("adversary", {"kind": "first"})
    if not isinstance(descriptor, dict):
        raise MalformedInput("adversary must be an object")
    kind = descriptor.get("kind")
    if kind == "first":
        return FirstIndex()
    if kind == "max_growth":
        return MaxGrowth()
    if kind == "random":
        seed = args.seed if args.seed is not None else descriptor.get("seed")
        if seed is None:
            raise MalformedInput(
                "random adversary needs a seed ('seed' field or --seed)")
        return SeededRandom(_as_int(seed, "seed"))
    if kind == "scripted":
        if "choices" not in descriptor:
            raise MalformedInput("scripted adversary requires 'choices'")
        return Scripted(_as_int_list(descriptor["choices"], "choices"))
    if kind == "interactive":
        if not allow_interactive:
            raise ValidationError(
                "interactive adversary is only permitted for compare and game play")
        return Interactive(infile=infile)
    raise MalformedInput(f"unknown adversary kind: {kind!r}")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_compare(doc, args, infile):
    alpha = natvec(_as_int_list(_field(doc, "alpha"), "alpha"))
    beta = natvec(_as_int_list(_field(doc, "beta"), "beta"))
    adversary = _build_adversary(doc, args, allow_interactive=True, infile=infile)

    on_round = None
    if isinstance(adversary, Interactive):
        def on_round(a, b, J, round_no):
            sys.stderr.write(
                f"round {round_no}: alpha={_format_vec(a)} beta={_format_vec(b)} "
                f"J={_format_set(J)}\n")

    trace = run_pair(alpha, beta, adversary, step_limit=args.step_limit,
                     on_round=on_round)
    relation = {Comparability.LESS_EQ: "le", Comparability.GREATER_EQ: "ge",
                Comparability.EQUAL: "eq"}[trace.outcome]
    payload = {
        "relation": relation,
        "final_alpha": _encode_vec(trace.final_alpha),
        "final_beta": _encode_vec(trace.final_beta),
        "matrix": _encode_matrix(compose_trace(trace.steps, len(alpha))),
        "rounds": trace.rounds,
    }
    return payload, trace.steps


def _cmd_game(doc, args, infile, mode):
    raw = _field(doc, "vectors")
    if not isinstance(raw, list):
        raise MalformedInput("vectors must be a list")
    if not raw:
        raise ValidationError("vector list must be non-empty")
    vectors = [natvec(_as_int_list(v, "vector")) for v in raw]
    if mode == "play":
        adversary = Interactive(infile=infile)
    else:
        adversary = _build_adversary(doc, args, allow_interactive=False,
                                     infile=infile)

    on_round = None
    if isinstance(adversary, Interactive):
        def on_round(state, J):
            vecs = " ".join(_format_vec(v) for v in state.vectors)
            champ = state.champion_index
            sys.stderr.write(
                f"round {state.round + 1}: vectors {vecs}; champion "
                f"#{champ} {_format_vec(state.vectors[champ])}; J={_format_set(J)}\n")

    outcome = solve(vectors, adversary, step_limit=args.step_limit,
                    on_round=on_round)
    if isinstance(adversary, Interactive):
        sys.stderr.write(
            f"won after {outcome.rounds} round(s): winner #{outcome.winner_index} "
            f"{_format_vec(outcome.final_vectors[outcome.winner_index])}\n")
    payload = {
        "winner_index": outcome.winner_index,
        "final_vectors": [_encode_vec(v) for v in outcome.final_vectors],
        "rounds": outcome.rounds,
    }
    return payload, outcome.trace


def _cmd_positivize(doc, args, infile):
    raw_images = _field(doc, "generator_images")
    if not isinstance(raw_images, list) or not raw_images:
        raise MalformedInput("generator_images must be a non-empty list")
    images = []
    for row in raw_images:
        if not isinstance(row, list):
            raise MalformedInput("each generator image must be a list")
        images.append(lexvec([_as_rational(x, "image entry") for x in row]))
    order = GroupOrder(tuple(images))
    violations = validate_order(order)
    if violations:
        raise ValidationError("; ".join(violations))
    basis = GroupBasis.initial(order)

    raw_elements = _field(doc, "elements")
    if not isinstance(raw_elements, list):
        raise MalformedInput("elements must be a list")
    elements = [GroupElement(basis, intvec(_as_int_list(row, "element")))
                for row in raw_elements]
    result = positivize_all(basis, elements, step_limit=args.step_limit)
    payload = {
        "basis_in_original": _encode_matrix(result.basis.coords_in_original),
        "basis_images": [_encode_lexvec(img) for img in result.basis.images],
        "coords": [_encode_vec(c) for c in result.coords],
    }
    return payload, result.steps


def _cmd_monomialize(doc, args, infile):
    m = _as_int(_field(doc, "num_vars"), "num_vars")
    n = _as_int(_field(doc, "num_toric"), "num_toric")
    raw_values = _field(doc, "values")
    if not isinstance(raw_values, list):
        raise MalformedInput("values must be a list")
    values = tuple(lexvec([_as_rational(x, "value entry") for x in row])
                   for row in raw_values)
    ring = ValuedRing(m, n, values)

    raw_terms = _field(doc, "polynomial")
    if not isinstance(raw_terms, list):
        raise MalformedInput("polynomial must be a list of terms")
    terms = []
    for term in raw_terms:
        exponents = _as_int_list(_field(term, "exponents"), "exponents")
        coeff = _as_rational(_field(term, "coeff"), "coeff")
        terms.append((exponents, coeff))
    f = polynomial(terms)
    if not f:
        raise ValidationError("zero polynomial")

    result = monomialize(ring, f)
    # Re-verify the exact factorization before emitting anything.
    shift = result.factor_exponents + (0,) * (m - n)
    product = {tuple(x + y for x, y in zip(e, shift)): c
               for e, c in result.unit_part.items()}
    if product != apply_substitution(f, result.substitution):
        raise ValidationError("factorization identity failed re-verification")

    unit_terms = [{"coeff": str(c), "exponents": _encode_vec(e)}
                  for e, c in sorted(result.unit_part.items())]
    payload = {
        "substitution": _encode_matrix(result.substitution.matrix),
        "new_values": [_encode_lexvec(v) for v in result.new_values],
        "factor_exponents": _encode_vec(result.factor_exponents),
        "unit": unit_terms,
    }
    return payload, result.substitution.steps


# ---------------------------------------------------------------------------
# argument parsing and the main entry point

def _add_io_flags(p):
    p.add_argument("--input", default="-", metavar="PATH",
                   help="job document path, or - for stdin (default)")
    p.add_argument("--output", default="-", metavar="PATH",
                   help="result document path, or - for stdout (default)")
    p.add_argument("--trace", action="store_true",
                   help="include the step trace in the result document")
    p.add_argument("--seed", type=int, default=None, metavar="U64",
                   help="override the random adversary's seed")
    p.add_argument("--step-limit", type=int, default=1_000_000,
                   dest="step_limit", metavar="N",
                   help="safety valve on the number of rounds (default 10^6)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perron",
        description="Exact unimodular descent transforms: pair comparability, "
                    "the polyhedra game, positive cones, monomialization.")
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser("compare", help="make a pair of vectors comparable")
    _add_io_flags(compare)
    compare.set_defaults(handler=_cmd_compare)

    game = sub.add_parser("game", help="the polyhedra game")
    game_sub = game.add_subparsers(dest="game_mode", required=True)
    game_solve = game_sub.add_parser("solve", help="play out the winning strategy")
    _add_io_flags(game_solve)
    game_solve.set_defaults(handler=lambda doc, args, infile:
                            _cmd_game(doc, args, infile, "solve"))
    game_play = game_sub.add_parser("play", help="interactive: you pick each j")
    _add_io_flags(game_play)
    game_play.set_defaults(handler=lambda doc, args, infile:
                           _cmd_game(doc, args, infile, "play"))

    positivize = sub.add_parser(
        "positivize", help="give group elements non-negative coordinates")
    _add_io_flags(positivize)
    positivize.set_defaults(handler=_cmd_positivize)

    monomialize_p = sub.add_parser(
        "monomialize", help="factor a polynomial as monomial times unit")
    _add_io_flags(monomialize_p)
    monomialize_p.set_defaults(handler=_cmd_monomialize)
    return parser


def _read_job(args):
    """Parse the job document.  When it arrives on stdin, anything after the
    document becomes the interactive input stream (so piped play is one
    stream: the JSON followed by the j choices)."""
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    stripped = text.lstrip()
    doc, end = json.JSONDecoder().raw_decode(stripped)
    rest = stripped[end:]
    if args.input == "-":
        infile = io.StringIO(rest.lstrip("\n"))
    else:
        if rest.strip():
            raise MalformedInput("trailing data after the JSON document")
        infile = None  # interactive choices come from the real stdin
    if not isinstance(doc, dict):
        raise MalformedInput("job document must be a JSON object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise MalformedInput(f"unsupported schema_version: {version!r}")
    return doc, infile


def _write_document(args, doc):
    data = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output == "-":
        sys.stdout.write(data)
        sys.stdout.flush()
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(data)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    steps = None
    try:
        doc, infile = _read_job(args)
        payload, steps = args.handler(doc, args, infile)
    except json.JSONDecodeError as exc:
        return _emit_error(args, f"invalid JSON: {exc}", EXIT_MALFORMED)
    except MalformedInput as exc:
        return _emit_error(args, str(exc), EXIT_MALFORMED)
    except ValidationError as exc:
        return _emit_error(args, str(exc), EXIT_VALIDATION)
    except StepLimitExceeded as exc:
        return _emit_error(args, str(exc), EXIT_STEP_LIMIT, exc.steps)
    except InteractiveAborted as exc:
        return _emit_error(args, str(exc), EXIT_ABORTED, exc.steps)
    out = {
        "schema_version": SCHEMA_VERSION,
        "status": "ok",
        "payload": payload,
        "diagnostics": [],
    }
    if args.trace:
        out["trace"] = _encode_trace(steps)
    _write_document(args, out)
    return EXIT_OK


def _emit_error(args, message, code, steps=None) -> int:
    out = {
        "schema_version": SCHEMA_VERSION,
        "status": "error",
        "payload": None,
        "diagnostics": [message],
    }
    if steps is not None:
        out["trace"] = _encode_trace(steps)
    _write_document(args, out)
    return code
