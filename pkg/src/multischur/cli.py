"""JSON command-line interface.

One request per invocation, read from --input or stdin:

    {"command": "expand", "lambda": [2,1], "basis": "refined",
     "t": ["t1", "t2"]}

Commands: multischur, expand, skew, inner, eval, verify.  Indeterminates
are declared implicitly by first use; "beta" is reserved.  Output is a
single deterministic JSON document on stdout; errors are reported as
{"error": {...}} with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Mapping, Sequence

from .exactalg import (
    DimensionError,
    Scalar,
    UnboundIndeterminateError,
    scalar_from_json,
    scalar_to_json,
)
from .expansions import (
    StabilityError,
    SymFunc,
    TractabilityError,
    TruncationError,
    eval_symfunc,
    expand_in_refined_basis,
    flagged_schur,
    hall_inner,
    multi_schur,
    refined_dual_grothendieck,
    schur_expand_multischur,
    skew_function,
    skew_multi_schur,
    stable_dual_in_G,
    stable_grothendieck_schur,
    sym_schur,
    symfunc_from_json,
    symfunc_to_json,
    truncated_dual_expansion,
)
from .fock import ChargeError
from .shapes import (
    AlphabetSequence,
    ConstantTail,
    EmptyTail,
    Partition,
    RefinedTail,
    constant_sequence,
    empty_sequence,
    prefix_sequence,
    refined_sequence,
)
from .verifications import SUITES


class UsageError(ValueError):
    """The request does not match any command schema."""


_RESERVED = {"beta"}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_MISSING = object()


def _field(req: Mapping, *names: str, default=_MISSING):
    for name in names:
        if name in req:
            return req[name]
    if default is _MISSING:
        raise UsageError(f"missing request field {names[0]!r}")
    return default


def _partition(req: Mapping, *names: str, default=_MISSING) -> Partition:
    raw = _field(req, *names, default=default)
    if raw is _MISSING:
        raise UsageError(f"missing request field {names[0]!r}")
    try:
        return Partition(raw if raw is not None else ())
    except (TypeError, ValueError) as e:
        raise UsageError(f"bad partition for {names[0]!r}: {e}") from e


def _check_name(name: str) -> str:
    if not _NAME.match(name):
        raise UsageError(f"bad indeterminate name: {name!r}")
    if name in _RESERVED:
        raise UsageError(f"indeterminate name {name!r} is reserved")
    return name


def parse_scalar(value) -> Scalar:
    """Accept an integer, a rational string, a (possibly negated) name,
    a single serialized term, or a full term list."""
    if isinstance(value, bool):
        raise UsageError(f"bad scalar: {value!r}")
    if isinstance(value, int):
        return Scalar.from_rational(value)
    if isinstance(value, str):
        text = value.strip()
        name = text[1:] if text.startswith("-") else text
        if _NAME.match(name) and not name.isdigit():
            var = Scalar.variable(_check_name(name))
            return -var if text.startswith("-") else var
        try:
            return Scalar.from_rational(Fraction(text))
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad scalar literal {value!r}: {e}") from e
    if isinstance(value, Mapping):
        value = [value]
    if isinstance(value, list):
        try:
            p = scalar_from_json(value)
        except (TypeError, ValueError, KeyError) as e:
            raise UsageError(f"bad scalar terms: {e}") from e
        for name in p.indeterminates():
            _check_name(name)
        return p
    raise UsageError(f"bad scalar: {value!r}")


def parse_alphabet(value) -> tuple[Scalar, ...]:
    if not isinstance(value, list):
        raise UsageError(f"alphabet must be a list: {value!r}")
    return tuple(parse_scalar(v) for v in value)


def parse_sequence(value) -> AlphabetSequence:
    """Alphabet sequences: {"prefix": [...], "tail": {...}}, the
    shorthands {"refined": [t...]} / {"constant": [letters]}, or a bare
    list of rows (empty past the end)."""
    if isinstance(value, list):
        return prefix_sequence(*[parse_alphabet(row) for row in value])
    if not isinstance(value, Mapping):
        raise UsageError(f"bad alphabet sequence: {value!r}")
    if "refined" in value:
        return refined_sequence(parse_alphabet(value["refined"]))
    if "constant" in value:
        return constant_sequence(parse_alphabet(value["constant"]))
    prefix = tuple(parse_alphabet(row) for row in value.get("prefix", []))
    tail_spec = value.get("tail", {"kind": "empty"})
    kind = tail_spec.get("kind") if isinstance(tail_spec, Mapping) else None
    if kind == "empty":
        tail = EmptyTail()
    elif kind == "constant":
        tail = ConstantTail(parse_alphabet(tail_spec.get("letters", [])))
    elif kind == "refined":
        if "t" in tail_spec:
            increments = tuple((x,) for x in parse_alphabet(tail_spec["t"]))
        else:
            increments = tuple(parse_alphabet(b) for b in tail_spec.get("increments", []))
        tail = RefinedTail(parse_alphabet(tail_spec.get("base", [])), increments)
    else:
        raise UsageError(f"bad tail rule: {tail_spec!r}")
    return AlphabetSequence(prefix, tail)


def parse_symfunc(value) -> SymFunc:
    """A serialized element, or a constructor shorthand:
    {"schur": [...]}, {"refined": {...}}, {"stable": {...}}."""
    if not isinstance(value, Mapping):
        raise UsageError(f"bad symmetric function: {value!r}")
    if "terms" in value or "basis" in value:
        try:
            f = symfunc_from_json(value)
        except (TypeError, ValueError, KeyError) as e:
            raise UsageError(f"bad symmetric function: {e}") from e
        for _, c in f.terms():
            for name in c.indeterminates():
                _check_name(name)
        return f
    if "schur" in value:
        try:
            return sym_schur(value["schur"])
        except (TypeError, ValueError) as e:
            raise UsageError(f"bad partition in schur shorthand: {e}") from e
    if "refined" in value:
        spec = value["refined"]
        return refined_dual_grothendieck(
            _partition(spec, "lambda", "λ"), parse_alphabet(_field(spec, "t"))
        )
    if "stable" in value:
        spec = value["stable"]
        return stable_grothendieck_schur(
            _partition(spec, "lambda", "λ"),
            parse_alphabet(_field(spec, "t")),
            _int_field(spec, "D", "truncation"),
        )
    raise UsageError(f"bad symmetric function: {value!r}")


def _int_field(req: Mapping, *names: str, default=_MISSING) -> int:
    raw = _field(req, *names, default=default)
    if raw is _MISSING:
        raise UsageError(f"missing request field {names[0]!r}")
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise UsageError(f"field {names[0]!r} must be an integer: {raw!r}")
    return raw


def _coeff_terms_json(coeffs: Mapping[Partition, Scalar], basis: str, truncation) -> dict:
    items = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))
    return {
        "basis": basis,
        "truncation": truncation,
        "terms": [
            {"partition": list(mu), "coeff": scalar_to_json(c)} for mu, c in items if c
        ],
    }


# -- commands ---------------------------------------------------------


def _cmd_multischur(req: Mapping) -> object:
    lam = _partition(req, "lambda", "λ")
    if "flag" in req:
        flag = req["flag"]
        if not isinstance(flag, list) or not all(
            isinstance(b, int) and not isinstance(b, bool) for b in flag
        ):
            raise UsageError(f"flag must be a list of integers: {flag!r}")
        vars_ = parse_alphabet(_field(req, "vars"))
        return scalar_to_json(flagged_schur(lam, flag, vars_))
    bx = parse_sequence(_field(req, "bx"))
    by = parse_sequence(_field(req, "by", default=None) or [])
    return scalar_to_json(multi_schur(lam, bx, by))


def _cmd_expand(req: Mapping) -> object:
    lam = _partition(req, "lambda", "λ")
    basis = _field(req, "basis", default="schur")
    if basis == "schur":
        bx = parse_sequence(_field(req, "bx"))
        by = parse_sequence(_field(req, "by", default=None) or [])
        return symfunc_to_json(schur_expand_multischur(lam, bx, by))
    if basis == "refined":
        t = parse_alphabet(_field(req, "t"))
        if "bx" in req:
            bx = parse_sequence(req["bx"])
            by = parse_sequence(_field(req, "by", default=None) or [])
            return _coeff_terms_json(expand_in_refined_basis(lam, bx, by, t), "refined", None)
        return symfunc_to_json(refined_dual_grothendieck(lam, t))
    if basis == "truncated":
        bx = parse_sequence(_field(req, "bx"))
        r = _int_field(req, "r")
        D = _int_field(req, "D", "truncation")
        return symfunc_to_json(truncated_dual_expansion(lam, bx, r, D))
    if basis == "stable":
        t = parse_alphabet(_field(req, "t"))
        D = _int_field(req, "D", "truncation")
        return symfunc_to_json(stable_grothendieck_schur(lam, t, D))
    if basis == "stable-dual":
        bx = parse_sequence(_field(req, "bx"))
        t = parse_alphabet(_field(req, "t"))
        D = _int_field(req, "D", "truncation")
        return _coeff_terms_json(stable_dual_in_G(lam, bx, t, D), "stable", D)
    raise UsageError(f"unknown basis {basis!r}")


def _cmd_skew(req: Mapping) -> object:
    lam = _partition(req, "lambda", "λ")
    mu = _partition(req, "mu", "μ", default=())
    bx = parse_sequence(_field(req, "bx"))
    by = parse_sequence(_field(req, "by", default=None) or [])
    if "bp" in req:
        bp = parse_sequence(req["bp"])
        return symfunc_to_json(skew_function(lam, mu, bx, by, bp))
    return scalar_to_json(skew_multi_schur(lam, mu, bx, by))


def _cmd_inner(req: Mapping) -> object:
    f = parse_symfunc(_field(req, "f"))
    g = parse_symfunc(_field(req, "g"))
    return scalar_to_json(hall_inner(f, g))


def _cmd_eval(req: Mapping) -> object:
    f = parse_symfunc(_field(req, "f"))
    vars_ = parse_alphabet(_field(req, "vars"))
    return scalar_to_json(eval_symfunc(f, vars_))


_SUITE_KWARGS = {
    "orthonormality": {"maxWeight": "max_weight"},
    "dual-engine": {"maxWeight": "max_weight"},
    "hall-duality": {"maxWeight": "max_weight", "truncation": "truncation"},
    "cauchy": {},
    "branching": {"maxWeight": "max_weight", "generalMaxWeight": "general_max_weight"},
    "truncation-stability": {
        "maxWeight": "max_weight",
        "maxRows": "max_rows",
        "maxTruncation": "max_truncation",
    },
    "beta-chain": {"maxWeight": "max_weight", "maxDualWeight": "max_dual_weight"},
    "classical": {"maxWeight": "max_weight", "window": "window", "pairingRows": "pairing_rows"},
}


def _cmd_verify(req: Mapping) -> object:
    theorem = _field(req, "theorem")
    if theorem not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise UsageError(f"unknown theorem {theorem!r}; known suites: {known}")
    kwargs = {}
    for key, kwarg in _SUITE_KWARGS[theorem].items():
        if key in req:
            kwargs[kwarg] = _int_field(req, key)
    result = SUITES[theorem](**kwargs)
    if "seed" in req:
        result["parameters"]["seed"] = req["seed"]
    return result


_COMMANDS = {
    "multischur": _cmd_multischur,
    "expand": _cmd_expand,
    "skew": _cmd_skew,
    "inner": _cmd_inner,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
}


def run(request: Mapping) -> object:
    """Dispatch one request; raises on invalid input or failed computation."""
    if not isinstance(request, Mapping):
        raise UsageError("request must be a JSON object")
    command = _field(request, "command")
    if command not in _COMMANDS:
        known = ", ".join(sorted(_COMMANDS))
        raise UsageError(f"unknown command {command!r}; known commands: {known}")
    return _COMMANDS[command](request)


_ERROR_TYPES = [
    (UsageError, "usage"),
    (StabilityError, "stability"),
    (TruncationError, "truncation"),
    (TractabilityError, "tractability"),
    (ChargeError, "charge"),
    (DimensionError, "dimension"),
    (UnboundIndeterminateError, "unbound-indeterminate"),
    (ValueError, "domain"),
]


def _emit(payload: object) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="multischur",
        description="Exact expansions, inner products, and verification suites.",
    )
    parser.add_argument("--command", help="override or supply the request command")
    parser.add_argument("--input", help="read the JSON request from a file instead of stdin")
    parser.add_argument("--max-weight", type=int, help="default maxWeight for verify requests")
    parser.add_argument("--truncation", type=int, help="default D for expand requests")
    parser.add_argument("--seed", type=int, help="recorded in verify output; suites are exhaustive")
    args = parser.parse_args(argv)

    operation = "parse"
    try:
        threads = os.environ.get("MULTISCHUR_THREADS")
        if threads is not None:
            if not threads.isdigit() or int(threads) < 1:
                raise UsageError(f"MULTISCHUR_THREADS must be a positive integer: {threads!r}")
        if args.input is not None:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        elif not sys.stdin.isatty():
            text = sys.stdin.read()
        else:
            text = ""
        text = text.strip()
        if text:
            try:
                request = json.loads(text)
            except json.JSONDecodeError as e:
                raise UsageError(f"request is not valid JSON: {e}") from e
        else:
            request = {}
        if not isinstance(request, dict):
            raise UsageError("request must be a JSON object")
        if args.command is not None:
            request["command"] = args.command
        if args.max_weight is not None and "maxWeight" not in request:
            request["maxWeight"] = args.max_weight
        if args.truncation is not None and "D" not in request and "truncation" not in request:
            request["D"] = args.truncation
        if args.seed is not None and "seed" not in request:
            request["seed"] = args.seed
        operation = request.get("command", "parse")
        _emit(run(request))
        return 0
    except tuple(t for t, _ in _ERROR_TYPES) as e:
        for etype, name in _ERROR_TYPES:
            if isinstance(e, etype):
                _emit({"error": {"type": name, "operation": operation, "message": str(e)}})
                return 2 if name == "usage" else 1
    except OSError as e:
        _emit({"error": {"type": "io", "operation": operation, "message": str(e)}})
        return 1
    return 1


if __name__ == "__main__":
    sys.exit(main())
