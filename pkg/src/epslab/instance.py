"""Monomial expressions and JSON instance files.

Monomial grammar (whitespace is ignored)::

    expr   := "1" | factor ("*" factor)*
    factor := ident ("^" uint)?

Repeated variables multiply, so ``x*x^2`` is ``x^3``.

Instance file::

    {"vars": ["x", "y", "z"], "quotient": ["z^2", "z*y"], "ideal": ["x^2", "x*y"],
     "nmax": 8, "mmax": 3, "kmax": 6, "bmax": 8, "seed": 0, "tolerance": "1/20"}
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .monomial import MAX_EXPONENT, MonomialIdeal, format_monomial
from .ring import ideal_in_ring, make_ring

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<op>[*^]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokens(text):
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            raise ParseError("unexpected character", text, pos + (len(text[pos:]) - len(text[pos:].lstrip())))
        kind = mt.lastgroup
        start = mt.start(kind)
        yield kind, mt.group(kind), start
        pos = mt.end()
    yield "end", "", end


def parse_monomial(text, names):
    """Exponent tuple of ``text`` over the variable list ``names``."""
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    toks = list(_tokens(text))
    if toks[0][0] == "num" and toks[0][1] == "1" and toks[1][0] == "end":
        return tuple(exps)
    i = 0
    while True:
        kind, value, pos = toks[i]
        if kind != "ident":
            raise ParseError("expected a variable", text, pos)
        if value not in index:
            raise ParseError(f"unknown variable {value!r}", text, pos)
        i += 1
        e = 1
        if toks[i][0] == "op" and toks[i][1] == "^":
            kind, num, pos = toks[i + 1]
            if kind != "num":
                raise ParseError("expected an exponent", text, pos)
            e = int(num)
            i += 2
        exps[index[value]] += e
        if exps[index[value]] > MAX_EXPONENT:
            raise ParseError(f"exponent exceeds {MAX_EXPONENT}", text, pos)
        kind, value, pos = toks[i]
        if kind == "end":
            return tuple(exps)
        if not (kind == "op" and value == "*"):
            raise ParseError("expected '*'", text, pos)
        i += 1


def format_expr(exps, names):
    return format_monomial(exps, names)


def parse_fraction(value):
    try:
        return Fraction(value) if isinstance(value, (int, str)) else Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {value!r}") from exc


@dataclass
class JobParams:
    nmax: int = 8
    mmax: int = 3
    kmax: int = 6
    bmax: int = 8
    seed: int = 0
    tolerance: Fraction = field(default_factory=lambda: Fraction(1, 20))

    def override(self, **values):
        for name, value in values.items():
            if value is not None:
                setattr(self, name, parse_fraction(value) if name == "tolerance" else int(value))
        return self


@dataclass
class Instance:
    ring: object
    ideal: object
    params: JobParams


def build_instance(data):
    """Instance from an already-decoded JSON object."""
    if not isinstance(data, dict):
        raise ParseError("instance must be a JSON object")
    names = data.get("vars")
    if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
        raise ParseError("'vars' must be a non-empty list of names")
    for v in names:
        if not _IDENT.match(v):
            raise ParseError(f"invalid variable name {v!r}")
    if len(set(names)) != len(names):
        raise ParseError("variable names must be unique")
    quotient = data.get("quotient", [])
    ideal = data.get("ideal", [])
    for key, value in (("quotient", quotient), ("ideal", ideal)):
        if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
            raise ParseError(f"'{key}' must be a list of monomial strings")
    arity = len(names)
    Q = MonomialIdeal(arity, [parse_monomial(s, names) for s in quotient])
    ring = make_ring(arity, names, Q)
    I = ideal_in_ring(ring, [parse_monomial(s, names) for s in ideal])
    params = JobParams()
    known = {f.name for f in fields(JobParams)}
    params.override(**{k: v for k, v in data.items() if k in known})
    return Instance(ring, I, params)


def parse_instance(path):
    """Read an instance JSON file into (ring, ideal, params)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno} column {exc.colno}") from exc
    inst = build_instance(data)
    return inst.ring, inst.ideal, inst.params
