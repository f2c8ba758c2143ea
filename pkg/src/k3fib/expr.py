"""Tiny parser for the polynomial notation used in the catalog data.

Variables are single letters, juxtaposition multiplies (``2abc`` is
``2*a*b*c``) and ``^`` or ``**`` raise to a non-negative integer power.
Evaluation is generic: the caller maps names to elements of any ring.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable, Mapping

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[-+*/^()=]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text[:60]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def expr(self):
        terms = []
        kind, val = self.peek()
        sign = 1
        if val in ("+", "-"):
            self.take()
            sign = -1 if val == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        return ("add", terms) if len(terms) > 1 or terms[0][0] < 0 else terms[0][1]

    def _starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "var") or val == "("

    def term(self):
        node = self.power()
        while True:
            kind, val = self.peek()
            if val == "*":
                self.take()
                node = ("mul", node, self.power())
            elif val == "/":
                self.take()
                node = ("div", node, self.power())
            elif self._starts_factor():
                node = ("mul", node, self.power())
            else:
                return node

    def power(self):
        base = self.atom()
        while self.peek()[1] == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            base = ("pow", base, int(val))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", int(val))
        if kind == "var":
            return ("var", val)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if val == "-":
            return ("neg", self.power())
        raise ParseError(f"unexpected token {val!r}")


@lru_cache(maxsize=None)
def parse(text: str):
    """Parse an expression or an equation ``lhs = rhs`` (returned as lhs - rhs)."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    p = _Parser(toks)
    node = p.expr()
    if p.peek()[1] == "=":
        p.take()
        rhs = p.expr()
        node = ("add", [(1, node), (-1, rhs)])
    if p.i != len(toks):
        raise ParseError(f"trailing input at token {p.peek()[1]!r}")
    return node


def variables(node) -> set[str]:
    kind = node[0]
    if kind == "var":
        return {node[1]}
    if kind == "num":
        return set()
    if kind == "add":
        return set().union(*(variables(t) for _, t in node[1]))
    if kind in ("mul", "div"):
        return variables(node[1]) | variables(node[2])
    return variables(node[1])


def evaluate(node, env: Mapping[str, object], const: Callable = lambda n: n):
    """Evaluate a parsed tree; ``const`` lifts integer literals into the ring."""
    if isinstance(node, str):
        node = parse(node)
    kind = node[0]
    if kind == "num":
        return const(node[1])
    if kind == "var":
        try:
            return env[node[1]]
        except KeyError:
            raise ParseError(f"unbound variable {node[1]!r}") from None
    if kind == "add":
        acc = None
        for sign, t in node[1]:
            v = evaluate(t, env, const)
            if sign < 0:
                v = -v
            acc = v if acc is None else acc + v
        return acc
    if kind == "mul":
        return evaluate(node[1], env, const) * evaluate(node[2], env, const)
    if kind == "div":
        return evaluate(node[1], env, const) / evaluate(node[2], env, const)
    if kind == "pow":
        return evaluate(node[1], env, const) ** node[2]
    if kind == "neg":
        return -evaluate(node[1], env, const)
    raise ParseError(f"bad node {kind}")
