"""Divisors supported on the named (-2)-curves of the K3 surface.

Symbols are ``l1..l6`` (half the pull-back of a branch line), ``l13`` (the
exceptional curve over ``P_{1,3}``), ``mu[12|34]`` (the pull-back of the line
through ``P_{1,2}`` and ``P_{3,4}``) and opaque pull-backs of higher-degree
rational curves such as ``eta[(12)(34)(15)|(36)(56)]``.  Opaque symbols can
be carried around but have no intersection numbers.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Mapping

from .errors import OpaquePairing, ParseError, UnknownSymbol
from .weierstrass import FiberType

OPAQUE_KINDS = ("eta", "xi", "nu", "gamma")


def _pair(i: int, j: int) -> tuple[int, int]:
    if i == j or not (1 <= i <= 6 and 1 <= j <= 6):
        raise UnknownSymbol(f"bad index pair {i},{j}")
    return (min(i, j), max(i, j))


@dataclass(frozen=True, order=True)
class CurveSymbol:
    """``kind`` is ``l``, ``lp`` (pair), ``mu`` or an opaque kind."""

    kind: str
    data: tuple

    @classmethod
    def line(cls, i: int) -> "CurveSymbol":
        if not 1 <= i <= 6:
            raise UnknownSymbol(f"no line l{i}")
        return cls("l", (i,))

    @classmethod
    def point(cls, i: int, j: int) -> "CurveSymbol":
        return cls("lp", _pair(i, j))

    @classmethod
    def mu(cls, p: tuple[int, int], q: tuple[int, int]) -> "CurveSymbol":
        p, q = _pair(*p), _pair(*q)
        if set(p) & set(q):
            raise UnknownSymbol(f"mu needs four distinct indices, got {p} {q}")
        return cls("mu", tuple(sorted((p, q))))

    @classmethod
    def opaque(cls, kind: str, label: str) -> "CurveSymbol":
        if kind not in OPAQUE_KINDS:
            raise UnknownSymbol(f"unknown curve family {kind!r}")
        return cls(kind, (re.sub(r"\s+", "", label),))

    @property
    def is_opaque(self) -> bool:
        return self.kind in OPAQUE_KINDS

    @property
    def pairs(self) -> tuple:
        return self.data if self.kind == "mu" else ()

    def __str__(self) -> str:
        if self.kind == "l":
            return f"l{self.data[0]}"
        if self.kind == "lp":
            return "l{}{}".format(*self.data)
        if self.kind == "mu":
            (i, j), (k, m) = self.data
            return f"mu[{i}{j}|{k}{m}]"
        return f"{self.kind}[{self.data[0]}]"


def base_symbols() -> list[CurveSymbol]:
    """The 6 + 15 + 45 curves with known intersection numbers."""
    out = [CurveSymbol.line(i) for i in range(1, 7)]
    pairs = list(itertools.combinations(range(1, 7), 2))
    out += [CurveSymbol.point(*p) for p in pairs]
    seen = set()
    for p, q in itertools.combinations(pairs, 2):
        if not set(p) & set(q):
            s = CurveSymbol.mu(p, q)
            if s not in seen:
                seen.add(s)
                out.append(s)
    return out


def intersection(x: CurveSymbol, y: CurveSymbol) -> int:
    if x.is_opaque or y.is_opaque:
        raise OpaquePairing(f"no intersection numbers are known for {x if x.is_opaque else y}")
    if x.kind > y.kind:
        x, y = y, x
    # kinds in order: l < lp < mu
    if x.kind == y.kind:
        if x == y:
            return -2
        if x.kind != "mu":
            return 0
        shared = set(x.pairs) & set(y.pairs)
        return 2 if not shared else 0
    if x.kind == "l" and y.kind == "lp":
        return 1 if x.data[0] in y.data else 0
    if x.kind == "l" and y.kind == "mu":
        return 0 if x.data[0] in set(itertools.chain(*y.pairs)) else 1
    # lp with mu
    return 2 if x.data in y.pairs else 0


class Divisor:
    """A finite Z-combination of curve symbols; zero terms are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[CurveSymbol, int] | Iterable = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sym, c in items:
            acc[sym] += c
        self.terms = {s: c for s, c in acc.items() if c}

    @classmethod
    def of(cls, sym: CurveSymbol, c: int = 1) -> "Divisor":
        return cls({sym: c})

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, k: int) -> "Divisor":
        return Divisor({s: k * c for s, c in self.terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def positive(self) -> "Divisor":
        return Divisor({s: c for s, c in self.terms.items() if c > 0})

    def negative(self) -> "Divisor":
        return Divisor({s: -c for s, c in self.terms.items() if c < 0})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms):
            c = self.terms[s]
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(("- " if c < 0 else "+ ") + mag + str(s))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Divisor({self})"


def pairing(d1: Divisor, d2: Divisor) -> int:
    return sum(c1 * c2 * intersection(s1, s2)
               for s1, c1 in d1.terms.items() for s2, c2 in d2.terms.items())


# --------------------------------------------------------------------------
# divisors of functions

_BOUNDARY = lambda: Divisor({CurveSymbol.mu((1, 2), (3, 4)): 1,  # noqa: E731
                             CurveSymbol.point(1, 2): 1, CurveSymbol.point(3, 4): 1})

_LINE_FUNCTIONS = {"u": 1, "u-1": 2, "v": 3, "v-1": 4, "au+bv-1": 5, "cu+dv-1": 6}
# which of l12, l34 the line avoids at infinity
_POLES = {1: ((3, 4),), 2: ((3, 4),), 3: ((1, 2),), 4: ((1, 2),),
          5: ((1, 2), (3, 4)), 6: ((1, 2), (3, 4))}


def _line_divisor(i: int) -> Divisor:
    d = Divisor.of(CurveSymbol.line(i), 2)
    for j in range(1, 7):
        # P_12 and P_34 lie at infinity, off the affine zero set
        if j != i and _pair(i, j) not in ((1, 2), (3, 4)):
            d = d + Divisor.of(CurveSymbol.point(i, j))
    pole = Divisor.of(CurveSymbol.mu((1, 2), (3, 4)))
    for p in _POLES[i]:
        pole = pole + Divisor.of(CurveSymbol.point(*p))
    return d - pole


def _w_divisor() -> Divisor:
    d = Divisor([(CurveSymbol.line(i), 1) for i in range(1, 7)])
    d = d + Divisor([(CurveSymbol.point(*p), 1) for p in itertools.combinations(range(1, 7), 2)])
    return d - 3 * _BOUNDARY()


def _m_divisor(p, q) -> Divisor:
    mu = CurveSymbol.mu(p, q)
    p, q = mu.pairs
    return Divisor({mu: 1, CurveSymbol.point(*p): 1, CurveSymbol.point(*q): 1}) - _BOUNDARY()


_M_RE = re.compile(r"^M\[(\d)(\d)\|(\d)(\d)\]$")


def function_divisor(name: str) -> Divisor:
    """Divisor of ``u``, ``u-1``, ..., ``w`` or ``M[ij|km]`` (the line through P_ij, P_km)."""
    key = re.sub(r"\s+", "", name)
    if key in _LINE_FUNCTIONS:
        return _line_divisor(_LINE_FUNCTIONS[key])
    if key == "w":
        return _w_divisor()
    m = _M_RE.match(key)
    if m:
        i, j, k, l_ = map(int, m.groups())
        return _m_divisor((i, j), (k, l_))
    raise UnknownSymbol(f"no divisor is recorded for the function {name!r}")


def divisor_of(factors: Iterable[tuple[str, int]]) -> Divisor:
    return reduce(lambda acc, f: acc + f[1] * function_divisor(f[0]), factors, Divisor())


# --------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<div>div\()
    | (?P<mu>mu\[\s*(\d)\s*(\d)\s*\|\s*(\d)\s*(\d)\s*\])
    | (?P<opq>(?:eta|xi|nu|gamma)\[[^\]]*\])
    | (?P<lp>l(\d)(\d))
    | (?P<l>l(\d))
    | (?P<num>\d+)
    | (?P<op>[-+*().])
    )""", re.VERBOSE)


def _tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read divisor text at {text[pos:]!r}")
        pos = m.end()
        if m.group("div"):
            depth, start = 1, pos
            while pos < len(text) and depth:
                depth += {"(": 1, ")": -1}.get(text[pos], 0)
                pos += 1
            if depth:
                raise ParseError("unbalanced div(")
            out.append(("sym", function_divisor(text[start:pos - 1])))
        elif m.group("mu"):
            i, j, k, l_ = (int(g) for g in m.group(3, 4, 5, 6))
            out.append(("sym", Divisor.of(CurveSymbol.mu((i, j), (k, l_)))))
        elif m.group("opq"):
            kind, label = m.group("opq").split("[", 1)
            out.append(("sym", Divisor.of(CurveSymbol.opaque(kind, label[:-1]))))
        elif m.group("lp"):
            out.append(("sym", Divisor.of(CurveSymbol.point(int(m.group(9)), int(m.group(10))))))
        elif m.group("l"):
            out.append(("sym", Divisor.of(CurveSymbol.line(int(m.group(12))))))
        elif m.group("num"):
            out.append(("num", int(m.group("num"))))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op: str):
        if self.take() != ("op", op):
            raise ParseError(f"expected {op!r}")

    def sum(self) -> Divisor:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        d = sign * self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            d = d + sign * self.term()
        return d

    def term(self) -> Divisor:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            if self.peek() == ("op", "*"):
                self.take()
            return val * self.atom()
        return self.atom()

    def atom(self) -> Divisor:
        kind, val = self.take()
        if kind == "sym":
            return val
        if (kind, val) == ("op", "("):
            d = self.sum()
            self.expect(")")
            return d
        raise ParseError(f"unexpected token {val!r}")


def parse_divisor(text: str) -> Divisor:
    p = _Parser(text)
    d = p.sum()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return d


def evaluate_expression(text: str):
    """``D`` gives a divisor; ``D1 . D2`` gives their intersection number."""
    p = _Parser(text)
    d1 = p.sum()
    if p.peek() == ("op", "."):
        p.take()
        d2 = p.sum()
        if p.i != len(p.toks):
            raise ParseError(f"trailing input in {text!r}")
        return pairing(d1, d2)
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return d1


# --------------------------------------------------------------------------
# fibre types from dual graphs


@dataclass(frozen=True)
class Unrecognized:
    reason: str

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"Unrecognized ({self.reason})"


def _arm_lengths(adj: dict, centre) -> list[int]:
    arms = []
    for nb in adj[centre]:
        length, prev, cur = 1, centre, nb
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        if len(adj[cur]) != 1:
            return []
        arms.append(length)
    return sorted(arms)


def kodaira_type_of_divisor(d: Divisor) -> FiberType | Unrecognized:
    """Kodaira type of a fibre divisor read off its dual graph.

    ``I2`` and ``III`` have the same graph and are reported as ``I2``.
    """
    if not d or any(c <= 0 for c in d.terms.values()):
        return Unrecognized("coefficients must be positive")
    syms = sorted(d.terms)
    if any(s.is_opaque for s in syms):
        raise OpaquePairing("the divisor contains a curve without intersection numbers")
    if len(syms) == 1:
        return Unrecognized("a single (-2)-curve is not a fibre")
    if pairing(d, d) != 0:
        return Unrecognized(f"self-intersection {pairing(d, d)}")
    if any(pairing(d, Divisor.of(s)) for s in syms):
        return Unrecognized("some component meets the divisor non-trivially")
    if reduce(gcd, d.terms.values()) != 1:
        return Unrecognized("the divisor is a multiple of a fibre")
    adj: dict = {s: set() for s in syms}
    weights = {}
    for x, y in itertools.combinations(syms, 2):
        k = intersection(x, y)
        if k:
            adj[x].add(y)
            adj[y].add(x)
            weights[(x, y)] = k
    n, edges = len(syms), len(weights)
    if n == 2:
        return FiberType.I(2) if edges == 1 and max(weights.values()) == 2 else Unrecognized("two curves")
    if any(k != 1 for k in weights.values()):
        return Unrecognized("multiple edge in a graph with more than two vertices")
    degs = sorted(len(v) for v in adj.values())
    if edges == n and all(k == 2 for k in degs):
        return FiberType.I(n)
    if edges != n - 1:
        return Unrecognized("dual graph is not a tree or a cycle")
    branch = [s for s in syms if len(adj[s]) >= 3]
    if len(branch) == 1 and len(adj[branch[0]]) == 4 and n == 5:
        return FiberType.I_star(0)
    if len(branch) == 2 and all(len(adj[b]) == 3 for b in branch):
        return FiberType.I_star(n - 5)
    if len(branch) == 1 and len(adj[branch[0]]) == 3:
        arms = _arm_lengths(adj, branch[0])
        table = {(2, 2, 2): "IV*", (1, 3, 3): "III*", (1, 2, 5): "II*"}
        if tuple(arms) in table:
            return FiberType(table[tuple(arms)])
    return Unrecognized("dual graph is not an extended Dynkin diagram")


def verify_divisor_identity(lhs: Divisor, rhs: Divisor) -> bool:
    return lhs == rhs


# --------------------------------------------------------------------------
# named identities

_DIV_T_27 = "l16 + l14 + 2*(l1 + l13 + l3) + l23 + l35 - (mu[15|36] + mu[12|34])"
_CROSS = "mu[12|36] + mu[15|34] - (mu[12|34] + mu[15|36])"


@dataclass(frozen=True)
class DivisorCheck:
    name: str
    function: tuple  # (function name, exponent) pairs
    expected: str
    description: str

    def run(self) -> tuple[bool, str]:
        got = divisor_of(self.function)
        want = parse_divisor(self.expected)
        if not verify_divisor_identity(got, want):
            return False, f"{self.name}: computed {got}, expected {want}"
        msg = f"{self.name}: {self.description}"
        zero = kodaira_type_of_divisor(got.positive())
        pole = kodaira_type_of_divisor(got.negative())
        return True, f"{msg}; zero part {zero}, polar part {pole}"


CHECKS = {
    "div-t-2.7": DivisorCheck(
        "div-t-2.7", (("u", 1), ("v", 1), ("M[15|36]", -1)), _DIV_T_27,
        "divisor of t = uv/(cu+bv-1) matches"),
    "cross-product": DivisorCheck(
        "cross-product", (("M[12|36]", 1), ("M[15|34]", 1), ("M[15|36]", -1)), _CROSS,
        "divisor of (cu-1)(bv-1)/(cu+bv-1) matches"),
}


def run_check(name: str) -> tuple[bool, str]:
    if name not in CHECKS:
        raise UnknownSymbol(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    return CHECKS[name].run()
