"""Text syntax for Mahler equations.

Grammar (whitespace-insensitive)::

    equation := expr "=" expr
    expr     := ["+" | "-"] term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := atom ["^" integer]
    atom     := integer | "z" | "F" "(" "z" ["^" integer] ")" | "(" expr ")"

Every side must be linear in ``F``; division is only by nonzero constants.
The usual form is ``... = 0``, but ``(1-z)*F(z^2) = F(z)`` is accepted too.
The radix is the smallest ``k`` whose powers cover every ``F`` argument.
"""

from __future__ import annotations

import logging
import re
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly
from .algebra.poly import format_poly
from .errors import EquationSyntaxError, InconsistentRadix, MissingEndpointTerm
from .mahler import MahlerEquation

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), m.start(1)))
        else:
            ch = m.group(2)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "zF()+-*/^=":
                raise EquationSyntaxError(f"unexpected character {ch!r}", m.start(2))
            tokens.append(Token(ch, ch, m.start(2)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# A linear form in F: exponent -> polynomial coefficient; key 0 holds the F-free part.
_Linear = dict


def _lin_add(a: _Linear, b: _Linear, sign: int = 1) -> _Linear:
    out = dict(a)
    for e, p in b.items():
        out[e] = out.get(e, Poly()) + (p if sign > 0 else -p)
    return out


def _is_const(a: _Linear) -> bool:
    return all(e == 0 or p.is_zero() for e, p in a.items())


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, *expected: str):
        raise EquationSyntaxError(message, self.tok.pos, expected)

    def eat(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.error(f"unexpected {self.tok.text or 'end of input'!r}", repr(kind))
        t = self.tok
        self.i += 1
        return t

    def equation(self) -> _Linear:
        lhs = self.expr()
        self.eat("=")
        rhs = self.expr()
        self.eat("end")
        return _lin_add(lhs, rhs, -1)

    def expr(self) -> _Linear:
        sign = 1
        if self.tok.kind in "+-":
            sign = -1 if self.tok.kind == "-" else 1
            self.i += 1
        acc = self.term()
        if sign < 0:
            acc = _lin_add({}, acc, -1)
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.i += 1
            acc = _lin_add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> _Linear:
        acc = self.factor()
        while self.tok.kind in ("*", "/"):
            op, pos = self.tok.kind, self.tok.pos
            self.i += 1
            rhs = self.factor()
            if op == "*":
                if not _is_const(acc) and not _is_const(rhs):
                    raise EquationSyntaxError("product of two F terms is not linear", pos)
                if _is_const(acc):
                    acc, rhs = rhs, acc
                c = rhs.get(0, Poly())
                acc = {e: p * c for e, p in acc.items()}
            else:
                c = rhs.get(0, Poly())
                if not _is_const(rhs) or c.degree != 0:
                    raise EquationSyntaxError("can only divide by a nonzero constant", pos)
                acc = {e: p.scale(1 / c[0]) for e, p in acc.items()}
        return acc

    def factor(self) -> _Linear:
        base = self.atom()
        if self.tok.kind == "^":
            pos = self.tok.pos
            self.i += 1
            n = int(self.eat("int").text)
            if not _is_const(base):
                raise EquationSyntaxError("cannot raise an F term to a power", pos)
            return {0: base.get(0, Poly()) ** n}
        return base

    def atom(self) -> _Linear:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return {0: Poly([int(t.text)])}
        if t.kind == "z":
            self.i += 1
            return {0: Poly([0, 1])}
        if t.kind == "F":
            self.i += 1
            self.eat("(")
            self.eat("z")
            e = 1
            if self.tok.kind == "^":
                self.i += 1
                e = int(self.eat("int").text)
                if e < 1:
                    raise EquationSyntaxError("F argument exponent must be positive", self.tokens[self.i - 1].pos)
            self.eat(")")
            return {e: Poly([1])}
        if t.kind == "(":
            self.i += 1
            inner = self.expr()
            self.eat(")")
            return inner
        self.error(f"unexpected {t.text or 'end of input'!r}", "integer", "'z'", "'F'", "'('")


def _perfect_power_base(e: int) -> int:
    """Smallest ``b`` with ``e`` a power of ``b``."""
    for b in range(2, e + 1):
        x = b
        while x < e:
            x *= b
        if x == e:
            return b
    return e


def _log_exact(e: int, k: int) -> int | None:
    j = 0
    while e % k == 0:
        e //= k
        j += 1
    return j if e == 1 else None


@dataclass(frozen=True)
class EquationAst:
    """Collected terms ``(coefficient, j)`` meaning ``coefficient * F(z^(k^j))``."""

    terms: tuple[tuple[Poly, int], ...]
    k: int
    notes: tuple[str, ...] = field(default=())

    def to_equation(self) -> MahlerEquation:
        d = max((j for p, j in self.terms), default=0)
        a = [Poly()] * (d + 1)
        for p, j in self.terms:
            a[j] = a[j] + p
        if a[0].is_zero():
            raise MissingEndpointTerm("the coefficient of F(z) vanishes")
        if a[-1].is_zero():
            raise MissingEndpointTerm("the highest F term vanishes")
        return MahlerEquation(self.k, tuple(a))


def parse_ast(text: str, k: int | None = None) -> EquationAst:
    collected = _Parser(text).equation()
    const = collected.pop(0, Poly())
    if not const.is_zero():
        raise EquationSyntaxError("terms without F are not supported (inhomogeneous equation)", 0)
    exps = sorted(collected)  # cancelled terms stay, so a vanishing endpoint is reported
    notes = []
    if k is None:
        bases = {_perfect_power_base(e) for e in exps if e > 1}
        if len(bases) > 1:
            raise InconsistentRadix(f"F arguments {exps} are not powers of a single radix")
        if bases:
            k = bases.pop()
        else:
            k = 2
            notes.append("no F(z^e) with e > 1; radix defaults to 2")
    terms = []
    for e in exps:
        j = _log_exact(e, k)
        if j is None:
            raise InconsistentRadix(f"F(z^{e}) is not a power of radix {k}")
        terms.append((collected[e], j))
    js = [j for _, j in terms if j]
    if js:
        g = 0
        for j in js:
            g = gcd(g, j)
        if g > 1:
            notes.append(f"exponents are also powers of {k ** g}; using the smallest radix {k}")
    for note in notes:
        log.warning(note)
    return EquationAst(tuple(terms), k, tuple(notes))


def parse_equation(text: str, k: int | None = None) -> MahlerEquation:
    """Parse equation text into a :class:`MahlerEquation` (coefficients collected, not rescaled)."""
    return parse_ast(text, k).to_equation()


def format_equation(eq: MahlerEquation) -> str:
    """Inverse of :func:`parse_equation` for equations whose radix is the inferred one."""
    parts: list[str] = []
    for j, p in enumerate(eq.a):
        if p.is_zero():
            continue
        arg = "z" if j == 0 else f"z^{eq.k ** j}"
        if p == Poly([1]):
            parts.append(f"F({arg})")
        elif p == Poly([-1]):
            parts.append(f"-F({arg})")
        else:
            parts.append(f"({format_poly(p)})*F({arg})")
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out + " = 0"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
