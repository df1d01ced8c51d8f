"""Recursive-descent parser for tower elements and radical generators.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*'|'/') power)*
    power  := factor ('^' ['-'] INT)?
    factor := INT | IDENT | 'sqrt' '(' expr ')' | 'root' '(' INT ',' expr ')'
            | '(' expr ')'

Products and quotients of constants, variables, generator names and
matching root forms give a :class:`GroupElement`.  Sums are allowed only
among base-field terms and give a :class:`BasePolynomial` (or a
:class:`RationalFunction` when a denominator is needed).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .tower import (
    BaseField,
    BasePolynomial,
    GroupElement,
    RadicalGenerator,
    RationalFunction,
    Tower,
)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass
class _Tok:
    kind: str  # "int", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(_Tok("int", num, start))
        elif ident is not None:
            toks.append(_Tok("ident", ident, start))
        else:
            if op not in "+-*/^(),":
                raise ParseError(f"unexpected character {op!r}", start, text)
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _RF:
    """Quotient of two Laurent polynomials over generators ++ variables."""

    __slots__ = ("num", "den")

    def __init__(self, num: dict, den: dict):
        self.num = num
        self.den = den


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = out[e] + c1 * c2 if e in out else c1 * c2
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def _padd(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        c = c if sign > 0 else -c
        v = out[e] + c if e in out else c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


class Parser:
    def __init__(self, text: str, tower: Tower):
        self.text = text
        self.tower = tower
        self.toks = tokenize(text)
        self.i = 0
        self.k = tower.base.residue
        self.m = len(tower.generators)
        self.width = tower.arity
        self.symbols = {name: i for i, name in enumerate(tower.names)}
        for j, v in enumerate(tower.base.variables):
            self.symbols[v] = self.m + j

    # -- token helpers
    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, tok.pos, self.text)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text or t.kind not in ("op",):
            raise self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.take()

    def expect_end(self) -> None:
        t = self.peek()
        if t.kind != "end":
            raise self.error(f"unexpected {t.text!r}")

    def expect_int(self) -> int:
        t = self.peek()
        if t.kind != "int":
            raise self.error(f"expected an integer, found {t.text or 'end of input'!r}")
        self.take()
        return int(t.text)

    # -- value constructors
    def const(self, c) -> _RF:
        c = self.k(c)
        zero = (0,) * self.width
        return _RF({zero: c} if c else {}, {zero: self.k.one})

    def unit_at(self, idx: int) -> _RF:
        e = tuple(int(i == idx) for i in range(self.width))
        return _RF({e: self.k.one}, {(0,) * self.width: self.k.one})

    def _has_generator(self, *polys: dict) -> bool:
        return any(any(e[: self.m]) for poly in polys for e in poly)

    # -- grammar
    def parse_expr(self) -> _RF:
        sign = 1
        if self.peek().kind == "op" and self.peek().text in "+-":
            sign = -1 if self.take().text == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = _RF({e: -c for e, c in acc.num.items()}, acc.den)
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take()
            rhs = self.parse_term()
            if self._has_generator(acc.num, acc.den, rhs.num, rhs.den):
                raise self.error("sums involving a generator are not supported", op)
            num = _padd(_pmul(acc.num, rhs.den), _pmul(rhs.num, acc.den), 1 if op.text == "+" else -1)
            acc = _RF(num, _pmul(acc.den, rhs.den))
        return acc

    def parse_term(self) -> _RF:
        acc = self.parse_power()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take()
            rhs = self.parse_power()
            if op.text == "*":
                acc = _RF(_pmul(acc.num, rhs.num), _pmul(acc.den, rhs.den))
            else:
                if not rhs.num:
                    raise self.error("division by zero", op)
                acc = _RF(_pmul(acc.num, rhs.den), _pmul(acc.den, rhs.num))
        return acc

    def parse_power(self) -> _RF:
        base = self.parse_factor()
        if self.peek().kind == "op" and self.peek().text == "^":
            caret = self.take()
            neg = False
            if self.peek().kind == "op" and self.peek().text == "-":
                self.take()
                neg = True
            k = self.expect_int()
            if neg:
                if not base.num:
                    raise self.error("zero raised to a negative power", caret)
                base = _RF(base.den, base.num)
            num = {(0,) * self.width: self.k.one}
            den = dict(num)
            for _ in range(k):
                num = _pmul(num, base.num)
                den = _pmul(den, base.den)
            base = _RF(num, den)
        return base

    def parse_factor(self) -> _RF:
        t = self.peek()
        if t.kind == "int":
            self.take()
            return self.const(int(t.text))
        if t.kind == "op" and t.text == "(":
            self.take()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if t.kind == "ident":
            if t.text in ("sqrt", "root"):
                r, arg_tok, const, exps = self.parse_root_form()
                return self.match_generator(r, const, exps, t)
            self.take()
            if t.text in self.symbols:
                return self.unit_at(self.symbols[t.text])
            if t.text == "w" and self.k.is_finite and self.k.s > 1:
                return self.const(self.k.gen)
            raise self.error(f"unknown identifier {t.text!r}", t)
        raise self.error(f"unexpected {t.text or 'end of input'!r}", t)

    def parse_root_form(self):
        """Parse ``sqrt(arg)`` / ``root(r, arg)``; return order, constant, base exponents."""
        head = self.take()
        self.expect("(")
        if head.text == "sqrt":
            r = 2
        else:
            r = self.expect_int()
            if r < 1:
                raise self.error("root order must be positive", head)
            self.expect(",")
        arg_tok = self.peek()
        arg = self.parse_expr()
        self.expect(")")
        const, exps = self.as_radicand(arg, arg_tok)
        return r, arg_tok, const, exps

    def as_radicand(self, rf: _RF, tok: _Tok):
        folded = fold_monomial_denominator(rf)
        if folded is None or len(folded) != 1:
            raise self.error("radicand must be a constant times a monomial in base variables", tok)
        (e, c), = folded.items()
        if any(e[: self.m]):
            raise self.error("radicands may not involve generators", tok)
        return c, e[self.m :]

    def match_generator(self, r: int, const, exps, tok: _Tok) -> _RF:
        for i, g in enumerate(self.tower.generators):
            if g.order == r and g.constant == const and g.exponents == tuple(exps):
                return self.unit_at(i)
        raise self.error("root form does not match any generator of the tower", tok)


def fold_monomial_denominator(rf: _RF) -> dict | None:
    """Divide through by a single-term denominator; ``None`` if it has several terms."""
    if len(rf.den) != 1:
        return None
    (de, dc), = rf.den.items()
    inv = 1 / dc if not hasattr(dc, "inverse") else dc.inverse()
    return {tuple(a - b for a, b in zip(e, de)): c * inv for e, c in rf.num.items()}


def _finish(p: Parser, rf: _RF):
    m = p.m
    folded = fold_monomial_denominator(rf)
    if folded is not None:
        if not folded:
            return BasePolynomial(())
        if len(folded) == 1:
            (e, c), = folded.items()
            return GroupElement(c, e)
        if p._has_generator(folded):
            raise ParseError("generators may only appear in products", 0, p.text)
        terms = {e[m:]: c for e, c in folded.items()}
        lows = [min(e[j] for e in terms) for j in range(p.tower.base.n)]
        if all(x >= 0 for x in lows):
            return BasePolynomial.from_dict(terms)
        shift = tuple(max(0, -x) for x in lows)
        num = {tuple(a + s for a, s in zip(e, shift)): c for e, c in terms.items()}
        return RationalFunction(
            BasePolynomial.from_dict(num), BasePolynomial.from_dict({shift: p.k.one})
        )
    if p._has_generator(rf.num, rf.den):
        raise ParseError("generators may only appear in products", 0, p.text)
    num = {e[m:]: c for e, c in rf.num.items()}
    den = {e[m:]: c for e, c in rf.den.items()}
    if not num:
        return BasePolynomial(())
    lows = [min(min(e[j] for e in num), min(e[j] for e in den)) for j in range(p.tower.base.n)]
    shift = tuple(max(0, -x) for x in lows)

    def moved(d):
        return BasePolynomial.from_dict({tuple(a + s for a, s in zip(e, shift)): c for e, c in d.items()})

    return RationalFunction(moved(num), moved(den))


def parse_element(text: str, context: Tower):
    """Parse ``text`` in the tower ``context``.

    Returns a :class:`GroupElement` for multiplicative expressions, a
    :class:`BasePolynomial` for sums over the base, or a
    :class:`RationalFunction` for quotients of such sums.
    """
    p = Parser(text, context)
    rf = p.parse_expr()
    p.expect_end()
    return _finish(p, rf)


def parse_generator(text: str, base: BaseField, name: str) -> RadicalGenerator:
    """Parse a generator definition ``sqrt(arg)``, ``root(r, arg)`` or a bare radicand (order 1)."""
    p = Parser(text, Tower(base))
    t = p.peek()
    if t.kind == "ident" and t.text in ("sqrt", "root"):
        r, _, const, exps = p.parse_root_form()
        p.expect_end()
    else:
        rf = p.parse_expr()
        p.expect_end()
        const, exps = p.as_radicand(rf, t)
        r = 1
    try:
        return RadicalGenerator(name, const, tuple(exps), r)
    except ValueError as exc:
        raise ParseError(str(exc), t.pos, text) from exc


def parse_tower(base: BaseField, texts) -> Tower:
    gens = []
    for i, text in enumerate(texts, start=1):
        gens.append(parse_generator(text, base, f"g{i}"))
    try:
        return Tower(base, tuple(gens))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
