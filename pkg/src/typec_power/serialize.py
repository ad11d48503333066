"""Canonical text and JSON forms for :class:`LaurentPoly`.

Text grammar::

    poly  := ['-'] term (('+' | '-') term)*
    term  := coeff ('*' factor)* | factor ('*' factor)*
    factor:= name ('^' signed-int)?

Rendering always writes exponents explicitly (``q^1``), omits a unit
coefficient on non-constant terms, and lists terms in descending graded-lex
order. JSON coefficients are decimal strings so that big integers survive any
JSON reader.
"""

import json
import re

from .errors import ParseError, UsageError
from .polycore import LaurentPoly, VarTable


def _monomial_text(names, exps):
    return "*".join(f"{v}^{x}" for v, x in zip(names, exps) if x)


def render_text(p):
    if p.is_zero():
        return "0"
    names = p.table.names
    pieces = []
    for exps, c in p.terms():
        mono = _monomial_text(names, exps)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def poly_document(p):
    """The PolyDocument mapping (``vars`` plus sorted ``terms``)."""
    if not p.is_integral():
        raise UsageError("only integral polynomials have a PolyDocument form")
    return {
        "vars": list(p.table.names),
        "terms": [{"c": str(int(c)), "e": list(e)} for e, c in p.terms()],
    }


def render_json(p):
    return json.dumps(poly_document(p), separators=(",", ":"))


def render(p, fmt="text"):
    if fmt == "text":
        return render_text(p)
    if fmt == "json":
        return render_json(p)
    raise UsageError(f"unknown format {fmt!r}")


def parse_json(text):
    try:
        doc = json.loads(text)
        table = VarTable(doc["vars"])
        terms = {}
        for t in doc["terms"]:
            e = tuple(int(x) for x in t["e"])
            if e in terms:
                raise ParseError(f"duplicate exponent vector {list(e)}")
            terms[e] = int(t["c"])
    except ParseError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed polynomial document: {exc}") from None
    return LaurentPoly(table, terms)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + bad]!r}", *_linecol(text, pos + bad))
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _linecol(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text, table):
        self.text = text
        self.table = table
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{msg}, found {what}", *_linecol(self.text, tok[2]))

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            self.fail(f"expected {value or kind}")
        return self.take()

    def poly(self):
        terms = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            self.take()
        while True:
            e, c = self.term()
            terms[e] = terms.get(e, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.take()
                continue
            self.fail("expected '+', '-' or end of input")
        return LaurentPoly(self.table, terms)

    def term(self):
        exps = [0] * self.table.arity
        coeff = 1
        tok = self.peek()
        if tok[0] == "int":
            coeff = int(self.take()[1])
        elif tok[0] == "name":
            self.factor(exps)
        else:
            self.fail("expected a coefficient or variable")
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            if self.peek()[0] != "name":
                self.fail("expected a variable after '*'")
            self.factor(exps)
        return tuple(exps), coeff

    def factor(self, exps):
        tok = self.take()
        name = tok[1]
        if name not in self.table:
            raise ParseError(f"unknown variable {name!r}", *_linecol(self.text, tok[2]))
        power = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] in "+-":
                neg = self.take()[1] == "-"
            power = int(self.expect("int")[1])
            if neg:
                power = -power
        exps[self.table.index(name)] += power


def parse_poly(text, table):
    """Parse the text grammar over ``table``; inverse of :func:`render_text`."""
    if text.strip() == "0":
        return LaurentPoly.zero(table)
    return _Parser(text, table).poly()
