"""Reading and printing ideal files.

File layout::

    # comment
    vars: x, y, z          (optional; an integer d means x1..xd)
    kind: polynomial       (optional; monomial | polynomial)
    x^4 + y*z^3, x^2*z,
    y^3 + z^5

Generators are separated by commas or newlines (outside parentheses).
Expressions use ``+ - *``, powers ``^`` or ``**`` with integer exponents,
parentheses, and integer or rational constants (``3/2``).
"""

import re
from fractions import Fraction

from .errors import ParseError
from .groebner import Polynomial, PolynomialIdeal, default_names
from .monomial import MonomialIdeal

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/(),])
""", re.VERBOSE)

_HEADER = re.compile(r"^\s*(vars|kind)\s*:(.*)$")


def _tokenize(text, first_line):
    tokens = []
    line, col = first_line, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            tokens.append(("sep", value, line, col))
            line, col = line + 1, 1
        else:
            if kind != "ws":
                if kind == "op" and value == ",":
                    kind = "sep"
                tokens.append((kind, value, line, col))
            col += len(value)
        pos = m.end()
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, names):
        self.tokens = tokens
        self.k = 0
        self.index = {n: i for i, n in enumerate(names)}
        self.dim = len(names)
        self.depth = 0

    def peek(self):
        tok = self.tokens[self.k]
        # Newlines inside parentheses are plain whitespace.
        while tok[0] == "sep" and tok[1] == "\n" and self.depth:
            self.k += 1
            tok = self.tokens[self.k]
        return tok

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def generators(self):
        gens = []
        while True:
            tok = self.peek()
            if tok[0] == "end":
                return gens
            if tok[0] == "sep":
                self.take()
                continue
            gens.append((self.expr(), tok))
            nxt = self.peek()
            if nxt[0] not in ("sep", "end"):
                self.fail(f"expected ',' or end of generator, found {nxt[1]!r}")

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        result = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                result = result + t if tok[1] == "+" else result - t
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                result = result * self.factor()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                divisor = self.factor()
                if len(divisor.terms) != 1 or any(any(e) for e in divisor.terms):
                    self.fail("can only divide by a nonzero constant", tok)
                result = result * (1 / next(iter(divisor.terms.values())))
            else:
                return result

    def factor(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "pow":
            self.take()
            exp = self.take()
            if exp[0] != "num":
                self.fail("exponent must be a non-negative integer", exp)
            base = base ** int(exp[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value = tok[0], tok[1]
        if kind == "num":
            return Polynomial.constant(Fraction(int(value)), self.dim)
        if kind == "name":
            if value not in self.index:
                self.fail(f"unknown variable {value!r}", tok)
            e = [0] * self.dim
            e[self.index[value]] = 1
            return Polynomial.monomial(e)
        if kind == "op" and value == "(":
            self.depth += 1
            inner = self.expr()
            close = self.take()
            self.depth -= 1
            if close[1] != ")":
                self.fail("expected ')'", close)
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {value!r}", tok)


def parse_vars(spec):
    spec = spec.strip()
    if re.fullmatch(r"\d+", spec):
        d = int(spec)
        if d < 1:
            raise ParseError("need at least one variable")
        return [f"x{i + 1}" for i in range(d)] if d > 3 else default_names(d)
    names = [n for n in re.split(r"[\s,]+", spec) if n]
    if not names:
        raise ParseError("empty variable list")
    for n in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
            raise ParseError(f"bad variable name {n!r}")
    if len(set(names)) != len(names):
        raise ParseError("repeated variable name")
    return names


class ParsedIdeal:
    """An ideal together with the variable names it was written in."""

    def __init__(self, ideal, names):
        self.ideal = ideal
        self.names = list(names)

    @property
    def kind(self):
        return "monomial" if isinstance(self.ideal, MonomialIdeal) else "polynomial"

    def __str__(self):
        return format_ideal(self.ideal, self.names)


def parse_ideal(text, names=None, kind=None):
    """Parse ideal text; returns a :class:`ParsedIdeal`."""
    body_lines = []
    header_vars = None
    start_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        m = _HEADER.match(line)
        if m and start_line is None:
            key, value = m.group(1), m.group(2)
            if key == "vars":
                header_vars = parse_vars(value)
            else:
                kind = kind or value.strip()
            body_lines.append("")
            continue
        if start_line is None and line.strip():
            start_line = lineno
        body_lines.append(line)
    if kind not in (None, "monomial", "polynomial"):
        raise ParseError(f"unknown kind {kind!r}")
    if names is None:
        names = header_vars or default_names(3)
    body = "\n".join(body_lines)
    parser = _Parser(_tokenize(body, 1), names)
    gens = parser.generators()
    gens = [(g, tok) for g, tok in gens if g]
    if not gens:
        raise ParseError("no nonzero generators")
    d = len(names)
    monomial = all(g.is_monomial() for g, _ in gens)
    if kind == "monomial" and not monomial:
        bad = next(tok for g, tok in gens if not g.is_monomial())
        raise ParseError("generator is not a monomial", bad[2], bad[3])
    if monomial and kind != "polynomial":
        ideal = MonomialIdeal([g.lm for g, _ in gens], d)
    else:
        ideal = PolynomialIdeal([g for g, _ in gens], d)
    return ParsedIdeal(ideal, names)


def parse_polynomial(text, names):
    parser = _Parser(_tokenize(text, 1), names)
    tok = parser.peek()
    if tok[0] == "end":
        raise ParseError("empty polynomial")
    f = parser.expr()
    rest = parser.peek()
    if rest[0] != "end":
        parser.fail(f"unexpected {rest[1]!r}")
    return f


def format_monomial(e, names):
    factors = []
    for n, k in zip(names, e):
        if k == 1:
            factors.append(n)
        elif k > 1:
            factors.append(f"{n}^{k}")
    return "*".join(factors) or "1"


def format_ideal(I, names=None):
    """Canonical text; monomial generators are listed in decreasing lex order."""
    names = names or default_names(I.dim)
    if isinstance(I, MonomialIdeal):
        gens = sorted(I.gens, reverse=True)
        return ", ".join(format_monomial(g, names) for g in gens)
    return ", ".join(g.to_str(names) for g in I.gens)
