"""Tokenizer, AST, and parser for the expression surface.

Grammar (precedence ^ > * > + = (+)):

    stmt   := 'let' IDENT '=' expr | expr
    expr   := term (('+' | '(+)') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' factor)?
    atom   := 'w' | NAT | FRAC | '-' (NAT | FRAC) | setlit
            | '(' expr ')' | IDENT atom*

'+' and '*' associate left, '^' right.  An identifier followed by atoms
is a command application ("simp {0} {1}"); alone it is a variable.  'w'
is reserved for the first infinite ordinal.  The natural-sum operator
may be written '(+)' or the single character U+2295.
"""

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Nat:
    value: int


@dataclass(frozen=True)
class Rat:
    num: int
    den: int


@dataclass(frozen=True)
class WSym:
    pass


@dataclass(frozen=True)
class SetLit:
    items: tuple


@dataclass(frozen=True)
class Bin:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Let:
    name: str
    expr: object


_PUNCT = {"{", "}", "(", ")", ",", "+", "*", "^", "/", "=", "-"}


def tokenize(text):
    """Yield (kind, value, column) triples; kinds: nat, ident, punct, oplus."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "⊕":
            tokens.append(("oplus", "(+)", i))
            i += 1
            continue
        if text.startswith("(+)", i):
            tokens.append(("oplus", "(+)", i))
            i += 3
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("nat", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if c in _PUNCT:
            tokens.append(("punct", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", column=i)
    return tokens


class _Parser:
    def __init__(self, tokens, length):
        self.tokens = tokens
        self.pos = 0
        self.length = length

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def column(self):
        t = self.peek()
        return t[2] if t else self.length

    def take_punct(self, value):
        t = self.peek()
        if t and t[0] == "punct" and t[1] == value:
            self.pos += 1
            return True
        return False

    def expect_punct(self, value):
        if not self.take_punct(value):
            raise ParseError("syntax error", column=self.column(), expected=(value,))

    def stmt(self):
        t = self.peek()
        if t and t[0] == "ident" and t[1] == "let":
            self.pos += 1
            name_tok = self.peek()
            if not name_tok or name_tok[0] != "ident":
                raise ParseError("expected a name after 'let'", column=self.column(), expected=("identifier",))
            if name_tok[1] in ("w", "let"):
                raise ParseError(f"{name_tok[1]!r} is reserved", column=self.column())
            self.pos += 1
            self.expect_punct("=")
            node = Let(name_tok[1], self.expr())
        else:
            node = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input", column=self.column(), expected=("end of input",))
        return node

    def expr(self):
        node = self.term()
        while True:
            t = self.peek()
            if t and t[0] == "punct" and t[1] == "+":
                self.pos += 1
                node = Bin("+", node, self.term())
            elif t and t[0] == "oplus":
                self.pos += 1
                node = Bin("(+)", node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while self.take_punct("*"):
            node = Bin("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.take_punct("^"):
            node = Bin("^", node, self.factor())
        return node

    def _numeric(self, negate):
        t = self.peek()
        if not t or t[0] != "nat":
            raise ParseError("expected a number", column=self.column(), expected=("natural number",))
        self.pos += 1
        num = int(t[1])
        if self.take_punct("/"):
            d = self.peek()
            if not d or d[0] != "nat":
                raise ParseError("expected a denominator", column=self.column(), expected=("natural number",))
            self.pos += 1
            den = int(d[1])
            if den == 0:
                raise ParseError("zero denominator", column=d[2])
            return Rat(-num if negate else num, den)
        if negate:
            return Rat(-num, 1)
        return Nat(num)

    def atom(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", column=self.column(), expected=("atom",))
        kind, value, col = t
        if kind == "punct" and value == "-":
            self.pos += 1
            return self._numeric(negate=True)
        if kind == "nat":
            return self._numeric(negate=False)
        if kind == "punct" and value == "(":
            self.pos += 1
            node = self.expr()
            self.expect_punct(")")
            return node
        if kind == "punct" and value == "{":
            self.pos += 1
            items = []
            if self.take_punct("}"):
                return SetLit(())
            while True:
                items.append(self.expr())
                if self.take_punct(","):
                    continue
                self.expect_punct("}")
                return SetLit(tuple(items))
        if kind == "ident":
            self.pos += 1
            if value == "w":
                return WSym()
            args = []
            while self._at_atom_start():
                args.append(self.atom())
            if args:
                return Call(value, tuple(args))
            return Var(value)
        raise ParseError(f"unexpected token {value!r}", column=col, expected=("atom",))

    def _at_atom_start(self):
        t = self.peek()
        if t is None:
            return False
        kind, value, _ = t
        if kind in ("nat", "ident"):
            return True
        return kind == "punct" and value in ("{", "(", "-")


def parse(text):
    """Parse one statement (a 'let' binding or an expression)."""
    return _Parser(tokenize(text), len(text)).stmt()
