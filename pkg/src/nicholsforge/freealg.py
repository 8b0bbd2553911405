"""Words and noncommutative polynomials over a named, graded alphabet.

Words are tuples of generator indices.  The monomial order used everywhere
is degree-first (degrees are the per-generator weights declared by the
alphabet), then lexicographic with generators declared later in the
alphabet comparing larger.  That single order drives rule orientation in
the rewrite engine, so each presentation picks its alphabet order and
weights to make its printed PBW monomials the normal forms.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass

from .exact import Scalar, ZERO, ONE, ScalarParseError


class AlphabetMismatch(Exception):
    """Raised when combining polynomials over different alphabets."""


class PolyParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names with positive integer degrees (order weights)."""

    names: tuple
    degrees: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")
        if len(self.names) != len(self.degrees):
            raise ValueError("names/degrees length mismatch")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("degrees must be positive")

    @staticmethod
    def of(pairs) -> "Alphabet":
        names, degs = zip(*pairs) if pairs else ((), ())
        return Alphabet(tuple(names), tuple(int(d) for d in degs))

    @staticmethod
    def simple(*names) -> "Alphabet":
        return Alphabet(tuple(names), (1,) * len(names))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word_degree(self, word) -> int:
        return sum(self.degrees[g] for g in word)

    def key(self, word):
        """Sort key: (degree, index sequence); later alphabet position = larger."""
        return (self.word_degree(word), word)

    def render_word(self, word) -> str:
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            n = j - i
            parts.append(self.names[word[i]] if n == 1 else f"{self.names[word[i]]}^{n}")
            i = j
        return "*".join(parts)


class NcPoly:
    """Noncommutative polynomial: map from word to nonzero Scalar coefficient."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Scalar.of(c)
                if c:
                    acc = self.terms.get(w)
                    c = acc + c if acc is not None else c
                    if c:
                        self.terms[w] = c
                    else:
                        del self.terms[w]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(alphabet: Alphabet) -> "NcPoly":
        return NcPoly(alphabet)

    @staticmethod
    def one(alphabet: Alphabet) -> "NcPoly":
        return NcPoly(alphabet, {(): ONE})

    @staticmethod
    def scalar(alphabet: Alphabet, c) -> "NcPoly":
        return NcPoly(alphabet, {(): Scalar.of(c)})

    @staticmethod
    def gen(alphabet: Alphabet, name: str) -> "NcPoly":
        return NcPoly(alphabet, {(alphabet.index(name),): ONE})

    @staticmethod
    def word(alphabet: Alphabet, word) -> "NcPoly":
        return NcPoly(alphabet, {tuple(word): ONE})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "NcPoly"):
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetMismatch("polynomials over different alphabets")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            s = acc + c if acc is not None else c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        p = NcPoly(self.alphabet)
        p.terms = out
        return p

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        p = NcPoly(self.alphabet)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def scale(self, c) -> "NcPoly":
        c = Scalar.of(c)
        p = NcPoly(self.alphabet)
        if c:
            p.terms = {w: c * v for w, v in self.terms.items()}
        return p

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = out.get(w)
                s = acc + c if acc is not None else c
                if s:
                    out[w] = s
                else:
                    del out[w]
        p = NcPoly(self.alphabet)
        p.terms = out
        return p

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "NcPoly":
        if n < 0:
            raise ValueError("negative powers are not defined in the free algebra")
        out = NcPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Max word degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.alphabet.word_degree(w) for w in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.alphabet.word_degree(w) for w in self.terms}
        return len(degs) <= 1

    def leading_word(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=self.alphabet.key)

    def coefficient(self, word) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def homogeneous_component(self, d: int) -> "NcPoly":
        return NcPoly(self.alphabet,
                      {w: c for w, c in self.terms.items()
                       if self.alphabet.word_degree(w) == d})

    def render(self) -> str:
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=self.alphabet.key, reverse=True)
        parts = []
        for w in words:
            c = self.terms[w]
            body = self.alphabet.render_word(w)
            if not w:
                frag = c.format()
            elif c.is_one():
                frag = body
            elif c == Scalar(-1):
                frag = "-" + body
            else:
                ctxt = c.format()
                if ("+" in ctxt[1:]) or ("-" in ctxt[1:]) or " " in ctxt:
                    ctxt = f"({ctxt})"
                frag = f"{ctxt}*{body}"
            if not parts:
                parts.append(frag)
            elif frag.startswith("-"):
                parts.append("- " + frag[1:])
            else:
                parts.append("+ " + frag)
        return " ".join(parts)

    def __repr__(self):
        return f"NcPoly({self.render()})"


def nc_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Concatenation product extended bilinearly."""
    return p * q


def graded_component(alphabet: Alphabet, d: int):
    """All words of total degree d, in lexicographic order of the alphabet."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []

    def grow(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for g in range(len(alphabet)):
            dg = alphabet.degrees[g]
            if dg <= remaining:
                prefix.append(g)
                grow(prefix, remaining - dg)
                prefix.pop()

    grow([], d)
    return out


# -- polynomial text grammar -------------------------------------------------
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' INT)?
#   atom   := NAME | 'xi' | INT ['/' INT] | '(' expr ')'
#
# Unknown generator names are rejected with the offending position.

_TOKEN_RE = _re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()^*/+-]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolyParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, alphabet: Alphabet, text: str):
        self.alphabet = alphabet
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r}", pos)

    def parse(self) -> NcPoly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolyParseError(f"unexpected trailing {val!r}", pos)
        return p

    def expr(self) -> NcPoly:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            if val == "-":
                sign = -1
        p = self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> NcPoly:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> NcPoly:
        p = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolyParseError("exponent must be an integer", pos)
            p = p ** int(val)
        return p

    def atom(self) -> NcPoly:
        kind, val, pos = self.take()
        if kind == "int":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.take()
                kind3, val3, pos3 = self.take()
                if kind3 != "int":
                    raise PolyParseError("denominator must be an integer", pos3)
                return NcPoly.scalar(self.alphabet, Scalar.parse(f"{num}/{val3}"))
            return NcPoly.scalar(self.alphabet, num)
        if kind == "name":
            if val == "xi":
                return NcPoly.scalar(self.alphabet, Scalar.xi())
            if val in self.alphabet.names:
                return NcPoly.gen(self.alphabet, val)
            raise PolyParseError(f"unknown generator {val!r}", pos)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise PolyParseError(f"unexpected token {val!r}", pos)


def parse_poly(alphabet: Alphabet, text: str) -> NcPoly:
    """Parse the polynomial grammar over the given alphabet."""
    return _Parser(alphabet, text).parse()
