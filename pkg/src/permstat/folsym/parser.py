"""Concrete grammar for sentences.

::

    formula  := iff
    iff      := implies ('<->' iff)?
    implies  := or ('->' implies)?
    or       := and ('|' and)*
    and      := unary ('&' unary)*
    unary    := '~' unary | quant | atom
    quant    := ('forall' | 'exists') var '.' formula
    atom     := PRED ['(' term (',' term)* ')'] | term ('=' | '!=') term
              | 'true' | 'false' | '(' formula ')'
    term     := var | '@a' DIGITS

Predicates start with an uppercase letter, variables with a lowercase one.
A quantifier body extends as far to the right as possible.  Names
(``@a1``...) are only accepted with ``allow_names=True``.

A signature may be given as a header line ``sig F/2, P/1`` before the
formula.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .syntax import FALSE, TRUE, And, Eq, Exists, Forall, Formula, Iff, Implies, Name, Not, Or, Pred, Term, Var, predicates

KEYWORDS = frozenset({"forall", "exists", "true", "false"})


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class SignatureError(ValueError):
    """Unknown predicate or arity mismatch."""


@dataclass(frozen=True)
class Signature:
    """Predicate symbols and arities; equality is always available."""

    predicates: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for name, arity in self.predicates:
            if not re.fullmatch(r"[A-Z][A-Za-z0-9_]*", name):
                raise SignatureError(f"bad predicate name {name!r}")
            if arity < 0:
                raise SignatureError(f"negative arity for {name}")
            if name in seen:
                raise SignatureError(f"predicate {name} declared twice")
            seen.add(name)

    @classmethod
    def of(cls, mapping: Dict[str, int]) -> "Signature":
        return cls(tuple(mapping.items()))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """``"F/2, P/1"`` -> Signature."""
        items = []
        for chunk in text.replace(";", ",").split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            m = re.fullmatch(r"([A-Z][A-Za-z0-9_]*)\s*/\s*(\d+)", chunk)
            if not m:
                raise SignatureError(f"bad signature entry {chunk!r}; expected NAME/ARITY")
            items.append((m.group(1), int(m.group(2))))
        return cls(tuple(items))

    def arity(self, name: str) -> Optional[int]:
        return dict(self.predicates).get(name)

    def merge(self, other: "Signature") -> "Signature":
        mine = dict(self.predicates)
        for name, arity in other.predicates:
            if name in mine and mine[name] != arity:
                raise SignatureError(f"predicate {name} has arity {mine[name]} and {arity}")
            mine.setdefault(name, arity)
        return Signature(tuple(mine.items()))

    def __str__(self):
        return ", ".join(f"{n}/{a}" for n, a in self.predicates)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<iff><->)
  | (?P<imp>->)
  | (?P<neq>!=)
  | (?P<name>@a\d+)
  | (?P<pred>[A-Z][A-Za-z0-9_]*)
  | (?P<ident>[a-z][A-Za-z0-9_]*)
  | (?P<sym>[~&|().,=])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "sym":
                kind = tok
            elif kind == "ident" and tok in KEYWORDS:
                kind = tok
            out.append(_Tok(kind, tok, pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


@dataclass
class _Parser:
    text: str
    sig: Optional[Signature]
    allow_names: bool
    toks: List[_Tok] = field(default_factory=list)
    i: int = 0
    inferred: Dict[str, int] = field(default_factory=dict)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.pos, self.text)

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.error(f"expected {kind!r}")
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def formula(self) -> Formula:
        left = self.implies()
        if self.accept("iff"):
            return Iff(left, self.formula())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.accept("imp"):
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self.accept("|"):
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conjunction(self) -> Formula:
        parts = [self.unary()]
        while self.accept("&"):
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> Formula:
        if self.accept("~"):
            return Not(self.unary())
        if self.tok.kind in ("forall", "exists"):
            cls = Forall if self.tok.kind == "forall" else Exists
            self.i += 1
            var = self.expect("ident").text
            self.expect(".")
            return cls(var, self.formula())
        return self.atom()

    def term(self) -> Term:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            return Var(tok.text)
        if tok.kind == "name":
            if not self.allow_names:
                raise ParseError(f"names such as {tok.text} are not part of the input language", tok.pos, self.text)
            self.i += 1
            return Name(int(tok.text[2:]))
        self.error("expected a variable")

    def atom(self) -> Formula:
        tok = self.tok
        if self.accept("true"):
            return TRUE
        if self.accept("false"):
            return FALSE
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        if tok.kind == "pred":
            self.i += 1
            args: Tuple[Term, ...] = ()
            if self.accept("("):
                items = [self.term()]
                while self.accept(","):
                    items.append(self.term())
                self.expect(")")
                args = tuple(items)
            self.check_arity(tok, len(args))
            return Pred(tok.text, args)
        if tok.kind in ("ident", "name"):
            left = self.term()
            if self.accept("="):
                return Eq(left, self.term())
            if self.accept("neq"):
                return Not(Eq(left, self.term()))
            self.error("expected '=' or '!='")
        self.error("expected a formula")

    def check_arity(self, tok: _Tok, arity: int) -> None:
        if self.sig is not None:
            declared = self.sig.arity(tok.text)
            if declared is None:
                raise SignatureError(f"unknown predicate {tok.text} at offset {tok.pos}")
        else:
            declared = self.inferred.setdefault(tok.text, arity)
        if declared != arity:
            raise SignatureError(
                f"predicate {tok.text} used with {arity} argument(s) at offset {tok.pos}, arity is {declared}")


def split_header(text: str) -> Tuple[Optional[Signature], str]:
    """Strip an optional leading ``sig ...`` line."""
    stripped = text.lstrip()
    if stripped.startswith("sig ") or stripped.startswith("sig\t"):
        first, _, rest = stripped.partition("\n")
        return Signature.parse(first[3:]), rest
    return None, text


def parse(text: str, sig: Optional[Signature] = None, allow_names: bool = False) -> Formula:
    """Parse ``text`` into a :class:`Formula`.

    Without a signature (argument or header line) predicate arities are
    inferred from first use and must then be used consistently.
    """
    header, body = split_header(text)
    if header is not None:
        sig = header if sig is None else sig.merge(header)
    offset = len(text) - len(body)
    p = _Parser(body, sig, allow_names)
    try:
        p.toks = tokenize(body)
        f = p.formula()
        if p.tok.kind != "eof":
            p.error("unexpected trailing input")
    except ParseError as e:
        raise ParseError(e.message, e.offset + offset, text) from None
    return f


def signature_of(formulas: Iterable[Formula], base: Optional[Signature] = None) -> Signature:
    """Smallest signature covering ``formulas`` (and ``base``)."""
    sig = base or Signature()
    for f in formulas:
        sig = sig.merge(Signature.of(predicates(f)))
    return sig
