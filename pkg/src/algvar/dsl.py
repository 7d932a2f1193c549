"""Text format for algebras, degeneration witnesses, closed-set
certificates, and edge claims, with a hand-rolled tokenizer and
recursive-descent parser that reports line/column-accurate errors.

Grammar sketch (comments start with #, statements are brace blocks or
single lines ending in ';'):

    algebra NAME [(param, ...)] { dim N; e1*e2 = <lincomb>; ... }
    witness NAME : SRC -> DST { E1 = <lincomb over t>; ...;
                                [index PARAM = <expr>;]
                                [where <expr> = <expr>;] }
    certificate NAME for SRC { flags: <flag>, ...;
                               [equations: <poly>, ...;]
                               [basis: e1 -> <lincomb>, ...;] }
    claim SRC -> DST via witness NAME [unless <expr> = <expr>];
    claim SRC !-> DST via (certificate NAME | <criterion>) [unless ...];

A reference SRC/DST is NAME or NAME(spec) where spec is `*` (whole
family, used with a parametrized index), a parameter name (generic
symbolic member), `name != v1, v2` (symbolic with exclusions), `name =
expr` or a bare expression (bound member; the expression may use the
source's parameters, which is how target parameters tied to source
parameters are written).  Certificate equations use variables x<i>_<j>_<k>
for the structure constants and may use the certificate's parameter.
Flags are `S1*S2 in S3`, `S1 o S2 in S4`, `S2*S2 = 0`, `e3 in Z`
(with S5 meaning the zero space).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

CRITERION_NAMES = (
    "ann_l",
    "ann_r",
    "ann",
    "az",
    "msub0",
    "center",
    "square",
    "plus2",
    "der_dim",
)


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


# ---------------------------------------------------------------------------
# Scalar expressions
# ---------------------------------------------------------------------------


class Expr:
    __slots__ = ()

    def symbols(self) -> set:
        out = set()
        self._collect(out)
        return out

    def _collect(self, out):  # pragma: no cover - overridden
        raise NotImplementedError


@dataclass(frozen=True)
class ENum(Expr):
    value: Fraction

    def _collect(self, out):
        pass


@dataclass(frozen=True)
class EImag(Expr):
    def _collect(self, out):
        pass


@dataclass(frozen=True)
class ESym(Expr):
    name: str

    def _collect(self, out):
        out.add(self.name)


@dataclass(frozen=True)
class EBin(Expr):
    op: str  # + - * /
    left: Expr
    right: Expr

    def _collect(self, out):
        self.left._collect(out)
        self.right._collect(out)


@dataclass(frozen=True)
class ENeg(Expr):
    arg: Expr

    def _collect(self, out):
        self.arg._collect(out)


@dataclass(frozen=True)
class EPow(Expr):
    base: Expr
    exponent: int

    def _collect(self, out):
        self.base._collect(out)


def _fold(op: str, left: Expr, right: Expr) -> Expr:
    """Fold numeric literals so `1/2` and `-3/4` are single atoms."""
    if isinstance(left, ENum) and isinstance(right, ENum):
        a, b = left.value, right.value
        if op == "+":
            return ENum(a + b)
        if op == "-":
            return ENum(a - b)
        if op == "*":
            return ENum(a * b)
        if op == "/" and b != 0:
            return ENum(a / b)
    return EBin(op, left, right)


def eval_expr(expr: Expr, field, env: Dict[str, object]):
    """Evaluate into a field; env binds symbol names to field elements."""
    if isinstance(expr, ENum):
        return field.of(expr.value)
    if isinstance(expr, EImag):
        from .scalars import GaussianRational

        return field.of(GaussianRational(0, 1))
    if isinstance(expr, ESym):
        if expr.name not in env:
            raise KeyError(f"unbound symbol {expr.name!r}")
        return env[expr.name]
    if isinstance(expr, ENeg):
        return -eval_expr(expr.arg, field, env)
    if isinstance(expr, EPow):
        base = eval_expr(expr.base, field, env)
        return base ** expr.exponent
    if isinstance(expr, EBin):
        a = eval_expr(expr.left, field, env)
        b = eval_expr(expr.right, field, env)
        if expr.op == "+":
            return a + b
        if expr.op == "-":
            return a - b
        if expr.op == "*":
            return a * b
        if expr.op == "/":
            return a / b
    raise TypeError(f"bad expression node {expr!r}")


def expr_to_str(expr: Expr, prec: int = 0) -> str:
    if isinstance(expr, ENum):
        s = str(expr.value)
        return s if expr.value >= 0 or prec == 0 else f"({s})"
    if isinstance(expr, EImag):
        return "i"
    if isinstance(expr, ESym):
        return expr.name
    if isinstance(expr, ENeg):
        inner = expr_to_str(expr.arg, 2)
        s = f"-{inner}"
        return s if prec == 0 else f"({s})"
    if isinstance(expr, EPow):
        return f"{expr_to_str(expr.base, 3)}^{expr.exponent}"
    if isinstance(expr, EBin):
        level = 1 if expr.op in "+-" else 2
        left = expr_to_str(expr.left, level)
        right = expr_to_str(expr.right, level + (1 if expr.op in "-/" else 0))
        s = f"{left}{expr.op}{right}" if level == 2 else f"{left} {expr.op} {right}"
        return s if level >= prec else f"({s})"
    raise TypeError(expr)


# ---------------------------------------------------------------------------
# Parsed statement records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ref:
    """A reference to a (possibly parametric) algebra."""

    name: str
    star: bool = False
    param: Optional[str] = None
    binding: Optional[Expr] = None
    exclusions: Tuple[Expr, ...] = ()

    def is_symbolic(self) -> bool:
        return self.param is not None and self.binding is None and not self.star


@dataclass
class ParsedAlgebra:
    name: str
    params: Tuple[str, ...]
    dim: int
    products: Dict[Tuple[int, int], Tuple[Tuple[int, Expr], ...]]


@dataclass
class ParsedWitness:
    name: str
    source: Ref
    target: Ref
    rows: Dict[int, Tuple[Tuple[int, Expr], ...]]
    index: Optional[Tuple[str, Expr]] = None
    relation: Optional[Tuple[Expr, Expr]] = None


@dataclass(frozen=True)
class Flag:
    """S<a> (*|o) S<b> in S<c>; c = 5 encodes the zero space.
    kind 'center' encodes `e<j> in Z` with a = j."""

    kind: str  # "product", "circ", "center"
    a: int
    b: int = 0
    c: int = 5


@dataclass
class ParsedCertificate:
    name: str
    source: Ref
    flags: Tuple[Flag, ...]
    equations: Tuple[Expr, ...]  # over x<i>_<j>_<k> and the source parameter
    basis_images: Optional[Dict[int, Tuple[Tuple[int, Expr], ...]]] = None


@dataclass
class ParsedClaim:
    kind: str  # "degeneration" | "non-degeneration"
    source: Ref
    target: Ref
    proof_kind: str  # "witness" | "certificate" | "criterion"
    proof_name: str
    unless: Optional[Tuple[Expr, Expr]] = None


@dataclass
class Document:
    algebras: List[ParsedAlgebra] = dataclass_field(default_factory=list)
    witnesses: List[ParsedWitness] = dataclass_field(default_factory=list)
    certificates: List[ParsedCertificate] = dataclass_field(default_factory=list)
    claims: List[ParsedClaim] = dataclass_field(default_factory=list)


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>!->|->|!=|[{}();,*+\-/^=:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token plumbing ------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str) -> DslError:
        tok = self.peek()
        shown = tok.text or "end of input"
        return DslError(f"{message} (found {shown!r})", tok.line, tok.col)

    def accept(self, text: str) -> bool:
        tok = self.peek()
        if tok.kind in ("op", "name") and tok.text == text:
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if (tok.kind in ("op", "name")) and tok.text == text:
            return self.next()
        raise self.error(f"expected {text!r}")

    def expect_name(self, what="a name") -> str:
        tok = self.peek()
        if tok.kind != "name":
            raise self.error(f"expected {what}")
        return self.next().text

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "num":
            raise self.error("expected an integer")
        return int(self.next().text)

    # -- expressions ----------------------------------------------------

    def parse_expr(self, stop_names: Sequence[str] = ()) -> Expr:
        return self._expr_add(set(stop_names))

    def _expr_add(self, stop) -> Expr:
        left = self._expr_mul(stop)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.next()
                right = self._expr_mul(stop)
                left = _fold(tok.text, left, right)
            else:
                return left

    def _expr_mul(self, stop) -> Expr:
        left = self._expr_unary(stop)
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.next()
                right = self._expr_unary(stop)
                left = _fold(tok.text, left, right)
            else:
                return left

    def _expr_unary(self, stop) -> Expr:
        if self.accept("-"):
            inner = self._expr_unary(stop)
            if isinstance(inner, ENum):
                return ENum(-inner.value)
            return ENeg(inner)
        if self.accept("+"):
            return self._expr_unary(stop)
        return self._expr_power(stop)

    def _expr_power(self, stop) -> Expr:
        base = self._expr_atom(stop)
        if self.peek().kind == "op" and self.peek().text == "^":
            self.next()
            negative = self.accept("-")
            e = self.expect_int()
            return EPow(base, -e if negative else e)
        return base

    def _expr_atom(self, stop) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.next()
            return ENum(Fraction(int(tok.text)))
        if tok.kind == "name":
            if tok.text in stop:
                raise self.error("unexpected symbol in scalar expression")
            self.next()
            if tok.text == "i":
                return EImag()
            return ESym(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.next()
            inner = self._expr_add(stop)
            self.expect(")")
            return inner
        raise self.error("expected a scalar expression")

    # -- linear combinations of basis vectors ---------------------------

    def parse_lincomb(self, prefix: str, dim: int) -> Tuple[Tuple[int, Expr], ...]:
        """Sum of terms `<expr> * <prefix><k>` or bare `<prefix><k>`,
        or the literal 0."""
        tok = self.peek()
        if tok.kind == "num" and tok.text == "0":
            self.next()
            return ()
        terms: List[Tuple[int, Expr]] = []
        sign = 1
        while True:
            coeff, idx = self._lincomb_term(prefix, dim)
            if sign < 0:
                coeff = ENeg(coeff)
            terms.append((idx, coeff))
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                sign = 1 if tok.text == "+" else -1
                self.next()
            else:
                break
        combined: Dict[int, Expr] = {}
        for idx, coeff in terms:
            combined[idx] = EBin("+", combined[idx], coeff) if idx in combined else coeff
        return tuple(sorted(combined.items()))

    def _basis_index(self, prefix: str, dim: int, text: str) -> Optional[int]:
        m = re.fullmatch(re.escape(prefix) + r"(\d+)", text)
        if not m:
            return None
        idx = int(m.group(1))
        if not 1 <= idx <= dim:
            raise self.error(f"basis index out of range 1..{dim}")
        return idx

    def _lincomb_term(self, prefix: str, dim: int) -> Tuple[Expr, int]:
        # Either `vec`, or `<mul-expr> * vec` where the expression may not
        # contain basis symbols.
        if self.accept("-"):
            coeff, idx = self._lincomb_term(prefix, dim)
            if isinstance(coeff, ENum):
                return ENum(-coeff.value), idx
            return ENeg(coeff), idx
        tok = self.peek()
        if tok.kind == "name":
            idx = self._basis_index(prefix, dim, tok.text)
            if idx is not None:
                self.next()
                return ENum(Fraction(1)), idx
        factors: List[Expr] = []
        ops: List[str] = []
        while True:
            tok = self.peek()
            if tok.kind == "name":
                idx = self._basis_index(prefix, dim, tok.text)
                if idx is not None:
                    self.next()
                    coeff = self._combine_factors(factors, ops)
                    return coeff, idx
            factors.append(self._expr_power({prefix}))
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                ops.append(tok.text)
                self.next()
                continue
            raise self.error(f"expected '*' and a basis vector {prefix}<k>")

    def _combine_factors(self, factors: List[Expr], ops: List[str]) -> Expr:
        if not factors:
            return ENum(Fraction(1))
        if len(ops) == len(factors):
            ops = ops[:-1]  # final op connects to the basis vector
        expr = factors[0]
        for op, f in zip(ops, factors[1:]):
            expr = _fold(op, expr, f)
        return expr

    # -- references ------------------------------------------------------

    def parse_ref(self) -> Ref:
        name = self.expect_name("an algebra name")
        if not self.accept("("):
            return Ref(name)
        if self.accept("*"):
            self.expect(")")
            return Ref(name, star=True)
        tok = self.peek()
        if tok.kind == "name" and tok.text not in ("i",):
            lookahead = self.tokens[self.pos + 1]
            if lookahead.kind == "op" and lookahead.text == ")":
                self.next()
                self.expect(")")
                return Ref(name, param=tok.text)
            if lookahead.kind == "op" and lookahead.text == "!=":
                param = self.next().text
                self.expect("!=")
                exclusions = [self.parse_expr()]
                while self.accept(","):
                    exclusions.append(self.parse_expr())
                self.expect(")")
                return Ref(name, param=param, exclusions=tuple(exclusions))
            if lookahead.kind == "op" and lookahead.text == "=":
                param = self.next().text
                self.expect("=")
                value = self.parse_expr()
                self.expect(")")
                return Ref(name, param=param, binding=value)
        value = self.parse_expr()
        self.expect(")")
        return Ref(name, binding=value)

    # -- statements -------------------------------------------------------

    def parse_document(self) -> Document:
        doc = Document()
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind != "name":
                raise self.error("expected a statement keyword")
            if tok.text == "algebra":
                doc.algebras.append(self.parse_algebra())
            elif tok.text == "witness":
                doc.witnesses.append(self.parse_witness())
            elif tok.text == "certificate":
                doc.certificates.append(self.parse_certificate())
            elif tok.text == "claim":
                doc.claims.append(self.parse_claim())
            else:
                raise self.error(
                    "expected one of: algebra, witness, certificate, claim"
                )
        return doc

    def parse_algebra(self) -> ParsedAlgebra:
        self.expect("algebra")
        name = self.expect_name("an algebra name")
        params: List[str] = []
        if self.accept("("):
            params.append(self.expect_name("a parameter name"))
            while self.accept(","):
                params.append(self.expect_name("a parameter name"))
            self.expect(")")
        self.expect("{")
        self.expect("dim")
        dim = self.expect_int()
        products: Dict[Tuple[int, int], Tuple[Tuple[int, Expr], ...]] = {}
        while self.accept(";"):
            if self.peek().kind == "op" and self.peek().text == "}":
                break
            if self.peek().kind == "name":
                i = self._basis_index("e", dim, self.peek().text)
                if i is None:
                    raise self.error("expected a product e<i>*e<j>")
                self.next()
                self.expect("*")
                j = self._basis_index("e", dim, self.expect_name("e<j>"))
                if j is None:
                    raise self.error("expected e<j>")
                self.expect("=")
                combo = self.parse_lincomb("e", dim)
                if (i, j) in products:
                    raise self.error(f"duplicate product e{i}*e{j}")
                products[(i, j)] = combo
            else:
                break
        self.expect("}")
        return ParsedAlgebra(name=name, params=tuple(params), dim=dim, products=products)

    def parse_witness(self) -> ParsedWitness:
        self.expect("witness")
        name = self.expect_name("a witness name")
        self.expect(":")
        source = self.parse_ref()
        self.expect("->")
        target = self.parse_ref()
        self.expect("{")
        rows: Dict[int, Tuple[Tuple[int, Expr], ...]] = {}
        index = None
        relation = None
        first = True
        while not (self.peek().kind == "op" and self.peek().text == "}"):
            if not first:
                self.expect(";")
                if self.peek().kind == "op" and self.peek().text == "}":
                    break
            first = False
            tok = self.peek()
            if tok.kind == "name" and tok.text == "index":
                self.next()
                pname = self.expect_name("the family parameter")
                self.expect("=")
                index = (pname, self.parse_expr())
            elif tok.kind == "name" and tok.text == "where":
                self.next()
                lhs = self.parse_expr()
                self.expect("=")
                rhs = self.parse_expr()
                relation = (lhs, rhs)
            else:
                i = self._basis_index("E", 4, self.expect_name("E<i>"))
                if i is None:
                    raise self.error("expected E<i>")
                self.expect("=")
                if i in rows:
                    raise self.error(f"duplicate row E{i}")
                rows[i] = self.parse_lincomb("e", 4)
        self.expect("}")
        return ParsedWitness(
            name=name, source=source, target=target, rows=rows, index=index, relation=relation
        )

    def parse_certificate(self) -> ParsedCertificate:
        self.expect("certificate")
        name = self.expect_name("a certificate name")
        self.expect("for")
        source = self.parse_ref()
        self.expect("{")
        flags: List[Flag] = []
        equations: List[Expr] = []
        basis = None
        while not (self.peek().kind == "op" and self.peek().text == "}"):
            section = self.expect_name("a section (flags/equations/basis)")
            self.expect(":")
            if section == "flags":
                flags.append(self.parse_flag())
                while self.accept(","):
                    flags.append(self.parse_flag())
            elif section == "equations":
                equations.append(self.parse_expr())
                while self.accept(","):
                    equations.append(self.parse_expr())
            elif section == "basis":
                basis = {}
                while True:
                    i = self._basis_index("e", 4, self.expect_name("e<i>"))
                    self.expect("->")
                    basis[i] = self.parse_lincomb("e", 4)
                    if not self.accept(","):
                        break
            else:
                raise self.error("unknown certificate section")
            self.expect(";")
        self.expect("}")
        return ParsedCertificate(
            name=name,
            source=source,
            flags=tuple(flags),
            equations=tuple(equations),
            basis_images=basis,
        )

    def parse_flag(self) -> Flag:
        tok = self.peek()
        if tok.kind == "name" and re.fullmatch(r"e\d", tok.text):
            j = self._basis_index("e", 4, self.next().text)
            self.expect("in")
            self.expect("Z")
            return Flag(kind="center", a=j)
        a = self._space_index()
        if self.accept("o"):
            kind = "circ"
        else:
            self.expect("*")
            kind = "product"
        b = self._space_index()
        if self.accept("in"):
            c = self._space_index()
            return Flag(kind=kind, a=a, b=b, c=c)
        self.expect("=")
        zero = self.expect_int()
        if zero != 0:
            raise self.error("flag right-hand side must be 0 or a space")
        return Flag(kind=kind, a=a, b=b, c=5)

    def _space_index(self) -> int:
        tok = self.expect_name("S<k>")
        m = re.fullmatch(r"S(\d)", tok)
        if not m or not 1 <= int(m.group(1)) <= 5:
            raise self.error("expected S1..S5")
        return int(m.group(1))

    def parse_claim(self) -> ParsedClaim:
        self.expect("claim")
        source = self.parse_ref()
        if self.accept("->"):
            kind = "degeneration"
        else:
            self.expect("!->")
            kind = "non-degeneration"
        target = self.parse_ref()
        self.expect("via")
        tok = self.expect_name("a proof reference")
        if tok == "witness":
            proof_kind, proof_name = "witness", self.expect_name("a witness name")
        elif tok == "certificate":
            proof_kind, proof_name = "certificate", self.expect_name("a certificate name")
        elif tok in CRITERION_NAMES:
            proof_kind, proof_name = "criterion", tok
        else:
            raise self.error(
                "expected witness NAME, certificate NAME, or a criterion name"
            )
        unless = None
        if self.accept("unless"):
            lhs = self.parse_expr()
            self.expect("=")
            rhs = self.parse_expr()
            unless = (lhs, rhs)
        self.expect(";")
        return ParsedClaim(
            kind=kind,
            source=source,
            target=target,
            proof_kind=proof_kind,
            proof_name=proof_name,
            unless=unless,
        )


def parse_document(text: str) -> Document:
    return Parser(text).parse_document()


def parse_catalog(text: str) -> List[ParsedAlgebra]:
    return parse_document(text).algebras


def parse_claims(text: str) -> Document:
    """Witnesses, certificates, and claims (algebras allowed too)."""
    return parse_document(text)


# ---------------------------------------------------------------------------
# Serialization (canonical form; parse . serialize == identity on parses)
# ---------------------------------------------------------------------------


def _lincomb_to_str(combo, prefix: str) -> str:
    if not combo:
        return "0"
    parts = []
    for idx, coeff in combo:
        if coeff == ENum(Fraction(1)):
            parts.append(f"{prefix}{idx}")
        else:
            parts.append(f"{expr_to_str(coeff, 2)}*{prefix}{idx}")
    return " + ".join(parts)


def ref_to_str(ref: Ref) -> str:
    if ref.star:
        return f"{ref.name}(*)"
    if ref.binding is not None:
        inner = expr_to_str(ref.binding)
        if ref.param:
            return f"{ref.name}({ref.param} = {inner})"
        return f"{ref.name}({inner})"
    if ref.param is not None:
        if ref.exclusions:
            excl = ", ".join(expr_to_str(e) for e in ref.exclusions)
            return f"{ref.name}({ref.param} != {excl})"
        return f"{ref.name}({ref.param})"
    return ref.name


def flag_to_str(flag: Flag) -> str:
    if flag.kind == "center":
        return f"e{flag.a} in Z"
    op = "o" if flag.kind == "circ" else "*"
    if flag.c == 5:
        return f"S{flag.a} {op} S{flag.b} = 0" if op == "o" else f"S{flag.a}*S{flag.b} = 0"
    sep = f" {op} " if op == "o" else "*"
    return f"S{flag.a}{sep}S{flag.b} in S{flag.c}"


def serialize(doc: Document) -> str:
    out = []
    for alg in doc.algebras:
        params = f"({', '.join(alg.params)})" if alg.params else ""
        body = [f"dim {alg.dim}"]
        for (i, j), combo in sorted(alg.products.items()):
            body.append(f"e{i}*e{j} = {_lincomb_to_str(combo, 'e')}")
        out.append(f"algebra {alg.name}{params} {{ " + "; ".join(body) + " }")
    for w in doc.witnesses:
        body = []
        for i in sorted(w.rows):
            body.append(f"E{i} = {_lincomb_to_str(w.rows[i], 'e')}")
        if w.index:
            body.append(f"index {w.index[0]} = {expr_to_str(w.index[1])}")
        if w.relation:
            body.append(
                f"where {expr_to_str(w.relation[0])} = {expr_to_str(w.relation[1])}"
            )
        out.append(
            f"witness {w.name} : {ref_to_str(w.source)} -> {ref_to_str(w.target)} {{ "
            + "; ".join(body)
            + " }"
        )
    for cert in doc.certificates:
        body = []
        if cert.flags:
            body.append("flags: " + ", ".join(flag_to_str(f) for f in cert.flags) + ";")
        if cert.equations:
            body.append(
                "equations: " + ", ".join(expr_to_str(e) for e in cert.equations) + ";"
            )
        if cert.basis_images:
            images = ", ".join(
                f"e{i} -> {_lincomb_to_str(cert.basis_images[i], 'e')}"
                for i in sorted(cert.basis_images)
            )
            body.append(f"basis: {images};")
        out.append(
            f"certificate {cert.name} for {ref_to_str(cert.source)} {{ "
            + " ".join(body)
            + " }"
        )
    for claim in doc.claims:
        arrow = "->" if claim.kind == "degeneration" else "!->"
        proof = (
            claim.proof_name
            if claim.proof_kind == "criterion"
            else f"{claim.proof_kind} {claim.proof_name}"
        )
        unless = ""
        if claim.unless:
            unless = f" unless {expr_to_str(claim.unless[0])} = {expr_to_str(claim.unless[1])}"
        out.append(
            f"claim {ref_to_str(claim.source)} {arrow} {ref_to_str(claim.target)} via {proof}{unless};"
        )
    return "\n".join(out) + "\n"
