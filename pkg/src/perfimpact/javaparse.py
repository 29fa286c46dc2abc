"""Recursive-descent parser for a practical subset of Java.

Covered: package/import declarations, class/interface/enum declarations,
fields, methods and constructors with parameters, local variables, the
statement forms if/else, switch, for, enhanced for, while, do-while,
return and blocks, plus a precedence-climbing expression parser for
binary, unary, ternary, call and literal expressions.

Anything outside that subset (try/catch, lambdas, annotations, array
creation, labels, ...) becomes an ``Unknown`` node covering the right
source span; its nested statements are still parsed where that is cheap
so loop and conditional counts stay meaningful.  Generic type arguments
are consumed as part of type text and never produce nodes.

Spans are ``(start, end)`` offsets into the Python string, i.e. code point
indices.  Comments and string contents never produce nodes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ParseError
from .javaast import Ast, AstNode, NodeKind

K = NodeKind

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while""".split()
)
assert len(KEYWORDS) == 50

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())
MODIFIERS = frozenset(
    "public protected private static final abstract native synchronized transient "
    "volatile strictfp default sealed".split()
)

_NUMBER = re.compile(
    r"""
    0[xX][0-9a-fA-F_]*(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?\d+)?[lLfFdD]?
  | 0[bB][01_]+[lL]?
  | (?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d[\d_]*)?[lLfFdD]?
    """,
    re.VERBOSE,
)
_IDENT = re.compile(r"[A-Za-z_$\u0080-\uffff][\w$\u0080-\uffff]*")
# '>' is always lexed alone so generics close cleanly; shifts and '>='
# are reassembled from adjacent tokens by the expression parser.
_OPERATORS = sorted(
    """... -> :: ++ -- && || == != <= += -= *= /= %= &= |= ^= <<= <<
    ( ) { } [ ] ; , . @ = > < ! ~ ? : + - * / & | ^ %""".split(),
    key=len,
    reverse=True,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # ident, number, string, char, op, eof
    text: str
    start: int
    end: int


def _line_col(source: str, offset: int) -> tuple[int, int]:
    line = source.count("\n", 0, offset) + 1
    col = offset - (source.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(source: str, path: str = "<string>") -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(source)
    append = tokens.append
    while i < n:
        c = source[i]
        if c.isspace() or c == "\ufeff":
            i += 1
            continue
        if c == "/" and i + 1 < n and source[i + 1] == "/":
            j = source.find("\n", i)
            i = n if j < 0 else j
            continue
        if c == "/" and i + 1 < n and source[i + 1] == "*":
            j = source.find("*/", i + 2)
            if j < 0:
                raise ParseError("unterminated comment", *_line_col(source, i), path)
            i = j + 2
            continue
        if source.startswith('"""', i):
            j = source.find('"""', i + 3)
            while j > 0 and source[j - 1] == "\\":
                j = source.find('"""', j + 1)
            if j < 0:
                raise ParseError("unterminated text block", *_line_col(source, i), path)
            append(Token("string", source[i : j + 3], i, j + 3))
            i = j + 3
            continue
        if c == '"' or c == "'":
            j = i + 1
            while j < n and source[j] != c:
                if source[j] == "\\":
                    j += 1
                elif source[j] == "\n":
                    break
                j += 1
            if j >= n or source[j] != c:
                raise ParseError("unterminated literal", *_line_col(source, i), path)
            append(Token("string" if c == '"' else "char", source[i : j + 1], i, j + 1))
            i = j + 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and source[i + 1].isdigit()):
            m = _NUMBER.match(source, i)
            append(Token("number", m.group(), i, m.end()))
            i = m.end()
            continue
        m = _IDENT.match(source, i)
        if m:
            append(Token("ident", m.group(), i, m.end()))
            i = m.end()
            continue
        for op in _OPERATORS:
            if source.startswith(op, i):
                append(Token("op", op, i, i + len(op)))
                i += len(op)
                break
        else:
            # stray characters (e.g. '#', '`') are kept so segmentation can fail loudly
            append(Token("op", c, i, i + 1))
            i += 1
    append(Token("eof", "", n, n))
    return tokens


class _Bail(Exception):
    """Internal signal: the construct at hand is outside the subset."""


_CLOSERS = {"(": ")", "[": "]", "{": "}"}


class _Parser:
    def __init__(self, source: str, tokens: list[Token], path: str):
        self.src = source
        self.toks = tokens
        self.path = path
        self.pos = 0

    # -- token helpers -------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, ahead: int = 1) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def at(self, *texts: str) -> bool:
        t = self.tok
        return t.kind in ("op", "ident") and t.text in texts

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise _Bail(f"expected {text!r}")
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def ident(self) -> Token:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS and t.text not in ("this", "super"):
            raise _Bail("expected identifier")
        return self.advance()

    def prev_end(self) -> int:
        return self.toks[self.pos - 1].end if self.pos else 0

    def error(self, message: str, tok: Optional[Token] = None) -> ParseError:
        t = tok or self.tok
        return ParseError(message, *_line_col(self.src, t.start), self.path)

    def skip_balanced(self) -> None:
        """Skip one bracketed group starting at the current opener."""
        stack = [_CLOSERS[self.tok.text]]
        self.advance()
        while stack:
            t = self.tok
            if t.kind == "eof":
                raise _Bail("unbalanced group")
            if t.kind == "op":
                if t.text in _CLOSERS:
                    stack.append(_CLOSERS[t.text])
                elif t.text in (")", "]", "}"):
                    if t.text != stack[-1]:
                        raise _Bail("mismatched bracket")
                    stack.pop()
            self.advance()

    def skip_angle(self) -> None:
        """Skip a generic argument list ``<...>`` (nested)."""
        depth = 0
        while True:
            t = self.tok
            if t.kind == "eof" or t.text in (";", "{", "}", ")") and t.kind == "op":
                raise _Bail("unterminated type arguments")
            if t.text == "<":
                depth += 1
            elif t.text == ">":
                depth -= 1
            elif t.text == "(":
                self.skip_balanced()
                continue
            self.advance()
            if depth == 0:
                return

    def recover(self, start_pos: int, stop_at_brace_close: bool = True) -> None:
        """Advance past the current statement/member: through a ';' at depth 0
        or a balanced block, whichever closes first."""
        self.pos = start_pos
        while True:
            t = self.tok
            if t.kind == "eof":
                return
            if t.kind == "op":
                if t.text == ";":
                    self.advance()
                    return
                if t.text == "}":
                    return
                if t.text == "{":
                    self.skip_balanced()
                    if stop_at_brace_close and not self.at(";", ")", ",", "."):
                        return
                    continue
                if t.text in ("(", "["):
                    opener = self.pos
                    try:
                        self.skip_balanced()
                    except _Bail:
                        # unclosed group: step over the opener alone
                        self.pos = opener
                        self.advance()
                    continue
            self.advance()

    def node(self, kind: NodeKind, start: int, end: int, children=(), **attrs) -> AstNode:
        kids = tuple(c for c in children if c is not None)
        return AstNode(kind, (start, end), kids, {k: str(v) for k, v in attrs.items()})

    def unknown(self, start_pos: int, construct: str, children=()) -> AstNode:
        return self.node(
            K.Unknown, self.toks[start_pos].start, self.prev_end(), children, construct=construct
        )

    def guarded(self, parse: Callable[[], Optional[AstNode]], construct: str,
                stop_at_brace_close: bool = True) -> Optional[AstNode]:
        start = self.pos
        try:
            return parse()
        except (_Bail, RecursionError):
            self.recover(start, stop_at_brace_close)
            if self.pos == start:
                if self.tok.kind == "eof" or self.at("}"):
                    raise _Bail(f"no progress in {construct}") from None
                self.advance()
            return self.unknown(start, construct)

    # -- compilation unit ----------------------------------------------
    def check_braces(self) -> None:
        stack: list[Token] = []
        for t in self.toks:
            if t.kind != "op":
                continue
            if t.text == "{":
                stack.append(t)
            elif t.text == "}":
                if not stack:
                    raise self.error("unbalanced '}'", t)
                stack.pop()
        if stack:
            raise self.error("unclosed '{'", stack[-1])

    def compilation_unit(self) -> AstNode:
        self.check_braces()
        children: list[AstNode] = []
        while self.tok.kind != "eof":
            if self.accept(";"):
                continue
            start = self.pos
            if self.at("package"):
                self.advance()
                self.qualified_name()
                if not self.accept(";"):
                    raise self.error("expected ';' after package declaration")
                children.append(self.unknown(start, "package"))
                continue
            if self.at("import"):
                children.append(self.import_declaration())
                continue
            try:
                pending = self.modifiers()
                if not self.at("class", "interface", "enum", "record", "@"):
                    raise _Bail("expected type declaration")
                children.extend(pending)
                children.append(self.type_declaration(start))
            except _Bail as exc:
                self.pos = start
                raise self.error(f"cannot segment top-level declaration: {exc}") from None
        return self.node(K.CompilationUnit, 0, len(self.src), children)

    def qualified_name(self) -> str:
        parts = [self.ident().text]
        while self.at(".") and self.peek().kind == "ident":
            self.advance()
            parts.append(self.advance().text)
        return ".".join(parts)

    def import_declaration(self) -> AstNode:
        start = self.tok.start
        self.advance()
        static = self.accept("static")
        try:
            name = self.qualified_name()
            if self.accept("."):
                self.expect("*")
                name += ".*"
            self.expect(";")
        except _Bail:
            raise self.error("malformed import declaration") from None
        attrs = {"name": name}
        if static:
            attrs["static"] = "true"
        return self.node(K.ImportDeclaration, start, self.prev_end(), **attrs)

    def annotation(self) -> AstNode:
        start = self.pos
        self.expect("@")
        if self.at("interface"):
            raise _Bail("annotation type")
        self.qualified_name()
        if self.at("("):
            self.skip_balanced()
        return self.unknown(start, "annotation")

    def modifiers(self) -> list[AstNode]:
        """Consume modifiers; annotations are returned as Unknown nodes."""
        found = []
        while True:
            if self.at("@") and not self.peek().text == "interface":
                found.append(self.annotation())
            elif self.tok.kind == "ident" and self.tok.text in MODIFIERS and not (
                self.tok.text == "default" and self.peek().text in (":", "->")
            ):
                self.advance()
            else:
                return found

    def type_declaration(self, start_pos: int) -> AstNode:
        start = self.toks[start_pos].start
        if self.at("@"):
            self.advance()
            self.advance()
            keyword = "annotation"
        else:
            keyword = self.advance().text
        name = self.ident().text
        header = []
        while not self.at("{"):
            t = self.tok
            if t.kind == "eof" or t.text in (";", "}"):
                raise _Bail("expected class body")
            if t.text == "<":
                self.skip_angle()
            elif t.text == "(":
                self.skip_balanced()  # record components
            else:
                header.append(self.advance().text)
        attrs = {"name": name}
        if keyword != "class":
            attrs["type"] = keyword
        if "extends" in header:
            attrs["extends"] = header[header.index("extends") + 1]
        members = self.class_body(enum=keyword == "enum")
        return self.node(K.ClassDeclaration, start, self.prev_end(), members, **attrs)

    def class_body(self, enum: bool = False) -> list[AstNode]:
        self.expect("{")
        members: list[AstNode] = []
        if enum:
            members.extend(self.enum_constants())
        while not self.at("}"):
            if self.tok.kind == "eof":
                raise _Bail("unterminated class body")
            if self.accept(";"):
                continue
            members.extend(self.member())
        self.advance()
        return members

    def enum_constants(self) -> list[AstNode]:
        found = []
        while not self.at(";", "}"):
            if self.tok.kind == "eof":
                raise _Bail("unterminated enum")
            start = self.pos
            self.modifiers()
            if self.tok.kind == "ident":
                self.advance()
            if self.at("("):
                self.skip_balanced()
            if self.at("{"):
                self.skip_balanced()
            if self.pos == start:
                self.advance()
            found.append(self.unknown(start, "enum_constant"))
            self.accept(",")
        self.accept(";")
        return found

    def member(self) -> list[AstNode]:
        start = self.pos
        out: list[AstNode] = []

        def parse() -> AstNode:
            out.clear()
            self.pos = start
            if self.at("{") or (self.at("static") and self.peek().text == "{"):
                self.accept("static")
                return self.block()
            out.extend(self.modifiers())
            decl_start = self.pos
            if self.at("class", "interface", "enum", "record") or (
                self.at("@") and self.peek().text == "interface"
            ):
                return self.type_declaration(decl_start)
            if self.at("<"):
                self.skip_angle()
            if self.tok.kind == "ident" and self.peek().text == "(":
                name = self.advance().text
                return self.method_rest(decl_start, name, return_type=None)
            type_text = self.type_()
            name_tok = self.ident()
            if self.at("("):
                return self.method_rest(decl_start, name_tok.text, return_type=type_text)
            self.pos -= 1
            decl = self.variable_declaration(decl_start, type_text)
            self.expect(";")
            return self.rebuild_end(decl)

        node = self.guarded(parse, "member")
        if node is not None and node.kind is K.Unknown and node.attributes.get("construct") == "member":
            out.clear()
        return out + [node]

    def rebuild_end(self, node: AstNode) -> AstNode:
        return AstNode(node.kind, (node.span[0], self.prev_end()), node.children, node.attributes)

    def method_rest(self, decl_start: int, name: str, return_type: Optional[str]) -> AstNode:
        start = self.toks[decl_start].start
        params = self.parameters()
        while self.at("["):
            self.advance()
            self.expect("]")
        if self.accept("throws"):
            self.type_()
            while self.accept(","):
                self.type_()
        body = None
        if self.at("{"):
            body = self.block()
        elif self.accept("default"):
            self.expression()
            self.expect(";")
        else:
            self.expect(";")
        attrs = {"name": name}
        if return_type is None:
            attrs["constructor"] = "true"
        else:
            attrs["type"] = return_type
        return self.node(K.MethodDeclaration, start, self.prev_end(), params + [body], **attrs)

    def parameters(self) -> list[AstNode]:
        self.expect("(")
        params = []
        while not self.at(")"):
            start = self.pos
            annotations = self.modifiers()
            type_text = self.type_()
            attrs = {"type": type_text, "parameter": "true"}
            if self.accept("..."):
                attrs["varargs"] = "true"
            if self.at("this"):
                self.advance()
                params.extend(annotations)
                continue
            name = self.ident()
            while self.at("["):
                self.advance()
                self.expect("]")
            declarator = self.node(K.VariableDeclarator, name.start, self.prev_end(), name=name.text)
            params.extend(annotations)
            params.append(self.node(K.VariableDeclaration, self.toks[start].start,
                                    self.prev_end(), [declarator], **attrs))
            if not self.accept(","):
                break
        self.expect(")")
        return params

    # -- types -----------------------------------------------------------
    def type_(self) -> str:
        start = self.pos
        while self.at("@"):
            self.annotation()
        if self.at("?"):
            self.advance()
        elif self.tok.kind == "ident" and self.tok.text in PRIMITIVES:
            self.advance()
        else:
            self.ident()
            if self.at("<"):
                self.skip_angle()
            while self.at(".") and self.peek().kind == "ident":
                self.advance()
                self.ident()
                if self.at("<"):
                    self.skip_angle()
        while self.at("[") and self.peek().text == "]":
            self.advance()
            self.advance()
        return "".join(t.text for t in self.toks[start : self.pos])

    def is_primitive_type(self, text: str) -> bool:
        return text.rstrip("[]") in PRIMITIVES

    # -- statements --------------------------------------------------------
    def block(self) -> AstNode:
        start = self.tok.start
        self.expect("{")
        stmts = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                raise _Bail("unterminated block")
            stmts.append(self.statement())
        self.advance()
        return self.node(K.BlockStatement, start, self.prev_end(), stmts)

    def statement(self) -> Optional[AstNode]:
        return self.guarded(self._statement, "statement")

    def _statement(self) -> Optional[AstNode]:
        t = self.tok
        start = t.start
        text = t.text if t.kind in ("ident", "op") else None
        if text == "{":
            return self.block()
        if text == ";":
            self.advance()
            return None
        if text == "if":
            self.advance()
            cond = self.par_expression()
            then = self.statement()
            other = None
            if self.accept("else"):
                other = self.statement()
            return self.node(K.IfStatement, start, self.prev_end(), [cond, then, other])
        if text == "while":
            self.advance()
            cond = self.par_expression()
            body = self.statement()
            return self.node(K.WhileStatement, start, self.prev_end(), [cond, body])
        if text == "do":
            self.advance()
            body = self.statement()
            self.expect("while")
            cond = self.par_expression()
            self.expect(";")
            return self.node(K.DoStatement, start, self.prev_end(), [body, cond])
        if text == "for":
            return self.for_statement()
        if text == "switch":
            self.advance()
            selector = self.par_expression()
            cases = self.switch_body()
            return self.node(K.SwitchStatement, start, self.prev_end(), [selector] + cases)
        if text == "return":
            self.advance()
            value = None if self.at(";") else self.expression()
            self.expect(";")
            return self.node(K.ReturnStatement, start, self.prev_end(), [value])
        if text in ("break", "continue"):
            s = self.pos
            self.advance()
            if self.tok.kind == "ident":
                self.advance()
            self.expect(";")
            return self.unknown(s, text)
        if text == "throw" or (text == "yield" and self.peek().text not in ("=", "(", ".")):
            s = self.pos
            self.advance()
            value = self.expression()
            self.expect(";")
            return self.unknown(s, text, [value])
        if text == "assert":
            s = self.pos
            self.advance()
            kids = [self.expression()]
            if self.accept(":"):
                kids.append(self.expression())
            self.expect(";")
            return self.unknown(s, "assert", kids)
        if text == "try":
            return self.try_statement()
        if text == "synchronized" and self.peek().text == "(":
            s = self.pos
            self.advance()
            lock = self.par_expression()
            return self.unknown(s, "synchronized", [lock, self.block()])
        if t.kind == "ident" and self.peek().text == ":" and text not in KEYWORDS:
            s = self.pos
            self.advance()
            self.advance()
            return self.unknown(s, "label", [self.statement()])
        if text in ("class", "interface", "enum", "abstract", "final", "static", "@") or text == "record" and self.peek().kind == "ident" and self.peek(2).text in ("(", "<"):
            s = self.pos
            self.modifiers()
            if self.at("class", "interface", "enum", "record"):
                return self.type_declaration(s)
            self.pos = s
        decl = self.try_local_variable()
        if decl is not None:
            self.expect(";")
            return self.rebuild_end(decl)
        expr = self.expression()
        self.expect(";")
        return expr

    def par_expression(self) -> AstNode:
        self.expect("(")
        expr = self.expression()
        self.expect(")")
        return expr

    def try_local_variable(self) -> Optional[AstNode]:
        start = self.pos
        try:
            annotations = self.modifiers()
            if self.tok.kind != "ident" or (self.tok.text in KEYWORDS and self.tok.text not in PRIMITIVES):
                raise _Bail("not a declaration")
            type_text = self.type_()
            if self.tok.kind != "ident" or self.tok.text in KEYWORDS:
                raise _Bail("not a declaration")
            if self.peek().text not in ("=", ";", ",", "[", ":"):
                raise _Bail("not a declaration")
        except _Bail:
            self.pos = start
            return None
        decl = self.variable_declaration(start, type_text)
        if annotations:
            decl = AstNode(decl.kind, decl.span, tuple(annotations) + decl.children, decl.attributes)
        return decl

    def variable_declaration(self, start_pos: int, type_text: str, allow_init: bool = True) -> AstNode:
        declarators = []
        while True:
            name = self.ident()
            while self.at("["):
                self.advance()
                self.expect("]")
            init = None
            if allow_init and self.accept("="):
                init = self.array_initializer() if self.at("{") else self.expression()
            declarators.append(self.node(K.VariableDeclarator, name.start, self.prev_end(), [init], name=name.text))
            if not self.accept(","):
                break
        return self.node(K.VariableDeclaration, self.toks[start_pos].start, self.prev_end(),
                         declarators, type=type_text)

    def array_initializer(self) -> AstNode:
        s = self.pos
        self.expect("{")
        items = []
        while not self.at("}"):
            items.append(self.array_initializer() if self.at("{") else self.expression())
            if not self.accept(","):
                break
        self.expect("}")
        return self.unknown(s, "array_initializer", items)

    def for_statement(self) -> AstNode:
        start = self.tok.start
        self.advance()
        open_pos = self.pos
        if not self.at("("):
            raise _Bail("expected '('")
        self.skip_balanced()
        header = self.toks[open_pos + 1 : self.pos - 1]
        close_pos = self.pos
        self.pos = open_pos + 1
        depth = 0
        semicolon = False
        colon = False
        ternary = 0
        for t in header:
            if t.kind != "op":
                continue
            if t.text in ("(", "[", "{"):
                depth += 1
            elif t.text in (")", "]", "}"):
                depth -= 1
            elif depth == 0 and t.text == ";":
                semicolon = True
            elif depth == 0 and t.text == "?":
                ternary += 1
            elif depth == 0 and t.text == ":":
                if ternary:
                    ternary -= 1
                else:
                    colon = True
        if colon and not semicolon:
            s = self.pos
            self.modifiers()
            type_text = self.type_()
            var = self.variable_declaration(s, type_text, allow_init=False)
            self.expect(":")
            iterable = self.expression()
            self.expect(")")
            body = self.statement()
            return self.node(K.ForEachStatement, start, self.prev_end(), [var, iterable, body])
        parts: list[Optional[AstNode]] = []
        if not self.at(";"):
            decl = self.try_local_variable()
            if decl is not None:
                parts.append(decl)
            else:
                parts.append(self.expression())
                while self.accept(","):
                    parts.append(self.expression())
        self.expect(";")
        if not self.at(";"):
            parts.append(self.expression())
        self.expect(";")
        while not self.at(")"):
            parts.append(self.expression())
            if not self.accept(","):
                break
        if self.pos != close_pos - 1:
            raise _Bail("malformed for header")
        self.expect(")")
        body = self.statement()
        return self.node(K.ForStatement, start, self.prev_end(), parts + [body])

    def switch_body(self) -> list[AstNode]:
        self.expect("{")
        groups = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                raise _Bail("unterminated switch")
            s = self.pos
            labels = []
            if self.accept("default"):
                pass
            else:
                self.expect("case")
                labels.append(self.case_label())
                while self.accept(","):
                    labels.append(self.case_label())
            stmts: list[Optional[AstNode]] = []
            if self.accept("->"):
                if self.at("{"):
                    stmts.append(self.block())
                elif self.at("throw"):
                    stmts.append(self.statement())
                else:
                    stmts.append(self.expression())
                    self.expect(";")
            else:
                if not self.accept(":"):
                    raise _Bail("expected ':' after case label")
                while not self.at("case", "default", "}") or (
                    self.at("default") and self.peek().text not in (":", "->")
                ):
                    if self.tok.kind == "eof":
                        raise _Bail("unterminated switch")
                    stmts.append(self.statement())
            groups.append(self.unknown(s, "case", labels + stmts))
        self.advance()
        return groups

    def case_label(self) -> AstNode:
        return self.expression(no_lambda=True, stop_at_arrow=True)

    def try_statement(self) -> AstNode:
        s = self.pos
        self.advance()
        kids: list[Optional[AstNode]] = []
        if self.accept("("):
            while not self.at(")"):
                decl = self.try_local_variable()
                kids.append(decl if decl is not None else self.expression())
                if not self.accept(";"):
                    break
            self.expect(")")
        kids.append(self.block())
        while self.at("catch"):
            c = self.pos
            self.advance()
            self.expect("(")
            p = self.pos
            self.modifiers()
            types = [self.type_()]
            while self.accept("|"):
                types.append(self.type_())
            var = self.variable_declaration(p, "|".join(types), allow_init=False)
            self.expect(")")
            kids.append(self.unknown(c, "catch", [var, self.block()]))
        if self.accept("finally"):
            kids.append(self.block())
        return self.unknown(s, "try", kids)

    # -- expressions ---------------------------------------------------------
    _BINARY_PREC = {
        "||": 3, "&&": 4, "|": 5, "^": 6, "&": 7,
        "==": 8, "!=": 8,
        "<": 9, ">": 9, "<=": 9, ">=": 9, "instanceof": 9,
        "<<": 10, ">>": 10, ">>>": 10,
        "+": 11, "-": 11,
        "*": 12, "/": 12, "%": 12,
    }
    _ASSIGN = frozenset("= += -= *= /= %= &= |= ^= <<= >>= >>>=".split())

    def binary_operator(self) -> tuple[Optional[str], int]:
        """Peek an operator, reassembling '>'-based operators from adjacent
        single '>' tokens.  Returns (operator, token count)."""
        t = self.tok
        if t.kind == "ident":
            return ("instanceof", 1) if t.text == "instanceof" else (None, 0)
        if t.kind != "op":
            return None, 0
        if t.text == ">":
            text, count, end = ">", 1, t.end
            while count < 3:
                nxt = self.peek(count)
                if nxt.kind != "op" or nxt.text != ">" or nxt.start != end:
                    break
                text += ">"
                count += 1
                end = nxt.end
            nxt = self.peek(count)
            if nxt.kind == "op" and nxt.text == "=" and nxt.start == end:
                text += "="
                count += 1
            return text, count
        return t.text, 1

    def expression(self, no_lambda: bool = False, stop_at_arrow: bool = False) -> AstNode:
        left = self.ternary(no_lambda)
        op, count = self.binary_operator()
        if op in self._ASSIGN:
            self.pos += count
            right = self.array_initializer() if self.at("{") else self.expression()
            return self.node(K.BinaryExpression, left.span[0], right.span[1], [left, right], operator=op)
        return left

    def ternary(self, no_lambda: bool = False) -> AstNode:
        cond = self.binary(0, no_lambda)
        if self.at("?"):
            self.advance()
            yes = self.expression()
            self.expect(":")
            no = self.lambda_or_ternary()
            return self.node(K.ConditionalExpression, cond.span[0], no.span[1], [cond, yes, no])
        return cond

    def lambda_or_ternary(self) -> AstNode:
        if self.looks_like_lambda():
            return self.lambda_()
        return self.ternary()

    def binary(self, min_prec: int, no_lambda: bool = False) -> AstNode:
        left = self.unary(no_lambda)
        while True:
            op, count = self.binary_operator()
            prec = self._BINARY_PREC.get(op or "", -1)
            if prec <= min_prec:
                return left
            self.pos += count
            if op == "instanceof":
                self.accept("final")
                rstart = self.tok.start
                type_text = self.type_()
                right = self.node(K.Identifier, rstart, self.prev_end(), name=type_text)
                if self.tok.kind == "ident" and self.tok.text not in KEYWORDS and self.tok.text != "instanceof":
                    self.advance()  # pattern binding
            else:
                right = self.binary(prec, no_lambda)
            left = self.node(K.BinaryExpression, left.span[0], right.span[1], [left, right], operator=op)

    def looks_like_lambda(self) -> bool:
        t = self.tok
        if t.kind == "ident" and t.text not in KEYWORDS and self.peek().text == "->":
            return True
        if t.text == "(" and t.kind == "op":
            save = self.pos
            try:
                self.skip_balanced()
                return self.at("->")
            except _Bail:
                return False
            finally:
                self.pos = save
        return False

    def lambda_(self) -> AstNode:
        s = self.pos
        if self.at("("):
            self.skip_balanced()
        else:
            self.advance()
        self.expect("->")
        if self.at("{"):
            self.skip_balanced()
        else:
            self.expression()
        return self.unknown(s, "lambda")

    def unary(self, no_lambda: bool = False) -> AstNode:
        t = self.tok
        if not no_lambda and self.looks_like_lambda():
            return self.lambda_()
        if t.kind == "op" and t.text in ("+", "-", "!", "~", "++", "--"):
            self.advance()
            operand = self.unary()
            return self.node(K.UnaryExpression, t.start, operand.span[1], [operand], operator=t.text)
        if t.kind == "op" and t.text == "(":
            cast = self.try_cast()
            if cast is not None:
                return cast
        return self.postfix(self.primary())

    def try_cast(self) -> Optional[AstNode]:
        save = self.pos
        start = self.tok.start
        try:
            self.advance()
            type_text = self.type_()
            while self.accept("&"):
                type_text += "&" + self.type_()
            self.expect(")")
        except _Bail:
            self.pos = save
            return None
        t = self.tok
        primitive = self.is_primitive_type(type_text)
        starts_operand = (
            t.kind in ("number", "string", "char")
            or (t.kind == "ident" and (t.text not in KEYWORDS or t.text in ("this", "super", "new")))
            or (t.kind == "op" and t.text in ("(", "!", "~"))
            or (t.kind == "ident" and t.text in ("true", "false", "null"))
        )
        if primitive and t.kind == "op" and t.text in ("+", "-", "++", "--"):
            starts_operand = True
        if not starts_operand or (t.kind == "op" and t.text == "(" and not primitive and not self.paren_cast_plausible(type_text)):
            self.pos = save
            return None
        operand = self.unary()
        return self.node(K.UnaryExpression, start, operand.span[1], [operand], operator=f"({type_text})")

    def paren_cast_plausible(self, type_text: str) -> bool:
        # "(a)(b)" is ambiguous; treat as a cast only for capitalised type names
        return type_text[:1].isupper()

    def arguments(self) -> list[AstNode]:
        self.expect("(")
        args = []
        while not self.at(")"):
            args.append(self.expression())
            if not self.accept(","):
                break
        self.expect(")")
        return args

    def primary(self) -> AstNode:
        t = self.tok
        if t.kind == "number":
            self.advance()
            lowered = t.text.lower()
            is_float = (
                not lowered.startswith(("0x", "0b"))
                and ("." in lowered or "e" in lowered or lowered[-1] in "fd")
            ) or (lowered.startswith("0x") and "p" in lowered)
            return self.node(K.Literal, t.start, t.end, value=t.text, type="float" if is_float else "int")
        if t.kind == "string":
            self.advance()
            return self.node(K.Literal, t.start, t.end, value=t.text, type="string")
        if t.kind == "char":
            self.advance()
            return self.node(K.Literal, t.start, t.end, value=t.text, type="char")
        if t.kind == "ident":
            if t.text in ("true", "false"):
                self.advance()
                return self.node(K.Literal, t.start, t.end, value=t.text, type="boolean")
            if t.text == "null":
                self.advance()
                return self.node(K.Literal, t.start, t.end, value=t.text, type="null")
            if t.text == "new":
                return self.creator()
            if t.text == "switch":
                s = self.pos
                self.advance()
                selector = self.par_expression()
                return self.unknown(s, "switch_expression", [selector] + self.switch_body())
            if t.text in PRIMITIVES:
                # int.class, int[].class
                s = self.pos
                self.type_()
                self.expect(".")
                self.expect("class")
                return self.node(K.Identifier, t.start, self.prev_end(), name=f"{t.text}.class")
            if t.text in KEYWORDS and t.text not in ("this", "super"):
                raise _Bail(f"unexpected keyword {t.text!r}")
            self.advance()
            if self.at("("):
                args = self.arguments()
                return self.node(K.MethodCall, t.start, self.prev_end(), args, name=t.text)
            return self.node(K.Identifier, t.start, t.end, name=t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if t.kind == "op" and t.text == "@":
            return self.annotation()
        raise _Bail(f"unexpected token {t.text!r}")

    def creator(self) -> AstNode:
        s = self.pos
        self.expect("new")
        if self.at("<"):
            self.skip_angle()
        type_start = self.pos
        while self.at("@"):
            self.annotation()
        if self.tok.kind == "ident" and self.tok.text in PRIMITIVES:
            self.advance()
        else:
            self.ident()
            if self.at("<"):
                self.skip_angle()
            while self.at("."):
                self.advance()
                self.ident()
                if self.at("<"):
                    self.skip_angle()
        type_text = "".join(t.text for t in self.toks[type_start : self.pos])
        if self.at("["):
            dims = []
            while self.at("["):
                self.advance()
                if not self.at("]"):
                    dims.append(self.expression())
                self.expect("]")
            if self.at("{"):
                dims.append(self.array_initializer())
            return self.unknown(s, "array_creation", dims)
        args = self.arguments()
        kids = list(args)
        if self.at("{"):
            body_start = self.tok.start
            members = self.class_body()
            kids.append(self.node(K.ClassDeclaration, body_start, self.prev_end(), members,
                                  name=type_text, type="anonymous"))
        return self.node(K.MethodCall, self.toks[s].start, self.prev_end(), kids,
                         name=type_text, constructor="true")

    def postfix(self, expr: AstNode) -> AstNode:
        while True:
            t = self.tok
            if t.kind != "op":
                return expr
            if t.text == ".":
                self.advance()
                if self.at("<"):
                    self.skip_angle()
                if self.at("new"):
                    inner = self.creator()
                    expr = self.node(K.MethodCall, expr.span[0], inner.span[1], [expr, *inner.children],
                                     **inner.attributes)
                    continue
                name = self.tok
                if name.kind != "ident":
                    raise _Bail("expected member name")
                self.advance()
                if self.at("("):
                    args = self.arguments()
                    expr = self.node(K.MethodCall, expr.span[0], self.prev_end(), [expr] + args,
                                     name=name.text)
                elif expr.kind is K.Identifier and not expr.children:
                    expr = self.node(K.Identifier, expr.span[0], name.end,
                                     name=f"{expr.attributes['name']}.{name.text}")
                else:
                    expr = self.node(K.Identifier, expr.span[0], name.end, [expr], name=name.text)
            elif t.text == "[":
                self.advance()
                index = self.expression()
                self.expect("]")
                expr = self.node(K.Unknown, expr.span[0], self.prev_end(), [expr, index],
                                 construct="array_access")
            elif t.text in ("++", "--"):
                self.advance()
                expr = self.node(K.UnaryExpression, expr.span[0], t.end, [expr],
                                 operator=t.text, postfix="true")
            elif t.text == "::":
                self.advance()
                if self.at("new"):
                    self.advance()
                else:
                    self.ident()
                expr = self.node(K.Unknown, expr.span[0], self.prev_end(), [expr],
                                 construct="method_reference")
            elif t.text == "<" and expr.kind is K.Identifier and self.generic_method_ref_ahead():
                self.skip_angle()
            else:
                return expr

    def generic_method_ref_ahead(self) -> bool:
        save = self.pos
        try:
            self.skip_angle()
            return self.at("::")
        except _Bail:
            return False
        finally:
            self.pos = save


def parse_java(source: str, file_path: str = "<string>") -> Ast:
    """Parse Java source text into an :class:`Ast`.

    Raises :class:`ParseError` when the text cannot be split into top-level
    declarations (unbalanced braces, stray prose, unterminated literals).
    """
    if not source:
        raise ParseError("empty source", 1, 1, file_path)
    tokens = tokenize(source, file_path)
    parser = _Parser(source, tokens, file_path)
    root = parser.compilation_unit()
    return Ast(root=root, source_length_chars=len(source), file_path=file_path)
