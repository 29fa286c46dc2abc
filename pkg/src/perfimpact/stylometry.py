"""Lexical, layout and syntactic style features for Java source files.

Every count feature goes through :func:`fe_transform`, a log-ratio of the
occurrence count to the file's character length.  Layout statistics that
are already ratios (mean/SD of line length, whitespace share) are reported
as-is.
"""
from __future__ import annotations

import math
import re
import zlib
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import EmptyFile, ParseError
from .javaast import Ast, NodeKind, count_kinds, kind_histogram
from .javaparse import KEYWORDS, parse_java

if TYPE_CHECKING:
    from .astbe import EmbeddingMatrix

LEXICAL, LAYOUT, SYNTACTIC, EMBEDDING = "lexical", "layout", "syntactic", "embedding"

# Comment pattern applied verbatim; block/doc/line are told apart by prefix.
COMMENT_PATTERN = re.compile(r"/\*(.|[\r\n])*?\*/|//.*")
IMPORT_PATTERN = re.compile(r"^[ \t]*import[ \t]+(?:static[ \t]+)?[\w$.]+(?:\.\*)?[ \t]*;", re.MULTILINE)
WORD_PATTERN = re.compile(r"[A-Za-z_$][\w$]*")
METHOD_PATTERN = re.compile(
    r"(?:^|(?<=[;{}]))\s*(?:@\w+[ \t]*)*(?:(?:public|protected|private|static|final|abstract|synchronized|native|default)\s+)*"
    r"(?:<[^>{;]*>\s*)?[\w$][\w$<>\[\],.? ]*?\s+([\w$]+)\s*\([^;{)]*\)\s*(?:throws\s+[\w$.,\s]+)?\{",
    re.MULTILINE,
)
_NOT_METHOD_NAMES = frozenset({"if", "for", "while", "switch", "catch", "synchronized", "return", "new"})

CONDITIONAL_KINDS = frozenset({NodeKind.IfStatement, NodeKind.SwitchStatement, NodeKind.ConditionalExpression})
LOOP_KINDS = frozenset({NodeKind.ForStatement, NodeKind.ForEachStatement, NodeKind.WhileStatement, NodeKind.DoStatement})
LITERAL_KINDS = frozenset({NodeKind.Literal})

UNIGRAM_BUCKETS = 16

PAPER13_COLUMNS = (
    ("lex_imports", LEXICAL),
    ("lex_line_comments", LEXICAL),
    ("lex_block_comments", LEXICAL),
    ("lex_doc_comments", LEXICAL),
    ("lex_keywords", LEXICAL),
    ("lex_methods", LEXICAL),
    ("lay_avg_line_len", LAYOUT),
    ("lay_sd_line_len", LAYOUT),
    ("lay_empty_lines", LAYOUT),
    ("lay_ws_ratio", LAYOUT),
    ("syn_conditionals", SYNTACTIC),
    ("syn_literals", SYNTACTIC),
    ("syn_loops", SYNTACTIC),
)


@dataclass(frozen=True)
class FeatureSchema:
    name: str
    columns: tuple[tuple[str, str], ...]
    enable_unigrams: bool = False
    enable_ast_tfidf: bool = False
    enable_embedding: bool = False

    def __post_init__(self) -> None:
        names = self.column_names
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate column names in schema {self.name!r}")

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.columns)

    def categories(self) -> set[str]:
        return {cat for _, cat in self.columns}

    @property
    def embedding_dim(self) -> int:
        return sum(1 for _, cat in self.columns if cat == EMBEDDING)


def make_schema(name: str, embedding_dim: int = 16) -> FeatureSchema:
    """Return a named schema profile: ``paper13`` or ``full``."""
    if name == "paper13":
        return FeatureSchema("paper13", PAPER13_COLUMNS)
    if name == "full":
        cols = list(PAPER13_COLUMNS)
        cols.insert(10, ("lay_tabs", LAYOUT))
        cols.append(("syn_nodes", SYNTACTIC))
        cols += [(f"lex_uni_{b:02d}", LEXICAL) for b in range(UNIGRAM_BUCKETS)]
        cols += [(f"tfidf_{k.name}", SYNTACTIC) for k in sorted(NodeKind)]
        cols += [(f"emb_{i}", EMBEDDING) for i in range(embedding_dim)]
        return FeatureSchema("full", tuple(cols), True, True, True)
    raise ValueError(f"unknown schema profile {name!r} (expected paper13 or full)")


@dataclass(frozen=True)
class FeatureVector:
    schema: FeatureSchema
    values: tuple[float, ...]
    file_path: str
    raw_counts: Mapping[str, int]
    file_length_chars: int

    def __post_init__(self) -> None:
        if len(self.values) != len(self.schema.columns):
            raise ValueError("value count does not match schema")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError(f"non-finite feature value in {self.file_path}")

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.schema.column_names, self.values))


@dataclass
class FeatureBlock:
    """Partial result of one extractor: transformed values plus raw counts."""

    values: dict[str, float] = field(default_factory=dict)
    raw_counts: dict[str, int] = field(default_factory=dict)

    def add_count(self, name: str, count: int, file_len: int) -> None:
        self.raw_counts[name] = count
        self.values[name] = fe_transform(count, file_len)

    def update(self, other: "FeatureBlock") -> None:
        self.values.update(other.values)
        self.raw_counts.update(other.raw_counts)


def fe_transform(count: int, file_len: int) -> float:
    """log10((count + 1) / file_len); the +1 keeps zero counts finite."""
    if file_len < 1:
        raise EmptyFile("file length must be at least one character")
    if count < 0:
        raise ValueError("count must be non-negative")
    return math.log10((count + 1) / file_len)


# -- source masking ------------------------------------------------------

def mask_source(source: str) -> tuple[str, str]:
    """Return ``(code_only, strings_blanked)``.

    ``code_only`` has comments and string/char literals replaced by spaces;
    ``strings_blanked`` only blanks literals, leaving comments in place.
    Newlines are preserved in both so line structure survives.
    """
    code = list(source)
    blank = list(source)
    i, n = 0, len(source)

    def wipe(buf: list[str], a: int, b: int) -> None:
        for k in range(a, b):
            if buf[k] != "\n":
                buf[k] = " "

    while i < n:
        c = source[i]
        if c == "/" and source.startswith("//", i):
            j = source.find("\n", i)
            j = n if j < 0 else j
            wipe(code, i, j)
            i = j
        elif c == "/" and source.startswith("/*", i):
            j = source.find("*/", i + 2)
            j = n if j < 0 else j + 2
            wipe(code, i, j)
            i = j
        elif source.startswith('"""', i):
            j = source.find('"""', i + 3)
            j = n if j < 0 else j + 3
            wipe(code, i, j)
            wipe(blank, i, j)
            i = j
        elif c in "\"'":
            j = i + 1
            while j < n and source[j] != c and source[j] != "\n":
                j += 2 if source[j] == "\\" else 1
            j = min(j + 1, n)
            wipe(code, i, j)
            wipe(blank, i, j)
            i = j
        else:
            i += 1
    return "".join(code), "".join(blank)


def classify_comments(source: str) -> tuple[int, int, int]:
    """Count ``(line, block, doc)`` comments with the comment pattern.

    String and char literal contents are blanked first so a ``//`` inside a
    string is not a comment.  ``/**/`` is a block comment, not a doc comment.
    """
    _, blanked = mask_source(source)
    line = block = doc = 0
    for m in COMMENT_PATTERN.finditer(blanked):
        text = m.group()
        if text.startswith("//"):
            line += 1
        elif text.startswith("/**") and text != "/**/":
            doc += 1
        else:
            block += 1
    return line, block, doc


def split_lines(source: str) -> list[str]:
    lines = [ln.rstrip("\r") for ln in source.split("\n")]
    if len(lines) > 1 and source.endswith("\n"):
        lines.pop()
    return lines


def unigram_bucket(token: str) -> int:
    return zlib.crc32(token.encode("utf-8")) % UNIGRAM_BUCKETS


# -- extractors ------------------------------------------------------------

def extract_lexical(source: str, ast: Optional[Ast] = None, enable_unigrams: bool = False) -> FeatureBlock:
    file_len = len(source)
    code, _ = mask_source(source)
    block = FeatureBlock()
    block.add_count("lex_imports", len(IMPORT_PATTERN.findall(code)), file_len)
    line_c, block_c, doc_c = classify_comments(source)
    block.add_count("lex_line_comments", line_c, file_len)
    block.add_count("lex_block_comments", block_c, file_len)
    block.add_count("lex_doc_comments", doc_c, file_len)
    words = WORD_PATTERN.findall(code)
    block.add_count("lex_keywords", sum(1 for w in words if w in KEYWORDS), file_len)
    if ast is not None:
        methods = count_kinds(ast, {NodeKind.MethodDeclaration})
    else:
        methods = sum(1 for m in METHOD_PATTERN.finditer(code) if m.group(1) not in _NOT_METHOD_NAMES)
    block.add_count("lex_methods", methods, file_len)
    if enable_unigrams:
        buckets = [0] * UNIGRAM_BUCKETS
        for w in words:
            if w not in KEYWORDS and w not in ("true", "false", "null"):
                buckets[unigram_bucket(w)] += 1
        for b, count in enumerate(buckets):
            block.add_count(f"lex_uni_{b:02d}", count, file_len)
    return block


def extract_layout(source: str) -> FeatureBlock:
    file_len = len(source)
    lines = split_lines(source)
    filled = [len(ln) for ln in lines if ln.strip()]
    block = FeatureBlock()
    if filled:
        lengths = np.asarray(filled, dtype=float)
        block.values["lay_avg_line_len"] = float(lengths.mean())
        block.values["lay_sd_line_len"] = float(lengths.std())
    else:
        block.values["lay_avg_line_len"] = 0.0
        block.values["lay_sd_line_len"] = 0.0
    block.add_count("lay_empty_lines", len(lines) - len(filled), file_len)
    whitespace = sum(1 for ch in source if ch.isspace())
    block.values["lay_ws_ratio"] = whitespace / file_len if file_len else 0.0
    block.add_count("lay_tabs", source.count("\t"), file_len)
    return block


def extract_syntactic(ast: Ast, idf: Optional[Mapping[str, float]] = None) -> FeatureBlock:
    """Counts of conditionals, literals, loops and all nodes.

    When ``idf`` is given, a ``tfidf_<Kind>`` block is added using it.
    """
    file_len = ast.source_length_chars
    hist = kind_histogram(ast)
    total = sum(hist.values())
    block = FeatureBlock()
    block.add_count("syn_conditionals", sum(hist.get(k, 0) for k in CONDITIONAL_KINDS), file_len)
    block.add_count("syn_literals", sum(hist.get(k, 0) for k in LITERAL_KINDS), file_len)
    block.add_count("syn_loops", sum(hist.get(k, 0) for k in LOOP_KINDS), file_len)
    block.add_count("syn_nodes", total, file_len)
    if idf is not None:
        for kind in sorted(NodeKind):
            tf = hist.get(kind, 0) / total
            block.values[f"tfidf_{kind.name}"] = tf * idf[kind.name]
    return block


def compute_idf(asts: Sequence[Ast]) -> dict[str, float]:
    n_files = len(asts)
    doc_freq = {k: 0 for k in NodeKind}
    for ast in asts:
        for kind in kind_histogram(ast):
            doc_freq[kind] += 1
    return {k.name: math.log(n_files / (1 + df)) + 1 for k, df in doc_freq.items()}


@dataclass
class CorpusContext:
    """Corpus-level state some schemas need: idf table and node embeddings."""

    idf: Optional[dict[str, float]] = None
    embedding: Optional["EmbeddingMatrix"] = None

    def to_dict(self) -> dict:
        out: dict = {}
        if self.idf is not None:
            out["idf"] = self.idf
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "CorpusContext":
        from .astbe import EmbeddingMatrix

        emb = data.get("embedding")
        return cls(idf=data.get("idf"), embedding=EmbeddingMatrix.from_dict(emb) if emb else None)


def _needs_ast(schema: FeatureSchema) -> bool:
    return SYNTACTIC in schema.categories() or schema.enable_embedding


def extract_file(source: str, schema: FeatureSchema, context: Optional[CorpusContext] = None,
                 file_path: str = "<string>", ast: Optional[Ast] = None) -> FeatureVector:
    """Compute one file's feature vector in schema column order.

    ``ParseError`` propagates when the schema needs a syntax tree and the
    file does not parse; otherwise a failed parse falls back to token
    heuristics for method counting.
    """
    if not source:
        raise EmptyFile(f"{file_path}: empty file")
    if ast is None:
        try:
            ast = parse_java(source, file_path)
        except ParseError:
            if _needs_ast(schema):
                raise
            ast = None
    context = context or CorpusContext()
    block = extract_lexical(source, ast, schema.enable_unigrams)
    block.update(extract_layout(source))
    if ast is not None:
        idf = None
        if schema.enable_ast_tfidf:
            idf = context.idf if context.idf is not None else compute_idf([ast])
        block.update(extract_syntactic(ast, idf))
    if schema.enable_embedding:
        from .astbe import embed_file

        if context.embedding is None:
            raise ValueError("schema requests embeddings but no trained embedding matrix was supplied")
        emb = embed_file(ast, context.embedding)
        if len(emb.values) != schema.embedding_dim:
            raise ValueError("embedding dimension does not match schema")
        for i, v in enumerate(emb.values):
            block.values[f"emb_{i}"] = float(v)
    values = tuple(block.values[name] for name in schema.column_names)
    raw = {name: block.raw_counts[name] for name in schema.column_names if name in block.raw_counts}
    return FeatureVector(schema, values, file_path, raw, len(source))


@dataclass
class ExtractionResult:
    vectors: list[FeatureVector]
    skipped: list[tuple[str, str]]
    context: CorpusContext


@dataclass
class SnapshotExtraction:
    vectors: dict[str, list[FeatureVector]]
    skipped: list[tuple[str, str, str]]  # (snapshot, path, reason)
    context: CorpusContext


def extract_snapshots(sources: Mapping[str, Sequence[tuple[str, str]]], schema: FeatureSchema,
                      cbow_config=None) -> SnapshotExtraction:
    """Extract several snapshots as one run sharing a single corpus context.

    Files that are empty or fail to parse (when the schema needs a tree) are
    skipped and reported.  Corpus-level state (idf, embeddings) is fitted on
    all files that survive, across every snapshot.
    """
    parsed: list[tuple[str, str, str, Optional[Ast]]] = []
    skipped: list[tuple[str, str, str]] = []
    for snap, files in sources.items():
        for path, source in files:
            if not source:
                skipped.append((snap, path, "EmptyFile"))
                continue
            try:
                ast = parse_java(source, path)
            except ParseError as exc:
                if _needs_ast(schema):
                    skipped.append((snap, path, f"ParseError: {exc}"))
                    continue
                ast = None
            parsed.append((snap, path, source, ast))

    context = CorpusContext()
    asts = [a for *_, a in parsed if a is not None]
    if schema.enable_ast_tfidf and asts:
        context.idf = compute_idf(asts)
    if schema.enable_embedding and asts:
        from .astbe import CbowConfig, build_corpus, train_cbow

        config = cbow_config or CbowConfig(embedding_dim=schema.embedding_dim)
        context.embedding = train_cbow(build_corpus(asts), config)
    vectors: dict[str, list[FeatureVector]] = {snap: [] for snap in sources}
    for snap, path, src, ast in parsed:
        vectors[snap].append(extract_file(src, schema, context, path, ast))
    return SnapshotExtraction(vectors, skipped, context)


def extract_corpus(files: Iterable[tuple[str, str]], schema: FeatureSchema,
                   cbow_config=None) -> ExtractionResult:
    """Extract every ``(path, source)`` pair as one run (a single snapshot)."""
    result = extract_snapshots({"": list(files)}, schema, cbow_config)
    return ExtractionResult(result.vectors[""], [(p, r) for _, p, r in result.skipped], result.context)
