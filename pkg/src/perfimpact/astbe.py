"""Node-kind embeddings trained with CBOW and negative sampling.

Each file contributes one token sequence: its preorder node kinds, filtered
to statement- and declaration-level kinds.  A CBOW model predicts every
token from the mean of up to ``window`` neighbours on each side.  A file is
embedded as the unweighted mean of its tokens' input vectors.
"""
from __future__ import annotations

import csv
import io
import warnings
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import DegenerateVocabulary, EmptyCorpus
from .javaast import Ast, NodeKind, preorder

SELECTED_KINDS = frozenset(
    {
        NodeKind.MethodDeclaration,
        NodeKind.VariableDeclaration,
        NodeKind.BlockStatement,
        NodeKind.IfStatement,
        NodeKind.SwitchStatement,
        NodeKind.ForStatement,
        NodeKind.ForEachStatement,
        NodeKind.WhileStatement,
        NodeKind.DoStatement,
        NodeKind.ReturnStatement,
        NodeKind.MethodCall,
        NodeKind.BinaryExpression,
        NodeKind.Literal,
        NodeKind.Identifier,
    }
)


@dataclass(frozen=True)
class NodeVocabulary:
    kinds: tuple[NodeKind, ...]

    @property
    def index(self) -> dict[NodeKind, int]:
        return {k: i for i, k in enumerate(self.kinds)}

    def __len__(self) -> int:
        return len(self.kinds)

    @classmethod
    def from_corpus(cls, corpus: Iterable[Sequence[NodeKind]]) -> "NodeVocabulary":
        seen = {k for seq in corpus for k in seq}
        return cls(tuple(sorted(seen)))


@dataclass(frozen=True)
class CbowConfig:
    embedding_dim: int = 16
    window: int = 2
    negative_samples: int = 5
    epochs: int = 50
    learning_rate: float = 0.025
    seed: int = 0

    def __post_init__(self) -> None:
        if self.embedding_dim < 2:
            raise ValueError("embedding_dim must be at least 2")
        for name in ("window", "negative_samples", "epochs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")


@dataclass
class EmbeddingMatrix:
    vocabulary: NodeVocabulary
    input_vectors: np.ndarray
    output_vectors: np.ndarray
    config: CbowConfig
    epoch_losses: list[float] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.input_vectors.shape[0] != len(self.vocabulary):
            raise ValueError("row count must equal vocabulary size")
        if not np.all(np.isfinite(self.input_vectors)) or not np.all(np.isfinite(self.output_vectors)):
            raise ValueError("embedding contains non-finite values")

    def vector(self, kind: NodeKind) -> np.ndarray:
        return self.input_vectors[self.vocabulary.index[kind]]

    def to_csv(self) -> str:
        """Header ``kind,dim_0..dim_{d-1}``; one row per kind, 9 significant digits."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        d = self.input_vectors.shape[1]
        writer.writerow(["kind"] + [f"dim_{i}" for i in range(d)])
        for kind, row in zip(self.vocabulary.kinds, self.input_vectors):
            writer.writerow([kind.name] + [f"{v:.9g}" for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, config: Optional[CbowConfig] = None) -> "EmbeddingMatrix":
        rows = list(csv.reader(io.StringIO(text)))
        header, body = rows[0], rows[1:]
        if header[0] != "kind" or header[1:] != [f"dim_{i}" for i in range(len(header) - 1)]:
            raise ValueError("unexpected embedding CSV header")
        kinds = tuple(NodeKind[r[0]] for r in body)
        vectors = np.array([[float(v) for v in r[1:]] for r in body], dtype=float).reshape(len(body), len(header) - 1)
        config = config or CbowConfig(embedding_dim=vectors.shape[1])
        return cls(NodeVocabulary(kinds), vectors, np.zeros_like(vectors), config)

    def to_dict(self) -> dict:
        return {
            "kinds": [k.name for k in self.vocabulary.kinds],
            "input_vectors": self.input_vectors.tolist(),
            "config": asdict(self.config),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "EmbeddingMatrix":
        kinds = tuple(NodeKind[k] for k in data["kinds"])
        vectors = np.asarray(data["input_vectors"], dtype=float).reshape(len(kinds), -1)
        return cls(NodeVocabulary(kinds), vectors, np.zeros_like(vectors), CbowConfig(**data["config"]))


@dataclass(frozen=True)
class FileEmbedding:
    values: np.ndarray
    file_path: str
    empty: bool = False


def select_nodes(kinds: Sequence[NodeKind], selected: frozenset[NodeKind] = SELECTED_KINDS) -> list[NodeKind]:
    return [k for k in kinds if k in selected]


def build_corpus(asts: Sequence[Ast], vocab_filter: frozenset[NodeKind] = SELECTED_KINDS) -> list[list[NodeKind]]:
    """One filtered preorder token sequence per file; empty sequences are kept."""
    if not asts:
        raise EmptyCorpus("build_corpus needs at least one tree")
    return [select_nodes(preorder(ast), vocab_filter) for ast in asts]


# -- loss and gradient for a single training example -------------------------

def _sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


def example_loss(w_in: np.ndarray, w_out: np.ndarray, context: Sequence[int], center: int,
                 negatives: Sequence[int]) -> float:
    """Negative-sampling loss of predicting ``center`` from ``context``."""
    h = w_in[list(context)].mean(axis=0)
    pos = float(w_out[center] @ h)
    loss = np.logaddexp(0.0, -pos)
    for n in negatives:
        loss += np.logaddexp(0.0, float(w_out[n] @ h))
    return float(loss)


def example_gradients(w_in: np.ndarray, w_out: np.ndarray, context: Sequence[int], center: int,
                      negatives: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Gradients of :func:`example_loss` w.r.t. the full input and output matrices."""
    context = list(context)
    h = w_in[context].mean(axis=0)
    g_out = np.zeros_like(w_out)
    g_h = np.zeros_like(h)
    targets = [(center, 1.0)] + [(n, 0.0) for n in negatives]
    for idx, label in targets:
        g = _sigmoid(float(w_out[idx] @ h)) - label
        g_h += g * w_out[idx]
        g_out[idx] += g * h
    g_in = np.zeros_like(w_in)
    for c in context:
        g_in[c] += g_h / len(context)
    return g_in, g_out


def _context(seq: Sequence[int], pos: int, window: int) -> list[int]:
    lo, hi = max(0, pos - window), min(len(seq), pos + window + 1)
    return [seq[j] for j in range(lo, hi) if j != pos]


def train_cbow(corpus: Sequence[Sequence[NodeKind]], config: CbowConfig = CbowConfig()) -> EmbeddingMatrix:
    """Train CBOW with negative sampling by plain SGD.

    The learning rate decays linearly from ``learning_rate`` to 10% of it
    over the run.  Negatives come from the unigram distribution raised to
    3/4, redrawn if they hit the centre token, and fixed per position for
    the whole run.  ``epoch_losses`` holds the mean loss over the corpus
    after each epoch.  All randomness flows from ``config.seed``.
    """
    sequences = [list(s) for s in corpus if len(s) > 0]
    if not sequences:
        raise EmptyCorpus("corpus has no non-empty sequences")
    vocab = NodeVocabulary.from_corpus(sequences)
    index = vocab.index
    encoded = [np.array([index[k] for k in s], dtype=np.int64) for s in sequences]
    v, d = len(vocab), config.embedding_dim

    rng = np.random.default_rng(config.seed)
    w_in = (rng.random((v, d)) - 0.5) / d
    w_out = np.zeros((v, d))

    counts = np.bincount(np.concatenate(encoded), minlength=v).astype(float)
    noise = counts ** 0.75
    noise /= noise.sum()
    noise_cdf = np.cumsum(noise)

    if v == 1:
        warnings.warn("vocabulary has a single kind; training is a no-op", DegenerateVocabulary, stacklevel=2)
        return EmbeddingMatrix(vocab, w_in, w_out, config, [0.0] * config.epochs)

    # Contexts never change between epochs: store each position's context as
    # a row of averaging weights over the vocabulary so h = weights @ w_in.
    n_positions = sum(len(seq) for seq in encoded)
    ctx_weights = np.zeros((n_positions, v))
    has_context = np.zeros(n_positions, dtype=bool)
    centers = np.empty(n_positions, dtype=np.int64)
    row = 0
    for seq in encoded:
        for p in range(len(seq)):
            ctx = _context(seq, p, config.window)
            centers[row] = seq[p]
            if ctx:
                ctx_weights[row] = np.bincount(ctx, minlength=v) / len(ctx)
                has_context[row] = True
            row += 1

    total_steps = config.epochs * n_positions
    step = 0
    k = config.negative_samples
    labels = np.zeros(k + 1)
    labels[0] = 1.0
    # Negatives are drawn once per corpus position and the corpus is visited
    # in order, so every epoch descends the same sampled objective and the
    # recorded epoch losses are directly comparable.
    targets_all = np.column_stack([centers, _draw_negatives(rng, noise_cdf, centers, k)])
    trainable = np.flatnonzero(has_context)
    losses = []
    for _ in range(config.epochs):
        for r in range(n_positions):
            lr = config.learning_rate * (1.0 - 0.9 * step / total_steps)
            step += 1
            if not has_context[r]:
                continue
            weights = ctx_weights[r]
            targets = targets_all[r]
            h = weights @ w_in
            out_rows = w_out[targets]
            g = _sigmoid(out_rows @ h) - labels
            g_h = g @ out_rows
            w_out -= np.outer(np.bincount(targets, weights=lr * g, minlength=v), h)
            w_in -= np.outer(weights, lr * g_h)
        losses.append(_objective(w_in, w_out, ctx_weights[trainable], targets_all[trainable]))
    return EmbeddingMatrix(vocab, w_in, w_out, config, losses)


def _objective(w_in: np.ndarray, w_out: np.ndarray, ctx_weights: np.ndarray, targets: np.ndarray) -> float:
    """Mean negative-sampling loss over many examples at once."""
    h = ctx_weights @ w_in
    scores = np.einsum("nkd,nd->nk", w_out[targets], h)
    scores[:, 0] = -scores[:, 0]
    return float(np.logaddexp(0.0, scores).sum(axis=1).mean())


def _draw_negatives(rng: np.random.Generator, noise_cdf: np.ndarray, centers: np.ndarray,
                    k: int) -> np.ndarray:
    v = len(noise_cdf)
    out = np.minimum(np.searchsorted(noise_cdf, rng.random((len(centers), k)), side="right"), v - 1)
    clash = out == centers[:, None]
    while clash.any():
        out[clash] = np.minimum(np.searchsorted(noise_cdf, rng.random(int(clash.sum())), side="right"), v - 1)
        clash = out == centers[:, None]
    return out


def embed_file(ast: Ast, matrix: EmbeddingMatrix) -> FileEmbedding:
    """Mean input vector over the file's selected nodes (zero vector if none)."""
    index = matrix.vocabulary.index
    rows = [index[k] for k in select_nodes(preorder(ast)) if k in index]
    d = matrix.input_vectors.shape[1]
    if not rows:
        warnings.warn(f"{ast.file_path}: no selected nodes, embedding is the zero vector", stacklevel=2)
        return FileEmbedding(np.zeros(d), ast.file_path, empty=True)
    return FileEmbedding(matrix.input_vectors[rows].mean(axis=0), ast.file_path)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return 0.0
    return float(a @ b / (na * nb))
