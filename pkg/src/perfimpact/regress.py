"""Six regressors, MAE scoring and cross-validated comparison.

All models are written against numpy only.  ``sgd``, ``ridge`` and
``lasso`` standardise features with statistics from the rows they are
fitted on; the tree models consume raw features.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, FoldFitError, LengthMismatch, NonFiniteInput

MODEL_KINDS = ("linear", "sgd", "ridge", "lasso", "decision_tree", "random_forest")

DEFAULT_HYPERPARAMS: dict[str, dict[str, Any]] = {
    "linear": {},
    "sgd": {"learning_rate": 0.01, "epochs": 200},
    "ridge": {"alpha": 1.0},
    "lasso": {"alpha": 0.1, "tol": 1e-6, "max_sweeps": 1000},
    "decision_tree": {"max_depth": 4, "min_samples_leaf": 1},
    "random_forest": {"n_trees": 100, "max_depth": 2, "min_samples_leaf": 1,
                      "features_per_split": None, "bootstrap": True},
}
SINGULAR_RIDGE = 1e-8


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    hyperparams: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        unknown = set(self.hyperparams) - set(DEFAULT_HYPERPARAMS[self.kind])
        if unknown:
            raise ValueError(f"unknown hyperparameters for {self.kind}: {sorted(unknown)}")

    def param(self, name: str) -> Any:
        return self.hyperparams.get(name, DEFAULT_HYPERPARAMS[self.kind][name])

    def resolved(self) -> dict[str, Any]:
        return {**DEFAULT_HYPERPARAMS[self.kind], **self.hyperparams}


@dataclass
class Scaler:
    mean: np.ndarray
    scale: np.ndarray

    @classmethod
    def fit(cls, X: np.ndarray) -> "Scaler":
        sd = X.std(axis=0)
        return cls(X.mean(axis=0), np.where(sd > 0, sd, 1.0))

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (X - self.mean) / self.scale


@dataclass
class Tree:
    """Flat binary tree; ``feature == -1`` marks a leaf."""

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    def predict(self, X: np.ndarray) -> np.ndarray:
        node = np.zeros(len(X), dtype=np.int64)
        active = self.feature[node] >= 0
        while active.any():
            idx = np.flatnonzero(active)
            f = self.feature[node[idx]]
            go_left = X[idx, f] <= self.threshold[node[idx]]
            node[idx] = np.where(go_left, self.left[node[idx]], self.right[node[idx]])
            active = self.feature[node] >= 0
        return self.value[node]

    @property
    def depth(self) -> int:
        depths = {0: 0}
        for i in range(len(self.feature)):
            if self.feature[i] >= 0:
                depths[int(self.left[i])] = depths[i] + 1
                depths[int(self.right[i])] = depths[i] + 1
        return max(depths.values())

    def to_dict(self) -> dict:
        return {k: getattr(self, k).tolist() for k in ("feature", "threshold", "left", "right", "value")}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Tree":
        return cls(np.asarray(d["feature"], dtype=np.int64), np.asarray(d["threshold"], dtype=float),
                   np.asarray(d["left"], dtype=np.int64), np.asarray(d["right"], dtype=np.int64),
                   np.asarray(d["value"], dtype=float))


@dataclass
class TrainedModel:
    spec: ModelSpec
    n_features: int
    coef: Optional[np.ndarray] = None
    intercept: float = 0.0
    scaler: Optional[Scaler] = None
    trees: list[Tree] = field(default_factory=list)

    def raw_coefficients(self) -> tuple[np.ndarray, float]:
        """Slopes and intercept expressed on unstandardised features."""
        if self.coef is None:
            raise TypeError(f"{self.spec.kind} has no linear coefficients")
        if self.scaler is None:
            return self.coef.copy(), self.intercept
        slopes = self.coef / self.scaler.scale
        return slopes, self.intercept - float(self.scaler.mean @ slopes)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "format": "perfimpact-model/1",
            "kind": self.spec.kind,
            "hyperparams": self.spec.resolved(),
            "seed": self.spec.seed,
            "n_features": self.n_features,
        }
        if self.coef is not None:
            out["coef"] = self.coef.tolist()
            out["intercept"] = self.intercept
        if self.scaler is not None:
            out["scaler"] = {"mean": self.scaler.mean.tolist(), "scale": self.scaler.scale.tolist()}
        if self.trees:
            out["trees"] = [t.to_dict() for t in self.trees]
        return out

    @classmethod
    def from_dict(cls, d: Mapping) -> "TrainedModel":
        if d.get("format") != "perfimpact-model/1":
            raise ValueError("not a perfimpact model document")
        spec = ModelSpec(d["kind"], d["hyperparams"], d["seed"])
        scaler = None
        if "scaler" in d:
            scaler = Scaler(np.asarray(d["scaler"]["mean"], dtype=float), np.asarray(d["scaler"]["scale"], dtype=float))
        coef = np.asarray(d["coef"], dtype=float) if "coef" in d else None
        trees = [Tree.from_dict(t) for t in d.get("trees", [])]
        return cls(spec, d["n_features"], coef, float(d.get("intercept", 0.0)), scaler, trees)


# -- validation -----------------------------------------------------------------

def _check_xy(X, y) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"X has shape {X.shape}, y has shape {y.shape}")
    if X.shape[0] < 2 or X.shape[1] < 1:
        raise DimensionMismatch(f"need n >= 2 rows and p >= 1 columns, got {X.shape}")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise NonFiniteInput("X or y contains NaN or infinity")
    return X, y


# -- linear family -------------------------------------------------------------------

def _fit_ols(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, float]:
    A = np.column_stack([X, np.ones(len(X))])
    gram = A.T @ A
    rhs = A.T @ y
    if np.linalg.matrix_rank(gram) < gram.shape[0]:
        gram = gram + SINGULAR_RIDGE * np.eye(gram.shape[0])
    beta = np.linalg.solve(gram, rhs)
    return beta[:-1], float(beta[-1])


def _fit_ridge(Z: np.ndarray, y: np.ndarray, alpha: float) -> tuple[np.ndarray, float]:
    y_mean = float(y.mean())
    gram = Z.T @ Z + alpha * np.eye(Z.shape[1])
    return np.linalg.solve(gram, Z.T @ (y - y_mean)), y_mean


def soft_threshold(value: float, threshold: float) -> float:
    if value > threshold:
        return value - threshold
    if value < -threshold:
        return value + threshold
    return 0.0


def _fit_lasso(Z: np.ndarray, y: np.ndarray, alpha: float, tol: float, max_sweeps: int) -> tuple[np.ndarray, float]:
    """Cyclic coordinate descent on (1/2n)||y - Zb - c||^2 + alpha*|b|_1."""
    n, p = Z.shape
    y_mean = float(y.mean())
    resid = y - y_mean
    col_sq = (Z ** 2).sum(axis=0) / n
    beta = np.zeros(p)
    for _ in range(max_sweeps):
        max_step = 0.0
        for j in range(p):
            if col_sq[j] == 0.0:
                continue
            old = beta[j]
            rho = float(Z[:, j] @ resid) / n + col_sq[j] * old
            new = soft_threshold(rho, alpha) / col_sq[j]
            if new != old:
                resid -= Z[:, j] * (new - old)
                beta[j] = new
                max_step = max(max_step, abs(new - old))
        if max_step < tol:
            break
    return beta, y_mean


def squared_loss(w: np.ndarray, b: float, Z: np.ndarray, y: np.ndarray) -> float:
    """Mean of half squared errors."""
    err = Z @ w + b - y
    return float(0.5 * np.mean(err ** 2))


def squared_loss_grad(w: np.ndarray, b: float, Z: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, float]:
    err = Z @ w + b - y
    return Z.T @ err / len(y), float(err.mean())


def _fit_sgd(Z: np.ndarray, y: np.ndarray, lr: float, epochs: int, rng: np.random.Generator) -> tuple[np.ndarray, float]:
    n, p = Z.shape
    w = np.zeros(p)
    b = float(y.mean())  # start at the intercept-only solution
    for _ in range(epochs):
        for i in rng.permutation(n):
            gw, gb = squared_loss_grad(w, b, Z[i : i + 1], y[i : i + 1])
            w -= lr * gw
            b -= lr * gb
    return w, b


# -- trees -----------------------------------------------------------------------------

def _best_split(X: np.ndarray, y: np.ndarray, features: Sequence[int], min_leaf: int):
    """Exhaustive search for the split with the lowest summed squared error.

    Returns ``(feature, threshold, sse)`` or ``None`` when no admissible
    split lowers the node's SSE.
    """
    n = len(y)
    total, total_sq = y.sum(), (y ** 2).sum()
    parent_sse = total_sq - total * total / n
    best = None
    best_sse = parent_sse
    for f in features:
        order = np.argsort(X[:, f], kind="stable")
        xs, ys = X[order, f], y[order]
        csum = np.cumsum(ys)[:-1]
        csq = np.cumsum(ys ** 2)[:-1]
        n_left = np.arange(1, n)
        n_right = n - n_left
        sse = (csq - csum ** 2 / n_left) + ((total_sq - csq) - (total - csum) ** 2 / n_right)
        valid = (xs[:-1] < xs[1:]) & (n_left >= min_leaf) & (n_right >= min_leaf)
        if not valid.any():
            continue
        sse = np.where(valid, sse, np.inf)
        i = int(np.argmin(sse))
        if sse[i] < best_sse - 1e-12 * max(1.0, abs(parent_sse)):
            thr = 0.5 * (xs[i] + xs[i + 1])
            if not xs[i] <= thr < xs[i + 1]:
                thr = xs[i]
            best, best_sse = (int(f), float(thr), float(sse[i])), sse[i]
    return best


def build_tree(X: np.ndarray, y: np.ndarray, max_depth: Optional[int], min_leaf: int = 1,
               max_features: Optional[int] = None, rng: Optional[np.random.Generator] = None) -> Tree:
    p = X.shape[1]
    feature, threshold, left, right, value = [], [], [], [], []

    def new_node(rows: np.ndarray) -> int:
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(float(y[rows].mean()))
        return len(feature) - 1

    stack = [(new_node(np.arange(len(y))), np.arange(len(y)), 0)]
    while stack:
        node, rows, depth = stack.pop()
        ys = y[rows]
        if (max_depth is not None and depth >= max_depth) or len(rows) < 2 * min_leaf or np.all(ys == ys[0]):
            continue
        if max_features is not None and max_features < p:
            candidates = np.sort(rng.choice(p, size=max_features, replace=False))
        else:
            candidates = range(p)
        split = _best_split(X[rows], ys, candidates, min_leaf)
        if split is None:
            continue
        f, thr, _ = split
        mask = X[rows, f] <= thr
        feature[node], threshold[node] = f, thr
        l_rows, r_rows = rows[mask], rows[~mask]
        left[node] = new_node(l_rows)
        right[node] = new_node(r_rows)
        stack.append((right[node], r_rows, depth + 1))
        stack.append((left[node], l_rows, depth + 1))
    return Tree(np.array(feature, dtype=np.int64), np.array(threshold, dtype=float),
                np.array(left, dtype=np.int64), np.array(right, dtype=np.int64), np.array(value, dtype=float))


# -- public API ----------------------------------------------------------------------

def fit(spec: ModelSpec, X, y) -> TrainedModel:
    X, y = _check_xy(X, y)
    n, p = X.shape
    kind = spec.kind
    rng = np.random.default_rng(spec.seed)
    if kind == "linear":
        coef, intercept = _fit_ols(X, y)
        return TrainedModel(spec, p, coef, intercept)
    if kind in ("sgd", "ridge", "lasso"):
        scaler = Scaler.fit(X)
        Z = scaler.transform(X)
        if kind == "ridge":
            coef, intercept = _fit_ridge(Z, y, float(spec.param("alpha")))
        elif kind == "lasso":
            coef, intercept = _fit_lasso(Z, y, float(spec.param("alpha")), float(spec.param("tol")),
                                         int(spec.param("max_sweeps")))
        else:
            coef, intercept = _fit_sgd(Z, y, float(spec.param("learning_rate")), int(spec.param("epochs")), rng)
        return TrainedModel(spec, p, coef, intercept, scaler)
    if kind == "decision_tree":
        tree = build_tree(X, y, spec.param("max_depth"), int(spec.param("min_samples_leaf")))
        return TrainedModel(spec, p, trees=[tree])
    # random_forest
    m = spec.param("features_per_split") or max(1, math.ceil(p / 3))
    trees = []
    for _ in range(int(spec.param("n_trees"))):
        rows = rng.integers(0, n, size=n) if spec.param("bootstrap") else np.arange(n)
        trees.append(build_tree(X[rows], y[rows], spec.param("max_depth"), int(spec.param("min_samples_leaf")),
                                int(m), rng))
    return TrainedModel(spec, p, trees=trees)


def predict(model: TrainedModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise DimensionMismatch(f"expected {model.n_features} features, got shape {X.shape}")
    if model.trees:
        return np.mean([t.predict(X) for t in model.trees], axis=0)
    Z = model.scaler.transform(X) if model.scaler is not None else X
    return Z @ model.coef + model.intercept


def mae(actual, predicted) -> float:
    a = np.asarray(actual, dtype=float)
    p = np.asarray(predicted, dtype=float)
    if a.shape != p.shape:
        raise LengthMismatch(f"{a.shape} vs {p.shape}")
    if a.size == 0:
        raise LengthMismatch("mae needs at least one pair")
    return float(np.mean(np.abs(a - p)))


# -- evaluation -------------------------------------------------------------------------

@dataclass
class ModelResult:
    kind: str
    fold_mae: list[float]
    mean_mae_seconds: float
    relative_mae_percent: Optional[float]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "fold_mae": self.fold_mae,
            "mean_mae_seconds": self.mean_mae_seconds,
            "relative_mae_percent": self.relative_mae_percent,
        }


@dataclass
class EvalReport:
    k: int
    seed: int
    models: list[ModelResult]
    dataset_digest: str = ""

    def best(self) -> ModelResult:
        return min(self.models, key=lambda m: (m.mean_mae_seconds, MODEL_KINDS.index(m.kind)))

    def to_dict(self) -> dict:
        return {"k": self.k, "seed": self.seed, "dataset_digest": self.dataset_digest,
                "models": [m.to_dict() for m in self.models]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: Mapping) -> "EvalReport":
        models = [ModelResult(m["kind"], list(m["fold_mae"]), m["mean_mae_seconds"], m.get("relative_mae_percent"))
                  for m in d["models"]]
        return cls(d["k"], d["seed"], models, d.get("dataset_digest", ""))

    @classmethod
    def from_json(cls, text: str) -> "EvalReport":
        return cls.from_dict(json.loads(text))


def cross_validate(spec: ModelSpec, X, y, plan) -> ModelResult:
    """Fit on all folds but one, score MAE on the held-out fold, for every fold."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(plan.assignments) != len(y):
        raise DimensionMismatch("fold plan does not cover the dataset")
    fold_mae = []
    for f in range(plan.k):
        test = plan.test_indices(f)
        train = plan.train_indices(f)
        if len(test) == 0:
            continue
        try:
            model = fit(spec, X[train], y[train])
            fold_mae.append(mae(y[test], predict(model, X[test])))
        except Exception as exc:
            raise FoldFitError(f, exc) from exc
    mean = float(np.mean(fold_mae))
    y_mean = float(y.mean())
    rel = mean / y_mean * 100.0 if y_mean > 0 else None
    return ModelResult(spec.kind, fold_mae, mean, rel)


def evaluate(X, y, plan, seed: int = 0, kinds: Sequence[str] = MODEL_KINDS,
             hyperparams: Optional[Mapping[str, Mapping[str, Any]]] = None, dataset_digest: str = "") -> EvalReport:
    hyperparams = hyperparams or {}
    results = [cross_validate(ModelSpec(kind, dict(hyperparams.get(kind, {})), seed), X, y, plan)
               for kind in MODEL_KINDS if kind in kinds]
    return EvalReport(plan.k, seed, results, dataset_digest)
