"""Batch pairwise distances, ROC/AUC discrimination, and permutation testing.

The ROC protocol classifies a pair as same-class when its distance falls
below a threshold; sweeping the threshold over all observed distances
yields the curve, and the trapezoid area equals the Mann-Whitney
probability that a random same-class pair sits closer than a random
cross-class pair (ties counted half).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DataError
from .generators import default_null_model, sample_null
from .hypergraph import Hypergraph

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise dissimilarities with per-item class labels."""

    D: np.ndarray
    labels: tuple[str, ...]
    measure: str = ""
    params: str = ""

    def __post_init__(self):
        D = np.asarray(self.D, dtype=float)
        if D.ndim != 2 or D.shape[0] != D.shape[1]:
            raise DataError("distance matrix must be square")
        if len(self.labels) != D.shape[0]:
            raise DataError("label count does not match matrix size")
        if not np.all(np.isfinite(D)):
            raise DataError("distance matrix entries must be finite")
        if np.abs(D - D.T).max(initial=0.0) > SYMMETRY_TOL:
            raise DataError("distance matrix is not symmetric")
        if np.any(np.diag(D) != 0.0):
            raise DataError("distance matrix diagonal must be zero")
        if np.any(D < 0.0):
            raise DataError("distance matrix entries must be non-negative")
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @property
    def size(self) -> int:
        return self.D.shape[0]


def distance_matrix(items: Sequence[Hypergraph],
                    measure: Callable[[Hypergraph, Hypergraph], float],
                    labels: Optional[Sequence[str]] = None,
                    measure_name: str = "",
                    params: str = "",
                    n_jobs: int = 1) -> DistanceMatrix:
    """All pairwise dissimilarities, each unordered pair computed once.

    ``n_jobs`` > 1 fans the pairs out over a thread pool; assembly is
    index-keyed, so the result does not depend on scheduling.
    """
    N = len(items)
    if labels is None:
        labels = [str(i) for i in range(N)]
    pairs = [(i, j) for i in range(N) for j in range(i + 1, N)]

    def one(pair):
        i, j = pair
        try:
            return measure(items[i], items[j])
        except DataError as exc:
            raise DataError(f"items {i} and {j} are not comparable: {exc}") from exc

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            values = list(pool.map(one, pairs))
    else:
        values = [one(p) for p in pairs]

    D = np.zeros((N, N))
    for (i, j), v in zip(pairs, values):
        D[i, j] = D[j, i] = v
    return DistanceMatrix(D=D, labels=tuple(labels), measure=measure_name, params=params)


@dataclass(frozen=True)
class RocResult:
    epsilons: np.ndarray
    tpr: np.ndarray
    fpr: np.ndarray
    auc: float


def roc_auc(dm: DistanceMatrix) -> RocResult:
    """Threshold-sweep ROC over pair classification (same class iff d < eps).

    Positives are unordered same-class pairs, negatives cross-class pairs;
    needs at least two classes with two items each.
    """
    labels = dm.labels
    counts: dict[str, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    if len(counts) < 2 or min(counts.values()) < 2:
        raise DataError("ROC needs >= 2 classes with >= 2 items each")

    pos, neg = [], []
    N = dm.size
    for i in range(N):
        for j in range(i + 1, N):
            (pos if labels[i] == labels[j] else neg).append(dm.D[i, j])
    pos_sorted = np.sort(np.array(pos))
    neg_sorted = np.sort(np.array(neg))

    eps = np.concatenate([np.unique(dm.D[np.triu_indices(N, k=1)]), [math.inf]])
    # strict '<' threshold: searchsorted-left counts entries below eps
    tpr = np.searchsorted(pos_sorted, eps, side="left") / len(pos_sorted)
    fpr = np.searchsorted(neg_sorted, eps, side="left") / len(neg_sorted)
    auc = float(np.trapezoid(tpr, fpr))
    return RocResult(epsilons=eps, tpr=tpr, fpr=fpr, auc=auc)


@dataclass(frozen=True)
class PermTestResult:
    observed: float
    null_distances: np.ndarray
    p_value: float
    level: float
    reject: bool


def permutation_test(g1: Hypergraph, g2: Hypergraph,
                     measure: Callable[[Hypergraph, Hypergraph], float],
                     null_model: Optional[str] = None,
                     samples: int = 200,
                     level: float = 0.05,
                     seed: int = 0,
                     k: Optional[int] = None) -> PermTestResult:
    """Significance of d(g1, g2) against nulls resembling g1.

    Draws ``samples`` null hypergraphs from the chosen model (default:
    cl-uniform when g1 is uniform, cl otherwise) on independent child
    streams of ``seed``, and reports p = fraction of null distances
    exceeding the observed one; the null 'g1 and g2 are similar' is
    rejected when p <= level.
    """
    model = null_model or default_null_model(g1)
    observed = measure(g1, g2)
    children = np.random.SeedSequence(seed).spawn(samples)
    nulls = np.array([
        measure(g1, sample_null(g1, model, child, k=k)) for child in children
    ])
    p = float((nulls > observed).mean())
    return PermTestResult(observed=observed, null_distances=nulls,
                          p_value=p, level=level, reject=p <= level)


# ---------------------------------------------------------------------------
# CSV formats


def format_distance_matrix_csv(dm: DistanceMatrix, prelude: Sequence[str] = ()) -> str:
    lines = list(prelude)
    lines.append("#labels," + ",".join(dm.labels))
    for row in dm.D:
        lines.append(",".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def parse_distance_matrix_csv(text: str | bytes) -> DistanceMatrix:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    labels = None
    rows = []
    for ln in text.split("\n"):
        ln = ln.strip()
        if not ln:
            continue
        if ln.startswith("#labels"):
            labels = tuple(t.strip() for t in ln.split(",")[1:])
        elif ln.startswith("#"):
            continue
        else:
            try:
                rows.append([float(t) for t in ln.split(",")])
            except ValueError:
                raise DataError(f"bad distance matrix row: {ln!r}") from None
    if labels is None:
        raise DataError("distance matrix CSV is missing its #labels row")
    if not rows or any(len(r) != len(labels) for r in rows):
        raise DataError("distance matrix CSV is not rectangular")
    return DistanceMatrix(D=np.array(rows), labels=labels)


def format_roc_csv(roc: RocResult, prelude: Sequence[str] = ()) -> str:
    lines = list(prelude)
    lines.append("epsilon,tpr,fpr")
    for e, t, f in zip(roc.epsilons, roc.tpr, roc.fpr):
        lines.append(f"{e:.17g},{t:.17g},{f:.17g}")
    lines.append(f"#auc,{roc.auc:.17g}")
    return "\n".join(lines) + "\n"
