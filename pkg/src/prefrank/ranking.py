"""Top-5 ranking domain: joint feature map, argmax by sorting, DCG.

A query carries candidate documents, each with a feature vector and an
integer relevance grade in {0..4}.  A ranking is an ordered list of
distinct document indices.  Only the first five positions carry weight:
position i (1-based) is discounted by 1/log2(i+1) and positions past the
fifth contribute nothing, to both the feature map and the DCG metric.

Ties are always broken by ascending document index (for score sorts) or
by earlier presented position (for relevance sorts in the feedback
simulators), which keeps every run reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, RankingError, ValidationError
from .model import as_vector

__all__ = [
    "TOP_K",
    "Document",
    "Query",
    "check_ranking",
    "joint_features",
    "argmax_ranking",
    "dcg_at_5",
    "optimal_dcg",
]

TOP_K = 5

# 1/log2(i+1) for 1-based positions i = 1..5.
_DISCOUNTS = 1.0 / np.log2(np.arange(2, TOP_K + 2, dtype=np.float64))
_DISCOUNTS.setflags(write=False)

RELEVANCE_GRADES = range(0, 5)


def position_discounts(k: int) -> np.ndarray:
    """Discount weights for the first ``k`` ranking positions (k <= 5)."""
    return _DISCOUNTS[:k]


@dataclass(frozen=True, eq=False)
class Document:
    """One candidate result: feature vector plus an editorial grade."""

    features: np.ndarray
    relevance: int

    def __post_init__(self):
        object.__setattr__(self, "features", as_vector(self.features))
        rel = int(self.relevance)
        if rel not in RELEVANCE_GRADES:
            raise ValidationError(f"relevance grade {self.relevance} outside 0..4")
        object.__setattr__(self, "relevance", rel)

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.relevance == other.relevance and np.array_equal(
            self.features, other.features
        )


@dataclass(eq=False)
class Query:
    """A context: query id plus a non-empty list of candidate documents.

    All documents must share one feature dimension.  The stacked feature
    matrix and the relevance vector are materialized once at construction
    and exposed read-only; the per-round loops work off those arrays.
    """

    id: int
    documents: list[Document]

    def __post_init__(self):
        if not self.documents:
            raise ValidationError(f"query {self.id} has no documents")
        dims = {d.features.shape[0] for d in self.documents}
        if len(dims) != 1:
            raise DimensionError(
                f"query {self.id}: documents disagree on feature dimension {sorted(dims)}"
            )
        matrix = np.vstack([d.features for d in self.documents])
        matrix.setflags(write=False)
        relevance = np.array([d.relevance for d in self.documents], dtype=np.int64)
        relevance.setflags(write=False)
        self._matrix = matrix
        self._relevance = relevance

    @property
    def num_docs(self) -> int:
        return len(self.documents)

    @property
    def dim(self) -> int:
        return self._matrix.shape[1]

    @property
    def feature_matrix(self) -> np.ndarray:
        """Read-only (num_docs, dim) array of document features."""
        return self._matrix

    @property
    def relevance_labels(self) -> np.ndarray:
        """Read-only (num_docs,) array of integer grades."""
        return self._relevance

    def __eq__(self, other):
        if not isinstance(other, Query):
            return NotImplemented
        return self.id == other.id and self.documents == other.documents


def check_ranking(query: Query, ranking) -> np.ndarray:
    """Validate a ranking for ``query`` and return it as an index array.

    A valid ranking lists pairwise-distinct indices in [0, num_docs) and
    covers at least the top min(5, num_docs) positions.
    """
    order = np.asarray(ranking, dtype=np.intp)
    if order.ndim != 1:
        raise RankingError(f"ranking must be 1-D, got shape {order.shape}")
    n = query.num_docs
    if order.size < min(TOP_K, n):
        raise RankingError(
            f"ranking of length {order.size} does not cover the top {min(TOP_K, n)} positions"
        )
    if order.size and (order.min() < 0 or order.max() >= n):
        raise RankingError(f"ranking index out of range for {n} documents")
    if np.unique(order).size != order.size:
        raise RankingError("ranking contains a duplicate document index")
    return order


def joint_features(query: Query, ranking) -> np.ndarray:
    """Discount-weighted sum of the features of the top-5 ranked documents.

    Position i (1-based) contributes its document's feature vector divided
    by log2(i+1); positions beyond min(5, num_docs) are ignored.
    """
    order = check_ranking(query, ranking)
    k = min(TOP_K, query.num_docs)
    return _DISCOUNTS[:k] @ query.feature_matrix[order[:k]]


def argmax_ranking(weights, query: Query) -> np.ndarray:
    """Permutation of all documents sorted by score descending.

    The returned ranking maximizes ``weights . joint_features`` over all
    rankings; ties are broken by ascending document index.
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (query.dim,):
        raise DimensionError(
            f"weights of shape {w.shape} do not match feature dimension {query.dim}"
        )
    scores = query.feature_matrix @ w
    return np.argsort(-scores, kind="stable")


def dcg_at_5(query: Query, ranking) -> float:
    """Discounted cumulative gain of the top five ranked documents."""
    order = check_ranking(query, ranking)
    k = min(TOP_K, query.num_docs)
    return float(_DISCOUNTS[:k] @ query.relevance_labels[order[:k]])


def optimal_dcg(query: Query) -> float:
    """Best achievable DCG: documents sorted by relevance descending."""
    order = np.argsort(-query.relevance_labels, kind="stable")
    k = min(TOP_K, query.num_docs)
    return float(_DISCOUNTS[:k] @ query.relevance_labels[order[:k]])
