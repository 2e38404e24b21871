"""Linear utility over joint feature vectors.

Every object a learner can present is summarized by a dense float64
feature vector of a fixed dimension N, and its (hidden) utility is the
dot product of an unknown weight vector with that feature vector.  The
weight vector together with an upper bound R on the feature norm is what
the regret certificate needs, so both travel together in
:class:`UtilityModel`.

A structured domain plugs into this model by providing two functions,
``joint_features(query, ranking)`` and ``argmax_ranking(weights, query)``
(see :class:`StructuredDomain`).  The top-5 ranking domain in
:mod:`prefrank.ranking` is the shipped implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol, Sequence

import numpy as np

from .errors import DimensionError

__all__ = [
    "as_vector",
    "dot",
    "utility",
    "UtilityModel",
    "StructuredDomain",
]


def as_vector(values) -> np.ndarray:
    """Copy ``values`` into a read-only 1-D float64 array with finite entries."""
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    arr.setflags(write=False)
    return arr


def dot(a, b) -> float:
    """Inner product of two equal-length vectors.

    Raises:
        DimensionError: if the vectors are not 1-D of the same length.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.shape != b.shape:
        raise DimensionError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(np.dot(a, b))


@dataclass(frozen=True)
class UtilityModel:
    """Hidden linear utility: weight vector plus the feature-norm bound.

    Attributes:
        w_star: the hidden weight vector, length N.
        R: upper bound on the Euclidean norm of any joint feature vector
            the domain can produce (must be positive).
        w_star_norm: Euclidean norm of ``w_star``, cached at construction.
    """

    w_star: np.ndarray
    R: float
    w_star_norm: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "w_star", as_vector(self.w_star))
        if not (np.isfinite(self.R) and self.R > 0.0):
            raise ValueError(f"R must be a positive real, got {self.R}")
        object.__setattr__(self, "R", float(self.R))
        object.__setattr__(self, "w_star_norm", float(np.linalg.norm(self.w_star)))

    @property
    def dim(self) -> int:
        return self.w_star.shape[0]


def utility(model: UtilityModel, features) -> float:
    """True utility of the object whose joint features are ``features``."""
    return dot(model.w_star, features)


class StructuredDomain(Protocol):
    """Contract a structured domain must satisfy to drive the learner."""

    def joint_features(self, query, ranking) -> np.ndarray: ...

    def argmax_ranking(self, weights: Sequence[float], query) -> np.ndarray: ...
