"""Explicit quadratic embeddings of QE graphs.

An embedding maps vertices to points whose squared Euclidean distances
reproduce the graph distances.  It exists exactly when the centered matrix
G = -1/2 C D C (C the mean-centering projection) is positive semidefinite,
in which case the rows of V sqrt(L) from its eigendecomposition realize it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import is_cnd_exact
from .errors import DimensionMismatchError, NotQEError
from .graphs import Graph, distance_matrix, find_pendant_edge, induced_subgraph
from .kernels import jacobi_eigh

RANK_CUTOFF = 1e-10
PENDANT_DEFECT_TOL = 1e-8


@dataclass(frozen=True)
class Embedding:
    """Per-vertex coordinates; coords has one row per vertex, dim columns."""

    dim: int
    coords: np.ndarray


def gram_from_distance(d: np.ndarray) -> np.ndarray:
    """Centered Gram matrix -1/2 C D C; PSD iff D embeds quadratically."""
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    c = np.eye(n) - np.full((n, n), 1.0 / n)
    gram = -0.5 * (c @ d @ c)
    return 0.5 * (gram + gram.T)


def embed(g: Graph) -> Embedding:
    """Quadratic embedding of a QE graph; raises NotQEError otherwise."""
    if g.n == 1:
        return Embedding(dim=0, coords=np.zeros((1, 0)))
    if not is_cnd_exact(g):
        raise NotQEError("graph admits no quadratic embedding")
    gram = gram_from_distance(distance_matrix(g))
    vals, vecs = jacobi_eigh(gram)
    scale = max(float(vals[0]), 1.0)
    if float(vals[-1]) < -1e-6 * scale:
        raise ArithmeticError(f"Gram matrix of a QE graph has eigenvalue {vals[-1]}")
    keep = vals > RANK_CUTOFF * max(float(vals[0]), 0.0)
    coords = vecs[:, keep] * np.sqrt(vals[keep])
    for col in range(coords.shape[1]):
        pivot = int(np.argmax(np.abs(coords[:, col])))
        if coords[pivot, col] < 0:
            coords[:, col] = -coords[:, col]
    coords.setflags(write=False)
    return Embedding(dim=int(np.count_nonzero(keep)), coords=coords)


def verify_embedding(e: Embedding, d: np.ndarray) -> float:
    """Largest |squared point distance - graph distance| over all pairs."""
    d = np.asarray(d, dtype=float)
    if e.coords.shape[0] != d.shape[0]:
        raise DimensionMismatchError(
            f"embedding has {e.coords.shape[0]} points, distance matrix order {d.shape[0]}")
    sq = np.sum((e.coords[:, None, :] - e.coords[None, :, :]) ** 2, axis=2)
    return float(np.max(np.abs(sq - d)))


def pendant_rule(g: Graph) -> float | None:
    """QEC = 0 when a pendant edge exists and the remainder is QE, else None.

    The embedding of the remainder is extended by one coordinate (the two
    pendant vertices sit at height 1 above their anchors) and verified.
    """
    witness = find_pendant_edge(g)
    if witness is None:
        return None
    a, b, ap, bp = witness
    keep = [v for v in range(g.n) if v not in (ap, bp)]
    h = induced_subgraph(g, keep)
    if h.n >= 2 and not is_cnd_exact(h):
        return None
    base = embed(h)
    pos = {v: i for i, v in enumerate(keep)}
    coords = np.zeros((g.n, base.dim + 1))
    for v in keep:
        coords[v, :base.dim] = base.coords[pos[v]]
    coords[ap, :base.dim] = base.coords[pos[a]]
    coords[ap, base.dim] = 1.0
    coords[bp, :base.dim] = base.coords[pos[b]]
    coords[bp, base.dim] = 1.0
    lifted = Embedding(dim=base.dim + 1, coords=coords)
    defect = verify_embedding(lifted, distance_matrix(g))
    if defect > PENDANT_DEFECT_TOL:
        raise ArithmeticError(f"pendant-edge extension failed to verify (defect {defect})")
    return 0.0
