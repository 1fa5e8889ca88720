"""Fits interaction tensors to a corpus by gradient flow on total word energy.

The loss is the plain sum of word energies over the corpus. Its gradient
with respect to each g entry is minus the corpus pair count at that range,
a constant, so plain flow has the closed form

    g(r) = g_init + eta * timesteps * counts(r)

clamped at zero. The optional per-range-sum mode rescales each g(r) to a
fixed total mass (d*d) after every step, which keeps entries comparable to
g0 for inspection; entry orderings are unchanged in both modes.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .alphabet import Corpus
from .errors import CorpusError
from .model import InteractionModel, mean_interaction

NORMALIZE_MODES = ("none", "per-range-sum")


@dataclass(frozen=True)
class TrainConfig:
    """Gradient-flow hyperparameters. Defaults: 10000 timesteps with
    eta = 1e-4, so the default product eta * timesteps is 1 and the trained
    tensors equal the raw pair counts."""

    eta: float = 1e-4
    timesteps: int = 10_000
    g_init: float = 0.0
    clamp: bool = True
    normalize: str = "none"
    seed: int = 0  # reserved; plain flow is deterministic

    def __post_init__(self) -> None:
        if self.eta <= 0:
            raise ValueError("eta must be > 0")
        if self.timesteps < 0:
            raise ValueError("timesteps must be >= 0")
        if self.g_init < 0:
            raise ValueError("g_init must be >= 0")
        if self.normalize not in NORMALIZE_MODES:
            raise ValueError(f"normalize must be one of {NORMALIZE_MODES}")


@dataclass(frozen=True, eq=False)
class PairCounts:
    """Co-occurrence counts: counts[r-1][s][s'] is how often sound s appears
    r positions before sound s', summed over all corpus words."""

    counts: np.ndarray  # (r_max, d, d) int64

    def total(self, r: int) -> int:
        return int(self.counts[r - 1].sum())


def count_pairs(corpus: Corpus, r_max: int) -> PairCounts:
    """Exact pair counts for every range 1..r_max. The total at range r
    equals sum over words of max(0, N - r)."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    d = corpus.alphabet.d
    counts = np.zeros((r_max, d, d), dtype=np.int64)
    for w in corpus.words:
        arr = np.asarray(w, dtype=np.intp)
        for r in range(1, min(r_max, len(w) - 1) + 1):
            np.add.at(counts[r - 1], (arr[:-r], arr[r:]), 1)
    return PairCounts(counts)


def train(
    corpus: Corpus,
    cfg: TrainConfig = TrainConfig(),
    r_max: int = 3,
    g0: float = 1.0,
) -> InteractionModel:
    """Train a model against the corpus. Pure function: identical inputs give
    a bit-identical model."""
    if not corpus.words:
        raise CorpusError("empty corpus")
    counts = count_pairs(corpus, r_max).counts.astype(np.float64)
    if cfg.normalize == "none":
        g = cfg.g_init + cfg.eta * cfg.timesteps * counts
        if cfg.clamp:
            np.maximum(g, 0.0, out=g)
    else:
        d = corpus.alphabet.d
        target = float(d * d)
        g = np.full_like(counts, cfg.g_init)
        for _ in range(cfg.timesteps):
            g += cfg.eta * counts
            if cfg.clamp:
                np.maximum(g, 0.0, out=g)
            for r in range(r_max):
                mass = g[r].sum()
                if mass > 0.0:
                    g[r] *= target / mass
    meta = {
        "train": asdict(cfg),
        "corpus": {
            "source": corpus.source,
            "sha256": corpus.sha256(),
            "num_words": len(corpus.words),
            "d": corpus.alphabet.d,
            "words": corpus.surface_words(),
        },
    }
    return InteractionModel(corpus.alphabet, r_max, g0, g, meta)


def verify_decay(m: InteractionModel) -> bool:
    """True when the mean interaction strength is nonincreasing in range."""
    means = [mean_interaction(m, r) for r in range(1, m.r_max + 1)]
    return all(a >= b for a, b in zip(means, means[1:]))
