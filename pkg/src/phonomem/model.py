"""Interaction tensors, word energies, and next-sound distributions.

The model couples sounds up to r_max positions apart through one d x d
matrix per range. A word's energy sums (g0 - g(r)[s(x), s(x+r)]) over every
ordered in-range pair; pairs that would extend past either end of the word
are dropped (open boundaries). Interactions are uniform in position by
construction. Lower energy means more probable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .alphabet import Alphabet

_EVALS = 0


def reset_eval_count() -> None:
    """Zero the candidate-evaluation counter (test instrumentation only;
    not thread-safe)."""
    global _EVALS
    _EVALS = 0


def eval_count() -> int:
    """Number of candidate boundary-energy evaluations since the last reset."""
    return _EVALS


@dataclass(frozen=True, eq=False)
class InteractionModel:
    """Trained sound-interaction tensors: g0 plus one nonnegative d x d
    matrix per range 1..r_max. Immutable after construction; all read
    operations are safe for concurrent use."""

    alphabet: Alphabet
    r_max: int
    g0: float
    g: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.r_max < 1:
            raise ValueError("r_max must be >= 1")
        d = self.alphabet.d
        g = np.array(self.g, dtype=np.float64)
        if g.shape != (self.r_max, d, d):
            raise ValueError(f"g must have shape {(self.r_max, d, d)}, got {g.shape}")
        if not np.all(np.isfinite(g)):
            raise ValueError("non-finite interaction entries")
        if np.any(g < 0):
            raise ValueError("negative interaction entries")
        g.setflags(write=False)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "g0", float(self.g0))
        # Nested lists give ~20x faster scalar access than ndarray indexing
        # in the per-pair loops below.
        object.__setattr__(self, "_rows", g.tolist())

    @classmethod
    def untrained(
        cls,
        alphabet: Alphabet,
        r_max: int = 3,
        g0: float = 1.0,
        meta: Optional[dict] = None,
    ) -> "InteractionModel":
        """All-zero tensors: every sound pair sits at the g0 baseline."""
        d = alphabet.d
        return cls(alphabet, r_max, g0, np.zeros((r_max, d, d)), dict(meta or {}))

    @property
    def d(self) -> int:
        return self.alphabet.d


def word_energy(m: InteractionModel, w: Sequence[int]) -> float:
    """Total energy of a word: sum of (g0 - g(r)) couplings over all in-range
    ordered pairs, open boundaries."""
    rows = m._rows
    g0 = m.g0
    r_max = m.r_max
    n = len(w)
    total = 0.0
    for x in range(n - 1):
        top = min(r_max, n - 1 - x)
        row = w[x]
        for r in range(1, top + 1):
            total += g0 - rows[r - 1][row][w[x + r]]
    return total


def boundary_energy(m: InteractionModel, prefix: Sequence[int], rest: Sequence[int]) -> float:
    """Energy of prefix + rest; the fixed prefix acts as a left boundary for
    the remaining sounds."""
    return word_energy(m, tuple(prefix) + tuple(rest))


def energy_profile(m: InteractionModel, w: Sequence[int]) -> list[float]:
    """Local energy per gap (between positions x and x+1): each pair term
    (x', x'+r) is added to every one of the r gaps it spans. Words shorter
    than two sounds have an empty profile."""
    rows = m._rows
    g0 = m.g0
    n = len(w)
    gaps = [0.0] * max(0, n - 1)
    for x in range(n - 1):
        top = min(m.r_max, n - 1 - x)
        row = w[x]
        for r in range(1, top + 1):
            term = g0 - rows[r - 1][row][w[x + r]]
            for k in range(x, x + r):
                gaps[k] += term
    return gaps


def cross_energies(m: InteractionModel, prefix: Sequence[int]) -> np.ndarray:
    """Energy added by appending each candidate sound: the pair terms coupling
    it to the last r_max sounds of the prefix (zeros for an empty prefix)."""
    out = np.zeros(m.d, dtype=np.float64)
    g = m.g
    for r in range(1, min(m.r_max, len(prefix)) + 1):
        out += m.g0 - g[r - 1][prefix[-r]]
    return out


def next_sound_energies(
    m: InteractionModel, prefix: Sequence[int], base: Optional[float] = None
) -> np.ndarray:
    """Boundary energy of prefix + s for each of the d candidate sounds s,
    computed as the prefix energy plus the candidate's cross terms (equal to
    the concatenated word energy up to float summation order).

    Counts d evaluations toward eval_count(). Growth loops pass `base` (the
    running prefix energy) to avoid re-deriving it every step.
    """
    global _EVALS
    _EVALS += m.d
    if base is None:
        base = word_energy(m, prefix)
    return base + cross_energies(m, prefix)


@dataclass(frozen=True, eq=False)
class NextSoundDistribution:
    """Thermal weights over the d candidate next sounds at inverse
    temperature beta."""

    energies: np.ndarray
    probabilities: np.ndarray
    beta: float


def next_sound_distribution(
    m: InteractionModel, prefix: Sequence[int], beta: float = 1.0
) -> NextSoundDistribution:
    """Softmax of -beta * candidate energies, computed with max-subtraction
    so large beta saturates instead of overflowing. beta=0 is uniform."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    energies = next_sound_energies(m, prefix)
    weights = np.exp(-beta * (energies - energies.min()))
    return NextSoundDistribution(energies, weights / weights.sum(), float(beta))


def sequence_probability(
    m: InteractionModel,
    prefix: Sequence[int],
    continuation: Sequence[int],
    beta: float = 1.0,
) -> float:
    """Chain probability of the continuation given the prefix: the product of
    one conditional next-sound factor per appended sound (empty product = 1)."""
    p = tuple(prefix)
    prob = 1.0
    for s in continuation:
        prob *= float(next_sound_distribution(m, p, beta).probabilities[s])
        p += (s,)
    return prob


def ablate(m: InteractionModel, ranges: Iterable[int]) -> InteractionModel:
    """Copy of the model with g(r) zeroed for each r in ranges; the original
    is untouched."""
    ranges = set(ranges)
    bad = ranges - set(range(1, m.r_max + 1))
    if bad:
        raise ValueError(f"ranges outside 1..{m.r_max}: {sorted(bad)}")
    g = m.g.copy()
    for r in ranges:
        g[r - 1] = 0.0
    meta = dict(m.meta)
    if ranges:
        meta["ablated"] = sorted(set(meta.get("ablated", ())) | ranges)
    return InteractionModel(m.alphabet, m.r_max, m.g0, g, meta)


def mean_interaction(m: InteractionModel, r: int) -> float:
    """Arithmetic mean of the d*d entries of g(r)."""
    if not 1 <= r <= m.r_max:
        raise ValueError(f"range {r} outside 1..{m.r_max}")
    return float(m.g[r - 1].mean())
