"""Generation and prediction on top of a trained interaction model.

Covers greedy sound-by-sound growth, ranked alternatives via hard exclusion
of better candidates, bounded enumeration of the branching space of
prefixes, randomized low-rank growth ("gibberish"), periodic steady-state
detection, segmentation at high-energy gaps, and completion ranking for a
listener holding a partial word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import AbstractSet, Iterator, Optional, Sequence

from .alphabet import Corpus, Word
from .errors import SectorExhaustedError
from .model import (
    InteractionModel,
    energy_profile,
    next_sound_energies,
    sequence_probability,
    word_energy,
)

# Exact sound sequences excluded from growth; the infinite-penalty limit of
# penalizing already-found words.
PenaltySet = AbstractSet[Word]


def _ranked_candidates(
    m: InteractionModel, prefix: Word, base: Optional[float] = None
) -> list[tuple[float, int]]:
    # (energy, symbol index) sorted ascending; index breaks exact ties.
    energies = next_sound_energies(m, prefix, base=base)
    return sorted((float(energies[s]), s) for s in range(m.d))


def grow_greedy(
    m: InteractionModel,
    prefix: Sequence[int],
    steps: int,
    penalties: PenaltySet = frozenset(),
) -> Word:
    """Append `steps` sounds, each the lowest-boundary-energy candidate whose
    resulting word is not excluded. Ties break to the lowest symbol index.
    Evaluates all d candidates at every step."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    w = tuple(prefix)
    base = word_energy(m, w)
    for _ in range(steps):
        for energy, s in _ranked_candidates(m, w, base=base):
            candidate = w + (s,)
            if candidate not in penalties:
                w = candidate
                base = energy
                break
        else:
            raise SectorExhaustedError(
                f"sector exhausted: all {m.d} continuations of a "
                f"{len(w)}-sound prefix are excluded"
            )
    return w


def next_ranked(m: InteractionModel, prefix: Sequence[int], rank: int) -> int:
    """Candidate sound with the (rank+1)-th smallest boundary energy after the
    prefix; rank 0 is the greedy choice. Equal energies order by symbol index."""
    if not 0 <= rank < m.d:
        raise ValueError(f"rank {rank} outside 0..{m.d - 1}")
    return _ranked_candidates(m, tuple(prefix))[rank][1]


@dataclass(eq=False)
class BranchNode:
    """One word in the branching space. depth_down is its boundary-energy
    rank among its same-length siblings (0 = ground); sibling energies are
    nondecreasing in depth_down, ties ordered by symbol index."""

    word: Word
    energy: float
    col: int
    depth_down: int
    parent: Optional["BranchNode"] = field(default=None, repr=False)
    children_right: list["BranchNode"] = field(default_factory=list, repr=False)


class BranchSpace:
    """Tree of prefixes reachable from a root by growth moves (right: append
    the lowest-energy next sound) and rank moves (down: re-solve the same
    growth step with all higher-ranked siblings excluded, stepping one
    sibling deeper).

    A word whose per-step sibling ranks sum to k needs k down moves, so the
    space holds every word with at most max_depth_right appended sounds and
    rank sum <= max_depth_down - 1; max_depth_down=1 is the bare greedy
    path. Membership (`find`) costs O(N d) candidate evaluations and never
    builds the tree; `columns`/`nodes` materialize it on demand and grow
    combinatorially with max_depth_down, so keep depths modest when
    exporting. Deterministic throughout.
    """

    def __init__(
        self,
        model: InteractionModel,
        prefix: Sequence[int],
        max_depth_right: int,
        max_depth_down: int,
    ) -> None:
        if max_depth_right < 1 or max_depth_down < 1:
            raise ValueError("depths must be >= 1")
        self.model = model
        self.prefix: Word = tuple(prefix)
        self.max_depth_right = max_depth_right
        self.max_depth_down = max_depth_down
        self._columns: Optional[list[list[BranchNode]]] = None

    @property
    def columns(self) -> list[list[BranchNode]]:
        if self._columns is None:
            self._columns = self._materialize()
        return self._columns

    @property
    def root(self) -> BranchNode:
        return self.columns[0][0]

    def nodes(self) -> Iterator[BranchNode]:
        for column in self.columns:
            yield from column

    def _materialize(self) -> list[list[BranchNode]]:
        m = self.model
        root = BranchNode(self.prefix, word_energy(m, self.prefix), col=0, depth_down=0)
        columns = [[root]]
        frontier = [(root, self.max_depth_down - 1)]
        for col in range(1, self.max_depth_right + 1):
            grown: list[tuple[BranchNode, int]] = []
            for node, budget in frontier:
                ranked = _ranked_candidates(m, node.word, base=node.energy)
                for rank in range(min(m.d, budget + 1)):
                    energy, s = ranked[rank]
                    child = BranchNode(
                        node.word + (s,), energy, col=col, depth_down=rank, parent=node
                    )
                    node.children_right.append(child)
                    grown.append((child, budget - rank))
            if not grown:
                break
            columns.append([node for node, _ in grown])
            frontier = grown
        return columns

    def find(self, word: Sequence[int]) -> Optional[BranchNode]:
        """The node holding this exact word, or None when it lies outside the
        depth budgets. Returned nodes are detached (no parent/child links)."""
        w = tuple(word)
        p = self.prefix
        if w[: len(p)] != p or not 0 <= len(w) - len(p) <= self.max_depth_right:
            return None
        budget = self.max_depth_down - 1
        current = p
        base = word_energy(self.model, p)
        last_rank = 0
        for s in w[len(p) :]:
            ranked = _ranked_candidates(self.model, current, base=base)
            last_rank, base = next(
                (k, e) for k, (e, cand) in enumerate(ranked) if cand == s
            )
            budget -= last_rank
            if budget < 0:
                return None
            current += (s,)
        return BranchNode(w, base, col=len(w) - len(p), depth_down=last_rank)

    def __contains__(self, word: Sequence[int]) -> bool:
        return self.find(word) is not None


def enumerate_branch_space(
    m: InteractionModel,
    prefix: Sequence[int],
    max_depth_right: int,
    max_depth_down: int,
) -> BranchSpace:
    """Branching space of prefixes reachable from `prefix` within the given
    growth depth and down-rank budget; see BranchSpace."""
    return BranchSpace(m, prefix, max_depth_right, max_depth_down)


@dataclass(frozen=True)
class GibberishPolicy:
    """Randomized growth policy: take the next-to-lowest sound with
    probability p_next (default one in five), otherwise the lowest. The
    seeded generator fully determines the output."""

    max_length: int
    p_next: float = 0.2
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_length < 1:
            raise ValueError("max_length must be >= 1")
        if not 0.0 <= self.p_next <= 1.0:
            raise ValueError("p_next must be in [0, 1]")


def gibberish(
    m: InteractionModel, prefix: Sequence[int], policy: GibberishPolicy
) -> tuple[Word, list[float]]:
    """Grow the prefix to policy.max_length sounds under the policy's die and
    return the word with its per-gap energy profile. p_next=0 reproduces
    grow_greedy exactly; a fixed seed gives byte-identical output across
    runs and platforms."""
    rng = random.Random(policy.seed)
    w = tuple(prefix)
    base = word_energy(m, w)
    while len(w) < policy.max_length:
        rank = 1 if (rng.random() < policy.p_next and m.d > 1) else 0
        ranked = _ranked_candidates(m, w, base=base)
        base, s = ranked[rank]
        w += (s,)
    return w, energy_profile(m, w)


def detect_steady_state(w: Sequence[int], window: int) -> Optional[int]:
    """Smallest period p <= window whose pattern fills the trailing 2p sounds,
    or None when no such period exists."""
    if window < 1:
        raise ValueError("window must be >= 1")
    w = tuple(w)
    for p in range(1, window + 1):
        if len(w) >= 2 * p and w[-2 * p : -p] == w[-p:]:
            return p
    return None


def segment(m: InteractionModel, w: Sequence[int], threshold: float) -> list[Word]:
    """Cut the word at every gap whose local energy exceeds the threshold.

    A cut severs every pair term spanning that gap, so the total energy of
    the parts equals the original energy minus the severed terms (each
    counted once)."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    w = tuple(w)
    if len(w) <= 1:
        return [w] if w else []
    parts: list[Word] = []
    start = 0
    for i, gap_energy in enumerate(energy_profile(m, w)):
        if gap_energy > threshold:
            parts.append(w[start : i + 1])
            start = i + 1
    parts.append(w[start:])
    return parts


def predict_completions(
    m: InteractionModel,
    prefix: Sequence[int],
    lexicon: Corpus,
    beta: float = 1.0,
) -> list[tuple[Word, float]]:
    """Rank every lexicon word that starts with the prefix by the chain
    probability of its continuation, descending; ties order by word. A
    prefix matching nothing yields an empty list."""
    if lexicon.alphabet.symbols != m.alphabet.symbols:
        raise ValueError("lexicon alphabet does not match the model alphabet")
    p = tuple(prefix)
    scored = []
    for w in lexicon.words:
        if len(w) >= len(p) and w[: len(p)] == p:
            scored.append((w, sequence_probability(m, p, w[len(p) :], beta)))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored
