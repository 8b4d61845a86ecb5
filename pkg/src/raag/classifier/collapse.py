"""
Greedy search for a simplicial collapse down to a single vertex.

A face is free when exactly one other face properly contains it. That
coface is then a facet one dimension up, and removing the pair is an
elementary collapse, which doesn't change the homotopy type. Reaching
a single vertex proves the complex contractible. Getting stuck proves
nothing: some contractible complexes have no free faces at all, and
others can be collapsed only in the right order.
"""

import heapq
import random

from raag.complexes.simplicial_complex import make_simplex
from raag.errors import CorruptComplexError, MalformedInputError
from raag.logging_setup import get_logger


class CollapseSequence:
    """
    steps   [(free face, coface), ...] in the order they were removed
    seed    None for the deterministic pass, otherwise the seed of the
            randomized restart that found it
    """

    def __init__(self, steps, seed=None):
        self.steps = [(tuple(face), tuple(coface)) for face, coface in steps]
        self.seed = seed

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        if not isinstance(other, CollapseSequence):
            return NotImplemented
        return self.steps == other.steps and self.seed == other.seed

    def __repr__(self):
        return f"CollapseSequence({len(self.steps)} steps, seed={self.seed})"

    def replay_error(self, complex_):
        """
        Replay the steps on a fresh copy of the complex. Returns None when
        every step is legal and a single vertex is left, otherwise a
        description of what went wrong.
        """
        state = _CollapseState(complex_)
        for i, (face, coface) in enumerate(self.steps):
            if face not in state.up:
                return f"step {i}: {list(face)} is not a face of the complex"
            if not state.is_free(face):
                return f"step {i}: {list(face)} is not a free face"
            (actual,) = state.up[face]
            if actual != coface:
                return (
                    f"step {i}: the coface of {list(face)} is {list(actual)}, "
                    f"not {list(coface)}"
                )
            state.remove_pair(face, coface)
        if len(state.up) != 1:
            return f"{len(state.up)} faces remain after the last step"
        return None

    def replay(self, complex_):
        return self.replay_error(complex_) is None

    def to_dict(self):
        return {
            "seed": self.seed,
            "steps": [[list(face), list(coface)] for face, coface in self.steps],
        }

    @classmethod
    def from_dict(cls, obj):
        try:
            steps = [
                (make_simplex(face), make_simplex(coface))
                for face, coface in obj["steps"]
            ]
            return cls(steps, obj.get("seed"))
        except (KeyError, TypeError, ValueError) as err:
            raise MalformedInputError(f"Bad collapse sequence: {err}")


class _CollapseState:
    """
    The faces still present, each with the set of present faces
    one dimension up that contain it.
    """

    def __init__(self, complex_):
        self.up = {s: set() for s in complex_.simplices()}
        for s in self.up:
            if len(s) > 1:
                for j in range(len(s)):
                    self.up[s[:j] + s[j + 1 :]].add(s)

    def is_free(self, face):
        cofaces = self.up.get(face)
        if cofaces is None or len(cofaces) != 1:
            return False
        (coface,) = cofaces
        return not self.up[coface]

    def free_faces(self):
        return [s for s in self.up if self.is_free(s)]

    def remove_pair(self, face, coface):
        """
        Remove both and return the faces whose coface sets shrank.
        """
        touched = []
        for removed in (coface, face):
            del self.up[removed]
            for j in range(len(removed)):
                below = removed[:j] + removed[j + 1 :]
                if below in self.up:
                    self.up[below].discard(removed)
                    touched.append(below)
        return touched


def _greedy(complex_, seed):
    state = _CollapseState(complex_)
    rng = None if seed is None else random.Random(seed)

    # The deterministic pass always takes the lexicographically first free
    # face. Restarts order the queue by a random key drawn at push time.
    def key(face):
        if rng is None:
            return (face,)
        return (rng.random(), face)

    heap = [key(s) for s in state.free_faces()]
    heapq.heapify(heap)
    steps = []
    while heap:
        face = heapq.heappop(heap)[-1]
        if not state.is_free(face):
            continue
        (coface,) = state.up[face]
        steps.append((face, coface))
        for s in state.remove_pair(face, coface):
            if state.is_free(s):
                heapq.heappush(heap, key(s))
            # A face that just became maximal can free the faces below it.
            if not state.up.get(s, True) and len(s) > 1:
                for j in range(len(s)):
                    below = s[:j] + s[j + 1 :]
                    if state.is_free(below):
                        heapq.heappush(heap, key(below))
    if len(state.up) == 1:
        return CollapseSequence(steps, seed)
    return None


def collapse(complex_, budget):
    """
    One deterministic pass, then up to `budget` randomized restarts with
    seeds 0, 1, ... in order. The first success is returned, so the
    answer doesn't depend on timing. None means no collapse was found.
    """
    if complex_.is_empty():
        return None
    logger = get_logger("collapse")
    for seed in [None] + list(range(budget)):
        sequence = _greedy(complex_, seed)
        if sequence is not None:
            problem = sequence.replay_error(complex_)
            if problem is not None:
                raise CorruptComplexError(
                    f"Collapse search produced a bad sequence: {problem}"
                )
            logger.info(
                f"Collapsed {complex_.name} in {len(sequence)} steps, seed {seed}"
            )
            return sequence
    logger.info(f"No collapse found for {complex_.name} after {budget} restarts")
    return None
