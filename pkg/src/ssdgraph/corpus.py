"""Reproducible digraph catalogs for oracle sweeps."""

from __future__ import annotations

import os
import random
from itertools import permutations
from typing import Iterator, Sequence

from .graph import Digraph

DEFAULT_SEED = 20240917
DEFAULT_PROBS = (0.15, 0.3, 0.5, 0.8)


def env_seed(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get("SSD_SEED")
    return int(raw) if raw else default


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled simple digraph on ``n`` vertices (``2**(n*(n-1))`` of them)."""
    slots = list(permutations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Digraph.from_arcs(n, [a for i, a in enumerate(slots) if mask >> i & 1])


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_strong_digraph(n: int, p: float, rng: random.Random, extra_cycle: bool = True) -> Digraph:
    """A random digraph made strongly connected by overlaying a random Hamiltonian cycle."""
    base = random_digraph(n, p, rng)
    if not extra_cycle or n < 2:
        return base
    perm = list(range(n))
    rng.shuffle(perm)
    cyc = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    return Digraph.from_arcs(n, base.arcs() + cyc)


def random_digraphs(
    count: int,
    seed: int,
    n_range: tuple[int, int] = (5, 9),
    probs: Sequence[float] = DEFAULT_PROBS,
) -> Iterator[Digraph]:
    """``count`` digraphs, sweeping ``n`` and arc probability round-robin."""
    rng = random.Random(seed)
    lo, hi = n_range
    sizes = list(range(lo, hi + 1))
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = probs[(i // len(sizes)) % len(probs)]
        yield random_digraph(n, p, rng)


def standard_corpus(seed: int | None = None, random_count: int = 10_000, max_exhaustive: int = 4) -> Iterator[Digraph]:
    """All labeled digraphs with ``n <= max_exhaustive`` followed by the random sweep."""
    for n in range(1, max_exhaustive + 1):
        yield from all_digraphs(n)
    yield from random_digraphs(random_count, env_seed() if seed is None else seed)


def random_undirected(n: int, p: float, rng: random.Random) -> Digraph:
    """A symmetric digraph standing in for an undirected simple graph."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs += [(u, v), (v, u)]
    return Digraph.from_arcs(n, arcs)
