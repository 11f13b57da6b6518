"""Counting primitive closed geodesics of a Z-periodic graph.

Walks are sequences of darts (directed half-edges) of the quotient graph.
Every undirected edge gives two darts, including loops, and a dart's reverse
carries the negated shift. A closed non-backtracking cycle of Y corresponds
to a cyclic dart sequence with no dart followed by its reverse (cyclically)
and total shift 0; translates of a cycle give the same sequence, so cyclic
sequences up to rotation are exactly the Z-orbits. A cycle and its inverse
are counted separately, and a finite cycle is never fixed by a nonzero
translation, so every stabilizer is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import VoltageGraph


class CensusTooLarge(MemoryError):
    """The requested length would enumerate more walks than the budget allows."""


@dataclass(frozen=True)
class Dart:
    tail: int
    head: int
    shift: int
    edge: int
    forward: bool


@dataclass(frozen=True)
class GeodesicCensus:
    max_length: int
    counts: tuple[int, ...]  # counts[m] = number of orbits of length m; counts[0] = 0

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("census counts must be nonnegative")


def darts(G: VoltageGraph) -> list[Dart]:
    out = []
    for k, e in enumerate(G.edges):
        out.append(Dart(e.src, e.dst, e.shift, k, True))
        out.append(Dart(e.dst, e.src, -e.shift, k, False))
    return out


def _reverse_index(k: int) -> int:
    return k ^ 1


def _is_primitive(seq: tuple[int, ...]) -> bool:
    m = len(seq)
    for p in range(1, m):
        if m % p == 0 and seq == seq[p:] + seq[:p]:
            return False
    return True


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def geodesic_census(G: VoltageGraph, L: int, budget: int = 20_000_000) -> GeodesicCensus:
    """Z-orbits of primitive closed non-backtracking cycles, by length <= L."""
    if L < 1:
        raise ValueError("census length must be at least 1")
    ds = darts(G)
    out_of = [[] for _ in range(G.v)]
    for k, d in enumerate(ds):
        out_of[d.tail].append(k)
    branching = max((len(o) for o in out_of), default=0)
    estimate = len(ds) * max(branching - 1, 1) ** max(L - 1, 0)
    if estimate > budget:
        raise CensusTooLarge(
            f"census to length {L} would walk ~{estimate:.3g} paths (budget {budget})")
    max_step = max((abs(d.shift) for d in ds), default=0)
    found: list[set] = [set() for _ in range(L + 1)]

    # only cycles whose first dart is their smallest index need to be walked
    def extend(path: list[int], pos: int, shift: int):
        m = len(path)
        last = path[-1]
        first = path[0]
        if pos == ds[first].tail and shift == 0:
            if _reverse_index(last) != first:
                seq = tuple(path)
                if _is_primitive(seq):
                    found[m].add(_canonical(seq))
        if m == L:
            return
        remaining = L - m
        if abs(shift) > remaining * max_step:
            return
        for k in out_of[pos]:
            if k < first or k == _reverse_index(last):
                continue
            path.append(k)
            extend(path, ds[k].head, shift + ds[k].shift)
            path.pop()

    for k, d in enumerate(ds):
        extend([k], d.head, d.shift)

    counts = [0] + [len(found[m]) for m in range(1, L + 1)]
    return GeodesicCensus(L, tuple(counts))


def series_from_census(C: GeodesicCensus) -> list[int]:
    """Coefficients of prod over orbits (1 - u^len)^-1, truncated at degree L."""
    L = C.max_length
    series = [1] + [0] * L
    for m in range(1, L + 1):
        for _ in range(C.counts[m]):
            # multiply by 1/(1 - u^m) in place
            for k in range(m, L + 1):
                series[k] += series[k - m]
    return series
