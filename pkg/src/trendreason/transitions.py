"""Smooth time transitions between triplets and the scenario transition graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyScenarioSet, ModelMismatch
from .signs import PLUS
from .solver import ScenarioSet, Triplet


def _t(text: str) -> Triplet:
    return Triplet.parse(text)


# One step of a continuously differentiable positive quantity. The first
# derivative leaves a nonzero sign only through zero, steered by the second.
_POSITIVE_MOVES: dict[str, tuple[str, ...]] = {
    "+++": ("++0",),
    "++0": ("+++", "++-"),
    "++-": ("++0", "+0-", "+00"),
    "+0+": ("+++",),
    "+00": ("+++", "+--"),
    "+0-": ("+--",),
    "+-+": ("+-0", "+0+", "+00"),
    "+-0": ("+-+", "+--"),
    "+--": ("+-0",),
}

# falling quantities may also reach a zero value
_ZERO_VALUE_MOVES: dict[str, tuple[str, ...]] = {
    "+-+": ("0-+", "00+", "000", "0-0"),
    "+-0": ("0-0",),
    "+--": ("0--", "0-0"),
}


@dataclass(frozen=True)
class TransitionTable:
    successors: dict
    positive_only: bool

    @classmethod
    def build(cls, positive_only: bool = True) -> "TransitionTable":
        table = {}
        for src, dsts in _POSITIVE_MOVES.items():
            moves = dsts if positive_only else dsts + _ZERO_VALUE_MOVES.get(src, ())
            table[_t(src)] = frozenset(_t(d) for d in moves)
        return cls(table, positive_only)

    def arcs(self) -> list[tuple[Triplet, Triplet]]:
        return sorted((a, b) for a, bs in self.successors.items() for b in bs)


POSITIVE_TABLE = TransitionTable.build(True)
FULL_TABLE = TransitionTable.build(False)


def triplet_successors(t: Triplet, positive_only: bool = True) -> frozenset[Triplet]:
    if t.v is not PLUS:
        raise ValueError(f"transitions are defined only from positive values, got {t}")
    table = POSITIVE_TABLE if positive_only else FULL_TABLE
    return table.successors[t]


def scenario_transition_allowed(a: Sequence[Triplet], b: Sequence[Triplet],
                                positive_only: bool = True) -> bool:
    """Every variable stays put or takes one allowed step; at least one moves."""
    if len(a) != len(b):
        raise ModelMismatch("scenarios have different variable counts")
    if tuple(a) == tuple(b):
        return False
    return all(x == y or y in triplet_successors(x, positive_only) for x, y in zip(a, b))


@dataclass(frozen=True)
class ScenarioGraph:
    nodes: ScenarioSet
    arcs: tuple[tuple[int, int], ...]  # 0-based indices into nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def successors(self, i: int) -> list[int]:
        adj = self.__dict__.get("_adj")
        if adj is None:
            adj = [[] for _ in range(len(self.nodes))]
            for u, v in self.arcs:
                adj[u].append(v)
            object.__setattr__(self, "_adj", adj)
        return adj[i]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.successors(u)


def build_graph(scenarios: ScenarioSet, positive_only: bool = True) -> ScenarioGraph:
    if not len(scenarios):
        raise EmptyScenarioSet("cannot build a graph without scenarios")
    nodes = scenarios.scenarios
    arcs = tuple(
        (i, j)
        for i, a in enumerate(nodes)
        for j, b in enumerate(nodes)
        if i != j and scenario_transition_allowed(a, b, positive_only)
    )
    return ScenarioGraph(scenarios, arcs)
