"""Questions asked of solved models: steady states, loops, filters, paths, core and envelope."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (FilterError, FilterMatchesNothing, ModelMismatch, NoSteadyState)
from .signs import ZERO, parse_signs, render_signs
from .solver import ScenarioSet, Triplet
from .transitions import ScenarioGraph

FIELDS = ("dx", "ddx")


@dataclass(frozen=True)
class Condition:
    var: str
    field: str  # "dx" or "ddx"
    signs: frozenset

    def __str__(self) -> str:
        return f"{self.var}.{self.field}={render_signs(self.signs)}"


@dataclass(frozen=True)
class TrendFilter:
    conditions: tuple[Condition, ...]

    @classmethod
    def steady(cls, variables: Iterable[str]) -> "TrendFilter":
        zero = frozenset((ZERO,))
        return cls(tuple(Condition(v, f, zero) for v in variables for f in FIELDS))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] | None = None) -> "TrendFilter":
        """Parse ``GEN.dx=+,PRI.ddx=-``; ``steady`` needs ``variables``."""
        text = text.strip()
        if text.lower() == "steady":
            if variables is None:
                raise FilterError("'steady' needs the model's variable list")
            return cls.steady(variables)
        conds = []
        for part in filter(None, (p.strip() for p in re.split(r",(?![^\[]*\])", text))):
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\.(dx|ddx)\s*=\s*(\S+)", part)
            if not m:
                raise FilterError(f"cannot parse condition {part!r}")
            try:
                signs = parse_signs(m.group(3))
            except ValueError as exc:
                raise FilterError(f"{part!r}: {exc}") from None
            conds.append(Condition(m.group(1), m.group(2), signs))
        return cls(tuple(conds))

    @classmethod
    def from_json(cls, items) -> "TrendFilter":
        try:
            return cls(tuple(
                Condition(it["var"], it["field"], frozenset(parse_signs("".join(it["signs"]))))
                for it in items
            ))
        except (KeyError, TypeError, ValueError) as exc:
            raise FilterError(f"bad filter document: {exc}") from None

    def to_json(self) -> list[dict]:
        return [{"var": c.var, "field": c.field, "signs": [s.value for s in sorted(c.signs)]}
                for c in self.conditions]

    def __and__(self, other: "TrendFilter") -> "TrendFilter":
        return TrendFilter(self.conditions + other.conditions)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.conditions)

    def compile(self, variables: Sequence[str]):
        if not self.conditions:
            raise FilterError("filter has no conditions")
        checks = []
        for c in self.conditions:
            if c.var not in variables:
                raise FilterError(f"unknown variable {c.var}")
            if c.field not in FIELDS:
                raise FilterError(f"unknown field {c.field}")
            checks.append((variables.index(c.var), c.field, c.signs))

        def match(scenario: Sequence[Triplet]) -> bool:
            return all(getattr(scenario[i], f) in signs for i, f, signs in checks)

        return match


def _is_steady(scenario: Sequence[Triplet]) -> bool:
    return all(t.is_steady for t in scenario)


def steady_indices(scenarios: ScenarioSet) -> list[int]:
    return [i for i, s in enumerate(scenarios) if _is_steady(s)]


def steady_states(scenarios: ScenarioSet) -> ScenarioSet:
    return scenarios.subset(steady_indices(scenarios))


def match_indices(scenarios: ScenarioSet, f: TrendFilter) -> list[int]:
    match = f.compile(scenarios.variables)
    return [i for i, s in enumerate(scenarios) if match(s)]


def query(scenarios: ScenarioSet, f: TrendFilter) -> ScenarioSet:
    return scenarios.subset(match_indices(scenarios, f))


def stabilisation_loops(graph: ScenarioGraph, max_len: int,
                        limit: int | None = None) -> list[list[int]]:
    """Simple directed cycles through a steady state, at most ``max_len`` arcs.

    Each cycle is a node list starting and ending at the steady node. Search
    is depth-first with successors in canonical order, so output is stable.
    ``limit`` stops after that many cycles.
    """
    starts = steady_indices(graph.nodes)
    if not starts:
        raise NoSteadyState("graph has no steady-state scenario")
    loops: list[list[int]] = []
    for start in starts:
        path = [start]
        on_path = {start}

        def dfs(u: int) -> bool:
            for v in graph.successors(u):
                if v == start and len(path) >= 2:
                    loops.append(path + [start])
                    if limit is not None and len(loops) >= limit:
                        return True
                elif v not in on_path and len(path) < max_len:
                    path.append(v)
                    on_path.add(v)
                    if dfs(v):
                        return True
                    on_path.discard(path.pop())
            return False

        if dfs(start):
            break
    return loops


def _reachable(graph: ScenarioGraph, start: int) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        for v in graph.successors(todo.pop()):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def is_stable(graph: ScenarioGraph) -> bool:
    # a closed walk through the steady node contains a simple cycle through it
    for s in steady_indices(graph.nodes):
        if any(s in _reachable(graph, v) for v in graph.successors(s)):
            return True
    return False


def on_stabilisation_loop(graph: ScenarioGraph) -> list[bool]:
    """Per node: can it be reached from a steady state and return to one?"""
    steady = steady_indices(graph.nodes)
    from_steady = set().union(*(_reachable(graph, s) for s in steady)) if steady else set()
    out = []
    for i in range(len(graph)):
        back = _reachable(graph, i)
        if i in steady:
            out.append(any(i in _reachable(graph, v) for v in graph.successors(i)))
        else:
            out.append(i in from_steady and any(s in back for s in steady))
    return out


@dataclass(frozen=True)
class PathResult:
    nodes: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.nodes)

    @property
    def arcs(self) -> int:
        return max(len(self.nodes) - 1, 0)


def path_query(graph: ScenarioGraph, source: TrendFilter, target: TrendFilter) -> PathResult:
    """Shortest path from any node matching ``source`` to any matching ``target``.

    Ties go to the lowest canonical indices. An empty result means no path;
    a filter that matches no node raises :class:`FilterMatchesNothing`.
    """
    srcs = match_indices(graph.nodes, source)
    dsts = set(match_indices(graph.nodes, target))
    if not srcs:
        raise FilterMatchesNothing(f"no scenario matches {source}")
    if not dsts:
        raise FilterMatchesNothing(f"no scenario matches {target}")
    parent: dict[int, int | None] = {s: None for s in srcs}
    frontier = list(srcs)
    while frontier:
        hits = sorted(u for u in frontier if u in dsts)
        if hits:
            path = [hits[0]]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return PathResult(tuple(reversed(path)))
        nxt = []
        for u in frontier:
            for v in graph.successors(u):
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    return PathResult()


def _aligned(sets: Sequence[ScenarioSet]) -> list[ScenarioSet]:
    if not sets:
        raise ModelMismatch("need at least one scenario set")
    first = sets[0].variables
    return [s if s.variables == first else s.reorder(first) for s in sets]


def core(sets: Sequence[ScenarioSet]) -> ScenarioSet:
    """Scenarios common to every set (matched by variable name)."""
    sets = _aligned(sets)
    common = set(sets[0].scenarios)
    for s in sets[1:]:
        common &= set(s.scenarios)
    return ScenarioSet(sets[0].variables, tuple(common))


def envelope(sets: Sequence[ScenarioSet]) -> ScenarioSet:
    """Scenarios produced by any of the sets."""
    sets = _aligned(sets)
    return ScenarioSet(sets[0].variables, tuple({s for ss in sets for s in ss.scenarios}))
