"""Scenario enumeration.

A scenario assigns one sign triplet (value, first derivative, second
derivative) to every model variable. Values are always positive here, so
each variable has nine candidate triplets. :func:`solve` finds every
consistent assignment with arc-consistency backtracking; :func:`solve_bruteforce`
is the exhaustive oracle used to check it.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import EmptyScenarioSet, ModelMismatch, OracleCapExceeded
from .model import RelationKind, TrendModel, check, relation_shape
from .signs import PLUS, SIGNS, ZERO, QSign, qmul, qsq, qsum

ORACLE_CAP_ENV = "TRENDREASON_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 6


class Triplet(NamedTuple):
    v: QSign
    dx: QSign
    ddx: QSign

    @classmethod
    def parse(cls, text: str) -> "Triplet":
        chars = [c for c in text if not c.isspace()]
        if len(chars) != 3:
            raise ValueError(f"triplet needs three signs: {text!r}")
        return cls(*(QSign.parse(c) for c in chars))

    def __str__(self) -> str:
        return f"{self.v.value}{self.dx.value}{self.ddx.value}"

    @property
    def is_steady(self) -> bool:
        return self.dx is ZERO and self.ddx is ZERO


Scenario = tuple  # tuple[Triplet, ...], one entry per variable in declaration order

# the nine positive-valued triplets in canonical order
POSITIVE_TRIPLETS: tuple[Triplet, ...] = tuple(
    Triplet(PLUS, dx, ddx) for dx in SIGNS for ddx in SIGNS
)
STEADY = Triplet(PLUS, ZERO, ZERO)

_ORDER = {t: k for k, t in enumerate(sorted(Triplet(*c) for c in itertools.product(SIGNS, repeat=3)))}


def scenario_key(scenario: Sequence[Triplet]) -> tuple[int, ...]:
    return tuple(_ORDER[t] for t in scenario)


def scenario_str(scenario: Sequence[Triplet]) -> str:
    return " ".join(str(t) for t in scenario)


def parse_scenario(text: str | Sequence[str]) -> tuple[Triplet, ...]:
    cells = text.split() if isinstance(text, str) else text
    return tuple(Triplet.parse(c) for c in cells)


@dataclass(frozen=True)
class ScenarioSet:
    """Canonically ordered, duplicate-free scenarios over a fixed variable list."""

    variables: tuple[str, ...]
    scenarios: tuple[tuple[Triplet, ...], ...]
    model: TrendModel | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.variables)
        rows = set()
        for s in self.scenarios:
            if len(s) != n:
                raise ModelMismatch(f"scenario of length {len(s)} for {n} variables")
            rows.add(tuple(s))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "scenarios", tuple(sorted(rows, key=scenario_key)))

    @classmethod
    def from_strings(cls, variables, rows: Iterable, model=None) -> "ScenarioSet":
        return cls(tuple(variables), tuple(parse_scenario(r) for r in rows), model)

    def __len__(self) -> int:
        return len(self.scenarios)

    def __iter__(self) -> Iterator[tuple[Triplet, ...]]:
        return iter(self.scenarios)

    def __getitem__(self, i: int) -> tuple[Triplet, ...]:
        return self.scenarios[i]

    def __contains__(self, scenario) -> bool:
        return tuple(scenario) in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {s: i for i, s in enumerate(self.scenarios)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, scenario) -> int:
        return self._index[tuple(scenario)]

    def column(self, name: str) -> tuple[Triplet, ...]:
        i = self.variables.index(name)
        return tuple(s[i] for s in self.scenarios)

    def subset(self, indices: Iterable[int]) -> "ScenarioSet":
        return ScenarioSet(self.variables, tuple(self.scenarios[i] for i in indices), self.model)

    def reorder(self, variables: Sequence[str]) -> "ScenarioSet":
        """Same scenarios with columns permuted into ``variables`` order."""
        if sorted(variables) != sorted(self.variables):
            raise ModelMismatch(
                f"variables {sorted(self.variables)} differ from {sorted(variables)}"
            )
        perm = [self.variables.index(v) for v in variables]
        return ScenarioSet(
            tuple(variables), tuple(tuple(s[i] for i in perm) for s in self.scenarios)
        )

    def rows(self) -> list[list[str]]:
        return [[str(t) for t in s] for s in self.scenarios]


def relation_allows(kind: RelationKind, tx: Triplet, ty: Triplet, dp_weak: bool = False) -> bool:
    """Whether ``ty`` can hold for ``Y`` while ``tx`` holds for ``X`` under ``kind X Y``.

    Chain rule in signs: ``DY = Y'(X) DX`` and
    ``DDY = Y''(X) DX^2 + Y'(X) DDX``. With ``dp_weak`` the proportionalities
    only constrain the first derivative.
    """
    _, slope, curv = relation_shape(kind)
    if ty.dx is not qmul(slope, tx.dx):
        return False
    if dp_weak and kind in (RelationKind.DP, RelationKind.IP):
        return True
    return ty.ddx in qsum(qmul(curv, qsq(tx.dx)), qmul(slope, tx.ddx))


def _allowed_pairs(kind: RelationKind, dp_weak: bool) -> frozenset[tuple[Triplet, Triplet]]:
    return frozenset(
        (a, b)
        for a in POSITIVE_TRIPLETS
        for b in POSITIVE_TRIPLETS
        if relation_allows(kind, a, b, dp_weak)
    )


_PAIR_CACHE: dict[tuple[RelationKind, bool], frozenset] = {}


def allowed_pairs(kind: RelationKind, dp_weak: bool = False) -> frozenset[tuple[Triplet, Triplet]]:
    key = (kind, dp_weak)
    if key not in _PAIR_CACHE:
        _PAIR_CACHE[key] = _allowed_pairs(kind, dp_weak)
    return _PAIR_CACHE[key]


def solve(model: TrendModel, dp_weak: bool = False) -> ScenarioSet:
    """All scenarios of ``model`` in canonical order."""
    check(model)
    n = len(model.variables)
    # incoming[j]: (i, pairs) with pairs of consistent (value_i, value_j)
    incoming: list[list[tuple[int, frozenset]]] = [[] for _ in range(n)]
    for rel in model.relations:
        i, j = model.index(rel.x), model.index(rel.y)
        pairs = allowed_pairs(rel.kind, dp_weak)
        incoming[j].append((i, pairs))
        incoming[i].append((j, frozenset((b, a) for a, b in pairs)))

    # domains are replaced, never mutated, so a shallow copy restores them
    domains = [frozenset(POSITIVE_TRIPLETS) for _ in range(n)]

    def propagate(changed: list[int]) -> bool:
        pending = list(changed)
        while pending:
            j = pending.pop()
            for i, pairs in incoming[j]:
                dead = {a for a in domains[i] if not any((a, b) in pairs for b in domains[j])}
                if dead:
                    domains[i] = domains[i] - dead
                    if not domains[i]:
                        return False
                    pending.append(i)
        return True

    order = sorted(range(n), key=lambda i: (-len(incoming[i]), i))
    found: list[tuple[Triplet, ...]] = []

    def search(depth: int) -> None:
        if depth == n:
            found.append(tuple(next(iter(d)) for d in domains))
            return
        var = order[depth]
        for value in sorted(domains[var], key=_ORDER.__getitem__):
            saved = domains[:]
            domains[var] = frozenset((value,))
            if propagate([var]):
                search(depth + 1)
            domains[:] = saved

    if propagate(list(range(n))):
        search(0)
    return ScenarioSet(model.variables, tuple(found), model)


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def solve_bruteforce(model: TrendModel, cap: int | None = None, dp_weak: bool = False) -> ScenarioSet:
    """Filter all ``9**n`` assignments; refuses models with more than ``cap`` variables."""
    check(model)
    cap = oracle_cap() if cap is None else cap
    n = len(model.variables)
    if n > cap:
        raise OracleCapExceeded(f"{n} variables exceeds oracle cap {cap}")
    ends = [(r.kind, model.index(r.x), model.index(r.y)) for r in model.relations]
    found = [
        combo
        for combo in itertools.product(POSITIVE_TRIPLETS, repeat=n)
        if all(relation_allows(k, combo[i], combo[j], dp_weak) for k, i, j in ends)
    ]
    return ScenarioSet(model.variables, tuple(found), model)


def variable_groups(scenarios: ScenarioSet) -> list[tuple[str, ...]]:
    """Partition variables whose triplet columns agree in every scenario.

    Blocks follow the declaration order of their first member.
    """
    if not len(scenarios):
        raise EmptyScenarioSet("cannot group variables of an empty scenario set")
    blocks: dict[tuple[Triplet, ...], list[str]] = {}
    for name in scenarios.variables:
        blocks.setdefault(scenarios.column(name), []).append(name)
    return [tuple(b) for b in blocks.values()]
