"""Trend models generated from correlation matrices, with weakest-link repair."""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyScenarioSet, MatrixError, RemovalExhausted
from .model import Relation, RelationKind, TrendModel, check, serialize_model
from .signs import ZERO
from .solver import ScenarioSet, solve

SYMMETRY_TOL = 1e-9
RANGE_TOL = 1e-12


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "entries", tuple(tuple(float(x) for x in row) for row in self.entries))
        problems = matrix_problems(self)
        if problems:
            raise MatrixError("; ".join(problems))

    def __len__(self) -> int:
        return len(self.labels)

    def pairs(self) -> list[tuple[int, int, float]]:
        """Upper-triangle coefficients, row-major."""
        n = len(self)
        return [(i, j, self.entries[i][j]) for i in range(n) for j in range(i + 1, n)]


def matrix_problems(m: CorrelationMatrix) -> list[str]:
    out = []
    n = len(m.labels)
    if n == 0:
        out.append("empty matrix")
    if len(set(m.labels)) != n:
        out.append("duplicate labels")
    for lab in m.labels:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", lab):
            out.append(f"invalid label {lab!r}")
    if len(m.entries) != n or any(len(row) != n for row in m.entries):
        out.append(f"matrix is not {n}x{n}")
        return out
    for i in range(n):
        for j in range(n):
            c = m.entries[i][j]
            if not math.isfinite(c) or abs(c) > 1 + RANGE_TOL:
                out.append(f"entry ({m.labels[i]},{m.labels[j]}) = {c} outside [-1, 1]")
            if i == j and abs(c - 1.0) > SYMMETRY_TOL:
                out.append(f"diagonal entry {m.labels[i]} = {c}, expected 1")
            if j > i and abs(c - m.entries[j][i]) > SYMMETRY_TOL:
                out.append(f"asymmetric at ({m.labels[i]},{m.labels[j]})")
    return out


def read_correlation_csv(text: str) -> CorrelationMatrix:
    """Header row of labels (first cell ignored), then one labelled row per variable."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise MatrixError("empty CSV")
    header = [c.strip() for c in rows[0][1:]]
    labels, entries = [], []
    for r in rows[1:]:
        labels.append(r[0].strip())
        try:
            entries.append([float(c) for c in r[1:]])
        except ValueError as exc:
            raise MatrixError(f"row {r[0]!r}: {exc}") from None
    if labels != header:
        raise MatrixError(f"row labels {labels} do not match header {header}")
    return CorrelationMatrix(tuple(labels), tuple(tuple(e) for e in entries))


def write_correlation_csv(m: CorrelationMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(m.labels))
    for lab, row in zip(m.labels, m.entries):
        w.writerow([lab] + [repr(x) for x in row])
    return buf.getvalue()


def _relation(m: CorrelationMatrix, i: int, j: int, c: float) -> Relation:
    kind = RelationKind.DP if c > 0 else RelationKind.IP
    return Relation(kind, m.labels[i], m.labels[j])


def matrix_to_model(m: CorrelationMatrix, threshold: float = 0.0, name: str = "") -> TrendModel:
    """DP for each coefficient above ``threshold``, IP for each below ``-threshold``."""
    if not 0 <= threshold < 1:
        raise MatrixError(f"threshold {threshold} not in [0, 1)")
    rels = [_relation(m, i, j, c) for i, j, c in m.pairs() if abs(c) > threshold]
    return check(TrendModel(m.labels, tuple(rels), name))


def frozen_variables(scenarios: ScenarioSet) -> list[str]:
    """Variables whose first derivative is zero in every scenario."""
    return [v for v in scenarios.variables if all(t.dx is ZERO for t in scenarios.column(v))]


def is_degenerate(scenarios: ScenarioSet, partial: bool = False) -> bool:
    """True when no scenario lets any variable move (every first derivative zero).

    With ``partial`` a single frozen variable is enough.
    """
    if not len(scenarios):
        raise EmptyScenarioSet("degeneracy of an empty scenario set is undefined")
    frozen = frozen_variables(scenarios)
    return bool(frozen) if partial else len(frozen) == len(scenarios.variables)


@dataclass(frozen=True)
class Removal:
    i: int  # 0-based row of the removed coefficient
    j: int
    value: float


@dataclass(frozen=True)
class RemovalTrace:
    labels: tuple[str, ...]
    removals: tuple[Removal, ...]
    model: TrendModel | None  # None when the heuristic ran out of coefficients

    def to_json(self) -> dict:
        return {
            "removals": [
                {"i": r.i + 1, "j": r.j + 1, "x": self.labels[r.i], "y": self.labels[r.j],
                 "value": r.value}
                for r in self.removals
            ],
            "finalModel": serialize_model(self.model) if self.model is not None else None,
        }


def removal_heuristic(m: CorrelationMatrix, threshold: float = 0.0, name: str = "",
                      dp_weak: bool = False, partial: bool = False) -> RemovalTrace:
    """Drop the weakest coefficient until the generated model can move.

    Ties on ``|c|`` go to the lexicographically smallest ``(i, j)``. ``partial``
    keeps removing while any single variable is still frozen.
    """
    if not 0 <= threshold < 1:
        raise MatrixError(f"threshold {threshold} not in [0, 1)")
    active = [(i, j, c) for i, j, c in m.pairs() if abs(c) > threshold]
    removed: list[Removal] = []
    while True:
        model = check(TrendModel(m.labels, tuple(_relation(m, i, j, c) for i, j, c in active), name))
        if not is_degenerate(solve(model, dp_weak=dp_weak), partial):
            return RemovalTrace(m.labels, tuple(removed), model)
        if not active:
            raise RemovalExhausted(RemovalTrace(m.labels, tuple(removed), None))
        weakest = min(active, key=lambda p: (abs(p[2]), p[0], p[1]))
        active.remove(weakest)
        removed.append(Removal(*weakest))


def permuted(m: CorrelationMatrix, order: Sequence[int]) -> CorrelationMatrix:
    return CorrelationMatrix(
        tuple(m.labels[k] for k in order),
        tuple(tuple(m.entries[a][b] for b in order) for a in order),
    )
