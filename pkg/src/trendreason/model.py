"""Trend models: variables, pairwise relations, validation and the ``.qtm`` format.

A model file looks like::

    # First GASI trend model
    VARS GEN AGE SMA EXP PRO PRI HRT UNI MED AGI
    CVI GEN AGI
    DP GEN EXP

The first variable of a relation line is the independent one.
"""

from __future__ import annotations

import enum
import re
from pathlib import Path
from dataclasses import dataclass, field

from .errors import ModelError, ParseError
from .signs import MINUS, PLUS, ZERO, QSign

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RelationKind(enum.Enum):
    DP = "DP"
    IP = "IP"
    CXI = "CXI"
    LNI = "LNI"
    CVI = "CVI"
    CXD = "CXD"
    LND = "LND"
    CVD = "CVD"

    def __str__(self) -> str:
        return self.value


_SHAPES: dict[RelationKind, tuple[QSign, QSign, QSign]] = {
    RelationKind.CXI: (PLUS, PLUS, PLUS),
    RelationKind.LNI: (PLUS, PLUS, ZERO),
    RelationKind.CVI: (PLUS, PLUS, MINUS),
    RelationKind.CXD: (PLUS, MINUS, PLUS),
    RelationKind.LND: (PLUS, MINUS, ZERO),
    RelationKind.CVD: (PLUS, MINUS, MINUS),
    # proportionalities behave as the linear shapes
    RelationKind.DP: (PLUS, PLUS, ZERO),
    RelationKind.IP: (PLUS, MINUS, ZERO),
}


def relation_shape(kind: RelationKind) -> tuple[QSign, QSign, QSign]:
    """Sign triplet (value, slope, curvature) of ``Y(X)`` for a relation kind."""
    return _SHAPES[kind]


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    x: str
    y: str

    def __str__(self) -> str:
        return f"{self.kind.value} {self.x} {self.y}"


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class TrendModel:
    variables: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def __len__(self) -> int:
        return len(self.variables)

    def with_relations(self, relations) -> "TrendModel":
        return TrendModel(self.variables, tuple(relations), self.name)


def validate(model: TrendModel) -> list[Violation]:
    """Every violated invariant of ``model``; an empty list means the model is valid."""
    out: list[Violation] = []
    if not model.variables:
        out.append(Violation("no-variables", "model declares no variables"))
    seen: set[str] = set()
    for name in model.variables:
        if not isinstance(name, str) or not _IDENT.match(name):
            out.append(Violation("bad-name", f"invalid variable name {name!r}"))
        if name in seen:
            out.append(Violation("duplicate-name", f"variable {name} declared twice"))
        seen.add(name)
    rels: set[Relation] = set()
    for rel in model.relations:
        for end in (rel.x, rel.y):
            if end not in seen:
                out.append(Violation("unknown-variable", f"{rel}: {end} is not declared"))
        if rel.x == rel.y:
            out.append(Violation("self-relation", f"{rel}: relates {rel.x} to itself"))
        if rel in rels:
            out.append(Violation("duplicate-relation", f"{rel} appears twice"))
        rels.add(rel)
    return out


def check(model: TrendModel) -> TrendModel:
    violations = validate(model)
    if violations:
        raise ModelError(violations)
    return model


def parse_model(text: str, name: str = "") -> TrendModel:
    """Parse ``.qtm`` text into a validated model.

    Raises :class:`ParseError` for malformed lines and :class:`ModelError`
    when the model parses but fails validation.
    """
    variables: list[str] | None = None
    relations: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        head, col = tokens[0]
        if head == "VARS":
            if variables is not None:
                raise ParseError("second VARS line", lineno, col)
            if relations:
                raise ParseError("VARS must precede relation lines", lineno, col)
            if len(tokens) < 2:
                raise ParseError("VARS lists no variables", lineno, col + len(head))
            for tok, tcol in tokens[1:]:
                if not _IDENT.match(tok):
                    raise ParseError(f"invalid identifier {tok!r}", lineno, tcol)
            variables = [tok for tok, _ in tokens[1:]]
            continue
        try:
            kind = RelationKind(head)
        except ValueError:
            raise ParseError(f"unknown relation keyword {head!r}", lineno, col) from None
        if variables is None:
            raise ParseError("relation before VARS line", lineno, col)
        if len(tokens) != 3:
            where = tokens[3][1] if len(tokens) > 3 else len(line) + 1
            raise ParseError(f"{head} takes exactly two variables", lineno, where)
        for tok, tcol in tokens[1:]:
            if not _IDENT.match(tok):
                raise ParseError(f"invalid identifier {tok!r}", lineno, tcol)
        relations.append(Relation(kind, tokens[1][0], tokens[2][0]))
    if variables is None:
        raise ParseError("missing VARS line", max(1, len(text.splitlines())), 1)
    return check(TrendModel(tuple(variables), tuple(relations), name))


def serialize_model(model: TrendModel) -> str:
    lines = []
    if model.name:
        lines.append(f"# {model.name}")
    lines.append("VARS " + " ".join(model.variables))
    lines.extend(str(rel) for rel in model.relations)
    return "\n".join(lines) + "\n"


def load_model(path) -> TrendModel:
    path = Path(path)
    return parse_model(path.read_text(encoding="utf-8"), name=path.stem)
