"""Text renderings of scenario sets, graphs and paths."""

from __future__ import annotations

import csv
import io
import json

from .solver import ScenarioSet, variable_groups
from .transitions import ScenarioGraph


def _is_steady(scenario) -> bool:
    return all(t.is_steady for t in scenario)


def table(variables, numbered_rows) -> str:
    """Fixed-width table, one column per variable; steady rows are marked."""
    numbered_rows = list(numbered_rows)
    width = max([3] + [len(v) for v in variables])
    nw = max([3] + [len(str(k)) for k, _ in numbered_rows])
    lines = ["No.".rjust(nw) + "  " + "  ".join(v.ljust(width) for v in variables).rstrip()]
    for k, s in numbered_rows:
        row = (str(k).rjust(nw) + "  " + "  ".join(str(t).ljust(width) for t in s)).rstrip()
        if _is_steady(s):
            row += "  (steady)"
        lines.append(row)
    return "\n".join(lines) + "\n"


def scenario_table(scenarios: ScenarioSet, numbers=None) -> str:
    """Canonical-order table with 1-based scenario numbers unless ``numbers`` given."""
    if numbers is None:
        numbers = range(1, len(scenarios) + 1)
    return table(scenarios.variables, zip(numbers, scenarios))


def path_table(scenarios: ScenarioSet, nodes) -> str:
    """Walk-order table for a path of 0-based node indices."""
    head = " -> ".join(str(i + 1) for i in nodes) + "\n"
    return head + table(scenarios.variables, [(i + 1, scenarios[i]) for i in nodes])


def scenario_csv(scenarios: ScenarioSet) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(scenarios.variables)
    w.writerows(scenarios.rows())
    return buf.getvalue()


def read_scenario_csv(text: str) -> ScenarioSet:
    rows = list(csv.reader(io.StringIO(text)))
    return ScenarioSet.from_strings(rows[0], rows[1:])


def scenario_document(scenarios: ScenarioSet, model_name: str | None = None) -> dict:
    if model_name is None:
        model_name = scenarios.model.name if scenarios.model is not None else ""
    return {
        "model": model_name,
        "variables": list(scenarios.variables),
        "scenarios": scenarios.rows(),
    }


def graph_document(graph: ScenarioGraph, model_name: str | None = None) -> dict:
    nodes = graph.nodes
    if model_name is None:
        model_name = nodes.model.name if nodes.model is not None else ""
    return {
        "model": model_name,
        "variables": list(nodes.variables),
        "nodes": [
            {"id": k, "label": f"S{k}", "scenario": row, "steady": _is_steady(s)}
            for k, (row, s) in enumerate(zip(nodes.rows(), nodes), start=1)
        ],
        "arcs": [[u + 1, v + 1] for u, v in graph.arcs],
    }


def graph_dot(graph: ScenarioGraph, name: str = "H") -> str:
    """Graphviz digraph; node labels list each variable group's shared triplet."""
    nodes = graph.nodes
    groups = variable_groups(nodes)
    cols = [[nodes.variables.index(v) for v in g] for g in groups]
    lines = [f"digraph {json.dumps(name)} {{", "  node [shape=box];"]
    for k, s in enumerate(nodes, start=1):
        parts = [f"S{k}"] + [f"{','.join(g)}: {s[c[0]]}" for g, c in zip(groups, cols)]
        label = "\\n".join(parts)
        extra = ", peripheries=2" if _is_steady(s) else ""
        lines.append(f'  S{k} [label="{label}"{extra}];')
    for u, v in graph.arcs:
        lines.append(f"  S{u + 1} -> S{v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
