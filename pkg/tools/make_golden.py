"""Regenerate tests/data golden scenario files.

Uses its own integer chain-rule arithmetic and plain chronological
backtracking, sharing nothing with the package solver except the model
parser. Run from the repository root: ``python tools/make_golden.py``.
"""

import csv
from pathlib import Path

from trendreason.fixtures import load_fixture

SLOPE_CURV = {"CXI": (1, 1), "LNI": (1, 0), "CVI": (1, -1), "CXD": (-1, 1),
              "LND": (-1, 0), "CVD": (-1, -1), "DP": (1, 0), "IP": (-1, 0)}
CH = {1: "+", 0: "0", -1: "-"}
RANK = {1: 0, 0: 1, -1: 2}


def possible_sum(a, b):
    if a == 0 or a == b:
        return {b}
    if b == 0:
        return {a}
    return {-1, 0, 1}


def ok(kind, x, y):
    s, c = SLOPE_CURV[kind]
    return y[0] == s * x[0] and y[1] in possible_sum(c * x[0] * x[0], s * x[1])


def enumerate_scenarios(model):
    names = list(model.variables)
    rels = [(r.kind.value, r.x, r.y) for r in model.relations]
    domain = [(d, dd) for d in (1, 0, -1) for dd in (1, 0, -1)]
    out = []

    def rec(k, asg):
        if k == len(names):
            out.append([asg[v] for v in names])
            return
        for val in domain:
            asg[names[k]] = val
            if all(ok(kind, asg[x], asg[y]) for kind, x, y in rels if x in asg and y in asg):
                rec(k + 1, asg)
            del asg[names[k]]

    rec(0, {})
    out.sort(key=lambda row: [(RANK[a], RANK[b]) for a, b in row])
    return names, [["+" + CH[a] + CH[b] for a, b in row] for row in out]


def write(path, names, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(names)
        w.writerows(rows)


def main():
    out = Path("tests/data")
    out.mkdir(parents=True, exist_ok=True)
    sets = {}
    for i in (1, 2):
        names, rows = enumerate_scenarios(load_fixture(f"gasi_model{i}"))
        write(out / f"gasi_model{i}_scenarios.csv", names, rows)
        sets[i] = (names, rows)
    names = sets[1][0]
    assert sets[2][0] == names
    a = [tuple(r) for r in sets[1][1]]
    b = [tuple(r) for r in sets[2][1]]
    key = lambda row: ["+0-".index(t[1]) * 3 + "+0-".index(t[2]) for t in row]
    write(out / "gasi_core.csv", names, sorted(set(a) & set(b), key=key))
    write(out / "gasi_envelope.csv", names, sorted(set(a) | set(b), key=key))


if __name__ == "__main__":
    main()
