#!/usr/bin/env python3
"""Independent oracle values for the C++ tests.

Everything here is computed from first principles with sympy's exact domain
matrices: osp dimensions from the nullspace of the defining equation on a
generic matrix, centers from the bracket table of that nullspace basis, and
root data from the full root systems with a lexicographic positivity rule.

Usage: python3 generate_fixtures.py > fixtures.json
"""

import itertools
import json
import sys

from sympy import Matrix, QQ, zeros
from sympy.polys.matrices import DomainMatrix


def gram(flavor, m, n):
    """Gram matrix and the number of even rows."""
    if flavor == "primed":
        p = m
        g = zeros(p + 2 * n, p + 2 * n)
        for i in range(p):
            g[i, i] = 1
    else:
        p = 2 * m + (1 if flavor == "odd" else 0)
        g = zeros(p + 2 * n, p + 2 * n)
        for i in range(m):
            g[i, m + i] = 1
            g[m + i, i] = 1
        if flavor == "odd":
            g[2 * m, 2 * m] = 1
    for j in range(n):
        g[p + j, p + n + j] = 1
        g[p + n + j, p + j] = -1
    return g, p


def is_odd_slot(r, c, p):
    return (r >= p) != (c >= p)


def supertranspose(x, p):
    size = x.shape[0]
    out = zeros(size, size)
    for r in range(size):
        for c in range(size):
            v = x[c, r]
            out[r, c] = -v if (r >= p and c < p) else v
    return out


def osp_basis(flavor, m, n):
    """Nullspace basis of X^ST G + G X = 0, split by parity."""
    g, p = gram(flavor, m, n)
    size = g.shape[0]
    out = {}
    for parity in (0, 1):
        slots = [(r, c) for r in range(size) for c in range(size) if is_odd_slot(r, c, p) == bool(parity)]
        columns = []
        for (r, c) in slots:
            e = zeros(size, size)
            e[r, c] = 1
            res = supertranspose(e, p) * g + g * e
            columns.append(list(res))
        if not columns:
            out[parity] = []
            continue
        a = DomainMatrix([[QQ(int(columns[k][i])) for k in range(len(slots))] for i in range(size * size)],
                         (size * size, len(slots)), QQ)
        kernel = a.nullspace().to_Matrix()
        mats = []
        for row in range(kernel.shape[0]):
            x = zeros(size, size)
            for k, (r, c) in enumerate(slots):
                x[r, c] = kernel[row, k]
            mats.append(x)
        out[parity] = mats
    return out, p


def center_dimension(m, n):
    basis, p = osp_basis("odd", m, n)
    elems = [(x, 0) for x in basis[0]] + [(x, 1) for x in basis[1]]
    total = 0
    for parity in (0, 1):
        cands = [x for (x, q) in elems if q == parity]
        if not cands:
            continue
        rows = []
        for (y, q) in elems:
            brs = []
            for x in cands:
                if parity == 1 and q == 1:
                    brs.append(x * y + y * x)
                else:
                    brs.append(x * y - y * x)
            for i in range(len(brs[0])):
                rows.append([QQ(int(b[i].p), int(b[i].q)) for b in brs])
        a = DomainMatrix(rows, (len(rows), len(cands)), QQ)
        total += len(cands) - a.rank()
    return total


def roots(s, n):
    """All roots of so(2s+1) + sp(2n) as coordinate tuples."""
    dim = s + n
    out = set()

    def unit(i, sign):
        v = [0] * dim
        v[i] = sign
        return v

    for i in range(s):
        for sign in (1, -1):
            out.add(tuple(unit(i, sign)))
        for j in range(i + 1, s):
            for a in (1, -1):
                for b in (1, -1):
                    v = [0] * dim
                    v[i], v[j] = a, b
                    out.add(tuple(v))
    for pp in range(n):
        for sign in (1, -1):
            v = [0] * dim
            v[s + pp] = 2 * sign
            out.add(tuple(v))
        for q in range(pp + 1, n):
            for a in (1, -1):
                for b in (1, -1):
                    v = [0] * dim
                    v[s + pp], v[s + q] = a, b
                    out.add(tuple(v))
    return out


def positive(v):
    for x in v:
        if x:
            return x > 0
    return False


def dominant(w, pos):
    return all(sum(a * b for a, b in zip(w, r)) >= 0 for r in pos)


def psi_weights(k1, l1):
    """Bullet list of highest weights, coordinates (mu_1..mu_s, lambda_1..lambda_n)."""
    s, n = k1 - 1, l1
    dim = s + n

    def w(*terms):
        v = [0] * dim
        for kind, idx, c in terms:
            v[(idx - 1) if kind == "mu" else (s + idx - 1)] += c
        return v

    if k1 == 1:
        return [] if l1 == 1 else [w(("la", 1, 1), ("la", l1, -1))]
    out = []
    if k1 > 2:
        out.append(w(("mu", 1, 1), ("mu", k1 - 1, -1)))
    out.append(w(("mu", 1, 1), ("la", l1, -1)))
    out.append(w(("la", 1, 1), ("mu", k1 - 1, -1)))
    if l1 > 1:
        out.append(w(("la", 1, 1), ("la", l1, -1)))
    out.append([0] * dim)
    return out


def main():
    fixtures = {"osp_dimensions": [], "primed_dimensions": [], "centers": [], "positive_root_counts": [],
                "dominant_samples": [], "psi_dominant": []}
    for m in range(4):
        for n in range(4):
            if m + n == 0:
                continue
            b, _ = osp_basis("odd", m, n)
            fixtures["osp_dimensions"].append({"m": m, "n": n, "even": len(b[0]), "odd": len(b[1])})
            print(f"osp({2 * m + 1}|{2 * n})", file=sys.stderr)
    for t in range(1, 7):
        for n in range(1, 4):
            b, _ = osp_basis("primed", t, n)
            fixtures["primed_dimensions"].append({"t": t, "n": n, "even": len(b[0]), "odd": len(b[1])})
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        fixtures["centers"].append({"m": m, "n": n, "dimension": center_dimension(m, n)})
        print(f"center ({m},{n})", file=sys.stderr)
    for s in range(5):
        for n in range(5):
            pos = [r for r in roots(s, n) if positive(r)]
            so = sum(1 for r in pos if any(r[:s]))
            fixtures["positive_root_counts"].append({"s": s, "n": n, "so": so, "sp": len(pos) - so})
    for s in range(3):
        for n in range(3):
            pos = [r for r in roots(s, n) if positive(r)]
            dom = [list(w) for w in itertools.product(range(-2, 3), repeat=s + n) if dominant(w, pos)]
            fixtures["dominant_samples"].append({"s": s, "n": n, "range": [-2, 2], "dominant": dom})
    for k1 in range(1, 7):
        for l1 in range(1, 5):
            pos = [r for r in roots(k1 - 1, l1) if positive(r)]
            weights = psi_weights(k1, l1)
            fixtures["psi_dominant"].append({"k1": k1, "l1": l1, "weights": weights,
                                             "dominant": [w for w in weights if dominant(w, pos)]})
    json.dump(fixtures, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
