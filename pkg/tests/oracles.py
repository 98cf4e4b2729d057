"""Independent oracles used by the tests.

These deliberately avoid the library's computation paths: Betti numbers
come from the Taylor complex (Tor of the generators' lcm strands), ranks
from dense Fraction/mod-p elimination, ideal equality from brute-force
membership over all squarefree monomials.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def dense_rank(matrix, p=None):
    if not matrix or not matrix[0]:
        return 0
    if p is None:
        m = [[Fraction(x) for x in row] for row in matrix]
    else:
        m = [[x % p for x in row] for row in matrix]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        if p is None:
            for i in range(r + 1, nrows):
                f = m[i][c] / m[r][c]
                if f:
                    for j in range(c, ncols):
                        m[i][j] -= f * m[r][j]
        else:
            inv = pow(m[r][c], -1, p)
            for i in range(r + 1, nrows):
                f = m[i][c] * inv % p
                if f:
                    for j in range(c, ncols):
                        m[i][j] = (m[i][j] - f * m[r][j]) % p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def taylor_betti(ideal, p=None):
    """Graded Betti numbers of a squarefree monomial ideal from the Taylor
    complex: beta_{i,j}(I) = dim H_i of the lcm-degree-j strands, where the
    chain group in homological degree i is spanned by the (i+1)-subsets of
    the generators and the differential keeps only the lcm-preserving
    deletions."""
    gens = sorted(ideal.gens, key=sorted)
    r = len(gens)
    if r == 0:
        return {}
    lcm = {}
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            support = frozenset().union(*(gens[k] for k in subset))
            lcm[subset] = support

    strands = {}
    for subset, support in lcm.items():
        strands.setdefault(support, {}).setdefault(len(subset) - 1, []).append(subset)

    betti = {}
    for support, by_degree in strands.items():
        j = len(support)
        index = {
            deg: {s: k for k, s in enumerate(sorted(subsets))}
            for deg, subsets in by_degree.items()
        }
        ranks = {}
        for deg, subsets in sorted(by_degree.items()):
            if deg == 0:
                ranks[deg] = 0
                continue
            prev = index.get(deg - 1, {})
            rows = []
            for s in sorted(subsets):
                row = [0] * len(prev)
                for pos in range(len(s)):
                    smaller = s[:pos] + s[pos + 1:]
                    if lcm[smaller] == support and smaller in prev:
                        row[prev[smaller]] = (-1) ** pos
                rows.append(row)
            # columns of the boundary map are the deg-subsets
            matrix = [list(col) for col in zip(*rows)] if rows and prev else []
            ranks[deg] = dense_rank(matrix, p)
        for deg, subsets in by_degree.items():
            dim = len(subsets) - ranks.get(deg, 0) - ranks.get(deg + 1, 0)
            if dim:
                betti[(deg, j)] = betti.get((deg, j), 0) + dim
    return betti


def ideal_equals_bruteforce(a, b) -> bool:
    universe = sorted(a.ambient | b.ambient)
    assert len(universe) <= 14, "brute-force oracle limited to 14 variables"
    for mask in range(1 << len(universe)):
        m = {universe[k] for k in range(len(universe)) if mask >> k & 1}
        if a.contains(m) != b.contains(m):
            return False
    return True


def simple_homology(faces, p=None):
    """Reduced homology of a small complex given as an iterable of faces
    (iterables of vertices), via dense boundary matrices."""
    face_sets = {frozenset(f) for f in faces}
    closure = set()
    for f in face_sets:
        for size in range(len(f) + 1):
            closure.update(map(frozenset, combinations(sorted(f), size)))
    if not closure:
        return {}
    by_dim = {}
    for f in closure:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)
    ranks = {k: 0 for k in range(top + 2)}
    for k in range(0, top + 1):
        prev = {f: i for i, f in enumerate(by_dim[k - 1])}
        matrix = [[0] * len(by_dim[k]) for _ in prev] if prev else []
        for col, f in enumerate(by_dim[k]):
            for pos in range(len(f)):
                smaller = f[:pos] + f[pos + 1:]
                matrix[prev[smaller]][col] = (-1) ** pos
        ranks[k] = dense_rank(matrix, p)
    dims = {}
    counts = {k: len(by_dim.get(k, ())) for k in range(-1, top + 1)}
    h = counts[-1] - ranks[0]
    if h:
        dims[-1] = h
    for k in range(0, top + 1):
        h = counts[k] - ranks[k] - ranks[k + 1]
        if h:
            dims[k] = h
    return dims
