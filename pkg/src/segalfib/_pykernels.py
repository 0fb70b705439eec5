"""Pure-Python kernels; the reference semantics for ``_kernels.pyx``.

Both backends take flat integer tables (see :mod:`segalfib.kernels` for how
they are built) and must return identical results in identical order.
"""

from __future__ import annotations

import numpy as np


def enumerate_maps(
    y_level,
    y_faces,
    y_deg_src,
    y_deg_j,
    y_base,
    y_fixed,
    x_level_start,
    x_faces,
    x_degs,
    x_base,
    d0_start,
    d0_count,
    d0_order,
    limit,
    store,
):
    """Depth-first enumeration of simplicial maps ``Y -> X``.

    Domain simplices are visited in global index order, which is level
    ascending, so every face and degeneracy source is assigned first.
    Returns ``(count, solutions)``; ``solutions`` is an ``(count, ny)``
    array when ``store`` is true, else ``None``.
    """
    y_level = [int(v) for v in y_level]
    y_faces = [list(map(int, row)) for row in y_faces]
    y_deg_src = [int(v) for v in y_deg_src]
    y_deg_j = [int(v) for v in y_deg_j]
    y_base = [int(v) for v in y_base]
    y_fixed = [int(v) for v in y_fixed]
    x_faces = [list(map(int, row)) for row in x_faces]
    x_degs = [list(map(int, row)) for row in x_degs]
    x_base = [int(v) for v in x_base]
    d0_start = [int(v) for v in d0_start]
    d0_count = [int(v) for v in d0_count]
    d0_order = [int(v) for v in d0_order]
    lvl0 = range(int(x_level_start[0]), int(x_level_start[1]))

    ny = len(y_level)
    f = [-1] * ny
    found = []
    count = 0
    if ny == 0:
        return 1, (np.zeros((1, 0), dtype=np.int64) if store else None)

    def candidates(p):
        src = y_deg_src[p]
        if src >= 0:
            v = x_degs[f[src]][y_deg_j[p]]
            return [v] if v >= 0 else []
        if y_level[p] == 0:
            return lvl0
        g = f[y_faces[p][0]]
        s = d0_start[g]
        return d0_order[s : s + d0_count[g]]

    def ok(p, x):
        if y_fixed[p] >= 0 and x != y_fixed[p]:
            return False
        if y_base[p] >= 0 and x_base[x] != y_base[p]:
            return False
        if y_deg_src[p] >= 0:
            return True
        xf = x_faces[x]
        yf = y_faces[p]
        for i in range(1, y_level[p] + 1):
            if xf[i] != f[yf[i]]:
                return False
        return True

    stack = [iter(candidates(0))]
    p = 0
    while stack:
        it = stack[-1]
        advanced = False
        for x in it:
            if ok(p, x):
                f[p] = x
                advanced = True
                break
        if not advanced:
            stack.pop()
            p -= 1
            continue
        if p == ny - 1:
            count += 1
            if store:
                found.append(list(f))
            if 0 <= limit <= count:
                break
            continue
        p += 1
        stack.append(iter(candidates(p)))

    sols = None
    if store:
        sols = np.array(found, dtype=np.int64).reshape(len(found), ny)
    return count, sols


def components(n, src, tgt):
    """Connected components of a graph on ``0..n-1``; each vertex gets the
    smallest vertex index in its component."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in zip(src, tgt):
        ra, rb = find(int(a)), find(int(b))
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return np.array([find(a) for a in range(n)], dtype=np.int64)
