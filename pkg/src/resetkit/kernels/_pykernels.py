"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module."""

from __future__ import annotations

from collections import deque

import numpy as np

from ..errors import BudgetExceeded

BACKEND = "python"


def _chunk_tables(table: np.ndarray):
    """Per letter and byte position, map a byte of a subset mask to its image mask."""
    n, m = table.shape
    nbytes = (n + 7) // 8
    out = []
    for c in range(m):
        per_letter = []
        for b in range(nbytes):
            targets = [int(table[q, c]) for q in range(8 * b, min(8 * b + 8, n))]
            row = [0] * 256
            for byte in range(1, 256):
                low = byte & -byte
                bit = low.bit_length() - 1
                row[byte] = row[byte ^ low]
                if bit < len(targets):
                    row[byte] |= 1 << targets[bit]
            per_letter.append(row)
        out.append(per_letter)
    return out, nbytes


def explore_subsets(table, budget=1 << 22, stop_at_singleton=True, max_depth=-1):
    """Breadth-first search of the subset automaton from the full state set.

    Returns ``(succ, parent, letter, depth, size, found)`` as numpy arrays plus the
    index of the first singleton discovered (``-1`` if none, or if not stopping).
    ``succ[i, c]`` is ``-1`` for subsets that were not expanded.
    """
    table = np.asarray(table, dtype=np.int32)
    n, m = table.shape
    chunks, nbytes = _chunk_tables(table)
    full = (1 << n) - 1
    index = {full: 0}
    masks = [full]
    parent = [-1]
    letter = [-1]
    depth = [0]
    succ: list[list[int]] = []
    found = 0 if n == 1 else -1
    if found == 0 and stop_at_singleton:
        return _pack(succ, parent, letter, depth, masks, m, found)
    i = 0
    while i < len(masks):
        d = depth[i]
        if max_depth >= 0 and d >= max_depth:
            break
        raw = masks[i].to_bytes(nbytes, "little")
        row = []
        for c in range(m):
            per_letter = chunks[c]
            img = 0
            for b, byte in enumerate(raw):
                if byte:
                    img |= per_letter[b][byte]
            j = index.get(img)
            if j is None:
                j = len(masks)
                if j >= budget:
                    raise BudgetExceeded(f"state budget exceeded: more than {budget} reachable subsets")
                index[img] = j
                masks.append(img)
                parent.append(i)
                letter.append(c)
                depth.append(d + 1)
                if found < 0 and img & (img - 1) == 0:
                    found = j
                    if stop_at_singleton:
                        row.append(j)
                        succ.append(row)
                        return _pack(succ, parent, letter, depth, masks, m, found)
            row.append(j)
        succ.append(row)
        i += 1
    return _pack(succ, parent, letter, depth, masks, m, found)


def _pack(succ, parent, letter, depth, masks, m, found):
    total = len(masks)
    s = np.full((total, m), -1, dtype=np.int64)
    for i, row in enumerate(succ):
        s[i, : len(row)] = row
    size = np.fromiter((x.bit_count() for x in masks), dtype=np.int32, count=total)
    return (
        s,
        np.asarray(parent, dtype=np.int64),
        np.asarray(letter, dtype=np.int32),
        np.asarray(depth, dtype=np.int32),
        size,
        found,
    )


def pair_distances(table):
    """Backward BFS over unordered state pairs starting from the diagonal.

    Returns ``(dist, next_letter)``, both ``n x n`` ``int32``: ``dist`` is -1 for
    pairs that can never be merged and 0 on the diagonal.
    """
    table = np.asarray(table, dtype=np.int32)
    n, m = table.shape
    rev = [[[] for _ in range(n)] for _ in range(m)]
    for q in range(n):
        for c in range(m):
            rev[c][int(table[q, c])].append(q)
    dist = [[-1] * n for _ in range(n)]
    nxt = [[-1] * n for _ in range(n)]
    queue = deque()
    for q in range(n):
        dist[q][q] = 0
        queue.append((q, q))
    while queue:
        p, q = queue.popleft()
        d = dist[p][q] + 1
        for c in range(m):
            rp, rq = rev[c][p], rev[c][q]
            if not rp or not rq:
                continue
            for p2 in rp:
                row = dist[p2]
                for q2 in rq:
                    if row[q2] < 0:
                        row[q2] = d
                        dist[q2][p2] = d
                        nxt[p2][q2] = c
                        nxt[q2][p2] = c
                        queue.append((p2, q2))
    return np.asarray(dist, dtype=np.int32), np.asarray(nxt, dtype=np.int32)


def dpll_solve(nvars, clauses, max_conflicts=-1):
    """Complete DPLL: unit propagation with two watched literals, chronological
    backtracking, branching on the lowest unassigned variable with ``True`` first.

    Returns a list ``model`` with ``model[v]`` the value of variable ``v``
    (index 0 unused), ``None`` when unsatisfiable, or raises ``BudgetExceeded``
    after ``max_conflicts`` conflicts (``-1`` = unlimited).
    """
    val = [0] * (nvars + 1)
    watches = [[] for _ in range(2 * nvars + 2)]
    store = []
    units = []

    def widx(lit):
        return 2 * lit if lit > 0 else -2 * lit + 1

    for clause in clauses:
        lits = list(dict.fromkeys(clause))
        if any(-x in lits for x in lits):
            continue
        if not lits:
            return None
        if len(lits) == 1:
            units.append(lits[0])
            continue
        ci = len(store)
        store.append(lits)
        watches[widx(lits[0])].append(ci)
        watches[widx(lits[1])].append(ci)

    trail = []
    for u in units:
        v = abs(u)
        want = 1 if u > 0 else -1
        if val[v] == -want:
            return None
        if val[v] == 0:
            val[v] = want
            trail.append(u)

    def propagate(qhead):
        while qhead < len(trail):
            false_lit = -trail[qhead]
            qhead += 1
            ws = watches[widx(false_lit)]
            kept = []
            k = 0
            nws = len(ws)
            while k < nws:
                ci = ws[k]
                k += 1
                c = store[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[first] if first > 0 else -val[-first]
                if fv == 1:
                    kept.append(ci)
                    continue
                for j in range(2, len(c)):
                    lit = c[j]
                    lv = val[lit] if lit > 0 else -val[-lit]
                    if lv != -1:
                        c[1], c[j] = lit, false_lit
                        watches[widx(lit)].append(ci)
                        break
                else:
                    kept.append(ci)
                    if fv == -1:
                        kept.extend(ws[k:])
                        watches[widx(false_lit)] = kept
                        return -1
                    val[abs(first)] = 1 if first > 0 else -1
                    trail.append(first)
            watches[widx(false_lit)] = kept
        return qhead

    levels = []  # (trail length before decision, variable, flipped)
    qhead = 0
    next_var = 1
    conflicts = 0
    while True:
        qhead = propagate(qhead)
        if qhead < 0:
            conflicts += 1
            if 0 <= max_conflicts < conflicts:
                raise BudgetExceeded(f"DPLL conflict budget of {max_conflicts} exhausted")
            while levels:
                start, var, flipped = levels.pop()
                for lit in trail[start:]:
                    val[abs(lit)] = 0
                del trail[start:]
                if not flipped:
                    levels.append((start, var, True))
                    val[var] = -1
                    trail.append(-var)
                    next_var = var
                    qhead = start
                    break
            else:
                return None
            continue
        while next_var <= nvars and val[next_var] != 0:
            next_var += 1
        if next_var > nvars:
            return [False] + [x > 0 for x in val[1:]]
        levels.append((len(trail), next_var, False))
        val[next_var] = 1
        trail.append(next_var)
