# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels: subset BFS, pair BFS and DPLL over flat C buffers."""

from libc.stdint cimport uint64_t, int64_t, int32_t, int8_t
from libc.string cimport memset, memcmp, memcpy
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref

import numpy as np
cimport numpy as cnp

from ..errors import BudgetExceeded

cnp.import_array()

BACKEND = "cython"


cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)


cdef inline uint64_t _hash_words(const uint64_t* w, int nw) nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef int i
    for i in range(nw):
        h ^= w[i]
        h *= 1099511628211ULL
        h ^= h >> 29
    return h


def explore_subsets(table, long long budget=1 << 22, bint stop_at_singleton=True, int max_depth=-1):
    """Breadth-first search of the subset automaton from the full state set.

    Same return contract as the Python kernel.
    """
    cdef cnp.ndarray[int32_t, ndim=2] tab = np.ascontiguousarray(table, dtype=np.int32)
    cdef int n = tab.shape[0]
    cdef int m = tab.shape[1]
    cdef int nw = (n + 63) // 64
    cdef vector[int32_t] tgt = vector[int32_t](n * m)
    cdef int q, c, r, b
    for c in range(m):
        for q in range(n):
            tgt[c * n + q] = tab[q, c]

    cdef vector[uint64_t] masks
    cdef vector[int64_t] parent, succ
    cdef vector[int32_t] letter, depth, size
    cdef vector[int64_t] slots
    cdef uint64_t cap = 1024
    slots.assign(cap, -1)

    cdef vector[uint64_t] tmp = vector[uint64_t](nw)
    cdef int64_t i, j, found = -1, total
    cdef uint64_t h, pos, word
    cdef int d, pc
    cdef const uint64_t* src
    cdef int64_t k2, idx2

    # full set
    for b in range(nw):
        masks.push_back(0xFFFFFFFFFFFFFFFFULL)
    if n % 64:
        masks[nw - 1] = (1ULL << (n % 64)) - 1
    parent.push_back(-1)
    letter.push_back(-1)
    depth.push_back(0)
    size.push_back(n)
    h = _hash_words(&masks[0], nw)
    slots[h & (cap - 1)] = 0
    total = 1
    if n == 1:
        found = 0
    if found == 0 and stop_at_singleton:
        return _pack(succ, parent, letter, depth, size, total, m, found)

    i = 0
    while i < total:
        d = depth[i]
        if max_depth >= 0 and d >= max_depth:
            break
        for c in range(m):
            memset(&tmp[0], 0, nw * sizeof(uint64_t))
            src = &masks[i * nw]
            for b in range(nw):
                word = src[b]
                while word:
                    q = b * 64 + __builtin_ctzll(word)
                    word &= word - 1
                    r = tgt[c * n + q]
                    tmp[r >> 6] |= 1ULL << (r & 63)
            h = _hash_words(&tmp[0], nw)
            pos = h & (cap - 1)
            j = -1
            while slots[pos] >= 0:
                if memcmp(&masks[slots[pos] * nw], &tmp[0], nw * sizeof(uint64_t)) == 0:
                    j = slots[pos]
                    break
                pos = (pos + 1) & (cap - 1)
            if j < 0:
                if total >= budget:
                    raise BudgetExceeded(f"state budget exceeded: more than {budget} reachable subsets")
                j = total
                for b in range(nw):
                    masks.push_back(tmp[b])
                slots[pos] = j
                parent.push_back(i)
                letter.push_back(c)
                depth.push_back(d + 1)
                pc = 0
                for b in range(nw):
                    pc += __builtin_popcountll(tmp[b])
                size.push_back(pc)
                total += 1
                if 2 * <uint64_t>total > cap:
                    cap *= 2
                    slots.assign(cap, -1)
                    for k2 in range(total):
                        pos = _hash_words(&masks[k2 * nw], nw) & (cap - 1)
                        while slots[pos] >= 0:
                            pos = (pos + 1) & (cap - 1)
                        slots[pos] = k2
                if found < 0 and pc == 1:
                    found = j
                    if stop_at_singleton:
                        succ.push_back(j)
                        while succ.size() < <size_t>((i + 1) * m):
                            succ.push_back(-1)
                        return _pack(succ, parent, letter, depth, size, total, m, found)
            succ.push_back(j)
        i += 1
    return _pack(succ, parent, letter, depth, size, total, m, found)


cdef _pack(vector[int64_t]& succ, vector[int64_t]& parent, vector[int32_t]& letter,
           vector[int32_t]& depth, vector[int32_t]& size, int64_t total, int m, int64_t found):
    cdef cnp.ndarray[int64_t, ndim=2] s = np.full((total, m), -1, dtype=np.int64)
    cdef int64_t rows = succ.size() // m if m else 0
    cdef int64_t i
    cdef int c
    for i in range(rows):
        for c in range(m):
            s[i, c] = succ[i * m + c]
    cdef cnp.ndarray[int64_t, ndim=1] par = np.empty(total, dtype=np.int64)
    cdef cnp.ndarray[int32_t, ndim=1] let = np.empty(total, dtype=np.int32)
    cdef cnp.ndarray[int32_t, ndim=1] dep = np.empty(total, dtype=np.int32)
    cdef cnp.ndarray[int32_t, ndim=1] siz = np.empty(total, dtype=np.int32)
    for i in range(total):
        par[i] = parent[i]
        let[i] = letter[i]
        dep[i] = depth[i]
        siz[i] = size[i]
    return s, par, let, dep, siz, found


def pair_distances(table):
    """Backward BFS over unordered state pairs starting from the diagonal."""
    cdef cnp.ndarray[int32_t, ndim=2] tab = np.ascontiguousarray(table, dtype=np.int32)
    cdef int n = tab.shape[0]
    cdef int m = tab.shape[1]
    cdef cnp.ndarray[int32_t, ndim=2] dist = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.ndarray[int32_t, ndim=2] nxt = np.full((n, n), -1, dtype=np.int32)
    # reverse transitions in CSR form, one block per letter
    cdef vector[int32_t] off = vector[int32_t](m * (n + 1), 0)
    cdef vector[int32_t] rev = vector[int32_t](m * n)
    cdef vector[int32_t] fill = vector[int32_t](m * (n + 1), 0)
    cdef int q, c, r, p, p2, q2, a, b, d
    for c in range(m):
        for q in range(n):
            off[c * (n + 1) + tab[q, c] + 1] += 1
        for r in range(n):
            off[c * (n + 1) + r + 1] += off[c * (n + 1) + r]
        for q in range(n):
            r = tab[q, c]
            rev[c * n + off[c * (n + 1) + r] + fill[c * (n + 1) + r]] = q
            fill[c * (n + 1) + r] += 1
    cdef vector[int32_t] queue = vector[int32_t](n * n)
    cdef int64_t head = 0, tail = 0
    for q in range(n):
        dist[q, q] = 0
        queue[tail] = q * n + q
        tail += 1
    while head < tail:
        p = queue[head] // n
        q = queue[head] % n
        head += 1
        d = dist[p, q] + 1
        for c in range(m):
            for a in range(off[c * (n + 1) + p], off[c * (n + 1) + p + 1]):
                p2 = rev[c * n + a]
                for b in range(off[c * (n + 1) + q], off[c * (n + 1) + q + 1]):
                    q2 = rev[c * n + b]
                    if dist[p2, q2] < 0:
                        dist[p2, q2] = d
                        dist[q2, p2] = d
                        nxt[p2, q2] = c
                        nxt[q2, p2] = c
                        queue[tail] = p2 * n + q2
                        tail += 1
    return dist, nxt


cdef inline int _widx(int lit) nogil:
    return 2 * lit if lit > 0 else -2 * lit + 1


cdef inline int _litval(const int8_t* val, int lit) nogil:
    return val[lit] if lit > 0 else -val[-lit]


def dpll_solve(int nvars, clauses, long long max_conflicts=-1):
    """Complete DPLL with two watched literals; same contract as the Python kernel."""
    cdef vector[int] lits
    cdef vector[int64_t] cstart
    cdef vector[int] clen
    cdef vector[int] units
    cdef vector[vector[int]] watches = vector[vector[int]](2 * nvars + 2)
    cdef int lit, ci, v, x
    cdef int64_t base
    cdef set seen
    cdef list clause_list
    for clause in clauses:
        clause_list = list(dict.fromkeys(clause))
        if not clause_list:
            return None
        seen = set(clause_list)
        if any(-x in seen for x in clause_list):
            continue
        if len(clause_list) == 1:
            units.push_back(clause_list[0])
            continue
        ci = cstart.size()
        cstart.push_back(lits.size())
        clen.push_back(len(clause_list))
        for lit in clause_list:
            lits.push_back(lit)
        watches[_widx(clause_list[0])].push_back(ci)
        watches[_widx(clause_list[1])].push_back(ci)

    cdef vector[int8_t] valv = vector[int8_t](nvars + 1, 0)
    cdef int8_t* val = &valv[0]
    cdef vector[int] trail
    trail.reserve(nvars + 1)
    cdef int want
    for i in range(units.size()):
        lit = units[i]
        v = lit if lit > 0 else -lit
        want = 1 if lit > 0 else -1
        if val[v] == -want:
            return None
        if val[v] == 0:
            val[v] = want
            trail.push_back(lit)

    cdef vector[int] lv_start, lv_var
    cdef vector[int8_t] lv_flipped
    cdef int64_t qhead = 0
    cdef int next_var = 1
    cdef long long conflicts = 0
    cdef int false_lit, first, fv, k, l, conflict
    cdef size_t wi, wj, wn
    cdef vector[int]* ws
    cdef int start, var, t
    cdef bint moved
    while True:
        conflict = 0
        while qhead < <int64_t>trail.size() and not conflict:
            false_lit = -trail[qhead]
            qhead += 1
            ws = &watches[_widx(false_lit)]
            wi = 0
            wj = 0
            wn = ws.size()
            while wi < wn:
                ci = deref(ws)[wi]
                wi += 1
                base = cstart[ci]
                if lits[base] == false_lit:
                    lits[base] = lits[base + 1]
                    lits[base + 1] = false_lit
                first = lits[base]
                fv = _litval(val, first)
                if fv == 1:
                    deref(ws)[wj] = ci
                    wj += 1
                    continue
                moved = False
                for k in range(2, clen[ci]):
                    l = lits[base + k]
                    if _litval(val, l) != -1:
                        lits[base + 1] = l
                        lits[base + k] = false_lit
                        watches[_widx(l)].push_back(ci)
                        moved = True
                        break
                if moved:
                    continue
                deref(ws)[wj] = ci
                wj += 1
                if fv == -1:
                    while wi < wn:
                        deref(ws)[wj] = deref(ws)[wi]
                        wj += 1
                        wi += 1
                    conflict = 1
                    break
                val[first if first > 0 else -first] = 1 if first > 0 else -1
                trail.push_back(first)
            ws.resize(wj)
        if conflict:
            conflicts += 1
            if 0 <= max_conflicts < conflicts:
                raise BudgetExceeded(f"DPLL conflict budget of {max_conflicts} exhausted")
            while True:
                if lv_start.size() == 0:
                    return None
                start = lv_start.back()
                var = lv_var.back()
                t = lv_flipped.back()
                lv_start.pop_back()
                lv_var.pop_back()
                lv_flipped.pop_back()
                while <int>trail.size() > start:
                    lit = trail.back()
                    val[lit if lit > 0 else -lit] = 0
                    trail.pop_back()
                if not t:
                    lv_start.push_back(start)
                    lv_var.push_back(var)
                    lv_flipped.push_back(1)
                    val[var] = -1
                    trail.push_back(-var)
                    next_var = var
                    qhead = start
                    break
            continue
        while next_var <= nvars and val[next_var] != 0:
            next_var += 1
        if next_var > nvars:
            return [False] + [val[v] > 0 for v in range(1, nvars + 1)]
        lv_start.push_back(trail.size())
        lv_var.push_back(next_var)
        lv_flipped.push_back(0)
        val[next_var] = 1
        trail.push_back(next_var)
