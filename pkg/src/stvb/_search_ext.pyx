# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled breadth-first rewriting search; same contract as ``_search_py``."""
from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE
from libc.string cimport memcmp, memcpy
from libc.stdlib cimport malloc, free


cdef list _expand(bytes word, list lhs_list, list rhs_list, int maxlen, char* buf):
    """All single rewrites of ``word`` as a list of (new, pos, idx)."""
    cdef Py_ssize_t L = PyBytes_GET_SIZE(word)
    cdef const char* w = PyBytes_AS_STRING(word)
    cdef Py_ssize_t nrules = len(lhs_list)
    cdef Py_ssize_t idx, pos, m, r, newlen
    cdef bytes lhs, rhs
    cdef const char* lp
    cdef const char* rp
    cdef list out = []
    for idx in range(nrules):
        lhs = <bytes>lhs_list[idx]
        rhs = <bytes>rhs_list[idx]
        m = PyBytes_GET_SIZE(lhs)
        r = PyBytes_GET_SIZE(rhs)
        newlen = L - m + r
        if newlen > maxlen or m > L:
            continue
        lp = PyBytes_AS_STRING(lhs)
        rp = PyBytes_AS_STRING(rhs)
        for pos in range(L - m + 1):
            if m and (w[pos] != lp[0] or memcmp(w + pos, lp, m) != 0):
                continue
            memcpy(buf, w, pos)
            memcpy(buf + pos, rp, r)
            memcpy(buf + pos + r, w + pos + m, L - pos - m)
            out.append((PyBytes_FromStringAndSize(buf, newlen), pos, idx))
    return out


cdef list _trace(dict parents, bytes node):
    cdef list steps = []
    cdef object prev
    while True:
        prev = parents[node]
        if prev is None:
            break
        node = prev[0]
        steps.append((prev[1], prev[2]))
    steps.reverse()
    return steps


def neighbours(bytes word, rules, int maxlen):
    cdef list lhs_list = [p[0] for p in rules]
    cdef list rhs_list = [p[1] for p in rules]
    cdef char* buf = <char*>malloc(maxlen + 1)
    try:
        return _expand(word, lhs_list, rhs_list, maxlen, buf)
    finally:
        free(buf)


def search(bytes start, bytes goal, rules, Py_ssize_t budget, int maxlen,
           bint bidirectional=True):
    if start == goal:
        return True, [], 1
    cdef list lhs_list = [p[0] for p in rules]
    cdef list rhs_list = [p[1] for p in rules]
    cdef char* buf = <char*>malloc(maxlen + 1)
    cdef dict fwd = {start: None}
    cdef dict bwd = {goal: None}
    cdef dict seen, other
    cdef list frontier, nxt, head, tail
    cdef list front_f = [start]
    cdef list front_b = [goal]
    cdef bint forward
    cdef bytes w, new
    cdef tuple item
    try:
        if not bidirectional:
            bwd = {}
        while front_f and (front_b or not bidirectional):
            forward = (not bidirectional) or len(front_f) <= len(front_b)
            if forward:
                seen, other, frontier = fwd, bwd, front_f
            else:
                seen, other, frontier = bwd, fwd, front_b
            nxt = []
            for w in frontier:
                for item in _expand(w, lhs_list, rhs_list, maxlen, buf):
                    new = <bytes>item[0]
                    if new in seen:
                        continue
                    seen[new] = (w, item[1], item[2])
                    if not bidirectional:
                        if new == goal:
                            return True, _trace(fwd, new), len(fwd)
                    elif new in other:
                        head = _trace(fwd, new)
                        tail = _trace(bwd, new)
                        tail.reverse()
                        return True, head + [(p, i ^ 1) for p, i in tail], len(fwd) + len(bwd)
                    if len(fwd) + len(bwd) >= budget:
                        return False, None, len(fwd) + len(bwd)
                    nxt.append(new)
            if forward:
                front_f = nxt
            else:
                front_b = nxt
        return False, None, len(fwd) + len(bwd)
    finally:
        free(buf)
