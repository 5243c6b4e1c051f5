"""Pure-Python breadth-first rewriting search.

Words are ``bytes`` with one byte per letter.  ``rules`` is a flat list of
``(lhs, rhs)`` pairs in which entries ``2k`` and ``2k + 1`` are the two
orientations of one relation, so ``idx ^ 1`` reverses a step.

``search`` returns ``(found, path, states)`` where ``path`` lists
``(position, rule_index)`` steps leading from ``start`` to ``goal``.
"""
from __future__ import annotations


def neighbours(word: bytes, rules, maxlen: int):
    """Yield ``(new_word, pos, rule_index)`` for every single rewrite."""
    L = len(word)
    for idx, (lhs, rhs) in enumerate(rules):
        m = len(lhs)
        if L - m + len(rhs) > maxlen:
            continue
        if m == 0:
            for pos in range(L + 1):
                yield word[:pos] + rhs + word[pos:], pos, idx
            continue
        pos = word.find(lhs)
        while pos != -1:
            yield word[:pos] + rhs + word[pos + m:], pos, idx
            pos = word.find(lhs, pos + 1)


def _trace(parents, node):
    steps = []
    while True:
        prev = parents[node]
        if prev is None:
            break
        node, pos, idx = prev
        steps.append((pos, idx))
    steps.reverse()
    return steps


def _join(fwd, bwd, meet):
    head = _trace(fwd, meet)
    tail = _trace(bwd, meet)
    # bwd steps run goal -> meet; undo them in reverse order
    return head + [(pos, idx ^ 1) for pos, idx in reversed(tail)]


def search(start: bytes, goal: bytes, rules, budget: int, maxlen: int,
           bidirectional: bool = True):
    if start == goal:
        return True, [], 1
    fwd = {start: None}
    if not bidirectional:
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for new, pos, idx in neighbours(w, rules, maxlen):
                    if new in fwd:
                        continue
                    fwd[new] = (w, pos, idx)
                    if new == goal:
                        return True, _trace(fwd, new), len(fwd)
                    if len(fwd) >= budget:
                        return False, None, len(fwd)
                    nxt.append(new)
            frontier = nxt
        return False, None, len(fwd)

    bwd = {goal: None}
    front_f, front_b = [start], [goal]
    while front_f and front_b:
        forward = len(front_f) <= len(front_b)
        seen, other = (fwd, bwd) if forward else (bwd, fwd)
        frontier = front_f if forward else front_b
        nxt = []
        for w in frontier:
            for new, pos, idx in neighbours(w, rules, maxlen):
                if new in seen:
                    continue
                seen[new] = (w, pos, idx)
                if new in other:
                    path = _join(fwd, bwd, new)
                    return True, path, len(fwd) + len(bwd)
                if len(fwd) + len(bwd) >= budget:
                    return False, None, len(fwd) + len(bwd)
                nxt.append(new)
        if forward:
            front_f = nxt
        else:
            front_b = nxt
    return False, None, len(fwd) + len(bwd)
