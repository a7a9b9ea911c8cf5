"""Pure-Python search kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
function-for-function and must return identical results. Vertex sets are
integer bitmasks throughout.
"""

from __future__ import annotations

import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def transitive_search(masks, k, order, caps, twin_prev, independent):
    """Find a transitive ``k``-partition with every block non-empty.

    ``order`` is the assignment order, ``caps[v]`` the highest block ``v`` may
    take, ``twin_prev[v]`` an earlier twin of ``v`` (or -1) whose block bounds
    ``v``'s from above. With ``independent`` every block must be an
    independent set (Grundy colorings). Returns the 1-based block of every
    vertex, or ``None``.
    """
    n = len(masks)
    blk = [0] * n
    cov = [0] * n
    bmask = [0] * (k + 1)
    capmask = [0] * (k + 2)
    for v in range(n):
        for j in range(1, min(caps[v], k) + 1):
            capmask[j] |= 1 << v

    def empties_ok(free):
        # Hall check for empty blocks; candidate sets are nested in j
        need = 0
        for j in range(k, 0, -1):
            if not bmask[j]:
                need += 1
                if (capmask[j] & free).bit_count() < need:
                    return False
        return True

    def rec(pos, free):
        if pos == n:
            return True
        u = order[pos]
        bit = 1 << u
        free2 = free & ~bit
        mu = masks[u]
        done = mu & ~free
        nbl = []
        while done:
            low = done & -done
            nbl.append(low.bit_length() - 1)
            done ^= low
        spare_u = (mu & free2).bit_count()
        hi = min(k, caps[u])
        tp = twin_prev[u]
        if tp >= 0 and blk[tp] < hi:
            hi = blk[tp]
        for b in range(hi, 0, -1):
            if independent and bmask[b] & mu:
                continue
            c = 0
            for w in nbl:
                bw = blk[w]
                if bw < b:
                    c |= 1 << bw
            if b - 1 - c.bit_count() > spare_u:
                continue
            ok = True
            for w in nbl:
                bw = blk[w]
                cw = cov[w] | (1 << b) if bw > b else cov[w]
                if bw - 1 - cw.bit_count() > (masks[w] & free2).bit_count():
                    ok = False
                    break
            if not ok:
                continue
            saved = []
            for w in nbl:
                if blk[w] > b:
                    saved.append((w, cov[w]))
                    cov[w] |= 1 << b
            blk[u] = b
            cov[u] = c
            bmask[b] |= bit
            if empties_ok(free2) and rec(pos + 1, free2):
                return True
            bmask[b] &= ~bit
            for w, cw in saved:
                cov[w] = cw
        blk[u] = 0
        cov[u] = 0
        return False

    full = (1 << n) - 1
    if not empties_ok(full):
        return None
    if rec(0, full):
        return blk
    return None


def monomorphism(pmasks, porder, cand0, hmasks, induced):
    """Injective map of pattern vertices into the host preserving edges.

    ``porder`` is the pattern assignment order and ``cand0[p]`` the initial
    host candidate mask of pattern vertex ``p``. With ``induced`` non-edges are
    preserved too. Returns ``mapping[p] -> host vertex`` or ``None``.
    """
    pn = len(pmasks)
    pos_of = [0] * pn
    for i, p in enumerate(porder):
        pos_of[p] = i
    before_nb = []
    before_non = []
    after_nb = []
    for i, p in enumerate(porder):
        before_nb.append([q for q in porder[:i] if pmasks[p] >> q & 1])
        before_non.append([q for q in porder[:i] if not pmasks[p] >> q & 1])
        after_nb.append([q for q in porder[i + 1:] if pmasks[p] >> q & 1])
    mapping = [-1] * pn

    def candidates(p, used):
        c = cand0[p] & ~used
        i = pos_of[p]
        for q in before_nb[i]:
            mq = mapping[q]
            if mq >= 0:
                c &= hmasks[mq]
        return c

    def rec(i, used):
        if i == pn:
            return True
        p = porder[i]
        cand = cand0[p] & ~used
        for q in before_nb[i]:
            cand &= hmasks[mapping[q]]
        if induced:
            for q in before_non[i]:
                cand &= ~hmasks[mapping[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            h = low.bit_length() - 1
            mapping[p] = h
            used2 = used | low
            ok = True
            for q in after_nb[i]:
                if not candidates(q, used2):
                    ok = False
                    break
            if ok and rec(i + 1, used2):
                return True
        mapping[p] = -1
        return False

    if rec(0, 0):
        return mapping
    return None


def first_violation(adj, blk):
    """Least ``(i, j, v)`` with ``v`` in block ``j`` lacking a neighbor in block ``i < j``.

    Runs in time linear in the graph size: the scan for a vertex's lowest
    uncovered block stops after at most ``deg(v) + 1`` steps.
    """
    n = len(adj)
    k = max(blk, default=0)
    stamp = [-1] * (k + 2)
    best = None
    for v in range(n):
        j = blk[v]
        if j <= 1:
            continue
        for w in adj[v]:
            bw = blk[w]
            if bw < j:
                stamp[bw] = v
        i = 1
        while i < j and stamp[i] == v:
            i += 1
        if i < j and (best is None or (i, j, v) < best):
            best = (i, j, v)
    return best
