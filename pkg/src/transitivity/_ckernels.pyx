# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``_pykernels`` for graphs of at most 64 vertices."""

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64 x) nogil
    int ctz "__builtin_ctzll"(u64 x) nogil

cdef enum:
    MAXN = 64


cdef struct TState:
    int n
    int k
    bint independent
    u64 masks[MAXN]
    int order[MAXN]
    int caps[MAXN]
    int twin_prev[MAXN]
    int blk[MAXN]
    u64 cov[MAXN]
    u64 bmask[MAXN + 2]
    u64 capmask[MAXN + 2]


cdef bint _empties_ok(TState* s, u64 free) nogil:
    cdef int need = 0
    cdef int j
    for j in range(s.k, 0, -1):
        if s.bmask[j] == 0:
            need += 1
            if popcount(s.capmask[j] & free) < need:
                return False
    return True


cdef bint _trec(TState* s, int pos, u64 free) nogil:
    if pos == s.n:
        return True
    cdef int u = s.order[pos]
    cdef u64 bit = (<u64>1) << u
    cdef u64 free2 = free & ~bit
    cdef u64 mu = s.masks[u]
    cdef u64 done = mu & ~free
    cdef int nbl[MAXN]
    cdef u64 saved[MAXN]
    cdef int nn = 0
    cdef int i, w, bw, b, hi, tp
    cdef u64 c, cw
    cdef bint ok
    while done:
        nbl[nn] = ctz(done)
        nn += 1
        done &= done - 1
    cdef int spare_u = popcount(mu & free2)
    hi = s.k if s.k < s.caps[u] else s.caps[u]
    tp = s.twin_prev[u]
    if tp >= 0 and s.blk[tp] < hi:
        hi = s.blk[tp]
    for b in range(hi, 0, -1):
        if s.independent and (s.bmask[b] & mu):
            continue
        c = 0
        for i in range(nn):
            bw = s.blk[nbl[i]]
            if bw < b:
                c |= (<u64>1) << bw
        if b - 1 - popcount(c) > spare_u:
            continue
        ok = True
        for i in range(nn):
            w = nbl[i]
            bw = s.blk[w]
            cw = s.cov[w]
            if bw > b:
                cw = cw | ((<u64>1) << b)
            if bw - 1 - popcount(cw) > popcount(s.masks[w] & free2):
                ok = False
                break
        if not ok:
            continue
        for i in range(nn):
            w = nbl[i]
            saved[i] = s.cov[w]
            if s.blk[w] > b:
                s.cov[w] |= (<u64>1) << b
        s.blk[u] = b
        s.cov[u] = c
        s.bmask[b] |= bit
        if _empties_ok(s, free2) and _trec(s, pos + 1, free2):
            return True
        s.bmask[b] &= ~bit
        for i in range(nn):
            s.cov[nbl[i]] = saved[i]
    s.blk[u] = 0
    s.cov[u] = 0
    return False


def transitive_search(masks, int k, order, caps, twin_prev, bint independent):
    cdef TState s
    cdef int n = len(masks)
    cdef int v, j, top
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s.n = n
    s.k = k
    s.independent = independent
    for v in range(MAXN + 2):
        s.bmask[v] = 0
        s.capmask[v] = 0
    for v in range(n):
        s.masks[v] = masks[v]
        s.order[v] = order[v]
        s.caps[v] = caps[v]
        s.twin_prev[v] = twin_prev[v]
        s.blk[v] = 0
        s.cov[v] = 0
        top = caps[v] if caps[v] < k else k
        for j in range(1, top + 1):
            s.capmask[j] |= (<u64>1) << v
    cdef u64 full = ((<u64>1) << n) - 1 if n < 64 else ~(<u64>0)
    cdef bint found
    if not _empties_ok(&s, full):
        return None
    with nogil:
        found = _trec(&s, 0, full)
    if found:
        return [s.blk[v] for v in range(n)]
    return None


cdef struct MState:
    int pn
    bint induced
    int porder[MAXN]
    int pos_of[MAXN]
    u64 pmasks[MAXN]
    u64 cand0[MAXN]
    u64 hmasks[MAXN]
    int mapping[MAXN]


cdef u64 _cands(MState* s, int p, u64 used, int upto) nogil:
    # candidates for p given the mapped prefix porder[0..upto]
    cdef u64 c = s.cand0[p] & ~used
    cdef int j, q
    for j in range(upto + 1):
        q = s.porder[j]
        if (s.pmasks[p] >> q) & 1:
            c &= s.hmasks[s.mapping[q]]
    return c


cdef bint _mrec(MState* s, int i, u64 used) nogil:
    if i == s.pn:
        return True
    cdef int p = s.porder[i]
    cdef u64 cand = s.cand0[p] & ~used
    cdef int j, q, h
    cdef u64 low, used2
    cdef bint ok
    for j in range(i):
        q = s.porder[j]
        if (s.pmasks[p] >> q) & 1:
            cand &= s.hmasks[s.mapping[q]]
        elif s.induced:
            cand &= ~s.hmasks[s.mapping[q]]
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        h = ctz(low)
        s.mapping[p] = h
        used2 = used | low
        ok = True
        for j in range(i + 1, s.pn):
            q = s.porder[j]
            if (s.pmasks[p] >> q) & 1:
                if _cands(s, q, used2, i) == 0:
                    ok = False
                    break
        if ok and _mrec(s, i + 1, used2):
            return True
    s.mapping[p] = -1
    return False


def monomorphism(pmasks, porder, cand0, hmasks, bint induced):
    cdef MState s
    cdef int pn = len(pmasks)
    cdef int hn = len(hmasks)
    cdef int i
    cdef bint found
    if pn > MAXN or hn > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s.pn = pn
    s.induced = induced
    for i in range(pn):
        s.porder[i] = porder[i]
        s.pos_of[porder[i]] = i
        s.pmasks[i] = pmasks[i]
        s.cand0[i] = cand0[i]
        s.mapping[i] = -1
    for i in range(hn):
        s.hmasks[i] = hmasks[i]
    with nogil:
        found = _mrec(&s, 0, 0)
    if found:
        return [s.mapping[i] for i in range(pn)]
    return None


def first_violation(adj, blk):
    cdef Py_ssize_t n = len(adj)
    cdef int k = max(blk) if n else 0
    cdef int[::1] b = _as_int_array(blk)
    cdef int[::1] stamp = _as_int_array([-1] * (k + 2))
    cdef Py_ssize_t v
    cdef int j, i, bw, w
    cdef tuple row
    cdef int bi = 0, bj = 0, bv = -1
    for v in range(n):
        j = b[v]
        if j <= 1:
            continue
        row = adj[v]
        for w in row:
            bw = b[w]
            if bw < j:
                stamp[bw] = <int>v
        i = 1
        while i < j and stamp[i] == v:
            i += 1
        if i < j:
            if bv < 0 or i < bi or (i == bi and (j < bj or (j == bj and v < bv))):
                bi, bj, bv = i, j, <int>v
    if bv < 0:
        return None
    return (bi, bj, bv)


cdef _as_int_array(seq):
    from array import array
    return array("i", seq)
