"""Sequential array kernels behind the builders.

Plain loops over numpy arrays, jitted by numba when available (see ``_jit``).
Everything here is 0-based. Functions return error codes instead of raising;
the callers translate nonzero codes into StructureCorrupt.
"""
from __future__ import annotations

import numpy as np

from ._jit import njit

# error codes shared by the kernels
OK = 0
ERR_CHAIN = 1          # suffix-link chain walk ran off the tree or too long
ERR_MONOTONE = 2       # per-chain edge-length sequence increased
ERR_NOT_BLACK = 3      # a node that must be black was not
ERR_SLINK_CONFLICT = 4  # conflicting second suffix-link write
ERR_RANGE = 5          # a depth-indexed lookup left its valid range
ERR_EDGE_OVERFLOW = 6  # edge buffer exceeded its linear-size bound
ERR_SUBSET = 7         # out-edges of a node not a subset of its slink's


# ---------------------------------------------------------------------------
# suffix array (induced sorting) and LCP (Kasai)


@njit(cache=True)
def _lms_eq(s, is_lms, a, b, n):
    if s[a] != s[b]:
        return False
    i = 1
    while True:
        ai = a + i
        bi = b + i
        if ai >= n or bi >= n:
            return False
        la = is_lms[ai]
        lb = is_lms[bi]
        if la and lb:
            return s[ai] == s[bi]
        if la != lb or s[ai] != s[bi]:
            return False
        i += 1


@njit(cache=True)
def _induce(s, sa, is_s, bkt, lms_order):
    n = s.shape[0]
    sigma = bkt.shape[0]
    sa[:] = -1
    tails = np.empty(sigma, np.int64)
    x = 0
    for c in range(sigma):
        x += bkt[c]
        tails[c] = x - 1
    for k in range(lms_order.shape[0] - 1, -1, -1):
        i = lms_order[k]
        c = s[i]
        sa[tails[c]] = i
        tails[c] -= 1
    heads = np.empty(sigma, np.int64)
    x = 0
    for c in range(sigma):
        heads[c] = x
        x += bkt[c]
    for k in range(n):
        i = sa[k]
        if i > 0 and not is_s[i - 1]:
            c = s[i - 1]
            sa[heads[c]] = i - 1
            heads[c] += 1
    x = 0
    for c in range(sigma):
        x += bkt[c]
        tails[c] = x - 1
    for k in range(n - 1, -1, -1):
        i = sa[k]
        if i > 0 and is_s[i - 1]:
            c = s[i - 1]
            sa[tails[c]] = i - 1
            tails[c] -= 1


@njit(cache=True)
def sais(s, sigma):
    """SA-IS. Requires s to end with a unique smallest symbol."""
    n = s.shape[0]
    sa = np.full(n, -1, np.int32)
    if n == 1:
        sa[0] = 0
        return sa
    is_s = np.zeros(n, np.bool_)
    is_s[n - 1] = True
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1] or (s[i] == s[i + 1] and is_s[i + 1]):
            is_s[i] = True
    is_lms = np.zeros(n, np.bool_)
    nlms = 0
    for i in range(1, n):
        if is_s[i] and not is_s[i - 1]:
            is_lms[i] = True
            nlms += 1
    lms = np.empty(nlms, np.int32)
    k = 0
    for i in range(1, n):
        if is_lms[i]:
            lms[k] = i
            k += 1
    bkt = np.zeros(sigma, np.int64)
    for i in range(n):
        bkt[s[i]] += 1
    _induce(s, sa, is_s, bkt, lms)
    name = np.full(n, -1, np.int32)
    cur = -1
    prev = -1
    for k in range(n):
        i = sa[k]
        if i > 0 and is_lms[i]:
            if prev == -1 or not _lms_eq(s, is_lms, prev, i, n):
                cur += 1
            name[i] = cur
            prev = i
    nnames = cur + 1
    sorted_lms = np.empty(nlms, np.int32)
    if nnames == nlms:
        k = 0
        for j in range(n):
            i = sa[j]
            if i > 0 and is_lms[i]:
                sorted_lms[k] = i
                k += 1
    else:
        red = np.empty(nlms, np.int32)
        for k in range(nlms):
            red[k] = name[lms[k]]
        red_sa = sais(red, nnames)
        for k in range(nlms):
            sorted_lms[k] = lms[red_sa[k]]
    _induce(s, sa, is_s, bkt, sorted_lms)
    return sa


@njit(cache=True)
def kasai(s, sa):
    """LCP array: lcp[r] = lcp of suffixes at ranks r-1 and r, lcp[0] = 0."""
    n = s.shape[0]
    rank = np.empty(n, np.int32)
    for k in range(n):
        rank[sa[k]] = k
    lcp = np.zeros(n, np.int32)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return rank, lcp


# ---------------------------------------------------------------------------
# suffix tree from SA + LCP (left-to-right stack construction)


@njit(cache=True)
def st_build(sa, lcp, n):
    """Returns (parent, depth, pos, suf, nnodes); node 0 is the root.

    pos[v] is a witness text position: the node's string is text[pos:pos+depth].
    suf[v] is the suffix start for leaves and -1 for internal nodes.
    """
    maxn = 2 * n
    parent = np.full(maxn, -1, np.int32)
    depth = np.zeros(maxn, np.int32)
    pos = np.zeros(maxn, np.int32)
    suf = np.full(maxn, -1, np.int32)
    nn = 1
    stack = np.empty(n + 2, np.int32)
    stack[0] = 0
    top = 0
    for k in range(n):
        h = lcp[k] if k > 0 else 0
        last = -1
        while depth[stack[top]] > h:
            last = stack[top]
            top -= 1
        u = stack[top]
        if depth[u] < h:
            v = nn
            nn += 1
            parent[v] = u
            depth[v] = h
            pos[v] = pos[last]
            parent[last] = v
            top += 1
            stack[top] = v
            u = v
        leaf = nn
        nn += 1
        parent[leaf] = u
        depth[leaf] = n - sa[k]
        pos[leaf] = sa[k]
        suf[leaf] = sa[k]
        top += 1
        stack[top] = leaf
    return parent[:nn], depth[:nn], pos[:nn], suf[:nn]


@njit(cache=True)
def accumulate_up(parent, values, order_desc):
    """Add each node's value into its parent, children first (order_desc is
    node ids sorted by decreasing depth)."""
    for k in range(order_desc.shape[0]):
        v = order_desc[k]
        p = parent[v]
        if p >= 0:
            values[p] += values[v]


@njit(cache=True)
def first_last_leaf(parent, suf, child_start, child, order_desc):
    """Per node: suffix positions of its lexicographically first and last leaves."""
    m = parent.shape[0]
    fl = np.full(m, -1, np.int32)
    ll = np.full(m, -1, np.int32)
    for k in range(order_desc.shape[0]):
        v = order_desc[k]
        if suf[v] >= 0:
            fl[v] = suf[v]
            ll[v] = suf[v]
        else:
            fl[v] = fl[child[child_start[v]]]
            ll[v] = ll[child[child_start[v + 1] - 1]]
    return fl, ll


# ---------------------------------------------------------------------------
# Euler tour + block RMQ, used for LCA-based suffix links


@njit(cache=True)
def euler_tour(child_start, child, depth):
    m = child_start.shape[0] - 1
    esize = 2 * m - 1
    euler = np.empty(esize, np.int32)
    evals = np.empty(esize, np.int32)
    first = np.full(m, -1, np.int64)
    stack_node = np.empty(m + 1, np.int32)
    stack_ci = np.empty(m + 1, np.int64)
    sp = 0
    stack_node[0] = 0
    stack_ci[0] = child_start[0]
    euler[0] = 0
    evals[0] = depth[0]
    first[0] = 0
    ei = 1
    while sp >= 0:
        v = stack_node[sp]
        ci = stack_ci[sp]
        if ci < child_start[v + 1]:
            stack_ci[sp] = ci + 1
            c = child[ci]
            sp += 1
            stack_node[sp] = c
            stack_ci[sp] = child_start[c]
            first[c] = ei
            euler[ei] = c
            evals[ei] = depth[c]
            ei += 1
        else:
            sp -= 1
            if sp >= 0:
                euler[ei] = stack_node[sp]
                evals[ei] = depth[stack_node[sp]]
                ei += 1
    return euler, evals, first


RMQ_BLOCK = 64


@njit(cache=True)
def rmq_build(vals):
    nv = vals.shape[0]
    nb = (nv + RMQ_BLOCK - 1) // RMQ_BLOCK
    levels = 1
    while (1 << levels) <= nb:
        levels += 1
    table = np.empty((levels, nb), np.int64)
    for b in range(nb):
        lo = b * RMQ_BLOCK
        hi = min(nv, lo + RMQ_BLOCK)
        am = lo
        for i in range(lo + 1, hi):
            if vals[i] < vals[am]:
                am = i
        table[0, b] = am
    for lv in range(1, levels):
        span = 1 << lv
        half = span >> 1
        for b in range(nb - span + 1):
            x = table[lv - 1, b]
            y = table[lv - 1, b + half]
            table[lv, b] = x if vals[x] <= vals[y] else y
    return table


@njit(cache=True)
def rmq_query(vals, table, l, r):
    bl = l // RMQ_BLOCK
    br = r // RMQ_BLOCK
    am = l
    if bl == br:
        for i in range(l + 1, r + 1):
            if vals[i] < vals[am]:
                am = i
        return am
    stop = (bl + 1) * RMQ_BLOCK
    for i in range(l + 1, stop):
        if vals[i] < vals[am]:
            am = i
    for i in range(br * RMQ_BLOCK, r + 1):
        if vals[i] < vals[am]:
            am = i
    if br - bl >= 2:
        lo = bl + 1
        hi = br - 1
        span = hi - lo + 1
        k = 0
        while (1 << (k + 1)) <= span:
            k += 1
        x = table[k, lo]
        y = table[k, hi - (1 << k) + 1]
        mid = x if vals[x] <= vals[y] else y
        if vals[mid] < vals[am]:
            am = mid
    return am


@njit(cache=True)
def fill_slinks_kernel(parent, suf, fl, ll, leaf_of_suffix, euler, evals, first, table, n):
    """slink(leaf of suffix i) = leaf of suffix i+1 (last leaf -> root);
    slink(internal v) = LCA(leaf(fl[v]+1), leaf(ll[v]+1))."""
    m = parent.shape[0]
    slink = np.full(m, -1, np.int32)
    for v in range(1, m):
        if suf[v] >= 0:
            nxt = suf[v] + 1
            slink[v] = leaf_of_suffix[nxt] if nxt < n else 0
        else:
            a = first[leaf_of_suffix[fl[v] + 1]]
            b = first[leaf_of_suffix[ll[v] + 1]]
            if a > b:
                a, b = b, a
            slink[v] = euler[rmq_query(evals, table, a, b)]
    return slink


# ---------------------------------------------------------------------------
# Weiner links


@njit(cache=True)
def weiner_walks(parent, slink, first_sym, cap):
    """All Weiner links from the suffix links: explicit ones are the reversed
    suffix links; implicit ones come from the parent walks. Returns
    (src, sym, dst, explicit, count, err)."""
    m = parent.shape[0]
    src = np.empty(cap, np.int32)
    sym = np.empty(cap, np.int32)
    dst = np.empty(cap, np.int32)
    expl = np.zeros(cap, np.bool_)
    cnt = 0
    for v in range(1, m):
        w = slink[v]
        a = first_sym[v]
        if cnt >= cap:
            return src, sym, dst, expl, cnt, ERR_EDGE_OVERFLOW
        src[cnt] = w
        sym[cnt] = a
        dst[cnt] = v
        expl[cnt] = True
        cnt += 1
        if w == 0:
            continue
        paw = parent[v]
        stop = slink[paw] if paw != 0 else -1
        p = parent[w]
        while p != stop:
            if p < 0:
                return src, sym, dst, expl, cnt, ERR_CHAIN
            if cnt >= cap:
                return src, sym, dst, expl, cnt, ERR_EDGE_OVERFLOW
            src[cnt] = p
            sym[cnt] = a
            dst[cnt] = v
            expl[cnt] = False
            cnt += 1
            if p == 0:
                break
            p = parent[p]
    return src, sym, dst, expl, cnt, OK


# ---------------------------------------------------------------------------
# suffix-link-chain merge pass: the suffix-tree-to-DAWG transformation and its
# tree-mode variant that completes suffix links on augmented-tree nodes


@njit(cache=True)
def merge_pass(st_parent, st_depth, st_pos, st_slink, lc_ext, black_st,
               chain_base, ast_parent, dawg_of_ast, text, tree_mode,
               ast_slink, dslink, dslink_sym,
               edge_src, edge_sym, edge_dst, ecnt0):
    """Visit every black suffix-tree node, walk its suffix-link chain, split it
    into blocks of equal end-position class of the parents, and write the
    induced DAWG edges and suffix links (or, in tree mode, the completed
    suffix links of the augmented tree's implicit nodes).

    Returns (edge_count, err).
    """
    nst = st_parent.shape[0]
    n = text.shape[0]
    chain = np.empty(n + 2, np.int32)
    ecnt = ecnt0
    cap = edge_src.shape[0]
    total_steps = 0
    for x in range(1, nst):
        if not black_st[x]:
            continue
        p = st_parent[x]
        dp = st_depth[p]
        dx = st_depth[x]
        # chain of suffix links until the occurrence count first grows
        chain[0] = x
        clen = 1
        lc0 = lc_ext[x]
        while True:
            nx = st_slink[chain[clen - 1]]
            if nx < 0:
                return ecnt, ERR_CHAIN
            chain[clen] = nx
            clen += 1
            total_steps += 1
            if total_steps > 4 * n + 16:
                return ecnt, ERR_CHAIN
            if lc_ext[nx] != lc0:
                break
        m = clen - 1
        if lc_ext[chain[m]] < lc0:
            return ecnt, ERR_MONOTONE
        if chain[m] != 0 and not black_st[chain[m]]:
            return ecnt, ERR_NOT_BLACK
        # sweep the chain, closing blocks; block k >= 1 contributes one edge
        # and the suffix links of path depths (delta_prev, delta_k]
        delta_prev = dp
        ib = 0
        d_last = dx - dp
        plc_last = lc_ext[p]
        i = 1
        while i <= m:
            newblock = True
            if i < m:
                si = chain[i]
                di = st_depth[si] - st_depth[st_parent[si]]
                plc_i = lc_ext[st_parent[si]]
                if di > d_last:
                    return ecnt, ERR_MONOTONE
                newblock = (di != d_last) or (plc_i != plc_last)
                d_last = di
                plc_last = plc_i
            if newblock and ib >= 1:
                sik = chain[ib]
                psik = st_parent[sik]
                dk = st_depth[sik] - st_depth[psik]
                delta_k = dx - dk
                if delta_k + 1 > dx or delta_k < dp:
                    return ecnt, ERR_RANGE
                qk = x if delta_k + 1 == dx else chain_base[x] + (delta_k - dp)
                if not tree_mode:
                    if ecnt >= cap:
                        return ecnt, ERR_EDGE_OVERFLOW
                    if dawg_of_ast[psik] < 0 or dawg_of_ast[qk] < 0:
                        return ecnt, ERR_NOT_BLACK
                    edge_src[ecnt] = dawg_of_ast[psik]
                    edge_sym[ecnt] = text[st_pos[sik] + st_depth[psik]]
                    edge_dst[ecnt] = dawg_of_ast[qk]
                    ecnt += 1
                label = text[st_pos[chain[ib - 1]]]
                u = psik
                for delta in range(delta_k, delta_prev, -1):
                    if dawg_of_ast[u] < 0:
                        return ecnt, ERR_NOT_BLACK
                    vnode = x if delta == dx else chain_base[x] + (delta - dp - 1)
                    if tree_mode:
                        if delta != dx:
                            if ast_slink[vnode] >= 0 and ast_slink[vnode] != u:
                                return ecnt, ERR_SLINK_CONFLICT
                            ast_slink[vnode] = u
                    else:
                        dv = dawg_of_ast[vnode]
                        tgt = dawg_of_ast[u]
                        if dslink[dv] >= 0:
                            if dslink[dv] != tgt or dslink_sym[dv] != label:
                                return ecnt, ERR_SLINK_CONFLICT
                        else:
                            dslink[dv] = tgt
                            dslink_sym[dv] = label
                    if delta - 1 > delta_prev:
                        u = ast_parent[u]
                        if u < 0:
                            return ecnt, ERR_RANGE
                delta_prev = delta_k
            if newblock:
                ib = i
            i += 1
        # top stretch: depths (delta_prev, dx], target walked up from the
        # chain terminator (the first black node reached)
        label = text[st_pos[chain[m - 1]]]
        u = chain[m]
        for delta in range(dx, delta_prev, -1):
            if dawg_of_ast[u] < 0:
                return ecnt, ERR_NOT_BLACK
            vnode = x if delta == dx else chain_base[x] + (delta - dp - 1)
            if tree_mode:
                if delta != dx:
                    if ast_slink[vnode] >= 0 and ast_slink[vnode] != u:
                        return ecnt, ERR_SLINK_CONFLICT
                    ast_slink[vnode] = u
            else:
                dv = dawg_of_ast[vnode]
                tgt = dawg_of_ast[u]
                if dslink[dv] >= 0:
                    if dslink[dv] != tgt or dslink_sym[dv] != label:
                        return ecnt, ERR_SLINK_CONFLICT
                else:
                    dslink[dv] = tgt
                    dslink_sym[dv] = label
            if delta - 1 > delta_prev:
                u = ast_parent[u]
                if u < 0:
                    return ecnt, ERR_RANGE
    return ecnt, OK


# ---------------------------------------------------------------------------
# minimal absent words: sorted-adjacency difference scan


@njit(cache=True)
def maw_scan(edge_start, edge_sym, edge_dst, slink, shortlen, wit_end,
             source, sink, count_only):
    """Difference scan of every node's out-edges against its suffix link's.

    First call with count_only=True to size the output, then with False.
    Returns (i0, j0, b, count, touches, err): the word is
    text[i0:j0] + b, 0-based half-open.
    """
    nn = edge_start.shape[0] - 1
    cap = 0 if count_only else -1
    if count_only:
        out_i = np.empty(0, np.int64)
        out_j = np.empty(0, np.int64)
        out_b = np.empty(0, np.int32)
    cnt = 0
    touches = 0
    for u in range(nn):
        if u == source or u == sink:
            continue
        v = slink[u]
        pu = edge_start[u]
        eu = edge_start[u + 1]
        for pv in range(edge_start[v], edge_start[v + 1]):
            b = edge_sym[pv]
            touches += 1
            if pu < eu and edge_sym[pu] == b:
                pu += 1
                touches += 1
                continue
            if b == 0:
                continue
            cnt += 1
        if pu != eu:
            return np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0, np.int32), 0, touches, ERR_SUBSET
    if count_only:
        return out_i, out_j, out_b, cnt, touches, OK
    out_i = np.empty(cnt, np.int64)
    out_j = np.empty(cnt, np.int64)
    out_b = np.empty(cnt, np.int32)
    k = 0
    for u in range(nn):
        if u == source or u == sink:
            continue
        v = slink[u]
        pu = edge_start[u]
        eu = edge_start[u + 1]
        for pv in range(edge_start[v], edge_start[v + 1]):
            b = edge_sym[pv]
            if pu < eu and edge_sym[pu] == b:
                pu += 1
                continue
            if b == 0:
                continue
            out_i[k] = wit_end[u] - shortlen[u]
            out_j[k] = wit_end[u]
            out_b[k] = b
            k += 1
    return out_i, out_j, out_b, cnt, touches, OK


# ---------------------------------------------------------------------------
# path compression helper for CDAWGs: jump over out-degree-1 nodes


@njit(cache=True)
def compaction_jumps(order_desc, kept, edge_start, edge_dst):
    """For every non-kept node (known to have exactly one out-edge), the kept
    node its unary path ends at and the number of hops to get there.
    order_desc must process targets before sources (decreasing length)."""
    nn = kept.shape[0]
    jump_t = np.full(nn, -1, np.int32)
    jump_h = np.zeros(nn, np.int64)
    for k in range(order_desc.shape[0]):
        v = order_desc[k]
        if kept[v]:
            continue
        w = edge_dst[edge_start[v]]
        if kept[w]:
            jump_t[v] = w
            jump_h[v] = 1
        else:
            jump_t[v] = jump_t[w]
            jump_h[v] = jump_h[w] + 1
    return jump_t, jump_h
