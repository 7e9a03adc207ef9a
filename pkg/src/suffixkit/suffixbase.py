"""Suffix array, LCP array, and the edge-sorted suffix tree with suffix links.

The tree is built from the suffix array and LCP array with the usual
left-to-right stack construction, so children come out sorted by first edge
symbol. Suffix links are filled afterwards with constant-time LCA queries
over an Euler tour (block-decomposed sparse-table RMQ).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .errors import StructureCorrupt
from .textcore import Text


@dataclass
class SuffixArray:
    sa0: np.ndarray    # 0-based suffix starts in lexicographic order
    rank0: np.ndarray  # inverse permutation

    @property
    def sa(self):
        """1-based view, matching the usual y[i..n] convention."""
        return self.sa0 + 1

    @property
    def rank(self):
        return self.rank0 + 1


@dataclass
class LcpArray:
    lcp: np.ndarray  # lcp[r] = LCP of the suffixes ranked r-1 and r; lcp[0] = 0


@dataclass
class SuffixTree:
    text: Text
    parent: np.ndarray       # parent id, -1 at the root
    depth: np.ndarray        # string depth in symbols
    pos: np.ndarray          # witness: node string = symbols[pos : pos+depth]
    suf: np.ndarray          # suffix start for leaves, -1 for internal nodes
    child_start: np.ndarray  # CSR over children, sorted by first edge symbol
    child: np.ndarray
    leaf_count: np.ndarray   # number of leaves below (1 at leaves)
    leaf_of_suffix: np.ndarray
    slink: np.ndarray | None = None  # suffix links; None until filled

    root = 0

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def n(self) -> int:
        return self.text.n

    def is_leaf(self, v: int) -> bool:
        return self.suf[v] >= 0

    def children(self, v: int):
        """Yield (first_symbol, child_id) in symbol order."""
        s = self.text.symbols
        for c in self.child[self.child_start[v]:self.child_start[v + 1]]:
            yield int(s[self.pos[c] + self.depth[self.parent[c]]]), int(c)

    def edge_interval(self, v: int):
        """(start0, length) of the edge label from parent(v) into the text."""
        start = int(self.pos[v] + self.depth[self.parent[v]])
        return start, int(self.depth[v] - self.depth[self.parent[v]])

    def node_string(self, v: int) -> tuple:
        """Dense codes spelled from the root to v (tests and exports only)."""
        p, d = int(self.pos[v]), int(self.depth[v])
        return tuple(int(c) for c in self.text.symbols[p:p + d])


@dataclass
class SuffixLinkTreeView:
    pred_start: np.ndarray  # CSR of suffix-link predecessors per node
    pred: np.ndarray
    is_slt_leaf: np.ndarray

    def predecessors(self, v: int):
        return self.pred[self.pred_start[v]:self.pred_start[v + 1]]


def build_sa(t: Text) -> SuffixArray:
    """Suffix array over dense codes by induced sorting.

    Works for any text whose terminal symbol is unique: the kernel input is
    shifted by one with a fresh smallest terminal appended, which leaves all
    suffix comparisons unchanged.
    """
    if not t.terminal_is_unique():
        raise StructureCorrupt("terminal symbol of the text is not unique")
    n = t.n
    s = np.empty(n + 1, dtype=np.int32)
    s[:n] = t.symbols
    s[:n] += 1
    s[n] = 0
    sa = K.sais(s, t.sigma_dense + 1)[1:]
    rank = np.empty(n, dtype=np.int32)
    rank[sa] = np.arange(n, dtype=np.int32)
    return SuffixArray(sa0=sa, rank0=rank)


def build_lcp(t: Text, sa: SuffixArray) -> LcpArray:
    _, lcp = K.kasai(t.symbols, sa.sa0)
    return LcpArray(lcp=lcp)


def st_from_sa_lcp(t: Text, sa: SuffixArray, lcp: LcpArray) -> SuffixTree:
    n = t.n
    parent, depth, pos, suf = K.st_build(sa.sa0, lcp.lcp, n)
    m = len(parent)
    # children CSR, sorted by (parent, first edge symbol)
    first_sym = np.zeros(m, dtype=np.int32)
    first_sym[1:] = t.symbols[pos[1:] + depth[parent[1:]]]
    order = np.lexsort((first_sym[1:], parent[1:]))
    child = (order + 1).astype(np.int32)
    counts = np.bincount(parent[1:], minlength=m)
    child_start = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(counts, out=child_start[1:])
    leaf_count = (suf >= 0).astype(np.int64)
    order_desc = np.argsort(depth, kind="stable")[::-1].astype(np.int32)
    K.accumulate_up(parent, leaf_count, order_desc)
    leaf_of_suffix = np.empty(n, dtype=np.int32)
    leaf_of_suffix[suf[suf >= 0]] = np.nonzero(suf >= 0)[0].astype(np.int32)
    return SuffixTree(text=t, parent=parent, depth=depth, pos=pos, suf=suf,
                      child_start=child_start, child=child,
                      leaf_count=leaf_count, leaf_of_suffix=leaf_of_suffix)


def fill_suffix_links(st: SuffixTree) -> SuffixTree:
    """slink(v) is the node spelling v's string without its first symbol.

    Leaves link along the suffix chain; an internal node links to the LCA of
    the shifted first and last leaves below it.
    """
    order_desc = np.argsort(st.depth, kind="stable")[::-1].astype(np.int32)
    fl, ll = K.first_last_leaf(st.parent, st.suf, st.child_start, st.child, order_desc)
    euler, evals, first = K.euler_tour(st.child_start, st.child, st.depth)
    table = K.rmq_build(evals)
    st.slink = K.fill_slinks_kernel(st.parent, st.suf, fl, ll, st.leaf_of_suffix,
                                    euler, evals, first, table, st.n)
    if st.n_nodes > 1 and not np.all(st.slink[1:] >= 0):
        raise StructureCorrupt("suffix link fill left a node unlinked")
    return st


def slt_view(st: SuffixTree) -> SuffixLinkTreeView:
    """Reversed suffix links: the suffix link tree adjacency."""
    if st.slink is None:
        raise StructureCorrupt("suffix links not filled")
    m = st.n_nodes
    counts = np.bincount(st.slink[1:], minlength=m)
    pred_start = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(counts, out=pred_start[1:])
    order = np.argsort(st.slink[1:], kind="stable")
    pred = (order + 1).astype(np.int32)
    is_slt_leaf = counts == 0
    return SuffixLinkTreeView(pred_start=pred_start, pred=pred, is_slt_leaf=is_slt_leaf)


def build_suffix_tree(t: Text) -> SuffixTree:
    """Full pipeline: SA, LCP, tree, suffix links."""
    sa = build_sa(t)
    lcp = build_lcp(t, sa)
    return fill_suffix_links(st_from_sa_lcp(t, sa, lcp))
