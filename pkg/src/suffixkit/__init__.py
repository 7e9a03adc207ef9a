"""suffixkit: suffix trees, DAWGs, affix trees, CDAWGs, and minimal absent
words over integer alphabets, all built in (near-)linear time, plus
brute-force oracles for verification."""

from .textcore import Text, ingest, reverse_core, reverse_full, decode_interval
from .suffixbase import (SuffixArray, LcpArray, SuffixTree, SuffixLinkTreeView,
                         build_sa, build_lcp, st_from_sa_lcp, fill_suffix_links,
                         slt_view, build_suffix_tree)

__all__ = [
    "Text", "ingest", "reverse_core", "reverse_full", "decode_interval",
    "SuffixArray", "LcpArray", "SuffixTree", "SuffixLinkTreeView",
    "build_sa", "build_lcp", "st_from_sa_lcp", "fill_suffix_links",
    "slt_view", "build_suffix_tree",
]

__version__ = "0.1.0"
