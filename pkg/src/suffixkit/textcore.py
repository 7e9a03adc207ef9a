"""Input ingestion: rank compression, sentinel handling, interval decoding.

All indexing structures in this package operate on a :class:`Text`: a dense
integer recoding of the input with a unique terminal symbol at the end.
Positions are 1-based in the public API (``decode_interval``) and 0-based in
the internal arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AlphabetTooSmall, BadInterval, EmptyInput

# dense code 0 is reserved for the artificial sentinel and decodes to None
SENTINEL = 0


@dataclass
class Text:
    symbols: np.ndarray        # int32 dense codes, terminal at symbols[-1]
    alphabet: np.ndarray       # int64, alphabet[code] = original value, alphabet[0] = -1
    declared_sigma: int        # size of the declared alphabet (>= distinct core symbols)
    sentinel_code: int = SENTINEL  # code of the unique terminal symbol

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma_dense(self) -> int:
        return len(self.alphabet)

    @property
    def core(self) -> np.ndarray:
        """Symbols without the trailing sentinel."""
        return self.symbols[:-1]

    def terminal_is_unique(self) -> bool:
        return int(np.count_nonzero(self.symbols == self.symbols[-1])) == 1

    def __repr__(self):
        return f"Text(n={self.n}, sigma_dense={self.sigma_dense}, declared_sigma={self.declared_sigma})"


def ingest(raw, declared_sigma: int | None = None) -> Text:
    """Rank-compress ``raw`` (bytes, str, or an int sequence) and append a sentinel.

    Dense codes are assigned by ascending original value starting at 1; code 0
    is the appended sentinel. ``declared_sigma`` defaults to the number of
    distinct symbols in ``raw``.
    """
    if isinstance(raw, str):
        raw = raw.encode()
    arr = np.asarray(bytearray(raw) if isinstance(raw, (bytes, bytearray)) else list(raw), dtype=np.int64)
    if arr.size == 0:
        raise EmptyInput("cannot index an empty sequence")
    originals = np.unique(arr)
    if declared_sigma is None:
        declared_sigma = int(originals.size)
    elif declared_sigma < originals.size:
        raise AlphabetTooSmall(
            f"declared_sigma={declared_sigma} < {originals.size} distinct symbols")
    codes = np.searchsorted(originals, arr).astype(np.int32) + 1
    symbols = np.empty(arr.size + 1, dtype=np.int32)
    symbols[:-1] = codes
    symbols[-1] = SENTINEL
    alphabet = np.empty(originals.size + 1, dtype=np.int64)
    alphabet[0] = -1
    alphabet[1:] = originals
    return Text(symbols=symbols, alphabet=alphabet, declared_sigma=declared_sigma)


def reverse_core(t: Text) -> Text:
    """Reverse the non-sentinel part and append a fresh sentinel.

    The alphabet map is preserved, so decoded output of the result is the
    reversed decoded core of ``t``.
    """
    if t.sentinel_code != SENTINEL:
        raise BadInterval("reverse_core expects a standard sentinel-terminated text")
    symbols = np.empty_like(t.symbols)
    symbols[:-1] = t.symbols[-2::-1]
    symbols[-1] = SENTINEL
    return Text(symbols=symbols, alphabet=t.alphabet, declared_sigma=t.declared_sigma)


def reverse_full(t: Text) -> Text:
    """Reverse the whole symbol sequence, sentinel included.

    Valid only when the first symbol of ``t`` is unique, which makes it a
    usable terminal for the reversed text. Used by the cross-checks that
    compare structures built on a string against structures built on its
    reversal (both orientations then end in a unique symbol).
    """
    first = int(t.symbols[0])
    if int(np.count_nonzero(t.symbols == first)) != 1:
        raise BadInterval("reverse_full requires a unique first symbol")
    return Text(symbols=t.symbols[::-1].copy(), alphabet=t.alphabet,
                declared_sigma=t.declared_sigma, sentinel_code=first)


def decode_interval(t: Text, i: int, j: int) -> tuple:
    """Original symbols of t[i..j], 1-based inclusive. Sentinel decodes to None."""
    if not (1 <= i <= j <= t.n):
        raise BadInterval(f"interval [{i}, {j}] out of range 1..{t.n}")
    out = []
    for c in t.symbols[i - 1:j]:
        out.append(None if c == SENTINEL else int(t.alphabet[c]))
    return tuple(out)


def label_str(t: Text, start0: int, length: int) -> str:
    """Printable form of t[start0 : start0+length] (0-based), for exports.

    Byte-range originals render as characters, everything else as decimal,
    and the sentinel as ``$``.
    """
    parts = []
    for c in t.symbols[start0:start0 + length]:
        c = int(c)
        if c == SENTINEL:
            parts.append("$")
        else:
            v = int(t.alphabet[c])
            parts.append(chr(v) if 32 <= v < 127 else str(v))
    return "".join(parts)
