"""Kernel selection.

The compiled kernels are used when the extension was built and the input
fits their fixed-width limits; everything else runs the pure-Python
kernels. Set ``HEAPALG_PURE=1`` to force the pure-Python path.
"""

import os

from . import _pykernels as py

try:
    if os.environ.get("HEAPALG_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as c
except ImportError:
    c = None

BACKEND = "cython" if c is not None else "python"

# limits shared with _ckernels
MAX_BITS = 64
MAX_Q_DIM = 20
MAX_MOD_P = 1 << 31
_SEED_MASK = (1 << 63) - 1


def order_masks(labels, conc, npieces):
    if c is not None and len(labels) <= MAX_BITS:
        return c.order_masks(labels, conc, npieces)
    return py.order_masks(labels, conc, npieces)


def foata_levels(labels, conc, npieces):
    if c is not None and len(labels) <= MAX_BITS:
        return c.foata_levels(labels, conc, npieces)
    return py.foata_levels(labels, conc, npieces)


def reduction_moves(labels, conc, npieces):
    if c is not None and len(labels) <= MAX_BITS:
        return c.reduction_moves(labels, conc, npieces)
    return py.reduction_moves(labels, conc, npieces)


def reduce_word(labels, conc, npieces, seed=-1):
    if seed >= 0:
        seed &= _SEED_MASK
    if c is not None and len(labels) <= MAX_BITS:
        return c.reduce_word(labels, conc, npieces, seed)
    return py.reduce_word(labels, conc, npieces, seed)


def rank_bits_q(cols, nrows):
    if (c is not None and nrows <= MAX_BITS and len(cols) <= MAX_BITS
            and min(nrows, len(cols)) <= MAX_Q_DIM):
        return c.rank_bits_q(cols, nrows)
    return py.rank_bits_q(cols, nrows)


def rank_bits_mod(cols, nrows, p):
    if c is not None and nrows <= MAX_BITS and len(cols) <= MAX_BITS and p < MAX_MOD_P:
        return c.rank_bits_mod(cols, nrows, p)
    return py.rank_bits_mod(cols, nrows, p)
