"""Pure-Python kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
line for line. Heaps are words of piece indices, orders are bitmasks over
word positions, and ``conc`` is the row-major 0/1 concurrency matrix.
"""

MASK64 = (1 << 64) - 1


def order_masks(labels, conc, npieces):
    """Strict predecessor and successor masks of the heap of a word."""
    n = len(labels)
    pred = [0] * n
    last = [-1] * npieces
    for j in range(n):
        row = labels[j] * npieces
        acc = 0
        for q in range(npieces):
            i = last[q]
            if i >= 0 and conc[row + q]:
                acc |= pred[i] | (1 << i)
        pred[j] = acc
        last[labels[j]] = j
    succ = [0] * n
    for j in range(n):
        m = pred[j]
        bit = 1 << j
        while m:
            low = m & -m
            succ[low.bit_length() - 1] |= bit
            m ^= low
    return pred, succ


def foata_levels(labels, conc, npieces):
    """Layer index of each position in the Cartier-Foata decomposition."""
    n = len(labels)
    level = [0] * n
    last = [-1] * npieces
    for j in range(n):
        row = labels[j] * npieces
        lv = 0
        for q in range(npieces):
            i = last[q]
            if i >= 0 and conc[row + q] and level[i] + 1 > lv:
                lv = level[i] + 1
        level[j] = lv
        last[labels[j]] = j
    return level


def splitmix64(state):
    """One splitmix64 step; returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def reduction_moves(labels, conc, npieces):
    """Applicable contractions, as ``(kind, x, y, z)`` position tuples.

    ``kind`` 0 is a covering pair x < z of equal label (y is -1); kind 1 is
    x < y < z with y the only element strictly between. Listed by z.
    """
    pred, succ = order_masks(labels, conc, npieces)
    last = [-1] * npieces
    moves = []
    for z in range(len(labels)):
        x = last[labels[z]]
        if x >= 0:
            between = succ[x] & pred[z]
            if between == 0:
                moves.append((0, x, -1, z))
            elif between & (between - 1) == 0:
                moves.append((1, x, between.bit_length() - 1, z))
        last[labels[z]] = z
    return moves


def reduce_word(labels, conc, npieces, seed):
    """Contract balanced convex chains until none of length 2 or 3 remain.

    Returns ``(m, kept)``: the number of length-2 contractions and the
    surviving original positions in increasing order. A negative ``seed``
    picks the move minimal in (kind, x); otherwise moves are drawn with
    splitmix64 seeded by ``seed``.
    """
    kept = list(range(len(labels)))
    cur = list(labels)
    m = 0
    state = seed & MASK64
    while True:
        moves = reduction_moves(cur, conc, npieces)
        if not moves:
            return m, kept
        if seed < 0:
            best = moves[0]
            for mv in moves:
                if mv[0] < best[0] or (mv[0] == best[0] and mv[1] < best[1]):
                    best = mv
        else:
            state, r = splitmix64(state)
            best = moves[r % len(moves)]
        kind, x, y, z = best
        if kind == 0:
            m += 1
            drop = (z,)
        else:
            drop = (y, z)
        for pos in sorted(drop, reverse=True):
            del kept[pos]
            del cur[pos]


def rank_bits_q(cols, nrows):
    """Rank over the rationals of a 0/1 matrix given as column bitmasks.

    Fraction-free (Bareiss) elimination on Python integers.
    """
    ncols = len(cols)
    mat = [[(c >> r) & 1 for c in cols] for r in range(nrows)]
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        top = mat[rank]
        p = top[c]
        for r in range(rank + 1, nrows):
            row = mat[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_bits_mod(cols, nrows, p):
    """Rank over GF(p) of a 0/1 matrix given as column bitmasks."""
    if p == 2:
        basis = {}
        rank = 0
        for c in cols:
            while c:
                hi = c.bit_length() - 1
                b = basis.get(hi)
                if b is None:
                    basis[hi] = c
                    rank += 1
                    break
                c ^= b
        return rank
    ncols = len(cols)
    mat = [[(c >> r) & 1 for c in cols] for r in range(nrows)]
    rank = 0
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c] % p:
                piv = r
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        top = mat[rank]
        inv = pow(top[c], p - 2, p)
        for r in range(rank + 1, nrows):
            row = mat[r]
            f = row[c] * inv % p
            if f:
                for j in range(c, ncols):
                    row[j] = (row[j] - f * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank
