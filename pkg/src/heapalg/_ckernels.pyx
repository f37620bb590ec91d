# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics match ``_pykernels`` exactly.

Callers guarantee word length <= 64 and row count <= 64, so every order
and column fits a uint64. ``rank_bits_q`` additionally requires
min(rows, cols) <= 20, which keeps every Bareiss minor of a 0/1 matrix
(and products of two of them) inside int64.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int clz64 "__builtin_clzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int _hibit(uint64_t x) noexcept nogil:
    return 63 - clz64(x)


cdef void _order(int n, const int* labels, const unsigned char* conc, int npieces,
                 uint64_t* pred, uint64_t* succ) noexcept nogil:
    cdef int last[MAXN * 4]
    cdef int* lastp = last
    cdef int i, j, q, row
    cdef uint64_t acc, m, low
    # npieces may exceed the stack buffer; fall back to a scan of earlier positions
    if npieces <= MAXN * 4:
        for q in range(npieces):
            lastp[q] = -1
        for j in range(n):
            row = labels[j] * npieces
            acc = 0
            for q in range(npieces):
                i = lastp[q]
                if i >= 0 and conc[row + q]:
                    acc |= pred[i] | ((<uint64_t>1) << i)
            pred[j] = acc
            lastp[labels[j]] = j
    else:
        for j in range(n):
            row = labels[j] * npieces
            acc = 0
            for i in range(j):
                if conc[row + labels[i]]:
                    acc |= pred[i] | ((<uint64_t>1) << i)
            pred[j] = acc
    for j in range(n):
        succ[j] = 0
    for j in range(n):
        m = pred[j]
        while m:
            low = m & (~m + 1)
            succ[_hibit(low)] |= (<uint64_t>1) << j
            m ^= low


def order_masks(labels, const unsigned char[:] conc, int npieces):
    cdef int n = len(labels)
    cdef int lab[MAXN]
    cdef uint64_t pred[MAXN]
    cdef uint64_t succ[MAXN]
    cdef int j
    for j in range(n):
        lab[j] = labels[j]
    _order(n, lab, &conc[0], npieces, pred, succ)
    return [pred[j] for j in range(n)], [succ[j] for j in range(n)]


def foata_levels(labels, const unsigned char[:] conc, int npieces):
    cdef int n = len(labels)
    cdef int lab[MAXN]
    cdef int level[MAXN]
    cdef int i, j, lv
    for j in range(n):
        lab[j] = labels[j]
    for j in range(n):
        lv = 0
        for i in range(j):
            if conc[lab[j] * npieces + lab[i]] and level[i] + 1 > lv:
                lv = level[i] + 1
        level[j] = lv
    return [level[j] for j in range(n)]


cdef inline uint64_t _splitmix(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15ULL
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBULL
    return z ^ (z >> 31)


def reduction_moves(labels, const unsigned char[:] conc, int npieces):
    cdef int n = len(labels)
    cdef int lab[MAXN]
    cdef uint64_t pred[MAXN]
    cdef uint64_t succ[MAXN]
    cdef int j
    for j in range(n):
        lab[j] = labels[j]
    _order(n, lab, &conc[0], npieces, pred, succ)
    moves = []
    cdef int x, z
    cdef uint64_t between
    for z in range(n):
        x = -1
        for j in range(z - 1, -1, -1):
            if lab[j] == lab[z]:
                x = j
                break
        if x >= 0:
            between = succ[x] & pred[z]
            if between == 0:
                moves.append((0, x, -1, z))
            elif (between & (between - 1)) == 0:
                moves.append((1, x, _hibit(between), z))
    return moves


def reduce_word(labels, const unsigned char[:] conc, int npieces, long long seed):
    cdef int n = len(labels)
    cdef int lab[MAXN]
    cdef int kept[MAXN]
    cdef uint64_t pred[MAXN]
    cdef uint64_t succ[MAXN]
    cdef int mk[MAXN]
    cdef int mx[MAXN]
    cdef int my[MAXN]
    cdef int mz[MAXN]
    cdef int nm, j, x, z, best, m = 0
    cdef uint64_t between
    cdef uint64_t state = <uint64_t>seed
    cdef int d1, d2
    for j in range(n):
        lab[j] = labels[j]
        kept[j] = j
    while True:
        _order(n, lab, &conc[0], npieces, pred, succ)
        nm = 0
        for z in range(n):
            x = -1
            for j in range(z - 1, -1, -1):
                if lab[j] == lab[z]:
                    x = j
                    break
            if x >= 0:
                between = succ[x] & pred[z]
                if between == 0:
                    mk[nm] = 0; mx[nm] = x; my[nm] = -1; mz[nm] = z
                    nm += 1
                elif (between & (between - 1)) == 0:
                    mk[nm] = 1; mx[nm] = x; my[nm] = _hibit(between); mz[nm] = z
                    nm += 1
        if nm == 0:
            return m, [kept[j] for j in range(n)]
        if seed < 0:
            best = 0
            for j in range(1, nm):
                if mk[j] < mk[best] or (mk[j] == mk[best] and mx[j] < mx[best]):
                    best = j
        else:
            best = <int>(_splitmix(&state) % <uint64_t>nm)
        if mk[best] == 0:
            m += 1
            d1 = mz[best]
            d2 = -1
        else:
            d1 = my[best]
            d2 = mz[best]
        # compact, dropping d1 and d2
        x = 0
        for j in range(n):
            if j != d1 and j != d2:
                lab[x] = lab[j]
                kept[x] = kept[j]
                x += 1
        n = x


def rank_bits_q(cols, int nrows):
    cdef int ncols = len(cols)
    cdef int64_t mat[MAXN][MAXN]
    cdef uint64_t cbits
    cdef int r, c, j, piv, rank = 0
    cdef int64_t p, f, prev = 1, tmp
    for c in range(ncols):
        cbits = cols[c]
        for r in range(nrows):
            mat[r][c] = (cbits >> r) & 1
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                tmp = mat[rank][j]
                mat[rank][j] = mat[piv][j]
                mat[piv][j] = tmp
        p = mat[rank][c]
        for r in range(rank + 1, nrows):
            f = mat[r][c]
            for j in range(c + 1, ncols):
                mat[r][j] = (p * mat[r][j] - f * mat[rank][j]) // prev
            mat[r][c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef int64_t _powmod(int64_t b, int64_t e, int64_t m) noexcept nogil:
    cdef int64_t r = 1
    b %= m
    if b < 0:
        b += m
    while e > 0:
        if e & 1:
            r = (r * b) % m
        b = (b * b) % m
        e >>= 1
    return r


def rank_bits_mod(cols, int nrows, long long p):
    cdef int ncols = len(cols)
    cdef uint64_t basis[MAXN]
    cdef uint64_t cbits, b
    cdef int r, c, j, piv, hi, rank = 0
    cdef int64_t mat[MAXN][MAXN]
    cdef int64_t f, inv, tmp
    if p == 2:
        for r in range(MAXN):
            basis[r] = 0
        for c in range(ncols):
            cbits = cols[c]
            while cbits:
                hi = _hibit(cbits)
                b = basis[hi]
                if b == 0:
                    basis[hi] = cbits
                    rank += 1
                    break
                cbits ^= b
        return rank
    for c in range(ncols):
        cbits = cols[c]
        for r in range(nrows):
            mat[r][c] = (cbits >> r) & 1
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c] % p != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                tmp = mat[rank][j]
                mat[rank][j] = mat[piv][j]
                mat[piv][j] = tmp
        inv = _powmod(mat[rank][c], p - 2, p)
        for r in range(rank + 1, nrows):
            f = (mat[r][c] * inv) % p
            if f:
                for j in range(c, ncols):
                    mat[r][j] = ((mat[r][j] - f * mat[rank][j]) % p + p) % p
        rank += 1
        if rank == nrows:
            break
    return rank
