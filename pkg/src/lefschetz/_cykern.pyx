# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``lefschetz._pykern``.

Same contracts, same deterministic output; entries stay arbitrary-precision
Python integers, the compilation only strips interpreter overhead from the
elimination loops.
"""

from math import gcd

DENSE_FILL_CUTOFF = 0.5


cdef object _content(values):
    cdef object g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


cdef dict _primitive(dict row):
    cdef object g = _content(row.values())
    cdef dict out
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        out = {}
        for c, v in row.items():
            out[c] = v // g
        return out
    return row


cdef dict _eliminate(dict row, dict piv, object col):
    cdef object a = piv[col]
    cdef object b = row[col]
    cdef object g = gcd(a, b)
    cdef object am = a // g
    cdef object bm = b // g
    cdef dict out
    cdef object w
    if am == 1:
        out = dict(row)
    else:
        out = {}
        for c, v in row.items():
            out[c] = am * v
    for c, v in piv.items():
        w = out.get(c, 0) - bm * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return out


cdef tuple _rref_sparse(list rows):
    cdef dict pivots = {}
    cdef dict row, piv
    cdef Py_ssize_t j, k
    for src in rows:
        row = dict(src)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            row = _eliminate(row, piv, lead)
            if row:
                row = _primitive(row)
    cols = sorted(pivots)
    cdef list out = [pivots[c] for c in cols]
    for j in range(len(out) - 1, -1, -1):
        row = out[j]
        for k in range(j + 1, len(out)):
            c = cols[k]
            if c in row:
                row = _eliminate(row, out[k], c)
        out[j] = _primitive(row)
    return out, cols


cdef void _dense_primitive(list row, Py_ssize_t lead, Py_ssize_t ncols):
    cdef object g = 0
    cdef Py_ssize_t i
    cdef object v
    for i in range(lead, ncols):
        v = row[i]
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if row[lead] < 0:
        g = -g
    if g != 1:
        for i in range(lead, ncols):
            if row[i]:
                row[i] //= g


cdef tuple _rref_dense(list rows, Py_ssize_t ncols):
    cdef list placed = []
    cdef list pivot_of = [-1] * ncols
    cdef list row, prow, rj, rk
    cdef Py_ssize_t lead, i, nxt, j, k, lead_j, lead_k
    cdef int pi
    cdef object a, b, g, am, bm
    for row in rows:
        lead = -1
        for i in range(ncols):
            if row[i]:
                lead = i
                break
        while lead >= 0:
            pi = pivot_of[lead]
            if pi < 0:
                _dense_primitive(row, lead, ncols)
                pivot_of[lead] = len(placed)
                placed.append((lead, row))
                break
            prow = placed[pi][1]
            a = prow[lead]
            b = row[lead]
            g = gcd(a, b)
            am = a // g
            bm = b // g
            if am == 1:
                for i in range(lead, ncols):
                    row[i] -= bm * prow[i]
            else:
                for i in range(lead, ncols):
                    row[i] = am * row[i] - bm * prow[i]
            nxt = -1
            for i in range(lead + 1, ncols):
                if row[i]:
                    nxt = i
                    break
            if nxt >= 0:
                _dense_primitive(row, nxt, ncols)
            lead = nxt
    placed.sort(key=lambda item: item[0])
    for j in range(len(placed) - 1, -1, -1):
        lead_j = placed[j][0]
        rj = placed[j][1]
        for k in range(j + 1, len(placed)):
            lead_k = placed[k][0]
            rk = placed[k][1]
            b = rj[lead_k]
            if b:
                a = rk[lead_k]
                g = gcd(a, b)
                am = a // g
                bm = b // g
                if am != 1:
                    for i in range(lead_j, ncols):
                        rj[i] = rj[i] * am
                for i in range(lead_k, ncols):
                    rj[i] = rj[i] - bm * rk[i]
        _dense_primitive(rj, lead_j, ncols)
    cdef list out = []
    cdef list cols = []
    for lead, row in placed:
        cols.append(lead)
        out.append({i: row[i] for i in range(lead, ncols) if row[i]})
    return out, cols


def rref_int(rows, ncols):
    """Reduced echelon form of sparse integer rows; see the interpreted twin."""
    if ncols <= 0 or not rows:
        return [], []
    cdef Py_ssize_t nnz = 0
    for r in rows:
        nnz += len(r)
    cdef list dense
    cdef list row
    if nnz > DENSE_FILL_CUTOFF * len(rows) * ncols:
        dense = []
        for r in rows:
            row = [0] * ncols
            for c, v in r.items():
                row[c] = v
            dense.append(row)
        return _rref_dense(dense, ncols)
    return _rref_sparse(list(rows))


def det_bareiss(mat):
    """Exact determinant of a square integer matrix given as row lists."""
    cdef Py_ssize_t n = len(mat)
    if n == 0:
        return 1
    cdef list m = [list(r) for r in mat]
    cdef int sign = 1
    cdef object prev = 1
    cdef Py_ssize_t i, j, k
    cdef list rk, ri
    cdef object pkk, mik
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = m[k]
        pkk = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pkk - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]
