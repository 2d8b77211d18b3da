# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mirror of ``_pykernels``.

BFS runs on flat C arrays. The elimination and characteristic-polynomial
kernels keep Python ints for the arithmetic (entries routinely exceed
machine range) but compile away the interpreter loop overhead. Outputs
are bit-identical to the pure backend.
"""

from libc.stdlib cimport malloc, free

BACKEND = "c"


def bfs_all_pairs(Py_ssize_t n, adj):
    """All-pairs BFS distances over an adjacency list; -1 = unreachable."""
    cdef Py_ssize_t total = 0, i, j, u, w, head, tail, du
    cdef int *flat
    cdef int *offs
    cdef int *dist
    cdef int *queue
    for i in range(n):
        total += len(adj[i])
    flat = <int *> malloc((total if total > 0 else 1) * sizeof(int))
    offs = <int *> malloc((n + 1) * sizeof(int))
    dist = <int *> malloc(n * sizeof(int))
    queue = <int *> malloc(n * sizeof(int))
    if flat == NULL or offs == NULL or dist == NULL or queue == NULL:
        free(flat); free(offs); free(dist); free(queue)
        raise MemoryError()
    try:
        j = 0
        for i in range(n):
            offs[i] = j
            for w in adj[i]:
                flat[j] = w
                j += 1
        offs[n] = j
        result = []
        for src in range(n):
            for i in range(n):
                dist[i] = -1
            dist[src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u] + 1
                for j in range(offs[u], offs[u + 1]):
                    w = flat[j]
                    if dist[w] < 0:
                        dist[w] = du
                        queue[tail] = w
                        tail += 1
            result.append([dist[i] for i in range(n)])
        return result
    finally:
        free(flat); free(offs); free(dist); free(queue)


def bareiss_echelon(rows):
    """Fraction-free row echelon; see the pure backend for the contract."""
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(a)
    cdef Py_ssize_t ncols = len(a[0]) if nrows else 0
    cdef Py_ssize_t r = 0, c, k, i, j
    cdef int sign = 1
    cdef list pivot_cols = []
    cdef list arow, irow
    cdef object prev = 1, piv, head
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and a[k][c] == 0:
            k += 1
        if k == nrows:
            continue
        if k != r:
            a[k], a[r] = a[r], a[k]
            sign = -sign
        arow = a[r]
        piv = arow[c]
        for i in range(r + 1, nrows):
            irow = a[i]
            head = irow[c]
            if head == 0:
                for j in range(c + 1, ncols):
                    irow[j] = (piv * irow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    irow[j] = (piv * irow[j] - head * arow[j]) // prev
                irow[c] = 0
        prev = piv
        pivot_cols.append(c)
        r += 1
    return r, sign, pivot_cols, a


def berkowitz_charpoly(rows):
    """Division-free characteristic polynomial, monic, highest degree first."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t start, m, k, t, i, j, jmax
    cdef list poly = [1]
    cdef list col, r_vec, v, sub, new, mr
    cdef object a, s
    for start in range(n - 1, -1, -1):
        m = n - start
        a = rows[start][start]
        col = [1, -a]
        if m > 1:
            r_vec = list(rows[start][start + 1:])
            v = [rows[i][start] for i in range(start + 1, n)]
            sub = [list(rows[i][start + 1:]) for i in range(start + 1, n)]
            for k in range(m - 1):
                s = 0
                for t in range(m - 1):
                    s += r_vec[t] * v[t]
                col.append(-s)
                if k < m - 2:
                    new = []
                    for i in range(m - 1):
                        mr = sub[i]
                        s = 0
                        for t in range(m - 1):
                            s += mr[t] * v[t]
                        new.append(s)
                    v = new
        new = []
        for i in range(m + 1):
            s = 0
            jmax = i if i < m - 1 else m - 1
            for j in range(jmax + 1):
                s += col[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly
