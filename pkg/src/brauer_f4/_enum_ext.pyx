# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled monoid enumeration; same algorithm and output as ``_enum_py``."""
from libc.stdlib cimport malloc, realloc, free

from ._enum_py import DeltaCollapse, EnumerationOverflow


cdef class _Enumerator:
    cdef int ngens
    cdef long cap, n, max_nodes
    cdef int *table
    cdef long *wt
    cdef int *parent
    cdef long *pot
    cdef long qcap, qlen
    cdef int *qa
    cdef int *qb
    cdef long *qd

    def __cinit__(self, int ngens, long max_nodes):
        self.ngens = ngens
        self.max_nodes = max_nodes
        self.cap = 1024
        self.n = 0
        self.table = <int *> malloc(self.cap * ngens * sizeof(int))
        self.wt = <long *> malloc(self.cap * ngens * sizeof(long))
        self.parent = <int *> malloc(self.cap * sizeof(int))
        self.pot = <long *> malloc(self.cap * sizeof(long))
        self.qcap = 1024
        self.qlen = 0
        self.qa = <int *> malloc(self.qcap * sizeof(int))
        self.qb = <int *> malloc(self.qcap * sizeof(int))
        self.qd = <long *> malloc(self.qcap * sizeof(long))
        if not (self.table and self.wt and self.parent and self.pot and self.qa and self.qb and self.qd):
            raise MemoryError()

    def __dealloc__(self):
        free(self.table)
        free(self.wt)
        free(self.parent)
        free(self.pot)
        free(self.qa)
        free(self.qb)
        free(self.qd)

    cdef int new_node(self) except -1:
        cdef long k
        cdef int g
        if self.n >= self.max_nodes:
            raise EnumerationOverflow(f"more than {self.max_nodes} nodes defined")
        if self.n == self.cap:
            self.cap *= 2
            self.table = <int *> realloc(self.table, self.cap * self.ngens * sizeof(int))
            self.wt = <long *> realloc(self.wt, self.cap * self.ngens * sizeof(long))
            self.parent = <int *> realloc(self.parent, self.cap * sizeof(int))
            self.pot = <long *> realloc(self.pot, self.cap * sizeof(long))
            if not (self.table and self.wt and self.parent and self.pot):
                raise MemoryError()
        k = self.n * self.ngens
        for g in range(self.ngens):
            self.table[k + g] = -1
            self.wt[k + g] = 0
        self.parent[self.n] = <int> self.n
        self.pot[self.n] = 0
        self.n += 1
        return <int> (self.n - 1)

    cdef inline int find(self, int x, long *acc_out):
        cdef int x0 = x, root, y, nxt
        cdef long acc = 0, rem, p
        while self.parent[x] != x:
            acc += self.pot[x]
            x = self.parent[x]
        root = x
        y = x0
        rem = acc
        while self.parent[y] != y:
            nxt = self.parent[y]
            p = self.pot[y]
            self.parent[y] = root
            self.pot[y] = rem
            rem -= p
            y = nxt
        acc_out[0] = acc
        return root

    cdef int push(self, int a, int b, long d) except -1:
        if self.qlen == self.qcap:
            self.qcap *= 2
            self.qa = <int *> realloc(self.qa, self.qcap * sizeof(int))
            self.qb = <int *> realloc(self.qb, self.qcap * sizeof(int))
            self.qd = <long *> realloc(self.qd, self.qcap * sizeof(long))
            if not (self.qa and self.qb and self.qd):
                raise MemoryError()
        self.qa[self.qlen] = a
        self.qb[self.qlen] = b
        self.qd[self.qlen] = d
        self.qlen += 1
        return 0

    cdef int coincide(self, int a, int b, long d) except -1:
        cdef int ra, rb, t, tb, g, tmp
        cdef long pa, pb, dd, w, base_a, base_b
        self.push(a, b, d)
        while self.qlen > 0:
            self.qlen -= 1
            a = self.qa[self.qlen]
            b = self.qb[self.qlen]
            d = self.qd[self.qlen]
            ra = self.find(a, &pa)
            rb = self.find(b, &pb)
            dd = d + pb - pa
            if ra == rb:
                if dd != 0:
                    raise DeltaCollapse(f"node {ra} would equal delta^{dd} times itself")
                continue
            if ra < rb:
                tmp = ra
                ra = rb
                rb = tmp
                dd = -dd
            self.parent[ra] = rb
            self.pot[ra] = dd
            base_a = ra * self.ngens
            base_b = rb * self.ngens
            for g in range(self.ngens):
                t = self.table[base_a + g]
                if t < 0:
                    continue
                w = self.wt[base_a + g] - dd
                tb = self.table[base_b + g]
                if tb < 0:
                    self.table[base_b + g] = t
                    self.wt[base_b + g] = w
                else:
                    self.push(t, tb, self.wt[base_b + g] - w)
        return 0

    cdef int trace(self, int x, int *word, int length, long *acc_out) except -1:
        cdef long acc = 0, p, k
        cdef int i, t
        for i in range(length):
            x = self.find(x, &p)
            acc += p
            k = <long> x * self.ngens + word[i]
            t = self.table[k]
            if t < 0:
                t = self.new_node()
                self.table[k] = t
                self.wt[k] = 0
            acc += self.wt[k]
            x = t
        x = self.find(x, &p)
        acc_out[0] = acc + p
        return x

    def run(self, relations):
        cdef int nrel = len(relations)
        cdef int total = 0, i, j, r, g, a, b
        cdef long wa, wb, x
        cdef int *data
        cdef int *start
        cdef int *llen
        cdef int *rlen
        cdef long *shift
        cdef int single[1]
        for lhs, rhs, s in relations:
            total += len(lhs) + len(rhs)
        data = <int *> malloc((total + 1) * sizeof(int))
        start = <int *> malloc((nrel + 1) * sizeof(int))
        llen = <int *> malloc((nrel + 1) * sizeof(int))
        rlen = <int *> malloc((nrel + 1) * sizeof(int))
        shift = <long *> malloc((nrel + 1) * sizeof(long))
        try:
            j = 0
            for i, (lhs, rhs, s) in enumerate(relations):
                start[i] = j
                llen[i] = len(lhs)
                rlen[i] = len(rhs)
                shift[i] = s
                for g in lhs:
                    data[j] = g
                    j += 1
                for g in rhs:
                    data[j] = g
                    j += 1
            self.new_node()
            x = 0
            while x < self.n:
                if self.parent[x] == x:
                    for r in range(nrel):
                        if self.parent[x] != x:
                            break
                        a = self.trace(<int> x, data + start[r], llen[r], &wa)
                        b = self.trace(<int> x, data + start[r] + llen[r], rlen[r], &wb)
                        self.coincide(a, b, shift[r] + wb - wa)
                    if self.parent[x] == x:
                        for g in range(self.ngens):
                            single[0] = g
                            self.trace(<int> x, single, 1, &wa)
                x += 1
        finally:
            free(data)
            free(start)
            free(llen)
            free(rlen)
            free(shift)

    def collect(self):
        cdef long v, k
        cdef int g, t, root
        cdef long p
        ids = {}
        for v in range(self.n):
            if self.parent[v] == v:
                ids[v] = len(ids)
        m = len(ids)
        targets = [0] * (m * self.ngens)
        weights = [0] * (m * self.ngens)
        for v, i in ids.items():
            for g in range(self.ngens):
                k = v * self.ngens + g
                t = self.table[k]
                root = self.find(t, &p)
                targets[i * self.ngens + g] = ids[root]
                weights[i * self.ngens + g] = self.wt[k] + p
        return m, targets, weights, self.n


def enumerate_monoid(int ngens, relations, long max_nodes=4_000_000):
    """Compiled twin of :func:`brauer_f4._enum_py.enumerate_monoid`."""
    e = _Enumerator(ngens, max_nodes)
    e.run([(tuple(l), tuple(r), int(s)) for l, r, s in relations])
    return e.collect()
