# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled equitable partition refinement.

Mirrors ``pcodes._refine_py`` exactly: same splitting rules, same queue
discipline, same invariant mixing, so certificates are identical across
backends.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

ctypedef unsigned long long u64

cdef u64 MASK = 0xFFFFFFFFFFFFFFFFULL
cdef u64 PRIME = 0x100000001B3ULL
cdef u64 SEED = 0x9E3779B97F4A7C15ULL


cdef inline u64 mix(u64 h, u64 v) noexcept:
    return ((h ^ v) * PRIME) & MASK


cdef class Refiner:
    cdef int n
    cdef int[:] indptr
    cdef int[:] indices
    cdef int* cnt
    cdef int* queue
    cdef unsigned char* queued
    cdef int* touched
    cdef int* touched_cells
    cdef unsigned char* tflag
    cdef int* scratch
    cdef int* bucket

    def __cinit__(self, indptr, indices):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int32)
        self.indices = np.ascontiguousarray(indices, dtype=np.int32)
        self.n = len(indptr) - 1
        cdef int n = self.n
        self.cnt = <int*> malloc(n * sizeof(int))
        self.queue = <int*> malloc((n + 1) * sizeof(int))
        self.queued = <unsigned char*> malloc(n)
        self.touched = <int*> malloc(n * sizeof(int))
        self.touched_cells = <int*> malloc(n * sizeof(int))
        self.tflag = <unsigned char*> malloc(n)
        self.scratch = <int*> malloc(2 * n * sizeof(int))
        self.bucket = <int*> malloc((n + 2) * sizeof(int))
        if (self.cnt is NULL or self.queue is NULL or self.queued is NULL or
                self.touched is NULL or self.touched_cells is NULL or
                self.tflag is NULL or self.scratch is NULL or
                self.bucket is NULL):
            raise MemoryError
        memset(self.cnt, 0, n * sizeof(int))
        memset(self.queued, 0, n)
        memset(self.tflag, 0, n)

    def __dealloc__(self):
        free(self.cnt)
        free(self.queue)
        free(self.queued)
        free(self.touched)
        free(self.touched_cells)
        free(self.tflag)
        free(self.scratch)
        free(self.bucket)

    def refine(self, lab_obj, ptn_obj, cell_of_obj, active, int n_cells):
        cdef int[:] lab = lab_obj
        cdef int[:] ptn = ptn_obj
        cdef int[:] cell_of = cell_of_obj
        cdef int n = self.n
        cdef int qhead = 0, qtail = 0
        cdef int s, e, p, v, k, u, cs, ce, sz, i, j
        cdef int n_touched, n_tcells, lo, hi, c, pos, frag_start, big, big_size
        cdef int first, uniform, nfrag
        cdef u64 inv = SEED
        cdef int* cnt = self.cnt
        cdef int* queue = self.queue
        cdef unsigned char* queued = self.queued
        cdef int* touched = self.touched
        cdef int* tcells = self.touched_cells
        cdef int* members = self.scratch
        cdef int* sorted_members = self.scratch + n
        cdef int* bucket = self.bucket
        cdef int qcap = n + 1

        for s in active:
            if not queued[s]:
                queue[qtail] = s
                qtail = (qtail + 1) % qcap
                queued[s] = 1

        while qhead != qtail and n_cells < n:
            s = queue[qhead]
            qhead = (qhead + 1) % qcap
            queued[s] = 0
            e = s
            while ptn[e]:
                e += 1
            n_touched = 0
            n_tcells = 0
            for p in range(s, e + 1):
                v = lab[p]
                for k in range(self.indptr[v], self.indptr[v + 1]):
                    u = self.indices[k]
                    if cnt[u] == 0:
                        touched[n_touched] = u
                        n_touched += 1
                        cs = cell_of[u]
                        if not self.tflag[cs]:
                            self.tflag[cs] = 1
                            tcells[n_tcells] = cs
                            n_tcells += 1
                    cnt[u] += 1
            for j in range(n_tcells):
                self.tflag[tcells[j]] = 0
            # process touched cells in position order
            _isort(tcells, n_tcells)
            for i in range(n_tcells):
                cs = tcells[i]
                ce = cs
                while ptn[ce]:
                    ce += 1
                if ce == cs:
                    inv = mix(inv, <u64> cs)
                    inv = mix(inv, <u64> cnt[lab[cs]])
                    continue
                sz = ce - cs + 1
                first = cnt[lab[cs]]
                uniform = 1
                lo = first
                hi = first
                for p in range(cs + 1, ce + 1):
                    c = cnt[lab[p]]
                    if c != first:
                        uniform = 0
                    if c < lo:
                        lo = c
                    if c > hi:
                        hi = c
                if uniform:
                    inv = mix(inv, <u64> cs)
                    inv = mix(inv, <u64> first)
                    continue
                # stable counting sort of the cell by count value
                for c in range(lo, hi + 2):
                    bucket[c - lo] = 0
                for p in range(cs, ce + 1):
                    members[p - cs] = lab[p]
                    bucket[cnt[lab[p]] - lo + 1] += 1
                for c in range(1, hi - lo + 2):
                    bucket[c] += bucket[c - 1]
                for p in range(sz):
                    v = members[p]
                    pos = bucket[cnt[v] - lo]
                    bucket[cnt[v] - lo] += 1
                    sorted_members[pos] = v
                inv = mix(inv, <u64> cs)
                # write back, find fragment boundaries, update state
                nfrag = 0
                frag_start = cs
                big = 0
                big_size = 0
                for p in range(sz):
                    lab[cs + p] = sorted_members[p]
                for p in range(sz):
                    v = sorted_members[p]
                    if p + 1 < sz and cnt[sorted_members[p + 1]] != cnt[v]:
                        inv = mix(inv, <u64> cnt[v])
                        inv = mix(inv, <u64> (cs + p - frag_start + 1))
                        # close fragment [frag_start, cs+p]
                        for j in range(frag_start, cs + p + 1):
                            cell_of[lab[j]] = frag_start
                            ptn[j] = 1 if j < cs + p else 0
                        if cs + p - frag_start + 1 > big_size:
                            big_size = cs + p - frag_start + 1
                            big = nfrag
                        members[nfrag] = frag_start  # reuse as fragment starts
                        nfrag += 1
                        frag_start = cs + p + 1
                inv = mix(inv, <u64> cnt[sorted_members[sz - 1]])
                inv = mix(inv, <u64> (ce - frag_start + 1))
                for j in range(frag_start, ce + 1):
                    cell_of[lab[j]] = frag_start
                    ptn[j] = 1 if j < ce else 0
                if ce - frag_start + 1 > big_size:
                    big_size = ce - frag_start + 1
                    big = nfrag
                members[nfrag] = frag_start
                nfrag += 1
                n_cells += nfrag - 1
                if queued[cs]:
                    for j in range(1, nfrag):
                        p = members[j]
                        if not queued[p]:
                            queue[qtail] = p
                            qtail = (qtail + 1) % qcap
                            queued[p] = 1
                else:
                    for j in range(nfrag):
                        if j == big:
                            continue
                        p = members[j]
                        if not queued[p]:
                            queue[qtail] = p
                            qtail = (qtail + 1) % qcap
                            queued[p] = 1
            for i in range(n_touched):
                cnt[touched[i]] = 0
        # drain flags for leftover queue entries so the next call is clean
        while qhead != qtail:
            queued[queue[qhead]] = 0
            qhead = (qhead + 1) % qcap
        return int(inv), n_cells


cdef void _isort(int* a, int n) noexcept:
    cdef int i, j, key
    for i in range(1, n):
        key = a[i]
        j = i - 1
        while j >= 0 and a[j] > key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key
