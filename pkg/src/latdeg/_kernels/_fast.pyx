# cython: language_level=3
"""Compiled kernels mirroring ``latdeg._kernels.pure``.

Masks cross the boundary as Python ints and are unpacked into C flag
arrays; the inner loops run on raw C tables.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

NAME = "fast"


cdef class Table:
    cdef int n
    cdef int *t      # n*n multiplication table, row-major
    cdef int *inv    # n inverses

    def __cinit__(self, rows):
        cdef int n = len(rows)
        cdef int a, b, v
        self.n = n
        self.t = <int *> PyMem_Malloc(n * n * sizeof(int))
        self.inv = <int *> PyMem_Malloc(n * sizeof(int))
        if self.t == NULL or self.inv == NULL:
            raise MemoryError()
        for a in range(n):
            row = rows[a]
            for b in range(n):
                v = row[b]
                self.t[a * n + b] = v
                if v == 0:
                    self.inv[a] = b

    def __dealloc__(self):
        if self.t != NULL:
            PyMem_Free(self.t)
        if self.inv != NULL:
            PyMem_Free(self.inv)


def prepare_table(rows):
    return Table(rows)


cdef int _unpack(object mask, unsigned char *flags, int *elems, int n):
    # flags[i]=1 and elems[0..cnt) for each set bit; returns cnt
    cdef bytes bs = mask.to_bytes((n + 7) // 8, "little")
    cdef const unsigned char *p = bs
    cdef int i, cnt = 0
    for i in range(n):
        if p[i >> 3] >> (i & 7) & 1:
            flags[i] = 1
            elems[cnt] = i
            cnt += 1
        else:
            flags[i] = 0
    return cnt


cdef object _pack(unsigned char *flags, int n):
    cdef bytearray buf = bytearray((n + 7) // 8)
    cdef int i
    for i in range(n):
        if flags[i]:
            buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(bytes(buf), "little")


cdef int _close(Table tab, unsigned char *flags, int *elems, int cnt):
    # extend (flags, elems) to the generated subgroup; returns new count
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef int i = 0, j, x, z
    if not flags[0]:
        flags[0] = 1
        elems[cnt] = 0
        cnt += 1
    while i < cnt:
        x = elems[i]
        j = 0
        while j < cnt:
            z = t[x * n + elems[j]]
            if not flags[z]:
                flags[z] = 1
                elems[cnt] = z
                cnt += 1
            z = t[elems[j] * n + x]
            if not flags[z]:
                flags[z] = 1
                elems[cnt] = z
                cnt += 1
            j += 1
        i += 1
    return cnt


def closure_mask(Table tab, mask):
    cdef int n = tab.n
    cdef unsigned char *flags = <unsigned char *> PyMem_Malloc(n)
    cdef int *elems = <int *> PyMem_Malloc(n * sizeof(int))
    if flags == NULL or elems == NULL:
        raise MemoryError()
    try:
        _close(tab, flags, elems, _unpack(mask, flags, elems, n))
        return _pack(flags, n)
    finally:
        PyMem_Free(flags)
        PyMem_Free(elems)


def product_mask(Table tab, amask, bmask):
    cdef int n = tab.n
    cdef unsigned char *buf = <unsigned char *> PyMem_Malloc(3 * n)
    cdef int *ae = <int *> PyMem_Malloc(2 * n * sizeof(int))
    if buf == NULL or ae == NULL:
        raise MemoryError()
    cdef unsigned char *af = buf
    cdef unsigned char *bf = buf + n
    cdef unsigned char *out = buf + 2 * n
    cdef int *be = ae + n
    cdef int i, j, na, nb
    cdef int *t = tab.t
    try:
        na = _unpack(amask, af, ae, n)
        nb = _unpack(bmask, bf, be, n)
        for i in range(n):
            out[i] = 0
        for i in range(na):
            for j in range(nb):
                out[t[ae[i] * n + be[j]]] = 1
        return _pack(out, n)
    finally:
        PyMem_Free(buf)
        PyMem_Free(ae)


def commutator_closure_mask(Table tab, hmask, kmask):
    cdef int n = tab.n
    cdef unsigned char *buf = <unsigned char *> PyMem_Malloc(3 * n)
    cdef int *he = <int *> PyMem_Malloc(3 * n * sizeof(int))
    if buf == NULL or he == NULL:
        raise MemoryError()
    cdef unsigned char *hf = buf
    cdef unsigned char *kf = buf + n
    cdef unsigned char *gf = buf + 2 * n
    cdef int *ke = he + n
    cdef int *ge = he + 2 * n
    cdef int *t = tab.t
    cdef int *inv = tab.inv
    cdef int i, j, h, k, c, nh, nk, cnt
    try:
        nh = _unpack(hmask, hf, he, n)
        nk = _unpack(kmask, kf, ke, n)
        for i in range(n):
            gf[i] = 0
        gf[0] = 1
        ge[0] = 0
        cnt = 1
        for i in range(nh):
            h = he[i]
            for j in range(nk):
                k = ke[j]
                c = t[t[t[inv[h] * n + inv[k]] * n + h] * n + k]
                if not gf[c]:
                    gf[c] = 1
                    ge[cnt] = c
                    cnt += 1
        _close(tab, gf, ge, cnt)
        return _pack(gf, n)
    finally:
        PyMem_Free(buf)
        PyMem_Free(he)


def centralizer_mask(Table tab, kmask, hmask):
    cdef int n = tab.n
    cdef unsigned char *buf = <unsigned char *> PyMem_Malloc(3 * n)
    cdef int *ke = <int *> PyMem_Malloc(2 * n * sizeof(int))
    if buf == NULL or ke == NULL:
        raise MemoryError()
    cdef unsigned char *kf = buf
    cdef unsigned char *hf = buf + n
    cdef unsigned char *out = buf + 2 * n
    cdef int *he = ke + n
    cdef int *t = tab.t
    cdef int i, j, k, nk, nh, ok
    try:
        nk = _unpack(kmask, kf, ke, n)
        nh = _unpack(hmask, hf, he, n)
        for i in range(n):
            out[i] = 0
        for i in range(nk):
            k = ke[i]
            ok = 1
            for j in range(nh):
                if t[k * n + he[j]] != t[he[j] * n + k]:
                    ok = 0
                    break
            if ok:
                out[k] = 1
        return _pack(out, n)
    finally:
        PyMem_Free(buf)
        PyMem_Free(ke)


def conjugacy_class_ids(Table tab):
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef int *inv = tab.inv
    cdef int *ids = <int *> PyMem_Malloc(n * sizeof(int))
    if ids == NULL:
        raise MemoryError()
    cdef int g, a, next_id = 0
    try:
        for g in range(n):
            ids[g] = -1
        for g in range(n):
            if ids[g] >= 0:
                continue
            for a in range(n):
                ids[t[t[a * n + g] * n + inv[a]]] = next_id
            next_id += 1
        return [ids[g] for g in range(n)]
    finally:
        PyMem_Free(ids)


def count_commuting_pairs(Table tab):
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef long long total = 0
    cdef int a, b
    for a in range(n):
        for b in range(n):
            if t[a * n + b] == t[b * n + a]:
                total += 1
    return total


def sum_centralizer_orders(Table tab, hmask, kmask):
    cdef int n = tab.n
    cdef unsigned char *buf = <unsigned char *> PyMem_Malloc(2 * n)
    cdef int *he = <int *> PyMem_Malloc(2 * n * sizeof(int))
    if buf == NULL or he == NULL:
        raise MemoryError()
    cdef int *ke = he + n
    cdef int *t = tab.t
    cdef int i, j, h, nh, nk
    cdef long long total = 0
    try:
        nh = _unpack(hmask, buf, he, n)
        nk = _unpack(kmask, buf + n, ke, n)
        for i in range(nh):
            h = he[i]
            for j in range(nk):
                if t[h * n + ke[j]] == t[ke[j] * n + h]:
                    total += 1
        return total
    finally:
        PyMem_Free(buf)
        PyMem_Free(he)


cdef long long _rec(int *ctab, int *elems, int m, int n, int depth, int last, int acc):
    cdef int *row = ctab + acc * n
    cdef long long s = 0
    cdef int i
    if depth == last:
        for i in range(m):
            if row[elems[i]] == 0:
                s += 1
        return s
    for i in range(m):
        s += _rec(ctab, elems, m, n, depth + 1, last, row[elems[i]])
    return s


def count_trivial_iterated_commutators(Table tab, int brackets, mask):
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef int *inv = tab.inv
    cdef unsigned char *flags = <unsigned char *> PyMem_Malloc(n)
    cdef int *elems = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *ctab = <int *> PyMem_Malloc(n * n * sizeof(int))
    if flags == NULL or elems == NULL or ctab == NULL:
        raise MemoryError()
    cdef int a, b, m, i
    cdef long long total = 0
    try:
        m = _unpack(mask, flags, elems, n)
        if brackets == 0:
            return 1 if flags[0] else 0
        for a in range(n):
            for b in range(n):
                ctab[a * n + b] = t[t[t[inv[a] * n + inv[b]] * n + a] * n + b]
        for i in range(m):
            total += _rec(ctab, elems, m, n, 1, brackets, elems[i])
        return total
    finally:
        PyMem_Free(flags)
        PyMem_Free(elems)
        PyMem_Free(ctab)


def is_associative(Table tab):
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef int a, b, c, ab
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return False
    return True


def is_normal_mask(Table tab, mask):
    cdef int n = tab.n
    cdef int *t = tab.t
    cdef int *inv = tab.inv
    cdef unsigned char *flags = <unsigned char *> PyMem_Malloc(n)
    cdef int *elems = <int *> PyMem_Malloc(n * sizeof(int))
    if flags == NULL or elems == NULL:
        raise MemoryError()
    cdef int a, i, m
    try:
        m = _unpack(mask, flags, elems, n)
        for a in range(n):
            for i in range(m):
                if not flags[t[t[a * n + elems[i]] * n + inv[a]]]:
                    return False
        return True
    finally:
        PyMem_Free(flags)
        PyMem_Free(elems)
