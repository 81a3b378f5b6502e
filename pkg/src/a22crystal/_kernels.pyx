# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport malloc, free


cdef inline long _max2(long a, long b):
    return a if a > b else b


def energy_h(long x1, long y1, long x2, long y2):
    cdef long s1 = x1 + y1
    cdef long s2 = x2 + y2
    return _max2(_max2(s1 - s2, s2 - s1), _max2(s2 + y1 - 3 * x1, s1 + x2 - 3 * y2))


cdef long* _load(seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> malloc(n * sizeof(long) if n > 0 else sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(n):
        buf[k] = seq[k]
    return buf


def fold_stats(eps, phi):
    cdef Py_ssize_t n = len(eps)
    if n == 0:
        raise ValueError("empty tensor string")
    cdef long e_acc = eps[0]
    cdef long p_acc = phi[0]
    cdef long e, p, wt_prev
    cdef Py_ssize_t k
    for k in range(1, n):
        e = eps[k]
        p = phi[k]
        wt_prev = p_acc - e_acc
        e_acc = _max2(e_acc, e - wt_prev)
        p_acc = _max2(p, p_acc + p - e)
    return e_acc, p_acc


cdef Py_ssize_t _position(eps, phi, bint strict) except -2:
    cdef Py_ssize_t n = len(eps)
    if n == 0:
        return -1
    cdef long* e = _load(eps, n)
    cdef long* p = _load(phi, n)
    cdef long* pre = <long*> malloc(n * sizeof(long))
    cdef Py_ssize_t k
    if pre == NULL:
        free(e)
        free(p)
        raise MemoryError()
    pre[0] = p[0]
    for k in range(1, n):
        pre[k] = _max2(p[k], pre[k - 1] + p[k] - e[k])
    k = n - 1
    if strict:
        while k > 0 and pre[k - 1] > e[k]:
            k -= 1
    else:
        while k > 0 and pre[k - 1] >= e[k]:
            k -= 1
    free(e)
    free(p)
    free(pre)
    return k


def f_position(eps, phi):
    return _position(eps, phi, True)


def e_position(eps, phi):
    return _position(eps, phi, False)


def cancel_counts(minus, plus):
    cdef Py_ssize_t n = len(minus)
    cdef long* idx = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* cnt = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    if idx == NULL or cnt == NULL:
        free(idx)
        free(cnt)
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long n_minus = 0
    cdef long n_plus = 0
    cdef long e_pos = -1
    cdef long f_pos = -1
    cdef long m, used, pl
    cdef Py_ssize_t k, j
    for k in range(n):
        m = minus[k]
        while m > 0 and top > 0:
            used = m if m < cnt[top - 1] else cnt[top - 1]
            cnt[top - 1] -= used
            m -= used
            if cnt[top - 1] == 0:
                top -= 1
        if m > 0:
            n_minus += m
            e_pos = k
        pl = plus[k]
        if pl > 0:
            idx[top] = k
            cnt[top] = pl
            top += 1
    for j in range(top):
        n_plus += cnt[j]
    if top > 0:
        f_pos = idx[0]
    free(idx)
    free(cnt)
    return n_minus, n_plus, e_pos, f_pos
