# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed integer kernels (compiled twin of ``_pykernels``)."""

from libc.stdlib cimport malloc, free
from cpython.bytearray cimport PyByteArray_AsString


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_ptr)
    void mpz_set_si(mpz_ptr, long)
    long mpz_get_si(mpz_ptr)
    int mpz_fits_slong_p(mpz_ptr)
    void mpz_neg(mpz_ptr, mpz_ptr)
    void mpz_mul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_addmul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_submul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_divexact(mpz_ptr, mpz_ptr, mpz_ptr)
    int mpz_sgn(mpz_ptr)
    int mpz_cmp_si(mpz_ptr, long)
    size_t mpz_sizeinbase(mpz_ptr, int)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void*)
    void* mpz_export(void*, size_t*, int, size_t, int, size_t, mpz_ptr)


cdef long _SMALL = 1 << 62


cdef void _from_py(mpz_ptr z, object x) except *:
    cdef bytes raw
    cdef size_t nbytes
    if -_SMALL < x < _SMALL:
        mpz_set_si(z, <long>x)
        return
    neg = x < 0
    if neg:
        x = -x
    nbytes = (x.bit_length() + 7) // 8
    raw = x.to_bytes(nbytes, "big")
    mpz_import(z, nbytes, 1, 1, 1, 0, <char*>raw)
    if neg:
        mpz_neg(z, z)


cdef object _to_py(mpz_ptr z):
    cdef size_t count = 0
    cdef bytearray buf
    if mpz_fits_slong_p(z):
        return mpz_get_si(z)
    buf = bytearray((mpz_sizeinbase(z, 2) + 7) // 8)
    mpz_export(PyByteArray_AsString(buf), &count, 1, 1, 1, 0, z)
    v = int.from_bytes(buf[:count], "big")
    return -v if mpz_sgn(z) < 0 else v


cdef mpz_ptr _alloc(Py_ssize_t n) except NULL:
    cdef mpz_ptr p = <mpz_ptr>malloc(n * sizeof(__mpz_struct) + 1)
    cdef Py_ssize_t i
    if p == NULL:
        raise MemoryError()
    for i in range(n):
        mpz_init(p + i)
    return p


cdef void _release(mpz_ptr p, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        mpz_clear(p + i)
    free(p)


def convolve(a, b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef Py_ssize_t lb = min(len(b), n + 1)
    cdef Py_ssize_t i, j
    cdef mpz_ptr A = _alloc(la)
    cdef mpz_ptr B = _alloc(lb)
    cdef mpz_ptr C = _alloc(n + 1)
    try:
        for i in range(la):
            _from_py(A + i, a[i])
        for j in range(lb):
            _from_py(B + j, b[j])
        for i in range(la):
            if mpz_sgn(A + i) == 0:
                continue
            for j in range(min(lb, n + 1 - i)):
                if mpz_sgn(B + j) != 0:
                    mpz_addmul(C + i + j, A + i, B + j)
        return [_to_py(C + i) for i in range(n + 1)]
    finally:
        _release(A, la)
        _release(B, lb)
        _release(C, n + 1)


def ff_gauss_jordan(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t width = len(rows[0]) if nrows else 0
    cdef Py_ssize_t i, j, c, r = 0, best
    cdef size_t bits, best_bits = 0
    cdef mpz_ptr M
    cdef mpz_ptr* R
    cdef mpz_ptr tmp
    cdef mpz_ptr prow
    cdef mpz_ptr row
    cdef __mpz_struct prev, a, t
    pivots = []
    if nrows == 0 or width == 0:
        return [list(x) for x in rows], pivots
    M = _alloc(nrows * width)
    R = <mpz_ptr*>malloc(nrows * sizeof(mpz_ptr))
    mpz_init(&prev)
    mpz_init(&a)
    mpz_init(&t)
    try:
        for i in range(nrows):
            R[i] = M + i * width
            src = rows[i]
            for j in range(width):
                _from_py(R[i] + j, src[j])
        mpz_set_si(&prev, 1)
        for c in range(ncols):
            if r == nrows:
                break
            best = -1
            for i in range(r, nrows):
                if mpz_sgn(R[i] + c) != 0:
                    bits = mpz_sizeinbase(R[i] + c, 2)
                    if best < 0 or bits < best_bits:
                        best = i
                        best_bits = bits
            if best < 0:
                continue
            tmp = R[r]
            R[r] = R[best]
            R[best] = tmp
            prow = R[r]
            for i in range(nrows):
                if i == r:
                    continue
                row = R[i]
                mpz_set(&a, row + c)
                for j in range(width):
                    mpz_mul(&t, prow + c, row + j)
                    if mpz_sgn(&a) != 0 and mpz_sgn(prow + j) != 0:
                        mpz_submul(&t, &a, prow + j)
                    if mpz_cmp_si(&prev, 1) == 0:
                        mpz_set(row + j, &t)
                    else:
                        mpz_divexact(row + j, &t, &prev)
            mpz_set(&prev, prow + c)
            pivots.append(c)
            r += 1
        out = [[_to_py(R[i] + j) for j in range(width)] for i in range(nrows)]
        return out, pivots
    finally:
        mpz_clear(&prev)
        mpz_clear(&a)
        mpz_clear(&t)
        _release(M, nrows * width)
        free(R)
