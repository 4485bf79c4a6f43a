# cython: language_level=3
"""Compiled adaptive Gauss-Kronrod (7/15) quadrature of exponential-sum products.

Same algorithm as ``ngqm._kernels_py.expsum_product_integral``: sorted panel
list, bisect the largest error estimate (first wins ties), left-to-right
compensated summation.  The integrand

    x**xpow * F(x)**power * G(x),   F, G = Re sum_i exp(rate_i x + offset_i)

is evaluated entirely in C.
"""

from libc.math cimport exp, cos, fabs
from libc.stdlib cimport malloc, free
from libc.string cimport memmove

cdef double[15] NODES
cdef double[15] KW
cdef double[15] GW
cdef double EPS = 2.220446049250313e-16
cdef double ROUNDOFF_FACTOR = 50.0


def _init_rule(nodes, kronrod_w, gauss_w):
    cdef int i
    for i in range(15):
        NODES[i] = nodes[i]
        KW[i] = kronrod_w[i]
        GW[i] = gauss_w[i]


cdef struct ExpSum:
    int n
    const double *ar
    const double *ai
    const double *mr
    const double *mi


cdef inline double _eval(ExpSum *s, double x) noexcept nogil:
    cdef double acc = 0.0
    cdef int i
    for i in range(s.n):
        acc += exp(s.ar[i] * x + s.mr[i]) * cos(s.ai[i] * x + s.mi[i])
    return acc


cdef inline double _integrand(ExpSum *f, int power, ExpSum *g, int xpow,
                              double x) noexcept nogil:
    cdef double out = _eval(g, x)
    cdef double fv
    cdef int i
    if power > 0:
        fv = _eval(f, x)
        for i in range(power):
            out *= fv
    for i in range(xpow):
        out *= x
    return out


cdef void _panel(ExpSum *f, int power, ExpSum *g, int xpow,
                 double left, double right,
                 double *kronrod, double *err, double *resabs) noexcept nogil:
    cdef double centre = 0.5 * (left + right)
    cdef double half = 0.5 * (right - left)
    cdef double k = 0.0, gs = 0.0, ra = 0.0, v
    cdef int i
    for i in range(15):
        v = _integrand(f, power, g, xpow, centre + half * NODES[i])
        k += KW[i] * v
        gs += GW[i] * v
        ra += KW[i] * fabs(v)
    kronrod[0] = half * k
    err[0] = fabs(half * k - half * gs)
    resabs[0] = half * ra


cdef double _neumaier(double *values, int n) noexcept nogil:
    cdef double s = 0.0, c = 0.0, t, v
    cdef int i
    for i in range(n):
        v = values[i]
        t = s + v
        if fabs(s) >= fabs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
    return s + c


def expsum_product_integral(const double[::1] f_ar, const double[::1] f_ai,
                            const double[::1] f_mr, const double[::1] f_mi,
                            int power,
                            const double[::1] g_ar, const double[::1] g_ai,
                            const double[::1] g_mr, const double[::1] g_mi,
                            int xpow, double a, double b,
                            double abs_tol, double rel_tol, int max_sub):
    """Returns ``(value, error, panels, converged)``."""
    cdef ExpSum fs, gs
    fs.n = f_ar.shape[0]
    gs.n = g_ar.shape[0]
    fs.ar = &f_ar[0] if fs.n else NULL
    fs.ai = &f_ai[0] if fs.n else NULL
    fs.mr = &f_mr[0] if fs.n else NULL
    fs.mi = &f_mi[0] if fs.n else NULL
    gs.ar = &g_ar[0]
    gs.ai = &g_ai[0]
    gs.mr = &g_mr[0]
    gs.mi = &g_mi[0]
    if max_sub < 1:
        max_sub = 1

    cdef double *lefts = <double *> malloc(max_sub * sizeof(double))
    cdef double *rights = <double *> malloc(max_sub * sizeof(double))
    cdef double *vals = <double *> malloc(max_sub * sizeof(double))
    cdef double *errs = <double *> malloc(max_sub * sizeof(double))
    cdef double *abss = <double *> malloc(max_sub * sizeof(double))
    if not (lefts and rights and vals and errs and abss):
        free(lefts); free(rights); free(vals); free(errs); free(abss)
        raise MemoryError()

    cdef int n = 1, i, imax, tail
    cdef double total, err, floor_, tol, left, right, mid, emax
    cdef bint converged = False
    try:
        with nogil:
            lefts[0] = a
            rights[0] = b
            _panel(&fs, power, &gs, xpow, a, b, &vals[0], &errs[0], &abss[0])
            while True:
                total = _neumaier(vals, n)
                err = _neumaier(errs, n)
                floor_ = ROUNDOFF_FACTOR * EPS * _neumaier(abss, n)
                tol = abs_tol
                if rel_tol * fabs(total) > tol:
                    tol = rel_tol * fabs(total)
                if floor_ > tol:
                    tol = floor_
                if err <= tol:
                    converged = True
                    break
                if n >= max_sub:
                    break
                imax = 0
                emax = errs[0]
                for i in range(1, n):
                    if errs[i] > emax:
                        emax = errs[i]
                        imax = i
                left = lefts[imax]
                right = rights[imax]
                mid = 0.5 * (left + right)
                if not (left < mid and mid < right):
                    break
                tail = n - imax - 1
                if tail > 0:
                    memmove(&lefts[imax + 2], &lefts[imax + 1], tail * sizeof(double))
                    memmove(&rights[imax + 2], &rights[imax + 1], tail * sizeof(double))
                    memmove(&vals[imax + 2], &vals[imax + 1], tail * sizeof(double))
                    memmove(&errs[imax + 2], &errs[imax + 1], tail * sizeof(double))
                    memmove(&abss[imax + 2], &abss[imax + 1], tail * sizeof(double))
                n += 1
                lefts[imax] = left
                rights[imax] = mid
                lefts[imax + 1] = mid
                rights[imax + 1] = right
                _panel(&fs, power, &gs, xpow, left, mid,
                       &vals[imax], &errs[imax], &abss[imax])
                _panel(&fs, power, &gs, xpow, mid, right,
                       &vals[imax + 1], &errs[imax + 1], &abss[imax + 1])
        return total, err, n, bool(converged)
    finally:
        free(lefts); free(rights); free(vals); free(errs); free(abss)
