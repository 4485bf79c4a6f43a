"""Pure-Python adaptive Gauss-Kronrod (7/15) quadrature.

Reference implementation of the compiled kernel in ``_kernels.pyx``; both run
the same algorithm so they agree to rounding.  Panels are kept sorted by
left endpoint, the panel with the largest error estimate is bisected (first
one wins ties) and totals are summed left to right, so the result does not
depend on anything but the inputs.
"""

import math

import numpy as np

# QUADPACK qk15 abscissae (descending, last is the centre) and weights.
XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# 15 nodes on [-1, 1] from left to right, with matching weights.
NODES = np.concatenate([-XGK[:-1], XGK[::-1]])
KRONROD_W = np.concatenate([WGK[:-1], WGK[::-1]])
GAUSS_W = np.zeros(15)
GAUSS_W[[1, 3, 5, 9, 11, 13]] = np.concatenate([WG[:3], WG[2::-1]])
GAUSS_W[7] = WG[3]

EPS = np.finfo(float).eps
ROUNDOFF_FACTOR = 50.0


def _panel(f, left, right):
    centre = 0.5 * (left + right)
    half = 0.5 * (right - left)
    values = np.asarray(f(centre + half * NODES))
    kronrod = half * np.dot(KRONROD_W, values)
    gauss = half * np.dot(GAUSS_W, values)
    resabs = half * np.dot(KRONROD_W, np.abs(values))
    return kronrod, abs(kronrod - gauss), resabs


def _fsum(values):
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real for v in values),
                       math.fsum(v.imag for v in values))
    return math.fsum(values)


def adaptive_gk(f, a, b, abs_tol, rel_tol, max_sub):
    """Integrate vectorised ``f`` over [a, b].

    Returns ``(value, error, panels, converged)``.  Converged means the summed
    error estimate is below max(abs_tol, rel_tol*|value|) or below the
    roundoff floor 50*eps*integral(|f|).
    """
    k, e, r = _panel(f, a, b)
    lefts, rights, vals, errs, abss = [a], [b], [k], [e], [r]
    while True:
        total = _fsum(vals)
        err = math.fsum(errs)
        floor = ROUNDOFF_FACTOR * EPS * math.fsum(abss)
        if err <= max(abs_tol, rel_tol * abs(total), floor):
            return total, err, len(vals), True
        if len(vals) >= max_sub:
            return total, err, len(vals), False
        i = int(np.argmax(errs))
        left, right = lefts[i], rights[i]
        mid = 0.5 * (left + right)
        if not left < mid < right:
            return total, err, len(vals), False
        k1, e1, r1 = _panel(f, left, mid)
        k2, e2, r2 = _panel(f, mid, right)
        lefts[i:i + 1] = [left, mid]
        rights[i:i + 1] = [mid, right]
        vals[i:i + 1] = [k1, k2]
        errs[i:i + 1] = [e1, e2]
        abss[i:i + 1] = [r1, r2]


def expsum_eval(ar, ai, mr, mi, x):
    """Re sum_i exp((ar+i ai) x + mr + i mi), vectorised over x."""
    x = np.asarray(x, dtype=float)
    phase = np.multiply.outer(x, ai) + mi
    return np.sum(np.exp(np.multiply.outer(x, ar) + mr) * np.cos(phase), axis=-1)


def expsum_product_integral(f_ar, f_ai, f_mr, f_mi, power,
                            g_ar, g_ai, g_mr, g_mi, xpow,
                            a, b, abs_tol, rel_tol, max_sub):
    """Integral over [a, b] of x**xpow * F(x)**power * G(x) for exp-sums F, G."""

    def integrand(x):
        out = expsum_eval(g_ar, g_ai, g_mr, g_mi, x)
        if power:
            out = out * expsum_eval(f_ar, f_ai, f_mr, f_mi, x) ** power
        if xpow:
            out = out * x ** xpow
        return out

    return adaptive_gk(integrand, a, b, abs_tol, rel_tol, max_sub)
