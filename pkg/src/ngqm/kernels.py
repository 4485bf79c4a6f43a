"""Backend selection for the quadrature hot loop.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` runs the same algorithm.  Setting
``NGQM_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

PURE_ENV_VAR = "NGQM_PURE_PYTHON"

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None
else:
    _compiled._init_rule(_kernels_py.NODES.tolist(), _kernels_py.KRONROD_W.tolist(),
                         _kernels_py.GAUSS_W.tolist())

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def backend_name() -> str:
    if _compiled is None or os.environ.get(PURE_ENV_VAR):
        return "python"
    return "compiled"


def get_backend(name: str | None = None):
    name = backend_name() if name is None else name
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} not available; have {available_backends()}"
        ) from None


def expsum_product_integral(f, power, g, xpow, a, b, abs_tol, rel_tol, max_sub,
                            backend=None):
    """Integral of x**xpow * f(x)**power * g(x) over [a, b] for ExpSums f, g.

    Returns ``(value, error, panels, converged)``.
    """
    impl = get_backend(backend)
    return impl.expsum_product_integral(
        *f.parts(), int(power), *g.parts(), int(xpow),
        float(a), float(b), float(abs_tol), float(rel_tol), int(max_sub),
    )
