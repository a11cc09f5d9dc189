"""Hot kernels with a compiled backend and a pure-Python fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise
``_pykernels`` is selected at import. Both expose the same functions and
produce identical results. :func:`set_backend` switches explicitly, which
the benchmark and the cross-backend tests rely on.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels

lr_fillings = _pykernels.lr_fillings
strip_removals = _pykernels.strip_removals


def backend() -> str:
    """Name of the active backend."""
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def available() -> list[str]:
    return list(BACKENDS)


def set_backend(name: str) -> None:
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {available()}") from None


def mn_character(lam: tuple, mu: tuple, memo: dict) -> int:
    return _active.mn_character(lam, mu, memo)


def lr_count(outer: tuple, inner: tuple, weight: tuple) -> int:
    return _active.lr_count(outer, inner, weight)
