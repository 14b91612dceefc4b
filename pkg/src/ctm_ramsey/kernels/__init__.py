"""Triangle-packing kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; otherwise the pure-Python one.
``BACKEND`` names the active choice and :func:`backend` returns either
implementation explicitly (tests and benchmarks compare them).
"""

from types import ModuleType

from . import _pure

try:
    from . import _fast  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _fast = None

BACKEND = "cython" if _fast is not None else "python"
_active: ModuleType = _fast if _fast is not None else _pure

greedy_pack = _active.greedy_pack
pack_exact = _active.pack_exact


def backend(name: str) -> ModuleType:
    if name == "python":
        return _pure
    if name == "cython":
        if _fast is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return _fast
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _fast is not None else [])
