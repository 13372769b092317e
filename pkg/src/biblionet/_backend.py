"""Selects the kernel implementation at import time.

The compiled extension is used when it imports cleanly; setting
``BIBLIONET_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import importlib
import os

from . import _pykernels

python_kernels = _pykernels

try:
    compiled_kernels = importlib.import_module("biblionet._kernels")
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("BIBLIONET_PURE_PYTHON"):
    kernels = compiled_kernels
else:
    kernels = python_kernels

COMPILED = kernels is compiled_kernels


def backend_name() -> str:
    return "compiled" if COMPILED else "python"
