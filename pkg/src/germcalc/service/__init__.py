"""HTTP service exposing the germ-invariant computations.

The ASGI application lives in :mod:`germcalc.service.app`; run it with
``germcalc serve`` or ``uvicorn germcalc.service.app:app``.
"""

from .app import create_app

__all__ = ["create_app"]
