"""HTTP service wrapping the core package.

Serve with: uvicorn kzq.service.app:app
"""

from .app import create_app

__all__ = ["create_app"]
