"""HTTP play service: game sessions against the engine, plus analysis."""

from .app import create_app

__all__ = ["create_app"]
