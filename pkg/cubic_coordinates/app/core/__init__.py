"""
Core module initialization
"""

from app.core.config import settings, get_settings
from app.core.logging import configure_logging

__all__ = ["settings", "get_settings", "configure_logging"]
