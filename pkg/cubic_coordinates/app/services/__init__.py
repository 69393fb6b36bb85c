"""
Services module initialization
"""

from app.services.enumeration_service import EnumerationService, check_cap
from app.services.conversion_service import ConversionService, conversion_service
from app.services.export_service import ExportService, export_service
from app.services.check_service import CheckService, check_service

__all__ = [
    "EnumerationService",
    "check_cap",
    "ConversionService",
    "conversion_service",
    "ExportService",
    "export_service",
    "CheckService",
    "check_service",
]
