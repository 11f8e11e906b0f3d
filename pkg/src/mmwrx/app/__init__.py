"""CLI, HTTP service, and chart export for the sweep engine."""

from .config import RunConfig, SweepRequest
from .export import chart_document, export_chart

__all__ = ["RunConfig", "SweepRequest", "chart_document", "export_chart"]
