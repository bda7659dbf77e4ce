from .charts import ChartDrawing, ChartStyle, render_chart
from .nlg import NlgSummary, fmt1, generate_summary, longest_signed_run
from .pdf import LayoutError, ReportSpec, compose_pdf, page_count

__all__ = [
    "ChartDrawing",
    "ChartStyle",
    "render_chart",
    "NlgSummary",
    "fmt1",
    "generate_summary",
    "longest_signed_run",
    "LayoutError",
    "ReportSpec",
    "compose_pdf",
    "page_count",
]
