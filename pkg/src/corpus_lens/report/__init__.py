"""Cross-corpus comparison reports and their renderings."""

from .build import ComparisonReport, EmotionSection, ReportConfig, TopicResult, build_report
from .render import FORMATS, csv_tables, read_report, render, svg_charts, to_json, to_markdown, topic_table_md

__all__ = [
    "FORMATS",
    "ComparisonReport",
    "EmotionSection",
    "ReportConfig",
    "TopicResult",
    "build_report",
    "csv_tables",
    "read_report",
    "render",
    "svg_charts",
    "to_json",
    "to_markdown",
    "topic_table_md",
]
