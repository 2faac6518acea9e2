# export/__init__.py
# ShuffleLDP v1.0.0 - Modulo export
# ============================================================================

from .exporters import (
    format_float,
    reports_to_jsonl,
    parse_reports_jsonl,
    load_reports,
    estimates_to_csv,
    results_to_json,
    rows_to_csv,
    records_to_jsonl,
    write_text,
)

__all__ = [
    "format_float",
    "reports_to_jsonl",
    "parse_reports_jsonl",
    "load_reports",
    "estimates_to_csv",
    "results_to_json",
    "rows_to_csv",
    "records_to_jsonl",
    "write_text",
]
