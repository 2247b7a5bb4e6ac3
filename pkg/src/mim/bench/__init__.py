from .harness import BenchRow, format_table, run_bench
from .routing import router

__all__ = ["BenchRow", "format_table", "router", "run_bench"]
