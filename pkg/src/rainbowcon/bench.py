"""Benchmark harness: run both colouring modes over a corpus, emit CSV.

Wall times are reported in integer milliseconds and the CSV uses '.' as
the decimal separator regardless of locale.  Rows are sorted by graph id
so output bytes never depend on processing order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .exact import rc_lower_bound
from .graph import Graph
from .pipelines import MODE_DIAMETER, MODE_RADIUS, colour_general

CSV_HEADER = (
    "graph_id,n,m,r,d,b,zeta_bound,colours_radius,colours_diameter,"
    "lower_bound,ratio,time_radius_ms,time_diameter_ms"
)


@dataclass(frozen=True)
class BenchRow:
    graph_id: str
    n: int
    m: int
    r: int | None
    d: int | None
    b: int
    zeta_bound: int | None
    colours_radius: int
    colours_diameter: int
    lower_bound: int
    ratio: float | None
    time_radius_ms: int
    time_diameter_ms: int

    def csv_line(self) -> str:
        def opt(value: "int | None") -> str:
            return "" if value is None else str(value)

        ratio = "" if self.ratio is None else f"{self.ratio:.3f}"
        return ",".join(
            [
                self.graph_id,
                str(self.n),
                str(self.m),
                opt(self.r),
                opt(self.d),
                str(self.b),
                opt(self.zeta_bound),
                str(self.colours_radius),
                str(self.colours_diameter),
                str(self.lower_bound),
                ratio,
                str(self.time_radius_ms),
                str(self.time_diameter_ms),
            ]
        )


def bench_graph(graph_id: str, g: Graph) -> BenchRow:
    start = time.perf_counter()
    _, report_r = colour_general(g, MODE_RADIUS)
    time_r = round((time.perf_counter() - start) * 1000)
    start = time.perf_counter()
    _, report_d = colour_general(g, MODE_DIAMETER)
    time_d = round((time.perf_counter() - start) * 1000)
    lb = rc_lower_bound(g)
    ratio = report_r.colours_used / lb if lb > 0 else None
    return BenchRow(
        graph_id=graph_id,
        n=g.vertex_count,
        m=g.edge_count,
        r=report_r.r,
        d=report_r.d,
        b=report_r.b,
        zeta_bound=report_r.zeta_bound,
        colours_radius=report_r.colours_used,
        colours_diameter=report_d.colours_used,
        lower_bound=lb,
        ratio=ratio,
        time_radius_ms=time_r,
        time_diameter_ms=time_d,
    )


def run_bench(entries: "list[tuple[str, Graph]]") -> list[BenchRow]:
    rows = [bench_graph(graph_id, g) for graph_id, g in entries]
    rows.sort(key=lambda row: row.graph_id)
    return rows


def format_csv(rows: "list[BenchRow]") -> str:
    return "\n".join([CSV_HEADER] + [row.csv_line() for row in rows]) + "\n"
