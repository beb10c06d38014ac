"""End-to-end verification run over the exhaustive and random small-graph
suites: the two congestion/width equalities, the cutwidth sandwich, and the
bound sandwich with the constructive upper bounds."""

from __future__ import annotations

from dataclasses import dataclass

from linewidth.bounds import (
    TARGET_PW,
    TARGET_TW,
    bounds_report,
    improved_upper_construction,
)
from linewidth.congestion import golovach_check, min_path_congestion, min_tree_congestion
from linewidth.decompositions import validate, width
from linewidth.exact import exact_pathwidth, exact_treewidth
from linewidth.graphs import Graph, line_graph, star_graph
from linewidth.smallgraphs import exhaustive_suite, random_suite


@dataclass(frozen=True)
class CheckLine:
    name: str
    ok: bool
    detail: str

    def render(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def _suite(max_n: int, random_count: int, seed: int) -> list[Graph]:
    graphs = exhaustive_suite(max_n)
    if random_count:
        graphs += random_suite(random_count, seed)
    return graphs


def run_theorem_checks(
    max_n: int = 5, random_count: int = 100, seed: int = 2024
) -> list[CheckLine]:
    graphs = _suite(max_n, random_count, seed)
    lines: list[CheckLine] = []

    failures = []
    for i, g in enumerate(graphs):
        lg, _ = line_graph(g)
        if min_tree_congestion(g).value != exact_treewidth(lg).width + 1:
            failures.append(i)
    lines.append(
        CheckLine(
            "tree-congestion-equals-line-treewidth",
            not failures,
            f"{len(graphs)} graphs" + (f", failed at {failures}" if failures else ""),
        )
    )

    failures = []
    for i, g in enumerate(graphs):
        lg, _ = line_graph(g)
        if min_path_congestion(g).value != exact_pathwidth(lg).width + 1:
            failures.append(i)
    lines.append(
        CheckLine(
            "path-congestion-equals-line-pathwidth",
            not failures,
            f"{len(graphs)} graphs" + (f", failed at {failures}" if failures else ""),
        )
    )

    failures = []
    applicable = 0
    for i, g in enumerate(graphs):
        if g.max_degree() < 2:
            continue
        applicable += 1
        if not golovach_check(g).holds:
            failures.append(i)
    lines.append(
        CheckLine(
            "cutwidth-sandwich",
            not failures,
            f"{applicable} graphs with max degree >= 2"
            + (f", failed at {failures}" if failures else ""),
        )
    )

    star_ok = True
    for m in range(3, 7):
        rep = golovach_check(star_graph(m))
        if rep.cutwidth != rep.lower:
            star_ok = False
    lines.append(
        CheckLine(
            "cutwidth-sandwich-tight-for-stars",
            star_ok,
            "stars with 3..6 leaves meet the lower bound",
        )
    )

    failures = []
    for i, g in enumerate(graphs):
        if not _bounds_hold(g):
            failures.append(i)
    lines.append(
        CheckLine(
            "bound-sandwich-and-constructions",
            not failures,
            f"{len(graphs)} graphs" + (f", failed at {failures}" if failures else ""),
        )
    )
    return lines


def _bounds_hold(g: Graph) -> bool:
    report = bounds_report(g, compute_exact=True)
    tw_line = report.exact[TARGET_TW]
    pw_line = report.exact[TARGET_PW]
    for entry in report.lowers(TARGET_TW):
        if entry.value > tw_line:
            return False
    for entry in report.uppers(TARGET_TW):
        if entry.value < tw_line:
            return False
    for entry in report.lowers(TARGET_PW):
        if entry.value > pw_line:
            return False
    for entry in report.uppers(TARGET_PW):
        if entry.value < pw_line:
            return False
    # the balanced-split construction must validate and meet its closed form
    tw_dec = exact_treewidth(g).decomposition
    built = improved_upper_construction(g, tw_dec)
    if not validate(built.decomposition, g).ok:
        return False
    if built.width > built.closed_form:
        return False
    pw_dec = exact_pathwidth(g).decomposition
    built = improved_upper_construction(g, pw_dec)
    if not validate(built.decomposition, g).ok:
        return False
    if built.width > built.closed_form:
        return False
    return True
