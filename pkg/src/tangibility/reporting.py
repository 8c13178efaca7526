"""Rendering of analytics and classification results.

Four surfaces: fixed-width text tables, RFC-4180 CSV, compact JSON, and DOT
graphs (cross-tabs only).  Every renderer is deterministic: identical input
yields identical bytes, rows keep id order, and the newline is "\\n" on all
platforms.  Hallmark components print as "N" in text and as "many" in CSV
and JSON.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Union

from .analysis import (
    CLASS_LABELS,
    Cluster,
    CrossTab,
    DistanceMatrix,
    Metric,
    RoleShare,
    cluster_by_binary_hallmark,
    cluster_by_hallmark,
    cross_tab,
    class_distribution,
    distance_matrix,
    distinct_binary_hallmark_count,
    distinct_hallmark_count,
    role_distribution,
    term_coverage,
    EmptyCorpusError,
)
from .classify import ClassResult, classify
from .hallmark import BinaryHallmark, Hallmark, compute_hallmark
from .model import Corpus, Count, Role
from .terms import TERMS, Term

__all__ = [
    "AppRow",
    "HallmarkTable",
    "ClassTable",
    "Coverage",
    "Clusters",
    "Analytics",
    "hallmark_table",
    "class_table",
    "coverage_report",
    "clusters_report",
    "analytics_report",
    "render",
    "render_text",
    "render_csv",
    "render_json",
    "render_dot",
]


@dataclass(frozen=True)
class AppRow:
    id: int
    name: str
    hallmark: Hallmark
    result: ClassResult


@dataclass(frozen=True)
class HallmarkTable:
    rows: tuple[AppRow, ...]


@dataclass(frozen=True)
class ClassTable:
    rows: tuple[AppRow, ...]


@dataclass(frozen=True)
class Coverage:
    entries: tuple[tuple[Term, int], ...]


@dataclass(frozen=True)
class Clusters:
    binary: bool
    distinct: int
    clusters: tuple[Cluster, ...]


@dataclass(frozen=True)
class Analytics:
    application_count: int
    record_count: int
    coverage: Coverage
    roles: dict[Role, RoleShare] | None
    classes: dict[str, int]
    distinct: int
    clusters: tuple[Cluster, ...]
    distinct_binary: int
    binary_clusters: tuple[Cluster, ...]
    crosstab: CrossTab
    matrix: DistanceMatrix


def _app_rows(corpus: Corpus) -> tuple[AppRow, ...]:
    rows = []
    for app in sorted(corpus.applications, key=lambda a: a.id):
        mark = compute_hallmark(app)
        rows.append(AppRow(app.id, app.name, mark, classify(mark)))
    return tuple(rows)


def hallmark_table(corpus: Corpus) -> HallmarkTable:
    return HallmarkTable(_app_rows(corpus))


def class_table(corpus: Corpus) -> ClassTable:
    return ClassTable(_app_rows(corpus))


def coverage_report(corpus: Corpus) -> Coverage:
    coverage = term_coverage(corpus)
    return Coverage(tuple((term, coverage[term]) for term in TERMS))


def clusters_report(corpus: Corpus, binary: bool = False) -> Clusters:
    if binary:
        return Clusters(
            True, distinct_binary_hallmark_count(corpus),
            tuple(cluster_by_binary_hallmark(corpus)),
        )
    return Clusters(
        False, distinct_hallmark_count(corpus), tuple(cluster_by_hallmark(corpus))
    )


def analytics_report(
    corpus: Corpus, key: str = "genre", metric: Metric = Metric.HAMMING
) -> Analytics:
    try:
        roles: dict[Role, RoleShare] | None = role_distribution(corpus)
    except EmptyCorpusError:
        roles = None
    return Analytics(
        application_count=len(corpus.applications),
        record_count=corpus.record_count,
        coverage=coverage_report(corpus),
        roles=roles,
        classes=class_distribution(corpus),
        distinct=distinct_hallmark_count(corpus),
        clusters=tuple(cluster_by_hallmark(corpus)),
        distinct_binary=distinct_binary_hallmark_count(corpus),
        binary_clusters=tuple(cluster_by_binary_hallmark(corpus)),
        crosstab=cross_tab(corpus, key),
        matrix=distance_matrix(corpus, metric),
    )


# --- text -------------------------------------------------------------

_LEFT = "left"
_RIGHT = "right"


def _table_lines(
    headers: tuple[str, ...], rows: list[tuple[str, ...]], aligns: tuple[str, ...]
) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in [headers] + rows:
        cells = [
            cell.rjust(widths[i]) if aligns[i] == _RIGHT else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return lines


def _count_text(count: Count) -> str:
    return "N" if count.is_many else str(count.value)


def _count_data(count: Count) -> int | str:
    return "many" if count.is_many else count.value


def _cluster_lines(clusters: tuple[Cluster, ...], indent: str = "  ") -> list[str]:
    if not clusters:
        return [f"{indent}none"]
    return [
        f"{indent}{cluster.key}: " + ", ".join(str(m) for m in cluster.members)
        for cluster in clusters
    ]


def _crosstab_text_lines(tab: CrossTab) -> list[str]:
    headers = (tab.key,) + CLASS_LABELS
    rows = [
        tuple(
            [row.label]
            + [" ".join(str(i) for i in row.cells[label]) or "-" for label in CLASS_LABELS]
        )
        for row in tab.rows
    ]
    return _table_lines(headers, rows, (_LEFT,) * len(headers))


def _matrix_text_lines(matrix: DistanceMatrix) -> list[str]:
    headers = ("id",) + tuple(str(i) for i in matrix.ids)
    rows = [
        (str(app_id),) + tuple(str(d) for d in row)
        for app_id, row in zip(matrix.ids, matrix.rows)
    ]
    return _table_lines(headers, rows, (_RIGHT,) * len(headers))


def render_text(report: Any) -> str:
    if isinstance(report, HallmarkTable):
        rows = [
            (str(r.id), r.name, str(r.hallmark), r.result.label) for r in report.rows
        ]
        lines = _table_lines(
            ("id", "name", "hallmark", "class"), rows, (_RIGHT, _LEFT, _LEFT, _LEFT)
        )
    elif isinstance(report, ClassTable):
        rows = [
            (str(r.id), r.name, r.result.label, r.result.reason or "")
            for r in report.rows
        ]
        lines = _table_lines(
            ("id", "name", "class", "reason"), rows, (_RIGHT, _LEFT, _LEFT, _LEFT)
        )
    elif isinstance(report, Coverage):
        rows = [(term.name, str(count)) for term, count in report.entries]
        lines = _table_lines(("term", "count"), rows, (_LEFT, _RIGHT))
    elif isinstance(report, Clusters):
        kind = "binary hallmarks" if report.binary else "hallmarks"
        lines = [f"distinct {kind}: {report.distinct}", "clusters:"]
        lines += _cluster_lines(report.clusters)
    elif isinstance(report, CrossTab):
        lines = _crosstab_text_lines(report)
    elif isinstance(report, DistanceMatrix):
        lines = _matrix_text_lines(report)
    elif isinstance(report, Analytics):
        lines = _analytics_text_lines(report)
    else:
        raise TypeError(f"cannot render {type(report).__name__} as text")
    return "\n".join(lines) + "\n"


def _analytics_text_lines(report: Analytics) -> list[str]:
    lines = [
        f"applications: {report.application_count}",
        f"entity records: {report.record_count}",
        "",
        "term coverage:",
    ]
    coverage_rows = [(t.name, str(c)) for t, c in report.coverage.entries]
    lines += [
        "  " + line
        for line in _table_lines(("term", "count"), coverage_rows, (_LEFT, _RIGHT))[1:]
    ]
    lines += ["", "role distribution:"]
    if report.roles is None:
        lines.append("  (no entity records)")
    else:
        role_rows = [
            (role.value, str(share.count), f"{share.percent}%")
            for role, share in report.roles.items()
        ]
        lines += [
            "  " + line
            for line in _table_lines(
                ("role", "count", "percent"), role_rows, (_LEFT, _RIGHT, _RIGHT)
            )[1:]
        ]
    lines += ["", "class distribution:"]
    class_rows = [(label, str(count)) for label, count in report.classes.items()]
    lines += [
        "  " + line
        for line in _table_lines(("class", "count"), class_rows, (_LEFT, _RIGHT))[1:]
    ]
    lines += ["", f"distinct hallmarks: {report.distinct}", "hallmark clusters:"]
    lines += _cluster_lines(report.clusters)
    lines += [
        "",
        f"distinct binary hallmarks: {report.distinct_binary}",
        "binary hallmark clusters:",
    ]
    lines += _cluster_lines(report.binary_clusters)
    lines += ["", f"cross-tab by {report.crosstab.key}:"]
    lines += ["  " + line for line in _crosstab_text_lines(report.crosstab)]
    lines += ["", f"distance matrix ({report.matrix.metric.value}):"]
    lines += ["  " + line for line in _matrix_text_lines(report.matrix)]
    return lines


# --- CSV --------------------------------------------------------------


def _csv_rows(rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _hallmark_cells(mark: Hallmark) -> list[int | str]:
    return [_count_data(c) for c in mark.components]


def render_csv(report: Any) -> str:
    term_names = [term.name for term in TERMS]
    if isinstance(report, HallmarkTable):
        rows: list[list[Any]] = [["id", "name"] + term_names]
        rows += [[r.id, r.name] + _hallmark_cells(r.hallmark) for r in report.rows]
    elif isinstance(report, ClassTable):
        rows = [["id", "name"] + term_names + ["class"]]
        rows += [
            [r.id, r.name] + _hallmark_cells(r.hallmark) + [r.result.label]
            for r in report.rows
        ]
    elif isinstance(report, Coverage):
        rows = [["term", "count"]]
        rows += [[term.name, count] for term, count in report.entries]
    elif isinstance(report, Clusters):
        key_column = "binary_hallmark" if report.binary else "hallmark"
        rows = [[key_column, "members"]]
        rows += [
            [str(cluster.key), " ".join(str(m) for m in cluster.members)]
            for cluster in report.clusters
        ]
    elif isinstance(report, CrossTab):
        rows = [[report.key] + list(CLASS_LABELS)]
        rows += [
            [row.label]
            + [" ".join(str(i) for i in row.cells[label]) for label in CLASS_LABELS]
            for row in report.rows
        ]
    elif isinstance(report, DistanceMatrix):
        rows = [["id"] + [str(i) for i in report.ids]]
        rows += [
            [app_id] + list(row) for app_id, row in zip(report.ids, report.rows)
        ]
    elif isinstance(report, Analytics):
        return _analytics_csv(report)
    else:
        raise TypeError(f"cannot render {type(report).__name__} as CSV")
    return _csv_rows(rows)


def _analytics_csv(report: Analytics) -> str:
    sections = [
        _csv_rows(
            [
                ["statistic", "value"],
                ["applications", report.application_count],
                ["entity_records", report.record_count],
                ["distinct_hallmarks", report.distinct],
                ["distinct_binary_hallmarks", report.distinct_binary],
            ]
        ),
        render_csv(report.coverage),
    ]
    role_rows: list[list[Any]] = [["role", "count", "percent"]]
    if report.roles is not None:
        role_rows += [
            [role.value, share.count, share.percent]
            for role, share in report.roles.items()
        ]
    sections.append(_csv_rows(role_rows))
    class_rows: list[list[Any]] = [["class", "count"]]
    class_rows += [[label, count] for label, count in report.classes.items()]
    sections.append(_csv_rows(class_rows))
    sections.append(render_csv(Clusters(False, report.distinct, report.clusters)))
    sections.append(
        render_csv(Clusters(True, report.distinct_binary, report.binary_clusters))
    )
    sections.append(render_csv(report.crosstab))
    sections.append(render_csv(report.matrix))
    return "\n".join(sections)


# --- JSON -------------------------------------------------------------


def _json_dump(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n"


def _clusters_payload(clusters: tuple[Cluster, ...]) -> list[dict[str, Any]]:
    payload = []
    for cluster in clusters:
        if isinstance(cluster.key, BinaryHallmark):
            key: list[int | str] = list(cluster.key.bits)
        else:
            key = _hallmark_cells(cluster.key)
        payload.append({"hallmark": key, "members": list(cluster.members)})
    return payload


def _crosstab_payload(tab: CrossTab) -> dict[str, Any]:
    return {
        "key": tab.key,
        "rows": [
            {"label": row.label, **{c: list(row.cells[c]) for c in CLASS_LABELS}}
            for row in tab.rows
        ],
    }


def _matrix_payload(matrix: DistanceMatrix) -> dict[str, Any]:
    return {
        "metric": matrix.metric.value,
        "ids": list(matrix.ids),
        "rows": [list(row) for row in matrix.rows],
    }


def render_json(report: Any) -> str:
    if isinstance(report, HallmarkTable):
        return _json_dump(
            {
                "applications": [
                    {
                        "id": r.id,
                        "name": r.name,
                        "hallmark": _hallmark_cells(r.hallmark),
                        "class": r.result.label,
                    }
                    for r in report.rows
                ]
            }
        )
    if isinstance(report, ClassTable):
        return _json_dump(
            {
                "applications": [
                    {
                        "id": r.id,
                        "name": r.name,
                        "class": r.result.label,
                        "rule": r.result.rule,
                        "reason": r.result.reason,
                    }
                    for r in report.rows
                ]
            }
        )
    if isinstance(report, Coverage):
        return _json_dump({term.name: count for term, count in report.entries})
    if isinstance(report, Clusters):
        return _json_dump(
            {
                "binary": report.binary,
                "distinct": report.distinct,
                "clusters": _clusters_payload(report.clusters),
            }
        )
    if isinstance(report, CrossTab):
        return _json_dump(_crosstab_payload(report))
    if isinstance(report, DistanceMatrix):
        return _json_dump(_matrix_payload(report))
    if isinstance(report, Analytics):
        return _json_dump(
            {
                "applications": report.application_count,
                "entity_records": report.record_count,
                "coverage": {t.name: c for t, c in report.coverage.entries},
                "roles": None
                if report.roles is None
                else {
                    role.value: {"count": share.count, "percent": share.percent}
                    for role, share in report.roles.items()
                },
                "classes": dict(report.classes),
                "distinct_hallmarks": report.distinct,
                "hallmark_clusters": _clusters_payload(report.clusters),
                "distinct_binary_hallmarks": report.distinct_binary,
                "binary_hallmark_clusters": _clusters_payload(report.binary_clusters),
                "cross_tab": _crosstab_payload(report.crosstab),
                "distance_matrix": _matrix_payload(report.matrix),
            }
        )
    raise TypeError(f"cannot render {type(report).__name__} as JSON")


# --- DOT --------------------------------------------------------------


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


_CLASS_NODE = {
    "I": "Class I",
    "II": "Class II",
    "III": "Class III",
    "IV": "Class IV",
    "unclassified": "Unclassified",
}


def render_dot(report: Any) -> str:
    """Genre -> subgenre -> application -> class membership graph.

    Only cross-tabs have the hierarchy this graph needs; other reports
    raise TypeError.
    """
    if isinstance(report, Analytics):
        report = report.crosstab
    if not isinstance(report, CrossTab):
        raise TypeError(f"cannot render {type(report).__name__} as DOT")
    if not report.apps:
        return "digraph corpus {}\n"

    genres = sorted({app.genre for app in report.apps})
    subgenres = sorted({app.subgenre for app in report.apps})
    apps = sorted(report.apps, key=lambda a: a.id)
    occupied = [
        label for label in CLASS_LABELS if any(a.class_label == label for a in apps)
    ]
    genre_pairs = sorted({(a.genre, a.subgenre) for a in apps})

    lines = ["digraph corpus {", "  rankdir=LR;"]
    for group in (
        [_dot_quote(g) for g in genres],
        [_dot_quote(s) for s in subgenres],
        [_dot_quote(a.name) for a in apps],
        [_dot_quote(_CLASS_NODE[label]) for label in occupied],
    ):
        lines.append("  { rank=same; " + "; ".join(group) + "; }")
    for genre, subgenre in genre_pairs:
        lines.append(f"  {_dot_quote(genre)} -> {_dot_quote(subgenre)};")
    for app in apps:
        lines.append(f"  {_dot_quote(app.subgenre)} -> {_dot_quote(app.name)};")
    for app in apps:
        lines.append(
            f"  {_dot_quote(app.name)} -> {_dot_quote(_CLASS_NODE[app.class_label])};"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "text": render_text,
    "csv": render_csv,
    "json": render_json,
    "dot": render_dot,
}


def render(report: Any, fmt: str) -> str:
    """Render a report in the named format; unknown formats raise ValueError."""
    renderer = _RENDERERS.get(fmt)
    if renderer is None:
        raise ValueError(f"unknown format {fmt!r}")
    return renderer(report)
