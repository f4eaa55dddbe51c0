import json
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

import yaml
from jinja2 import Environment, FileSystemLoader

from decision_dataclasses import DecisionProblem, RankingReport, ReconciliationReport
from ivtrnn_config import DEFAULT_PRECISION, TEMPLATES_DIR
from ivtrnn_numbers import IVTrNN
from score_and_aggregate import ScoreAccuracy

RANKING_TEMPLATE = "ranking_report.txt.jinja2"
RECONCILE_TEMPLATE = "reconcile_report.txt.jinja2"
MATRIX_TEMPLATE = "decision_matrix.txt.jinja2"
NUMBER_TEMPLATE = "number_report.txt.jinja2"
VALIDATE_TEMPLATE = "validate_report.txt.jinja2"


def format_value(value: float, precision: int = DEFAULT_PRECISION) -> str:
    """Round-half-even display rounding; -0 prints as 0."""
    rounded = round(float(value), precision) + 0.0
    return f"{rounded:.{precision}f}"


def format_quad(values: Iterable[float], precision: int = DEFAULT_PRECISION) -> str:
    return "(" + ", ".join(format_value(v, precision) for v in values) + ")"


def make_environment(templates_dir: Union[str, Path] = TEMPLATES_DIR,
                     precision: int = DEFAULT_PRECISION) -> Environment:
    env = Environment(loader=FileSystemLoader(str(templates_dir)), trim_blocks=True, lstrip_blocks=True)
    env.filters["fmt"] = lambda v: format_value(v, precision)
    env.filters["quad"] = lambda v: format_quad(v, precision)
    return env


def _number_context(number: IVTrNN) -> Dict[str, Any]:
    levels = number.to_array()
    return {
        "lower": dict(zip(("truth", "indet", "falsity"), levels[0])),
        "upper": dict(zip(("truth", "indet", "falsity"), levels[1])),
        "lower_heights": list(number.lower.heights),
        "upper_heights": list(number.upper.heights),
    }


class ReportRenderer:
    """Renders --format table output from the templates directory."""

    def __init__(self, templates_dir: Union[str, Path] = TEMPLATES_DIR, precision: int = DEFAULT_PRECISION):
        self.precision = precision
        self.env = make_environment(templates_dir, precision)

    def _render(self, template: str, **ctx) -> str:
        return self.env.get_template(template).render(**ctx).rstrip("\n") + "\n"

    def ranking(self, report: RankingReport) -> str:
        return self._render(RANKING_TEMPLATE, **report.to_template_context())

    def reconciliation(self, report: ReconciliationReport, table: int) -> str:
        return self._render(RECONCILE_TEMPLATE, table=table, **report.to_template_context())

    def decision_matrix(self, problem: DecisionProblem) -> str:
        matrix = problem.matrix
        rows = []
        for name, row in zip(matrix.alternatives, matrix.rows):
            cells = []
            for criterion, number in zip(matrix.criteria, row):
                terms = problem.linguistic.cell(name, criterion) if problem.linguistic else None
                cells.append({"criterion": criterion, "terms": terms, **_number_context(number)})
            rows.append({"alternative": name, "label": problem.labels.get(name, ""), "cells": cells})
        return self._render(MATRIX_TEMPLATE, problem=problem.name, rows=rows)

    def number(self, number: IVTrNN, sa: Optional[ScoreAccuracy] = None, title: str = "") -> str:
        return self._render(NUMBER_TEMPLATE, title=title, sa=sa, **_number_context(number))

    def validation(self, path: str, problem: DecisionProblem, advisories: Iterable[str]) -> str:
        return self._render(
            VALIDATE_TEMPLATE,
            path=path,
            problem=problem.name,
            alternatives=problem.matrix.alternatives,
            criteria=problem.matrix.criteria,
            weights=list(problem.weights.weights),
            weight_mode=problem.weights.mode.value,
            advisories=list(advisories),
        )


def serialize(data: Dict[str, Any], fmt: str) -> str:
    """JSON (canonical) or YAML text for a report dict."""
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=False)
    return json.dumps(data, indent=2) + "\n"


__all__ = [
    "format_value",
    "format_quad",
    "make_environment",
    "ReportRenderer",
    "serialize",
]
