"""Command-line front end: rank, reproduce, score, agg, validate.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid problem,
4 internal error. Warnings and logs go to standard error.
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from ivtrnn_config import MAX_PRECISION, MIN_PRECISION, Settings, configure_logging, load_settings
from ivtrnn_errors import IvtrnnError, ParseError
from problem_file import check_problem, load_number_file, load_numbers_file, load_problem_file, parse_weights
from rank_in_stages import StagedRankingPipeline, reference_problem
from reconcile_published import Regime, reconcile_published
from render_reports import ReportRenderer, serialize
from score_and_aggregate import ivtrnwaa, score_accuracy

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_INTERNAL = 4


def precision_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not MIN_PRECISION <= value <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"must be between {MIN_PRECISION} and {MAX_PRECISION}, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "yaml"], default="table")
    common.add_argument("--precision", type=precision_arg, default=None, help="display decimals for --format table")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return common


def _weight_options() -> argparse.ArgumentParser:
    weights = argparse.ArgumentParser(add_help=False)
    weights.add_argument("--weights", default=None, help="comma-separated weights overriding the file")
    weights.add_argument("--allow-unnormalized-weights", action="store_true",
                         help="accept any positive weights (relaxed mode)")
    return weights


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ivtrnn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common, weights = _common_options(), _weight_options()

    rank = sub.add_parser("rank", parents=[common, weights], help="rank the alternatives of a problem file")
    rank.add_argument("path")
    rank.add_argument("--output", default=None, help="also write the JSON report to this file")

    reproduce = sub.add_parser("reproduce", parents=[common], help="recompute the published tables")
    reproduce.add_argument("--table", type=int, choices=[3, 4, 5], default=4)
    reproduce.add_argument("--regime", choices=[r.value for r in Regime], default=Regime.UNIFORM025.value)

    score = sub.add_parser("score", parents=[common], help="score and accuracy of one number")
    score.add_argument("path")

    agg = sub.add_parser("agg", parents=[common, weights], help="IVTrNWAA of a list of numbers")
    agg.add_argument("path")

    validate = sub.add_parser("validate", parents=[common, weights], help="check a problem file")
    validate.add_argument("path")
    return parser


class CommandRunner:
    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings

    def _renderer(self, file_precision: Optional[int] = None) -> ReportRenderer:
        precision = self.args.precision
        if precision is None:
            precision = file_precision if file_precision is not None else self.settings.display_precision
        return ReportRenderer(self.settings.templates_dir, precision)

    def _emit(self, data: Dict[str, Any], table: str) -> None:
        if self.args.format == "table":
            sys.stdout.write(table)
        else:
            sys.stdout.write(serialize(data, self.args.format))

    def _weights_override(self) -> Optional[List[float]]:
        return parse_weights(self.args.weights) if self.args.weights else None

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self.args.command}")
        handler()
        return EXIT_OK

    def cmd_rank(self) -> None:
        problem = load_problem_file(
            self.args.path, self._weights_override(), self.args.allow_unnormalized_weights
        )
        for message in problem.matrix.inclusion_advisories():
            logger.warning(f"lower-within-upper advisory: {message}")
        pipeline = StagedRankingPipeline(problem, output_dir=self.settings.output_dir)
        report = pipeline.run_all()
        if self.args.output:
            pipeline.write_results_to_file(self.args.output)
        table = self._renderer(problem.display_precision).ranking(report) if self.args.format == "table" else ""
        self._emit(report.to_dict(), table)

    def cmd_reproduce(self) -> None:
        renderer = self._renderer()
        if self.args.table == 3:
            problem = reference_problem()
            matrix = problem.matrix
            data = {
                "table": 3,
                "alternatives": matrix.alternatives,
                "labels": problem.labels,
                "criteria": matrix.criteria,
                "matrix": {
                    name: {c: n.to_dict() for c, n in zip(matrix.criteria, row)}
                    for name, row in zip(matrix.alternatives, matrix.rows)
                },
            }
            self._emit(data, renderer.decision_matrix(problem))
            return
        report = reconcile_published(Regime(self.args.regime))
        self._emit({"table": self.args.table, **report.to_dict()}, renderer.reconciliation(report, self.args.table))

    def cmd_score(self) -> None:
        number = load_number_file(self.args.path)
        for message in number.inclusion_violations():
            logger.warning(f"lower-within-upper advisory: {message}")
        sa = score_accuracy(number)
        data = {"score": sa.score, "accuracy": sa.accuracy, "number": number.to_dict()}
        self._emit(data, self._renderer().number(number, sa, title=self.args.path))

    def cmd_agg(self) -> None:
        numbers, weights = load_numbers_file(
            self.args.path, self._weights_override(), self.args.allow_unnormalized_weights
        )
        result = ivtrnwaa(numbers, weights)
        sa = score_accuracy(result)
        data = {
            "weights": list(weights.weights),
            "weight_mode": weights.mode.value,
            "aggregate": result.to_dict(),
            "score": sa.score,
            "accuracy": sa.accuracy,
        }
        title = f"IVTrNWAA of {len(numbers)} numbers, weights {', '.join(f'{w:g}' for w in weights)}"
        self._emit(data, self._renderer().number(result, sa, title=title))

    def cmd_validate(self) -> None:
        problem = load_problem_file(
            self.args.path, self._weights_override(), self.args.allow_unnormalized_weights
        )
        ok, advisories = check_problem(problem)
        for message in advisories:
            logger.warning(message)
        data = {"path": self.args.path, "problem": problem.name, "clean": ok, "advisories": advisories}
        self._emit(data, self._renderer().validation(self.args.path, problem, advisories))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = load_settings()
    configure_logging(args.log_level or settings.log_level)
    try:
        return CommandRunner(args, settings).run()
    except ParseError as e:
        logger.error(str(e))
        return EXIT_PARSE
    except IvtrnnError as e:
        logger.error(str(e))
        return EXIT_VALIDATION
    except Exception as e:
        logger.exception(f"internal error: {e}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
