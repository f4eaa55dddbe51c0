import json

import pytest

import reference_data
from decision_dataclasses import DecisionMatrix, DecisionProblem, IntervalLinguisticMatrix, RankingReport
from ivtrnn_errors import LengthMismatch, UnknownTerm, ValidationError
from ivtrnn_numbers import IVTrNN
from rank_in_stages import (
    PipelineState,
    Stage,
    StagedRankingPipeline,
    build_decision_matrix,
    rank_alternatives,
    rank_published_numbers,
    reference_dataset,
    reference_problem,
    reference_scale,
)
from score_and_aggregate import WeightVector, dominates


@pytest.fixture
def dataset():
    return reference_dataset()


@pytest.fixture
def stated_problem():
    return reference_problem()


@pytest.fixture
def uniform_problem():
    return reference_problem(uniform=True)


# --- Decision matrix ---
def test_build_decision_matrix_maps_terms(dataset, low, high, very_low):
    matrix = build_decision_matrix(dataset.linguistic, dataset.scale)
    pw_usf = matrix.entry("PW", "USF")
    assert pw_usf.lower == low and pw_usf.upper == high
    ck_rbs = matrix.entry("CK", "RBS")
    assert ck_rbs.lower.truth.as_tuple() == (0.0, 0.1, 0.1, 0.2)
    assert ck_rbs.upper.truth.as_tuple() == (0.4, 0.5, 0.6, 0.7)
    assert ck_rbs.lower == very_low


def test_build_decision_matrix_unknown_term(dataset):
    lm = IntervalLinguisticMatrix.from_rows(["USF"], {"PW": [("Medium", "High")]})
    with pytest.raises(UnknownTerm):
        build_decision_matrix(lm, dataset.scale)


def test_interval_matrix_must_be_complete():
    with pytest.raises(ValidationError):
        IntervalLinguisticMatrix(["PW"], ["USF", "PER"], {("PW", "USF"): ("Low", "High")})


def test_decision_matrix_is_deterministic(dataset):
    first = build_decision_matrix(dataset.linguistic, dataset.scale)
    second = build_decision_matrix(dataset.linguistic, dataset.scale)
    assert first == second


def test_reference_dataset(dataset):
    assert dataset.published_scores["IR"] == 0.8232
    assert dataset.published_combined["PW"].lower.truth.as_tuple() == (0.2555, 0.3732, 0.4719, 0.5838)
    assert dataset.weights.weights == (0.2, 0.25, 0.25, 0.1, 0.2)
    assert "IR" in dataset.garbled
    assert dataset.published_order == ["IR", "SM", "CK", "PW", "FR", "TF", "CT", "MM"]


# --- Staged pipeline ---
def test_pipeline_runs_stage_by_stage(stated_problem):
    pipeline = StagedRankingPipeline(stated_problem)
    assert pipeline.get_current_stage() == "aggregate"
    pipeline.run_stage()
    assert pipeline.state is PipelineState.SUCCESS
    assert set(pipeline.get_stage_result()) == set(reference_data.ALTERNATIVES)
    assert pipeline.next_stage() == "score"
    pipeline.run_stage()
    assert pipeline.next_stage() == "rank"
    pipeline.run_stage()
    assert pipeline.next_stage() is None
    assert isinstance(pipeline.report, RankingReport)
    assert pipeline.get_stage_error(Stage.RANK) is None


def test_pipeline_records_stage_errors(dataset):
    matrix = build_decision_matrix(dataset.linguistic, dataset.scale)
    problem = DecisionProblem("bad", matrix, WeightVector((0.5, 0.5)))
    pipeline = StagedRankingPipeline(problem)
    with pytest.raises(LengthMismatch):
        pipeline.run_stage()
    assert pipeline.state is PipelineState.ERROR
    assert "2 weights for 5 criteria" in pipeline.get_stage_error(Stage.AGGREGATE)


def test_stated_weights_ranking(stated_problem):
    report = StagedRankingPipeline(stated_problem).run_all()
    assert report.best == "IR"
    assert report.ordering[-1] == "MM"
    assert [r.rank for r in report.ranked] == list(range(1, 9))


def test_uniform_weights_ranking(uniform_problem):
    report = StagedRankingPipeline(uniform_problem).run_all()
    assert report.ordering == ["IR", "SM", "FR", "PW", "CK", "TF", "CT", "MM"]
    assert report.ranked[0].score == pytest.approx(reference_data.PUBLISHED_SCORES["IR"], abs=6e-3)


def test_single_alternative_ranks_first(dataset, interval):
    matrix = DecisionMatrix(["only"], ["USF", "PER"], [[interval("Low", "High"), interval("Very Low", "High")]])
    for weights in ((0.5, 0.5), (0.9, 0.1)):
        report = rank_alternatives(matrix, WeightVector(weights))
        assert report.ordering == ["only"]
        assert report.ranked[0].rank == 1


def test_identical_alternatives_are_tied_in_input_order(interval):
    row = [interval("Low", "High"), interval("High", "Very High")]
    better = [interval("High", "Very High"), interval("Very High", "Very High")]
    matrix = DecisionMatrix(["B", "A", "C"], ["X", "Y"], [row, row, better])
    report = rank_alternatives(matrix, WeightVector((0.5, 0.5)))
    assert report.ordering == ["C", "B", "A"]
    assert report.ranked[1].tied_with == ["A"]
    assert report.ranked[2].tied_with == ["B"]
    assert report.ties == [["B", "A"]]


def test_ranking_invariant_under_row_permutation(stated_problem):
    matrix = stated_problem.matrix
    reversed_matrix = DecisionMatrix(matrix.alternatives[::-1], matrix.criteria, matrix.rows[::-1])
    original = rank_alternatives(matrix, stated_problem.weights)
    permuted = rank_alternatives(reversed_matrix, stated_problem.weights)
    assert original.ordering == permuted.ordering


def test_ranking_invariant_under_column_permutation(stated_problem):
    matrix, weights = stated_problem.matrix, stated_problem.weights.weights
    order = [4, 2, 0, 3, 1]
    permuted = DecisionMatrix(
        matrix.alternatives,
        [matrix.criteria[i] for i in order],
        [[row[i] for i in order] for row in matrix.rows],
    )
    original = rank_alternatives(matrix, stated_problem.weights)
    shuffled = rank_alternatives(permuted, WeightVector(tuple(weights[i] for i in order)))
    assert original.ordering == shuffled.ordering
    for a, b in zip(original.ranked, shuffled.ranked):
        assert a.score == pytest.approx(b.score, abs=1e-12)


def test_dominated_alternative_never_displaces_best(stated_problem):
    matrix = stated_problem.matrix
    report = rank_alternatives(matrix, stated_problem.weights)
    best_row = matrix.row(report.best)
    worse_row = []
    for number in best_row:
        values = number.to_array()
        for level in range(2):
            values[level][0] = [max(v - 0.05, 0.0) for v in values[level][0]]
        worse_row.append(IVTrNN.from_array(values))
    extended = DecisionMatrix(matrix.alternatives + ["WORSE"], matrix.criteria, matrix.rows + [worse_row])
    assert all(dominates(b, w) or b == w for b, w in zip(best_row, worse_row))
    assert rank_alternatives(extended, stated_problem.weights).best == report.best


def test_published_numbers_give_published_order(dataset):
    assert rank_published_numbers(dataset.published_combined) == dataset.published_order


def test_reference_scale_terms(low):
    scale = reference_scale()
    assert scale.resolve("Low") == low
    assert set(scale.terms) == {"Very Low", "Low", "High", "Very High"}


# --- Report files ---
def test_write_results_round_trip(stated_problem, tmp_path):
    pipeline = StagedRankingPipeline(stated_problem, output_dir=str(tmp_path))
    report = pipeline.run_all()
    path = pipeline.write_results_to_file(str(tmp_path / "nested" / "report.json"))
    with open(path) as f:
        assert RankingReport.from_dict(json.load(f)) == report


def test_write_results_default_name(stated_problem, tmp_path):
    pipeline = StagedRankingPipeline(stated_problem, output_dir=str(tmp_path))
    pipeline.run_all()
    path = pipeline.write_results_to_file()
    assert path.startswith(str(tmp_path))
    assert path.endswith(".json")
    assert "nfr_authentication_" in path


def test_write_results_requires_a_run(stated_problem, tmp_path):
    with pytest.raises(RuntimeError):
        StagedRankingPipeline(stated_problem, output_dir=str(tmp_path)).write_results_to_file()
