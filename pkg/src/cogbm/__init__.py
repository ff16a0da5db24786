"""cogbm: cognitive business-model ontology with a brain-emotional-learning
profit regressor, a polynomial baseline, and a 9-vs-14 input ablation harness.
"""

from .ablation import (
    AblationConfig,
    AblationReport,
    ArmReport,
    EvaluationMetrics,
    ModelSeries,
    report_to_dict,
    report_to_json,
    report_to_tsv,
    run_ablation,
)
from .bel import (
    BelConfig,
    BelNetwork,
    ForwardTrace,
    TrainingHistory,
    fit,
    forward,
    from_snapshot,
    predict,
    thalamus_signal,
    to_snapshot,
    train_step,
)
from .dsl import parse_model, serialize_model
from .errors import (
    CogbmError,
    ConstantActualError,
    DimensionMismatchError,
    EmptyDatasetError,
    EmptySeriesError,
    EmptyStimulusError,
    LengthMismatchError,
    NonFiniteRewardError,
    ParseError,
    TooFewRowsError,
    ZeroBaseError,
)
from .metrics import mse, r_squared, rate_of_change
from .observations import (
    ObservationTable,
    load_binding,
    load_observations,
    table_to_csv,
)
from .ontology import (
    BusinessModel,
    Concept,
    Relation,
    Schema,
    ValidationReport,
    Verb,
    Violation,
    ViolationCode,
    canonical_model,
    canonical_schema,
    parse_concept,
    parse_verb,
    validate_instance,
)
from .polynomial import PolyModel, fit_polynomial, predict_polynomial
from .preprocess import ColumnScale, ScalerParams, normalize, split
from .synthetic import make_observation_table

__version__ = "0.1.0"

__all__ = [
    "AblationConfig", "AblationReport", "ArmReport", "BelConfig", "BelNetwork",
    "BusinessModel", "CogbmError", "ColumnScale", "Concept",
    "ConstantActualError", "DimensionMismatchError", "EmptyDatasetError",
    "EmptySeriesError", "EmptyStimulusError", "EvaluationMetrics",
    "ForwardTrace", "LengthMismatchError", "ModelSeries",
    "NonFiniteRewardError", "ObservationTable", "ParseError", "PolyModel",
    "Relation", "ScalerParams", "Schema", "TooFewRowsError",
    "TrainingHistory", "ValidationReport", "Verb", "Violation",
    "ViolationCode", "ZeroBaseError", "canonical_model", "canonical_schema",
    "fit", "fit_polynomial", "forward", "from_snapshot", "load_binding",
    "load_observations", "make_observation_table", "mse", "normalize",
    "parse_concept", "parse_model", "parse_verb", "predict",
    "predict_polynomial", "r_squared", "rate_of_change", "report_to_dict",
    "report_to_json", "report_to_tsv", "run_ablation", "serialize_model",
    "split", "table_to_csv", "thalamus_signal", "to_snapshot", "train_step",
    "validate_instance",
]
