from gekr.models.array import (
    GEKR,
    ArrayMatrix,
    DeficiencyReport,
    PatternSet,
    parse_array,
    render_array,
)
from gekr.models.magnitude import ExactProb, LogMagnitude, exact_to_magnitude
from gekr.models.params import BoundModel, ConstructionConfig, Model, ModelParams, NuMode, Strategy
from gekr.models.profile import AsymptoticProfile, QuadraticRoots

__all__ = [
    "GEKR",
    "ArrayMatrix",
    "DeficiencyReport",
    "PatternSet",
    "parse_array",
    "render_array",
    "ExactProb",
    "LogMagnitude",
    "exact_to_magnitude",
    "BoundModel",
    "ConstructionConfig",
    "Model",
    "ModelParams",
    "NuMode",
    "Strategy",
    "AsymptoticProfile",
    "QuadraticRoots",
]
