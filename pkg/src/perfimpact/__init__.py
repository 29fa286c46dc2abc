"""Predict test-suite runtime impact of Java code changes from code stylometry."""
from .errors import PerfImpactError
from .javaast import Ast, AstNode, NodeKind
from .javaparse import parse_java
from .regress import MODEL_KINDS, EvalReport, ModelSpec, fit, mae, predict
from .stylometry import FeatureSchema, extract_file, fe_transform, make_schema

__all__ = [
    "Ast", "AstNode", "EvalReport", "FeatureSchema", "MODEL_KINDS", "ModelSpec", "NodeKind", "PerfImpactError",
    "extract_file", "fe_transform", "fit", "mae", "make_schema", "parse_java", "predict",
]
