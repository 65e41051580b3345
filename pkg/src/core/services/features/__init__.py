"""
Bounce features and their histograms.
"""

from core.services.features.extraction import extract_features
from core.services.features.histogram import build_histogram, tail_comparison

__all__ = ["extract_features", "build_histogram", "tail_comparison"]
