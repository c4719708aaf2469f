"""Spatial numerical ranges, numerical radii and unitization norms for
finite-dimensional complex normed algebras."""

from ._core import (
    Algebra,
    RangeEstimate,
    UnitizeError,
    algebra_from_json,
    check,
    gallery_case_names,
    identity_range_oracle,
    make_algebra,
    pointwise_algebra,
    run_gallery,
    spatial_range,
    unitization_norm,
    unitize,
)


def load_algebra(path):
    """Load an algebra from a JSON spec file."""
    with open(path, "r", encoding="utf-8") as f:
        return algebra_from_json(f.read())


__all__ = [
    "Algebra",
    "RangeEstimate",
    "UnitizeError",
    "algebra_from_json",
    "check",
    "gallery_case_names",
    "identity_range_oracle",
    "load_algebra",
    "make_algebra",
    "pointwise_algebra",
    "run_gallery",
    "spatial_range",
    "unitization_norm",
    "unitize",
]
