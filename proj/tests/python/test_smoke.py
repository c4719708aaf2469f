import math
import os

import pytest

import numrange as nr

SPECS = os.path.join(os.path.dirname(__file__), "..", "..", "specs")


def spec(name):
    return os.path.join(SPECS, name + ".json")


def test_load_and_describe():
    A = nr.load_algebra(spec("pointwise_c3_sup"))
    assert A.dim == 3
    ident = A.identity()
    assert ident is not None
    assert abs(ident[0] - 1.0) < 1e-12
    faithful, witness = A.is_faithful()
    assert faithful and witness is None
    assert A.associativity_defect() < 1e-12


def test_multiply_and_norms():
    A = nr.pointwise_algebra(3, math.inf)
    x = [1.0, 2.0, 3.0]
    y = [1.0, 0.5, 1j]
    prod = A.multiply(x, y)
    assert abs(prod[0] - 1.0) < 1e-12
    assert abs(prod[2] - 3j) < 1e-12
    assert A.norm(x) == pytest.approx(3.0)
    assert A.operator_norm(x) == pytest.approx(3.0)


def test_spatial_range_unit_disk():
    A = nr.load_algebra(spec("right_scalar_action_l1"))
    est = nr.spatial_range(A, [0.0, 1.0], seed=3, refine=True)
    # the range is the closed unit disk
    assert est.radius <= 1 + 1e-9
    assert est.radius >= 0.99
    assert len(est.hull) >= 8
    assert est.cloud_csv().startswith("re,im,x_index,phi_index")


def test_identity_oracle_singleton():
    A = nr.pointwise_algebra(3, math.inf)
    verts = nr.identity_range_oracle(A, [1.0, 1.0, 1.0])
    assert all(abs(v - 1.0) < 1e-3 for v in verts)
    B = nr.load_algebra(spec("right_scalar_action_l1"))
    with pytest.raises(ValueError):
        nr.identity_range_oracle(B, [1.0, 0.0])


def test_unitize():
    A = nr.load_algebra(spec("right_scalar_action_l1"))
    ext, seminorm = nr.unitize(A, "l1")
    assert ext.dim == A.dim + 1
    assert not seminorm
    assert ext.identity() is not None
    n = nr.unitization_norm(A, "l1", [1.0, 0.0], 2.0)
    assert n == pytest.approx(3.0)
    B = nr.load_algebra(spec("left_scalar_action_l1"))
    with pytest.raises(nr.UnitizeError):
        nr.unitize(B, "op")


def test_check_report():
    A = nr.load_algebra(spec("right_scalar_action_linf"))
    report = nr.check("thm24", A, [1.0, 1j], seed=0)
    assert report["status"] == "pass"
    with pytest.raises(ValueError):
        nr.check("nope", A, [1.0, 0.0])


def test_gallery_names():
    names = nr.gallery_case_names()
    assert len(names) == 10
    assert "3.3" in names
