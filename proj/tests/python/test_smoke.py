import os

import _cmfields as cmf


def test_factor_and_phi():
    assert cmf.factor(65689) == [(13, 1), (31, 1), (163, 1)]
    assert cmf.euler_phi(12) == 4
    gens, orders = cmf.unit_group(8)
    assert gens == [7, 5] and orders == [2, 2]


def test_class_numbers():
    assert cmf.imaginary_quadratic_h(-163) == 1
    assert cmf.imaginary_quadratic_h(-15) == 2
    assert cmf.real_quadratic_h(40) == 2
    x, y, norm = cmf.fundamental_unit(5)
    assert (x, y, norm) == ("1", "1", -1)


def test_relative_class_number():
    r = cmf.cyclotomic_hminus(23)
    assert r["value"] == "3"
    r = cmf.relative_class_number([-8, -20])
    assert r["value"] == "1"
    assert cmf.quartic_class_number([-8, -20]) == "2"


def test_enumeration():
    rep = cmf.enumerate_fields([2], bound="163", signature="cm")
    h1 = [f for f in rep["fields"] if f["hminus"]["value"] == "1"]
    assert len(h1) == 9
    rep = cmf.enumerate_fields([2, 2], bound="1000")
    assert rep["fields"][0]["disc"] == "144"


def test_polynomials():
    assert cmf.poly_discriminant(["41", "-1", "1"]) == "-163"
    assert cmf.sturm_real_roots(["1", "0", "-1", "0", "1"]) == 0
    assert cmf.is_irreducible(["1", "0", "0", "0", "1"])


def test_bounds_and_groups():
    b = cmf.bound_for(64)
    assert b["disc_bound"] == "10^115"
    g = cmf.group_report(24, 3)
    assert g["name"] == "SL(2,3)" and g["cm_admissible"]


def test_verify_structural():
    data_dir = os.environ.get("CMFIELDS_DATA_DIR", "data")
    ok, rows = cmf.verify_table(
        os.path.join(data_dir, "appendix_fields.tsv"), structural_only=True
    )
    assert ok and len(rows) == 366
