"""Abelian CM fields over Q: exact enumeration, relative class numbers,
group/bound data and table verification."""

from _cmfields import (
    bound_for,
    cyclotomic_hminus,
    enumerate_fields,
    euler_phi,
    factor,
    fundamental_unit,
    group_report,
    imaginary_quadratic_h,
    is_irreducible,
    poly_discriminant,
    quartic_class_number,
    real_quadratic_h,
    relative_class_number,
    sturm_real_roots,
    unit_group,
    verify_table,
)

__all__ = [
    "bound_for",
    "cyclotomic_hminus",
    "enumerate_fields",
    "euler_phi",
    "factor",
    "fundamental_unit",
    "group_report",
    "imaginary_quadratic_h",
    "is_irreducible",
    "poly_discriminant",
    "quartic_class_number",
    "real_quadratic_h",
    "relative_class_number",
    "sturm_real_roots",
    "unit_group",
    "verify_table",
]
