"""
Tour of the four orbit kinds
============================

Builds one normal-form subalgebra of each kind at n = 3, displaces the
orbit by a structured group element, and prints the classification
report: CR verdict, type tag, tangent decomposition at the base point,
and the congruence key when one exists.
"""

import json

import numpy as np

from crorbits import (
    GroupElement,
    OrbitQuery,
    SubalgebraSpec,
    classify_orbit,
    structured_xi,
)

np.set_printoptions(precision=6, suppress=True)

N = 3

SPECS = [
    SubalgebraSpec("R", 0, 2, N),
    SubalgebraSpec("CRZ", 1, 0, N),
    SubalgebraSpec("AR", 0, 1, N),
    SubalgebraSpec("ACRZ", 1, 1, N),
]

# one CR-compatible displacement per kind; W lists re/im pairs over the
# complex directions not taken up by the subalgebra
DISPLACEMENTS = {
    "R": dict(b=0.4, T=[0.3, -0.5], y=0.2),
    "CRZ": dict(b=-0.3, W=[0.6, 0.1], y=-0.4),
    "AR": dict(W=[0.5, -0.3], y=0.7),
    "ACRZ": dict(T=[0.8]),
}

# displacements that break the CR condition need a nonzero component in
# the direction the kind forbids
BREAKERS = [
    (SubalgebraSpec("AR", 0, 1, N), dict(T=[0.6], W=[0.5, -0.3])),
    (SubalgebraSpec("ACRZ", 1, 0, N), dict(T=[], W=[0.4, 0.1])),
]

for spec in SPECS:
    g = GroupElement(structured_xi(spec, **DISPLACEMENTS[spec.kind]))
    report = classify_orbit(OrbitQuery(spec, g))
    print(f"== kind {spec.kind}, dims (c={spec.dim_c}, r={spec.dim_r}), n={N} ==")
    print(f"   CR: {report.is_cr}   type tag: {report.type_tag}")
    dec = report.decomposition.to_json()
    print(f"   tangent split: complex dim {len(dec['complex_part']['basis'])},"
          f" real dim {len(dec['real_part']['basis'])}")
    if report.congruence_key is not None:
        print(f"   congruence key: {json.dumps(report.congruence_key.to_json())}")
    print()

print("== displacements that leave the CR locus ==")
for spec, coords in BREAKERS:
    g = GroupElement(structured_xi(spec, **coords))
    report = classify_orbit(OrbitQuery(spec, g))
    nonzero = sorted(k for k, v in coords.items() if np.linalg.norm(v) > 0)
    print(f"   kind {spec.kind} with {nonzero} nonzero: tag {report.type_tag}")
