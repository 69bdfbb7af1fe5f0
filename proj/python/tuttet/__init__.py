"""Convex-combination embeddings of tetrahedral meshes.

Thin wrapper over the C++ core: mesh generators, hypothesis validation
(boundary-triangle condition, 4-connectivity, link connectivity, K6 and
K_{3,3,1} minor exclusion), the convex-combination solve and independent
embedding certification.
"""

from ._tuttet import (
    TetMesh,
    TuttetError,
    certify,
    embed,
    euler_check,
    experiment,
    generate,
    generator_names,
    load_mesh,
    minor_exclusion,
    save_mesh,
    validate,
)

__all__ = [
    "TetMesh",
    "TuttetError",
    "certify",
    "embed",
    "euler_check",
    "experiment",
    "generate",
    "generator_names",
    "load_mesh",
    "minor_exclusion",
    "save_mesh",
    "validate",
]
