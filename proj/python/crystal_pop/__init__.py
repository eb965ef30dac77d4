"""Type A crystal posets, pop-stack sorting and lattice tests."""

from ._core import (
    Crystal,
    CrystalPopError,
    classification_sweep,
    coxeter_pop,
    hook_content_count,
    lowering_f,
    pop_permutation,
    predict_lattice,
    raising_e,
)

__all__ = [
    "Crystal",
    "CrystalPopError",
    "classification_sweep",
    "coxeter_pop",
    "hook_content_count",
    "lowering_f",
    "pop_permutation",
    "predict_lattice",
    "raising_e",
]
