"""Static catalogue of the twenty geometries: parameters, branches, frame parameters."""
from __future__ import annotations

from dataclasses import dataclass

from .lie_algebra import A_CLASSES, B_CLASSES, B_RADII


@dataclass(frozen=True)
class ClassInfo:
    cls: str
    label: str
    model: str
    params: tuple            # names of required GeometrySpec parameters
    branches: tuple          # diagonal-family branch tags
    n_frame_params: int      # free entries in the frame template (0: no template)

    def as_dict(self) -> dict:
        return {"class": self.cls, "label": self.label, "model": self.model,
                "params": list(self.params), "branches": list(self.branches),
                "frame_params": self.n_frame_params}


_A = [
    ("A1", "U1[(1,1,1)]", "R^4", (), (), 0),
    ("A2", "U1[1,1,1]", "Sol^4_{m,n} / Sol^3 x R", ("k", "mn?"), ("P1.i", "P1.ii"), 6),
    ("A3", "U1[Z,Zbar,1]", "Sol'^4_k", ("k",), ("P2",), 6),
    ("A4", "U1[2,1]", "Nil^3 x R", (), ("P3",), 6),
    ("A5", "U1[2,1]", "Sol^4_1", (), ("P4",), 6),
    ("A6", "U1[3]", "Nil^4", (), ("P5",), 6),
    ("A7", "U3I0", "SL~(2,R) x R (I0)", (), ("P6.i", "P6.ii"), 6),
    ("A8", "U3I2", "Isom(E^2) type (I2)", (), ("P7",), 6),
    ("A9", "U3S1", "SL~(2,R) x R", (), ("P8.i", "P8.ii"), 3),
    ("A10", "U3S3", "S^3 x R", (), ("P9.i", "P9.ii", "P9.iii"), 3),
]

_B = [
    ("B1", "H^3 x R"), ("B2", "S^2 x R^2"), ("B3", "H^2 x R^2"),
    ("B4", "S^2 x S^2"), ("B5", "S^2 x H^2"), ("B6", "H^2 x H^2"),
    ("B7", "CP^2"), ("B8", "CH^2"), ("B9", "S^4"), ("B10", "H^4"),
]

CATALOG = {row[0]: ClassInfo(*row) for row in _A}
CATALOG.update({
    cls: ClassInfo(cls, model, model,
                   tuple(f"R{i + 1}" for i in range(B_RADII[cls])) if B_RADII[cls] > 1 else ("R",),
                   ("product",), 0)
    for cls, model in _B
})

assert tuple(CATALOG) == A_CLASSES + B_CLASSES


def branches(cls: str) -> tuple:
    return CATALOG[cls.upper()].branches


def class_of_branch(tag: str) -> str:
    for info in CATALOG.values():
        if tag in info.branches and info.cls in A_CLASSES:
            return info.cls
    raise KeyError(f"unknown branch tag {tag!r}")
