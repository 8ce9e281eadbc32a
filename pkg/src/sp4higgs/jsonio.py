"""JSON encoding of Higgs data.

Data files are objects tagged by "shape" and carrying "genus"; field
elements are arrays of 8 "num/den" strings, mod-2 vectors are bitstrings
of length 2g, and line bundle classes are {k_power, extra_degree,
torsion} objects.  Encoding then decoding is the identity, and output is
deterministic (sorted keys, no run metadata).
"""

from __future__ import annotations

from typing import Tuple

from .f2 import F2Vector
from .higgs import (
    CoverOrthShape, CurveCtx, DiagonalShape, DirectSum, HiggsDatum,
    IrreducibleImage, SectionSlot, SL2RDatum, TorsionSplitShape,
)

__all__ = ["datum_to_json", "datum_from_json", "load_datum"]


def datum_to_json(ctx: CurveCtx, datum: HiggsDatum) -> dict:
    out = {"genus": ctx.genus}
    out.update(_encode(datum))
    return out


def _encode(datum: HiggsDatum) -> dict:
    if isinstance(datum, DiagonalShape):
        return {"shape": "diagonal",
                "N": datum.N.to_json(),
                "beta1": datum.beta1.to_json(),
                "beta2": datum.beta2.to_json(),
                "beta3": datum.beta3.to_json()}
    if isinstance(datum, CoverOrthShape):
        return {"shape": "cover_orth",
                "w1": datum.w1.to_string(),
                "w2": datum.w2,
                "beta_present": datum.beta_present}
    if isinstance(datum, TorsionSplitShape):
        return {"shape": "torsion_split",
                "t1": datum.t1.to_string(),
                "t2": datum.t2.to_string(),
                "beta1": datum.beta1.to_json(),
                "beta2": datum.beta2.to_json()}
    if isinstance(datum, SL2RDatum):
        return {"shape": "sl2r",
                "L": datum.L.to_json(),
                "beta": datum.beta.to_json(),
                "gamma": datum.gamma.to_json()}
    if isinstance(datum, IrreducibleImage):
        return {"shape": "irreducible_image",
                "L": datum.L.to_json(),
                "beta": datum.beta.to_json(),
                "gamma": datum.gamma.to_json()}
    if isinstance(datum, DirectSum):
        return {"shape": "direct_sum",
                "summands": [_encode(s) for s in datum.summands]}
    raise TypeError("not a Higgs datum: %r" % (datum,))


def datum_from_json(data: dict) -> Tuple[CurveCtx, HiggsDatum]:
    ctx = CurveCtx(int(data["genus"]))
    return ctx, _decode(data)


def _decode(data: dict) -> HiggsDatum:
    from .higgs import LineBundleClass

    shape = data["shape"]
    if shape == "diagonal":
        return DiagonalShape(
            N=LineBundleClass.from_json(data["N"]),
            beta1=SectionSlot.from_json(data["beta1"]),
            beta2=SectionSlot.from_json(data["beta2"]),
            beta3=SectionSlot.from_json(data["beta3"]))
    if shape == "cover_orth":
        return CoverOrthShape(
            w1=F2Vector.from_string(data["w1"]),
            w2=int(data["w2"]),
            beta_present=bool(data["beta_present"]))
    if shape == "torsion_split":
        return TorsionSplitShape(
            t1=F2Vector.from_string(data["t1"]),
            t2=F2Vector.from_string(data["t2"]),
            beta1=SectionSlot.from_json(data["beta1"]),
            beta2=SectionSlot.from_json(data["beta2"]))
    if shape == "sl2r":
        return SL2RDatum(
            L=LineBundleClass.from_json(data["L"]),
            beta=SectionSlot.from_json(data["beta"]),
            gamma=SectionSlot.from_json(data["gamma"]))
    if shape == "irreducible_image":
        return IrreducibleImage(
            L=LineBundleClass.from_json(data["L"]),
            beta=SectionSlot.from_json(data["beta"]),
            gamma=SectionSlot.from_json(data["gamma"]))
    if shape == "direct_sum":
        return DirectSum(tuple(_decode(s) for s in data["summands"]))
    raise ValueError("unknown shape tag %r" % (shape,))


def load_datum(path: str) -> Tuple[CurveCtx, HiggsDatum]:
    import json

    with open(path, "r", encoding="utf-8") as fh:
        return datum_from_json(json.load(fh))
