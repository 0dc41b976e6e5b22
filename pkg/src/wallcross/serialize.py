"""Exact, byte-deterministic JSON for every result object.

Rationals never pass through floats: an integral value serializes as a JSON
integer, anything else as the string "p/q".  Homology classes are arrays of
integer coordinates, symplectic classes arrays of rationals, in the basis
order of their surface (B, F on the product; H, E_1, ..., E_k on blow-ups).
Every top-level document carries "schema": 1 so readers can detect format
drift, and `dumps` fixes key order and separators so identical requests
produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional, Sequence

from .errors import ValidationError
from .lattice import (
    BLOWUP,
    PRODUCT,
    LatticeClass,
    SurfaceModel,
    SymplecticClass,
    blow_up,
    lattice_class,
    product,
    symplectic_class,
)
from .packing import CapacityProfile
from .spheres import (
    CANDIDATE_TIER,
    CERTIFIED_TIER,
    EnumerationResult,
    SphereClassSet,
)
from .stability import (
    StabilityCertificate,
    StabilityVerdict,
    WallCrossing,
)
from .strata import StratificationIndex

SCHEMA_VERSION = 1


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Rationals


def parse_rational(text: str) -> Fraction:
    t = text.strip()
    if "." in t:
        raise ValidationError(
            f"decimal notation {text!r} is not exact; write 5/2 style rationals"
        )
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(
            f"cannot parse {text!r} as a rational; write an integer or p/q"
        ) from None


def rational_to_json(value) -> int | str:
    q = Fraction(value)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValidationError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(
        f"expected an integer or a 'p/q' string, got {value!r} "
        f"(floats are not exact and are rejected)"
    )


# ---------------------------------------------------------------------------
# Surfaces and classes


def surface_to_json(surface: SurfaceModel) -> dict:
    if surface.kind == PRODUCT:
        return {"kind": PRODUCT}
    return {"kind": BLOWUP, "k": surface.k}


def surface_from_json(doc: Any) -> SurfaceModel:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValidationError(f"not a surface document: {doc!r}")
    kind = doc["kind"]
    if kind == PRODUCT:
        return product()
    if kind == BLOWUP:
        k = doc.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValidationError(f"blow-up surface needs an integer k, got {k!r}")
        return blow_up(k)
    raise ValidationError(f"unknown surface kind {kind!r}")


def class_to_json(a: LatticeClass) -> list[int]:
    return list(a.coords)


def class_from_json(surface: SurfaceModel, doc: Any) -> LatticeClass:
    if not isinstance(doc, list):
        raise ValidationError(f"not a class document: {doc!r}")
    vals = []
    for v in doc:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(
                f"homology class coordinates must be integers, got {v!r}"
            )
        vals.append(v)
    return lattice_class(surface, vals)


def symplectic_to_json(u: SymplecticClass) -> list:
    return [rational_to_json(c) for c in u.coords]


def symplectic_from_json(surface: SurfaceModel, doc: Any) -> SymplecticClass:
    if not isinstance(doc, list):
        raise ValidationError(f"not a symplectic class document: {doc!r}")
    return symplectic_class(surface, [rational_from_json(v) for v in doc])


def _classes_to_json(classes: Sequence[LatticeClass]) -> list[list[int]]:
    return [class_to_json(a) for a in classes]


# ---------------------------------------------------------------------------
# Result documents


def enumeration_to_json(result: EnumerationResult) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "surface": surface_to_json(result.surface),
        "square": result.sq,
        "classes": _classes_to_json(result.classes),
        "count": len(result.classes),
        "complete": result.complete,
    }


def sphere_set_to_json(s: SphereClassSet) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "surface": surface_to_json(s.surface),
        "u": symplectic_to_json(s.u),
        "floor": s.square_floor,
        "classes": _classes_to_json(s.classes),
        "certification": s.certification,
        "full": s.full,
        "complete": s.complete,
    }
    if s.certification == CERTIFIED_TIER:
        doc["status"] = [st for _, st in s.status]
    return doc


def sphere_set_from_json(doc: Any) -> SphereClassSet:
    if not isinstance(doc, dict):
        raise ValidationError("not a sphere-class set document")
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValidationError(
            f"unsupported schema version {doc.get('schema')!r}; "
            f"this build reads schema {SCHEMA_VERSION}"
        )
    try:
        surface = surface_from_json(doc["surface"])
        u = symplectic_from_json(surface, doc["u"])
        floor = doc["floor"]
        classes = tuple(class_from_json(surface, c) for c in doc["classes"])
        certification = doc["certification"]
        full = bool(doc["full"])
        complete = bool(doc["complete"])
    except KeyError as exc:
        raise ValidationError(
            f"sphere-class set document is missing key {exc.args[0]!r}"
        ) from None
    if not isinstance(floor, int) or isinstance(floor, bool) or floor < 1:
        raise ValidationError(f"floor must be a positive integer, got {floor!r}")
    if certification not in (CANDIDATE_TIER, CERTIFIED_TIER):
        raise ValidationError(f"unknown certification tier {certification!r}")
    status: tuple[tuple[LatticeClass, str], ...] = ()
    if certification == CERTIFIED_TIER:
        labels = doc.get("status")
        if not isinstance(labels, list) or len(labels) != len(classes):
            raise ValidationError(
                "certified-tier document needs a status array parallel to classes"
            )
        status = tuple(zip(classes, labels))
    return SphereClassSet(
        surface=surface,
        u=u,
        square_floor=floor,
        classes=classes,
        certification=certification,
        status=status,
        full=full,
        complete=complete,
    )


def strata_to_json(
    surface: SurfaceModel, u: SymplecticClass, index: StratificationIndex
) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "surface": surface_to_json(surface),
        "u": symplectic_to_json(u),
        "level": index.level,
        "strata": [
            {"classes": _classes_to_json(s.classes), "codim": s.codim}
            for s in index.strata
        ],
        "residual_codim": index.residual_codim,
    }


def verdict_to_json(verdict: StabilityVerdict) -> dict:
    return {
        "mode": verdict.mode,
        "level": verdict.level,
        "iso_range": list(verdict.iso_range) if verdict.iso_range else None,
        "pi0_equal": verdict.pi0_equal,
        "justification": list(verdict.justification),
        "certification": verdict.certification_tier,
        "floor": verdict.square_floor,
        "square_diff": verdict.s_diff,
    }


def walls_to_json(walls: Sequence[WallCrossing]) -> list[dict]:
    return [
        {
            "class": class_to_json(w.wall_class),
            "t": rational_to_json(w.t_star),
            "direction": w.direction,
        }
        for w in walls
    ]


def certificate_to_json(cert: StabilityCertificate) -> dict:
    perturbation = None
    if cert.perturbation is not None:
        p = cert.perturbation
        perturbation = {
            "original": symplectic_to_json(p.original),
            "replacement": symplectic_to_json(p.replacement),
            "epsilon": rational_to_json(p.epsilon),
            "direction": class_to_json(p.direction),
            "witness_depth": p.witness_depth,
        }
    return {
        "schema": SCHEMA_VERSION,
        "surface": surface_to_json(cert.surface),
        "u": symplectic_to_json(cert.u),
        "u_prime": symplectic_to_json(cert.u_prime),
        "walls": walls_to_json(cert.walls),
        "generic": cert.generic,
        "perturbation": perturbation,
        "samples": [symplectic_to_json(s) for s in cert.samples],
        "chain": [
            {
                "left": symplectic_to_json(link.left),
                "right": symplectic_to_json(link.right),
                "relation": link.relation,
                "lost": _classes_to_json(link.lost),
                "gained": _classes_to_json(link.gained),
                "justification": link.justification,
            }
            for link in cert.chain
        ],
        "verdict": verdict_to_json(cert.verdict),
        "floor": cert.square_floor,
    }


def profile_to_json(profile: CapacityProfile) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "base": surface_to_json(profile.base),
        "target": surface_to_json(profile.target),
        "weights": [rational_to_json(w) for w in profile.weights],
        "u_start": symplectic_to_json(profile.u_start),
        "direction": symplectic_to_json(profile.direction),
        "c_max": rational_to_json(profile.c_max),
        "c_max_source": profile.c_max_source,
        "critical_values": [rational_to_json(c) for c in profile.critical_values],
        "walls": [
            {
                "value": rational_to_json(w.value),
                "classes": _classes_to_json(w.classes),
            }
            for w in profile.walls
        ],
        "flagged": [
            {
                "class": class_to_json(f.wall_class),
                "value": rational_to_json(f.value),
            }
            for f in profile.flagged
        ],
        "intervals": [
            {
                "lower": rational_to_json(iv.lower),
                "upper": rational_to_json(iv.upper),
                "forward": iv.forward,
                "certification": iv.certification,
            }
            for iv in profile.intervals
        ],
        "notes": list(profile.notes),
    }
