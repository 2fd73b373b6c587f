"""Certificate file format (schema version 1) and replay verification.

A certificate is a UTF-8 JSON document.  All rationals are exact strings as
produced by `fractions.Fraction` (``"5"``, ``"-1/2"``); polynomials are
``{"degree": rational}`` maps; operators are ``{"i,j": rational}`` maps over
normal-form exponent pairs.  Layout:

    schema_version   "1"
    tool_version     emitting version (informational)
    created          ISO-8601 UTC timestamp -- excluded from the digest
    claim            "NotLocallyProjective" | "NoBialgebroid"
    seed             int, drives the randomized check battery
    bound            int, sample bound (local projectivity) or search bound
    battery_size     int, number of randomized battery entries
    curve            {"factors": [poly, ...]}
    witness          {"operator": op, "polynomial": poly,
                      "source_power": int, "target_power": int}
    product_pair     null | {"left": poly, "right": poly}
    checks           [{"kind", "description", "verdict", "bound"}, ...]
    integrity        optional sha256 hex digest of the canonical document
                     (sorted keys, compact separators, "created" and
                     "integrity" removed)

Replay parses the document, reconstructs the canonical check battery for the
recorded claim/witness/seed, and demands that every recorded check matches
the recomputed one exactly.  Nothing from the emitting run besides the
document is consulted.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any

from .curves import CurveError, CurveRing
from .obstructions import (
    Certificate,
    CheckRecord,
    WitnessPair,
    certificate_checks,
    CLAIM_NO_BIALGEBROID,
    CLAIM_NOT_LOCALLY_PROJECTIVE,
)
from .polynomials import Poly
from .weyl import WeylOp

SCHEMA_VERSION = "1"
TOOL_VERSION = "0.1.0"

_KNOWN_CLAIMS = (CLAIM_NOT_LOCALLY_PROJECTIVE, CLAIM_NO_BIALGEBROID)


class CertificateFormatError(ValueError):
    """The document is not a well-formed schema-1 certificate."""


# -- scalar / polynomial / operator encoding ---------------------------------


def rational_to_json(c: Fraction) -> str:
    return str(c)


def rational_from_json(s: Any) -> Fraction:
    if not isinstance(s, str):
        raise CertificateFormatError(f"rational must be a string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise CertificateFormatError(f"bad rational {s!r}") from exc


def poly_to_json(p: Poly) -> dict[str, str]:
    return {str(deg): rational_to_json(c) for deg, c in p.items()}


def poly_from_json(obj: Any) -> Poly:
    if not isinstance(obj, dict):
        raise CertificateFormatError(f"polynomial must be an object, got {obj!r}")
    coeffs = {}
    for key, val in obj.items():
        if not key.isdigit():
            raise CertificateFormatError(f"bad polynomial degree key {key!r}")
        coeffs[int(key)] = rational_from_json(val)
    return Poly(coeffs)


def op_to_json(op: WeylOp) -> dict[str, str]:
    return {f"{i},{j}": rational_to_json(c) for (i, j), c in op.terms()}


def op_from_json(obj: Any) -> WeylOp:
    if not isinstance(obj, dict):
        raise CertificateFormatError(f"operator must be an object, got {obj!r}")
    terms = {}
    for key, val in obj.items():
        parts = key.split(",")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise CertificateFormatError(f"bad operator exponent key {key!r}")
        terms[(int(parts[0]), int(parts[1]))] = rational_from_json(val)
    return WeylOp(terms)


# -- whole documents -----------------------------------------------------------


def certificate_to_document(cert: Certificate, *, timestamp: str | None = None) -> dict:
    """Serialize, stamp and seal a certificate into a JSON-ready dict."""
    doc: dict[str, Any] = {
        "schema_version": cert.version,
        "tool_version": TOOL_VERSION,
        "created": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "claim": cert.claim,
        "seed": cert.seed,
        "bound": cert.bound,
        "battery_size": cert.battery_size,
        "curve": {"factors": [poly_to_json(p) for p in cert.curve.factors]},
        "witness": {
            "operator": op_to_json(cert.witness.operator),
            "polynomial": poly_to_json(cert.witness.witness),
            "source_power": cert.witness.source_power,
            "target_power": cert.witness.target_power,
        },
        "product_pair": (
            None
            if cert.product_pair is None
            else {
                "left": poly_to_json(cert.product_pair[0]),
                "right": poly_to_json(cert.product_pair[1]),
            }
        ),
        "checks": [
            {
                "kind": c.kind,
                "description": c.description,
                "verdict": c.verdict,
                "bound": c.bound,
            }
            for c in cert.checks
        ],
    }
    doc["integrity"] = replay_digest(doc)
    return doc


def replay_digest(doc: dict) -> str:
    """sha256 over the canonical document, timestamp and seal excluded."""
    trimmed = {k: v for k, v in doc.items() if k not in ("created", "integrity")}
    canonical = json.dumps(trimmed, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _require(doc: dict, key: str, types: type | tuple) -> Any:
    if key not in doc:
        raise CertificateFormatError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, types):
        raise CertificateFormatError(f"field {key!r} has wrong type: {val!r}")
    return val


def certificate_from_document(doc: Any) -> Certificate:
    """Parse and structurally validate a schema-1 document."""
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    version = _require(doc, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise CertificateFormatError(f"unsupported schema version {version!r}")
    claim = _require(doc, "claim", str)
    if claim not in _KNOWN_CLAIMS:
        raise CertificateFormatError(f"unknown claim {claim!r}")
    seed = _require(doc, "seed", int)
    bound = _require(doc, "bound", int)
    battery_size = _require(doc, "battery_size", int)
    if isinstance(seed, bool) or isinstance(bound, bool) or isinstance(battery_size, bool):
        raise CertificateFormatError("seed/bound/battery_size must be integers")
    if bound < 0 or battery_size < 0:
        raise CertificateFormatError("bound and battery_size must be nonnegative")

    curve_obj = _require(doc, "curve", dict)
    factors_obj = _require(curve_obj, "factors", list)
    try:
        curve = CurveRing([poly_from_json(p) for p in factors_obj])
    except CurveError as exc:
        raise CertificateFormatError(f"invalid curve data: {exc}") from exc

    witness_obj = _require(doc, "witness", dict)
    source_power = _require(witness_obj, "source_power", int)
    target_power = _require(witness_obj, "target_power", int)
    if source_power < 0 or target_power < 0:
        raise CertificateFormatError("witness powers must be nonnegative")
    witness = WitnessPair(
        operator=op_from_json(_require(witness_obj, "operator", dict)),
        witness=poly_from_json(_require(witness_obj, "polynomial", dict)),
        source_power=source_power,
        target_power=target_power,
    )

    pair_obj = _require(doc, "product_pair", (dict, type(None)))
    product_pair = None
    if pair_obj is not None:
        product_pair = (
            poly_from_json(_require(pair_obj, "left", dict)),
            poly_from_json(_require(pair_obj, "right", dict)),
        )
    if claim == CLAIM_NO_BIALGEBROID and product_pair is None:
        raise CertificateFormatError("NoBialgebroid certificate requires product_pair")

    checks_obj = _require(doc, "checks", list)
    checks = []
    for idx, item in enumerate(checks_obj):
        if not isinstance(item, dict):
            raise CertificateFormatError(f"check #{idx} must be an object")
        kind = _require(item, "kind", str)
        description = _require(item, "description", str)
        verdict = _require(item, "verdict", bool)
        bound_used = _require(item, "bound", (int, type(None)))
        checks.append(CheckRecord(kind, description, verdict, bound_used))

    return Certificate(
        claim=claim,
        curve=curve,
        witness=witness,
        checks=tuple(checks),
        seed=seed,
        bound=bound,
        battery_size=battery_size,
        product_pair=product_pair,
        version=version,
    )


# -- file I/O --------------------------------------------------------------------


def save_certificate(cert: Certificate, path: str | Path) -> dict:
    doc = certificate_to_document(cert)
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return doc


def load_document(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    return doc


# -- replay ------------------------------------------------------------------------


@dataclass(frozen=True)
class ReplayOutcome:
    ok: bool
    checks_replayed: int
    failure: str | None = None


def replay_document(doc: dict) -> ReplayOutcome:
    """Re-run every recorded check from the document alone.

    Verifies the integrity seal when present, then recomputes the canonical
    check battery for the recorded claim, witness and seed, and compares it
    record by record against the stored list.
    """
    cert = certificate_from_document(doc)
    if "integrity" in doc:
        expected = replay_digest(doc)
        if doc["integrity"] != expected:
            return ReplayOutcome(False, 0, "integrity digest mismatch")
    recomputed = certificate_checks(
        cert.claim,
        cert.curve,
        cert.witness,
        cert.product_pair,
        cert.seed,
        cert.bound,
        cert.battery_size,
    )
    if len(recomputed) != len(cert.checks):
        return ReplayOutcome(
            False,
            0,
            f"check count mismatch: recorded {len(cert.checks)}, replay produced {len(recomputed)}",
        )
    for idx, (stored, fresh) in enumerate(zip(cert.checks, recomputed)):
        if stored != fresh:
            detail = (
                f"check #{idx} ({stored.kind}): recorded verdict {stored.verdict}, "
                f"replayed {fresh.verdict}"
                if stored.verdict != fresh.verdict
                else f"check #{idx} ({stored.kind}): record differs from replay"
            )
            return ReplayOutcome(False, idx, detail)
    return ReplayOutcome(True, len(recomputed))
