# Copyright 2025 Google LLC

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     https://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This module converts between results of the package and JSON: results are
turned into dictionaries of element literals, and JSON input documents are
turned into elements of a ring.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ring_inverses.along import AlongInverseResult, SidedInverse
from ring_inverses.centralizer import CentralizerMap
from ring_inverses.classical import DrazinResult
from ring_inverses.errors import Absent, LiteralError
from ring_inverses.gaussian import GaussianRational
from ring_inverses.laws import LawReport
from ring_inverses.regular import PenroseProfile
from ring_inverses.rings import Element, RingContext


def element_to_json(e: Optional[Element]) -> Optional[str]:
    return None if e is None else str(e)


def along_result_to_json(result: AlongInverseResult) -> Dict[str, Any]:
    """Convert an inverse along d and its certificates to a JSON-serializable dictionary."""
    return {
        "b": str(result.b),
        "u": str(result.u),
        "u_inv": str(result.u_inv),
        "v": str(result.v),
        "v_inv": str(result.v_inv),
        "left_witness": str(result.left_witness),
        "right_witness": str(result.right_witness),
        "d_inner": str(result.d_inner),
        "sigma": result.sigma.describe(),
    }


def report_to_json(report: LawReport) -> Dict[str, Any]:
    """Convert a law report to a JSON-serializable dictionary."""
    return {
        "law": report.law,
        "inputs": {name: str(value) for name, value in report.inputs},
        "sigma": report.sigma.describe() if report.sigma is not None else None,
        "hypotheses": dict(report.hypotheses),
        "hypotheses_met": report.hypotheses_met,
        "verdict": report.verdict.value,
        "lhs": element_to_json(report.lhs),
        "rhs": element_to_json(report.rhs),
        "certificate": report.certificate,
        "checks": [
            {
                "name": check.name,
                "lhs": element_to_json(check.lhs),
                "rhs": element_to_json(check.rhs),
                "holds": check.holds,
            }
            for check in report.checks
        ],
    }


def result_to_json(result: Any) -> Any:
    """Convert the outcome of any compute operation to JSON-ready data."""
    if isinstance(result, Absent):
        return {"absent": True, "reason": result.reason.value, "detail": result.detail}
    if isinstance(result, AlongInverseResult):
        return along_result_to_json(result)
    if isinstance(result, DrazinResult):
        return {"b": str(result.b), "index": result.index, "n_used": result.n_used}
    if isinstance(result, SidedInverse):
        return {"side": result.side.value, "b": str(result.b), "witness": str(result.witness)}
    if isinstance(result, PenroseProfile):
        return {"satisfied": sorted(result.satisfied)}
    if isinstance(result, LawReport):
        return report_to_json(result)
    if isinstance(result, Element):
        return {"result": str(result)}
    if isinstance(result, bool):
        return {"result": result}
    raise TypeError(f"Object of type {result.__class__.__name__} has no JSON form")


def custom_json_serializer(o):
    """A JSON serializer that handles elements, dataclasses and enums."""
    if isinstance(o, (Element, GaussianRational)):
        return str(o)
    if isinstance(o, CentralizerMap):
        return o.describe()
    if isinstance(o, RingContext):
        return str(o.spec)
    if isinstance(o, frozenset):
        return sorted(o)
    if is_dataclass(o):
        # Shallow: json calls back into this serializer for nested values.
        return {f.name: getattr(o, f.name) for f in fields(o)}
    if isinstance(o, Enum):
        return o.value
    raise TypeError(f"Object of type {o.__class__.__name__} is not JSON serializable")


def dumps(data: Any) -> str:
    return json.dumps(data, default=custom_json_serializer, sort_keys=True)


def _literal(ring: RingContext, value: Any) -> Element:
    if isinstance(value, bool):
        raise LiteralError(f"invalid element literal: {value!r}")
    if isinstance(value, int):
        return ring.from_int(value)
    if isinstance(value, str):
        return ring.parse(value)
    raise LiteralError(f"invalid element literal: {value!r}")


def parse_inputs(text: str, ring: RingContext,
                 names: Sequence[str]) -> List[Dict[str, Element]]:
    """Parses `--inputs`: a JSON object, or array of objects, mapping each
    input name to an element literal.

    Raises:
        LiteralError: If the document is not valid JSON, an object lacks one
            of `names`, or a literal does not parse in `ring`.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise LiteralError(f"--inputs is not valid JSON: {e}")

    objects = document if isinstance(document, list) else [document]
    parsed = []
    for obj in objects:
        if not isinstance(obj, dict):
            raise LiteralError("--inputs must be an object or an array of objects")
        missing = [name for name in names if name not in obj]
        if missing:
            raise LiteralError(f"--inputs is missing {', '.join(missing)}")
        parsed.append({name: _literal(ring, obj[name]) for name in names})
    return parsed


def parse_candidates(text: str, ring: RingContext) -> List[Element]:
    """Parses a candidates document: a JSON array of element literals."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise LiteralError(f"candidates file is not valid JSON: {e}")
    if not isinstance(document, list) or not document:
        raise LiteralError("candidates must be a non-empty JSON array of element literals")
    return [_literal(ring, value) for value in document]
