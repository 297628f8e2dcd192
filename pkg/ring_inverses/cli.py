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
Command-line front end: `ringinv compute | verify | search | laws`.

Exit codes: 0 success, 1 an absent result or a violated law, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from typing import Callable, Dict, List, Optional, Sequence

from ring_inverses import conversion
from ring_inverses.along import (
    Side, exists_along, invert_along, invert_along_sigma, sided_inverse_along,
)
from ring_inverses.centralizer import CentralizerMap, make_scaling_centralizer
from ring_inverses.classical import (
    DrazinResult, SpecialKind, drazin_inverse, group_inverse, inverse_along_specializations,
    moore_penrose, mp_alternate, mp_one_sided,
)
from ring_inverses.errors import (
    Absent, AbsentReason, LiteralError, NotAUnit, NotRegular, RingInverseError,
)
from ring_inverses.exec_env import get_ring, get_thread_count
from ring_inverses.laws import (
    LAWS, LawReport, Verdict, default_sigmas, evaluate_law, get_law, search_counterexamples,
    validate_drop,
)
from ring_inverses.regular import inner_inverse, is_regular, penrose_check
from ring_inverses.rings import Element, RingContext

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2

_USAGE_HINTS = (
    "       ringinv compute --ring zmod:7 --op invert-along --a 5 --d 3",
    "       ringinv verify --ring zmod:9 --law absorption-cross --sigma 2 --exhaustive",
    "       ringinv search --ring zmod:6 --law along-sigma-criterion --drop sigma-bijective",
    "       ringinv laws",
)


class _Operands:
    """Parsed element operands of `compute`, checked lazily per op."""

    def __init__(self, ring: RingContext, args: argparse.Namespace):
        self.ring = ring
        self.args = args

    def get(self, name: str) -> Element:
        text = getattr(self.args, name)
        if text is None:
            raise LiteralError(f"--op {self.args.op} requires --{name}")
        return self.ring.parse(text)

    def sigma(self) -> Optional[CentralizerMap]:
        if self.args.sigma is None:
            return None
        return make_scaling_centralizer(self.ring, self.ring.parse(self.args.sigma))


def _invert_along(o: _Operands):
    sigma = o.sigma()
    if sigma is None:
        return invert_along(o.get("a"), o.get("d"))
    return invert_along_sigma(o.get("a"), o.get("d"), sigma,
                              bypass_bijectivity_check=o.args.bypass_bijectivity)


_OPS: Dict[str, Callable[[_Operands], object]] = {
    "invert-along": _invert_along,
    "left-along": lambda o: sided_inverse_along(o.get("a"), o.get("d"), Side.LEFT,
                                                verbatim=o.args.verbatim),
    "right-along": lambda o: sided_inverse_along(o.get("a"), o.get("d"), Side.RIGHT,
                                                 verbatim=o.args.verbatim),
    "exists-along": lambda o: exists_along(o.get("a"), o.get("d")),
    "group": lambda o: group_inverse(o.get("a"), o.sigma()),
    "drazin": lambda o: drazin_inverse(o.get("a"), o.sigma()),
    "moore-penrose": lambda o: moore_penrose(o.get("a"), o.sigma()),
    "mp-left": lambda o: mp_one_sided(o.get("a"), Side.LEFT, o.sigma()),
    "mp-right": lambda o: mp_one_sided(o.get("a"), Side.RIGHT, o.sigma()),
    "mp-alternate": lambda o: mp_alternate(o.get("a"), o.sigma()),
    "along-group": lambda o: inverse_along_specializations(o.get("a"), SpecialKind.GROUP),
    "along-drazin": lambda o: inverse_along_specializations(
        o.get("a"), SpecialKind.DRAZIN, o.args.power),
    "along-mp": lambda o: inverse_along_specializations(o.get("a"), SpecialKind.MP),
    "inner": lambda o: inner_inverse(o.get("a")),
    "is-regular": lambda o: is_regular(o.get("a")),
    "unit-inverse": lambda o: o.ring.unit_inverse(o.get("a")),
    "involution": lambda o: o.get("a").star,
    "penrose": lambda o: penrose_check(o.get("a"), o.get("b")),
}


def _format_plain(result) -> str:
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, DrazinResult):
        return f"{result.b} index={result.index}"
    if hasattr(result, "b"):
        return str(result.b)
    return str(result)


def run_compute(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring)
    try:
        result = _OPS[args.op](_Operands(ring, args))
    except NotAUnit as e:
        result = Absent(AbsentReason.NOT_A_UNIT, str(e))
    except NotRegular as e:
        result = Absent(AbsentReason.NOT_REGULAR, str(e))

    if args.json:
        print(conversion.dumps(conversion.result_to_json(result)))
    elif isinstance(result, Absent):
        print(f"absent ({result.reason.value})")
        logger.debug("%s", result)
    else:
        print(_format_plain(result))
    return EXIT_FOUND if isinstance(result, Absent) else EXIT_OK


def _read_candidates(path: Optional[str], ring: RingContext) -> Optional[List[Element]]:
    if path is None:
        return None
    with open(path) as f:
        return conversion.parse_candidates(f.read(), ring)


def _fixed_sigmas(args: argparse.Namespace, ring: RingContext) -> Optional[List[CentralizerMap]]:
    if args.sigma is None:
        return None
    return [make_scaling_centralizer(ring, ring.parse(args.sigma))]


def _summary(law: str, ring: RingContext, reports: Sequence[LawReport]) -> str:
    counts = Counter(report.verdict for report in reports)
    return (f"{law} on {ring.spec}: {len(reports)} checked, "
            f"{counts[Verdict.HOLDS]} holds, {counts[Verdict.VIOLATED]} violated, "
            f"{counts[Verdict.HYPOTHESES_UNMET]} hypotheses-unmet")


def run_verify(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring)
    law = get_law(args.law)
    drop = validate_drop(law, args.drop or ())

    if args.inputs is not None:
        sigmas = _fixed_sigmas(args, ring) or [None]
        reports = [
            law.run([values[name] for name in law.inputs], sigma, drop)
            for values in conversion.parse_inputs(args.inputs, ring, law.inputs)
            for sigma in sigmas
        ]
    elif args.exhaustive:
        sigmas = _fixed_sigmas(args, ring)
        if sigmas is None and law.uses_sigma:
            sigmas = default_sigmas(ring, include_non_bijective=True)
        reports = evaluate_law(ring, law, drop,
                               candidates=_read_candidates(args.candidates, ring),
                               sigmas=sigmas, bound=args.bound,
                               workers=get_thread_count())
    else:
        raise ValueError("verify needs --exhaustive or --inputs")

    violations = [report for report in reports if report.verdict == Verdict.VIOLATED]
    if args.json:
        counts = Counter(report.verdict.value for report in reports)
        print(conversion.dumps({
            "law": law.name,
            "ring": str(ring.spec),
            "checked": len(reports),
            "verdicts": {verdict.value: counts[verdict.value] for verdict in Verdict},
            "violations": [conversion.report_to_json(report) for report in violations],
        }))
    else:
        print(_summary(law.name, ring, reports))
        for report in violations:
            print(report)
    return EXIT_FOUND if violations else EXIT_OK


def run_search(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring)
    law = get_law(args.law)
    violations = search_counterexamples(
        ring, law, drop=args.drop or (),
        candidates=_read_candidates(args.candidates, ring),
        sigmas=_fixed_sigmas(args, ring), bound=args.bound,
        workers=get_thread_count())

    if args.json:
        print(conversion.dumps({
            "law": law.name,
            "ring": str(ring.spec),
            "drop": sorted(args.drop or ()),
            "violations": [conversion.report_to_json(report) for report in violations],
        }))
    else:
        for report in violations:
            print(report)
    return EXIT_FOUND if violations else EXIT_OK


def run_laws(args: argparse.Namespace) -> int:
    for law in LAWS.values():
        sigma = ", sigma" if law.uses_sigma else ""
        droppable = ", ".join(law.droppable) or "-"
        print(f"{law.name}({', '.join(law.inputs)}{sigma}): {law.summary}")
        print(f"    droppable: {droppable}")
    return EXIT_OK


def _add_law_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", required=True, help="zmod:<n> or gqmat:<k>")
    parser.add_argument("--law", required=True, choices=sorted(LAWS), help="Law identifier")
    parser.add_argument("--sigma", help="Scaling element c of sigma(x) = cx")
    parser.add_argument("--drop", action="append",
                        help="Hypothesis to ignore; may be repeated")
    parser.add_argument("--candidates",
                        help="JSON file with an array of element literals to draw inputs from")
    parser.add_argument("--bound", type=int, help="Maximum number of input tuples to examine")
    parser.add_argument("--json", action="store_true", help="Print a JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringinv",
        description="Generalized inverses in exact rings",
        exit_on_error=False)
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    compute = subparsers.add_parser("compute", help="Compute one inverse",
                                    exit_on_error=False)
    compute.add_argument("--ring", required=True, help="zmod:<n> or gqmat:<k>")
    compute.add_argument("--op", required=True, choices=sorted(_OPS), help="Operation")
    compute.add_argument("--a", help="Element literal for a")
    compute.add_argument("--b", help="Element literal for b")
    compute.add_argument("--d", help="Element literal for d")
    compute.add_argument("--sigma", help="Scaling element c of sigma(x) = cx")
    compute.add_argument("--power", type=int, default=1,
                         help="Power n for along-drazin")
    compute.add_argument("--bypass-bijectivity", action="store_true",
                         help="Apply the sigma criterion to a non-bijective sigma")
    compute.add_argument("--verbatim", action="store_true",
                         help="Read the right equation along d as dab = b")
    compute.add_argument("--json", action="store_true", help="Print a JSON document")
    compute.set_defaults(handler=run_compute)

    verify = subparsers.add_parser("verify", help="Check a law", exit_on_error=False)
    _add_law_arguments(verify)
    verify.add_argument("--exhaustive", action="store_true",
                        help="Check every input tuple of a finite ring or candidate list")
    verify.add_argument("--inputs", help="JSON object or array of objects of input literals")
    verify.set_defaults(handler=run_verify)

    search = subparsers.add_parser("search", help="Search for counterexamples",
                                   exit_on_error=False)
    _add_law_arguments(search)
    search.set_defaults(handler=run_search)

    laws = subparsers.add_parser("laws", help="List laws and droppable hypotheses",
                                 exit_on_error=False)
    laws.set_defaults(handler=run_laws)
    return parser


def configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger("ring_inverses")
    if not verbose:
        package_logger.setLevel(logging.WARNING)
        return
    package_logger.setLevel(logging.DEBUG)
    if not any(getattr(h, "_ringinv", False) for h in package_logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._ringinv = True
        package_logger.addHandler(handler)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as e:
        print(f"Error: {e}", file=sys.stderr)
        print("\n".join(_USAGE_HINTS), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # argparse already printed usage; --help exits with 0.
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (RingInverseError, ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        print("\n".join(_USAGE_HINTS), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
