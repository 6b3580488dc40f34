"""Command-line front end: group queries, representations, tableaux, tensors, Fock spaces."""

import argparse
import json
import logging
import math
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .enums import (
    CommandStatus,
    OperatorOrder,
    OutputFormat,
    RepresentationKind,
    Statistics,
    Symmetry,
)
from .exceptions import PermionError
from .first_quant import NBodyTensor, classify_symmetry, projector_rank
from .models import CommandResult, Limits
from .permutation import (
    conjugacy_classes,
    enumerate_group,
    format_cycles,
    multiplication_table,
    parse_cycles,
    verify_group_axioms,
)
from .representation import (
    Representation,
    natural_rep,
    one_dim_rep,
    regular_rep,
    schur_weyl_commutation_check,
    standard_rep,
    verify_homomorphism,
    verify_regular_decomposition,
)
from .second_quant import fock_basis, sector_dimension, sector_states, verify_car, verify_ccr
from .serialization import render
from .young import (
    format_tableau,
    irrep_dimensions,
    parse_frame,
    parse_tableau,
    partitions,
    standard_tableaux,
    transfer_operator,
    transfer_permutation,
    verify_idempotent,
    young_operator,
)

logger = logging.getLogger(__name__)

CHECKS = (
    "car",
    "ccr",
    "homomorphism",
    "schur-weyl",
    "regular-decomposition",
    "young-idempotent",
    "group-axioms",
)


class UsageError(Exception):
    """Malformed command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Output format (default: json)",
    )
    common.add_argument("--debug", action="store_true", help="Log debug records to stderr")

    parser = _Parser(
        prog="permion",
        description="Symmetric groups, Young operators and identical-particle state spaces.",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    group = sub.add_parser("group", parents=[common], help="Elements, table or classes of S_n")
    group.add_argument("--n", type=int, required=True)
    group.add_argument("--emit", choices=["elements", "table", "classes"], default="elements")

    rep = sub.add_parser("rep", parents=[common], help="Matrices of a representation")
    rep.add_argument("--n", type=int, required=True)
    rep.add_argument(
        "--kind",
        choices=[k.value for k in RepresentationKind if k != RepresentationKind.CUSTOM],
        default=RepresentationKind.NATURAL.value,
    )
    rep.add_argument("--element", help='Cycle notation, e.g. "(12)"; omit for the full map')

    tableaux = sub.add_parser("tableaux", parents=[common], help="Standard tableaux of a frame")
    tableaux.add_argument("--frame", required=True, help='Row lengths, e.g. "2,1"')

    young = sub.add_parser("young", parents=[common], help="Young operator of a tableau")
    young.add_argument("--tableau", required=True, help='Rows split by ";", e.g. "1,2;3"')
    young.add_argument(
        "--order",
        choices=[o.value for o in OperatorOrder],
        default=OperatorOrder.COLUMNS_FIRST.value,
    )
    young.add_argument("--transfer", help="Second tableau of the same frame")

    fock = sub.add_parser("fock", parents=[common], help="Fock basis and sector sizes")
    fock.add_argument("--modes", type=int, required=True)
    fock.add_argument(
        "--statistics", choices=[s.value for s in Statistics], default=Statistics.FERMION.value
    )
    fock.add_argument("--truncation", type=int, default=1, help="Boson occupation cap M")
    fock.add_argument("--sector", type=int, help="List the states with this particle number")

    tensor = sub.add_parser(
        "tensor", parents=[common], help="Projector ranks and exchange symmetry of a tensor"
    )
    tensor.add_argument("--d", type=int, required=True, help="Single-particle dimension")
    tensor.add_argument("--N", type=int, required=True, help="Particle number")
    tensor.add_argument(
        "--amplitudes", help="Row-major JSON array of d^N numbers or fraction strings"
    )

    verify = sub.add_parser("verify", parents=[common], help="Run one verification check")
    verify.add_argument("--check", choices=CHECKS, required=True)
    verify.add_argument("--n", type=int, default=3)
    verify.add_argument("--modes", type=int, default=2)
    verify.add_argument("--truncation", type=int, default=3)
    verify.add_argument("--dim", type=int, default=2, help="Local dimension for schur-weyl")
    verify.add_argument("--trials", type=int, default=5)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--kind",
        choices=[k.value for k in RepresentationKind if k != RepresentationKind.CUSTOM],
        default=RepresentationKind.REGULAR.value,
        help="Representation for the homomorphism check",
    )
    return parser


Outcome = Tuple[Any, str, bool]
Handler = Callable[[argparse.Namespace, Limits], Outcome]


def _build_rep(kind: str, n: int, limits: Limits) -> Representation:
    kind_ = RepresentationKind(kind)
    if kind_ in (RepresentationKind.TRIVIAL, RepresentationKind.ALTERNATING):
        return one_dim_rep(n, kind_, limits)
    if kind_ == RepresentationKind.REGULAR:
        return regular_rep(n, limits=limits)
    if kind_ == RepresentationKind.STANDARD:
        return standard_rep(n, limits)
    return natural_rep(n, limits)


def _run_group(args: argparse.Namespace, limits: Limits) -> Outcome:
    if args.emit == "table":
        return multiplication_table(args.n, limits=limits).to_dict(), "table", True
    if args.emit == "classes":
        classes = conjugacy_classes(args.n, limits)
        payload = {str(key): [format_cycles(p) for p in group] for key, group in classes.items()}
        return payload, "classes", True
    return [format_cycles(p) for p in enumerate_group(args.n, limits)], "elements", True


def _run_rep(args: argparse.Namespace, limits: Limits) -> Outcome:
    r = _build_rep(args.kind, args.n, limits)
    if args.element is None:
        return r.to_dict(), "representation", True
    return r[parse_cycles(args.element, args.n)].to_dict(), "matrix", True


def _run_tableaux(args: argparse.Namespace, limits: Limits) -> Outcome:
    frame = parse_frame(args.frame)
    return [format_tableau(t) for t in standard_tableaux(frame, limits)], "tableaux", True


def _run_young(args: argparse.Namespace, limits: Limits) -> Outcome:
    tableau = parse_tableau(args.tableau)
    order = OperatorOrder(args.order)
    operator = young_operator(tableau, order)
    idempotency = verify_idempotent(operator)
    payload: Dict[str, Any] = {
        "tableau": format_tableau(tableau),
        "order": order.value,
        "operator": str(operator),
        "terms": operator.to_dict()["terms"],
        "idempotency": idempotency.to_dict(),
    }
    if args.transfer is not None:
        target = parse_tableau(args.transfer)
        payload["transfer"] = {
            "tableau": format_tableau(target),
            "permutation": format_cycles(transfer_permutation(tableau, target)),
            "operator": str(transfer_operator(tableau, target, order)),
        }
    return payload, "young", idempotency.is_proportional


def _run_fock(args: argparse.Namespace, limits: Limits) -> Outcome:
    statistics = Statistics(args.statistics)
    if args.sector is not None:
        states = sector_states(args.modes, args.sector, statistics, limits=limits)
        return [list(K.occupations) for K in states], "states", True
    basis = fock_basis(args.modes, statistics, args.truncation, limits)
    top = args.modes if statistics == Statistics.FERMION else basis.M
    payload = {
        "modes": args.modes,
        "statistics": statistics.value,
        "truncation": basis.M if statistics == Statistics.BOSON else None,
        "size": basis.size,
        "states": [list(K.occupations) for K in basis],
        "sector_dimensions": [
            sector_dimension(args.modes, N, statistics) for N in range(top + 1)
        ],
    }
    return payload, "fock", True


def _parse_amplitudes(text: str) -> List[Any]:
    try:
        values = json.loads(text)
    except json.JSONDecodeError as e:
        raise PermionError(f"amplitudes are not valid JSON: {e}")
    if not isinstance(values, list) or not all(
        isinstance(v, (int, float, str)) and not isinstance(v, bool) for v in values
    ):
        raise PermionError("amplitudes must be a flat JSON array of numbers or strings")
    try:
        return [v if isinstance(v, float) else Fraction(v) for v in values]
    except (ValueError, ZeroDivisionError) as e:
        raise PermionError(f"bad amplitude: {e}")


def _run_tensor(args: argparse.Namespace, limits: Limits) -> Outcome:
    payload: Dict[str, Any] = {
        "d": args.d,
        "N": args.N,
        "projector_rank": {
            symmetry.value: projector_rank(args.d, args.N, symmetry, limits)
            for symmetry in (Symmetry.BOSONIC, Symmetry.FERMIONIC)
        },
    }
    if args.amplitudes is not None:
        psi = NBodyTensor.from_flat(_parse_amplitudes(args.amplitudes), args.d, args.N)
        payload["symmetry"] = classify_symmetry(psi).value
    return payload, "tensor", True


def _check_young_idempotents(n: int, limits: Limits) -> Dict[str, Any]:
    """E² = (n!/f)·E for every standard tableau, f the dimension of its frame."""
    rows = []
    ok = True
    dims = irrep_dimensions(n, limits)
    for frame in partitions(n, limits):
        expected = math.factorial(n) // dims[frame]
        for t in standard_tableaux(frame, limits):
            report = verify_idempotent(young_operator(t))
            passed = report.is_proportional and report.constant == expected
            ok = ok and passed
            rows.append(
                {
                    "tableau": format_tableau(t),
                    "constant": None if report.constant is None else str(report.constant),
                    "expected": str(expected),
                    "ok": passed,
                }
            )
    return {"n": n, "tableaux": rows, "ok": ok}


def _run_verify(args: argparse.Namespace, limits: Limits) -> Outcome:
    check = args.check
    report: Any
    if check == "car":
        report = verify_car(args.modes, limits=limits)
    elif check == "ccr":
        report = verify_ccr(args.modes, args.truncation, limits=limits)
    elif check == "homomorphism":
        report = verify_homomorphism(_build_rep(args.kind, args.n, limits), limits)
    elif check == "schur-weyl":
        report = schur_weyl_commutation_check(
            args.n, args.dim, args.trials, seed=args.seed, limits=limits
        )
    elif check == "regular-decomposition":
        dims = list(irrep_dimensions(args.n, limits).values())
        report = verify_regular_decomposition(args.n, dims, limits)
    elif check == "young-idempotent":
        payload = _check_young_idempotents(args.n, limits)
        return payload, "report", payload["ok"]
    else:
        report = verify_group_axioms(args.n, limits)
    return report.to_dict(), "report", report.ok


HANDLERS: Dict[str, Handler] = {
    "group": _run_group,
    "rep": _run_rep,
    "tableaux": _run_tableaux,
    "young": _run_young,
    "fock": _run_fock,
    "tensor": _run_tensor,
    "verify": _run_verify,
}


def _enable_debug() -> None:
    package_logger = logging.getLogger("permion")
    if not any(getattr(h, "_permion_cli", False) for h in package_logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        handler._permion_cli = True  # type: ignore[attr-defined]
        package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG)


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """
    Parse argv, dispatch to a subcommand and render its payload.

    Never raises for bad input: argument errors and library errors become
    usage_error results, failed checks verification_failed.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        return CommandResult(status=CommandStatus.USAGE_ERROR, message=str(e))
    if args.debug:
        _enable_debug()

    try:
        limits = Limits.from_env()
        payload, kind, ok = HANDLERS[args.command](args, limits)
    except PermionError as e:
        logger.debug("[Permion] %s failed: %s", args.command, e)
        return CommandResult(
            status=CommandStatus.USAGE_ERROR, message=f"permion {args.command}: error: {e}"
        )

    status = CommandStatus.OK if ok else CommandStatus.VERIFICATION_FAILED
    return CommandResult(
        status=status,
        payload=payload,
        kind=kind,
        output=render(payload, OutputFormat(args.format), kind),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.output:
        sys.stdout.write(result.output)
    if result.message:
        sys.stderr.write(result.message.rstrip("\n") + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
