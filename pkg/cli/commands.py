"""
Subcommand handlers. Each takes the parsed arguments and returns the records
to emit together with the exit status.
"""

from argparse import Namespace
from typing import List, Optional, Tuple

from pydantic import BaseModel

from chars import WeightVector
from classnum import hurwitz, reduced_forms
from config import EIGENSYSTEM_M_MAX, VERIFY_M_MAX
from exact import QuadElem, check_field_seed, format_quad, format_rational
from galois import eigensystem_suite, hilbert_orbital_suite, trace_identity_suite
from models import ClassNumberRecord, OracleRecord, OrbitalRecord
from oracle import charpoly, cusp_dimension, hecke_matrix, to_fraction
from orbital import arch_orbital, classify, orbital_pair, parse_gamma
from tfengine import trace_cusp, verify_grid
from utils.exceptions import DomainError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SUITES = ("rational-traces", "hilbert-orbital", "eigensystems")

CommandResult = Tuple[List[BaseModel], int]


def _is_range(text: str) -> bool:
    return "-" in text.lstrip("-") and "," not in text


def parse_int_list(text: str) -> List[int]:
    """"4,6" -> [4, 6]; also accepts a range "4-30" (even steps are applied by callers)."""
    text = text.strip()
    if _is_range(text):
        low, high = text.split("-", 1)
        return list(range(int(low), int(high) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def parse_weight_list(text: str) -> List[int]:
    """
    Weights for the suites: a comma list, or a range "4-30" read in steps of two.

    Raises:
        DomainError: If the list is empty or any weight is odd or below 4
    """
    weights = parse_int_list(text)
    if _is_range(text.strip()):
        weights = weights[::2]
    bad = [k for k in weights if k < 4 or k % 2]
    if not weights or bad:
        raise DomainError("Weights must be even integers >= 4", details={"k_list": text, "rejected": bad})
    return weights


def _positive(name: str, value: Optional[int], default: Optional[int]) -> Optional[int]:
    if value is None:
        return default
    if value < 1:
        raise DomainError(f"{name} must be >= 1", details={name: value})
    return value


def _render_scalar(value) -> str:
    """Quadratic values with b = 0 print as plain rationals."""
    if isinstance(value, QuadElem) and value.b != 0:
        return format_quad(value)
    return format_rational(value.a if isinstance(value, QuadElem) else value)


def _field(d: int) -> Optional[int]:
    """--d 1 denotes Q."""
    if d == 1:
        return None
    check_field_seed(d)
    if d < 0:
        raise DomainError("Orbital integrals need Q or a real quadratic field", details={"d": d})
    return d


def cmd_trace(args: Namespace) -> CommandResult:
    return [trace_cusp(args.k, args.m).to_record()], EXIT_OK


def cmd_oracle(args: Namespace) -> CommandResult:
    matrix = hecke_matrix(args.k, args.m)
    record = OracleRecord(
        k=args.k,
        m=args.m,
        dimension=cusp_dimension(args.k),
        trace=format_rational(to_fraction(matrix.trace())),
        matrix=[
            [format_rational(to_fraction(matrix[i, j])) for j in range(matrix.cols)]
            for i in range(matrix.rows)
        ] if args.matrix else None,
        charpoly=charpoly(args.k, args.m) if args.charpoly else None,
    )
    return [record], EXIT_OK


def cmd_classnum(args: Namespace) -> CommandResult:
    value = hurwitz(args.n)
    forms = reduced_forms(args.n) if args.n > 0 else []
    record = ClassNumberRecord(
        n=args.n,
        hurwitz=format_rational(value),
        form_count=len(forms),
        forms=[str(form) for form in forms] if args.forms else None,
    )
    return [record], EXIT_OK


def cmd_orbital(args: Namespace) -> CommandResult:
    d = _field(args.d)
    gamma = parse_gamma(args.gamma.split(","), d)
    kw = WeightVector(tuple(parse_int_list(args.k)), args.w)
    report = classify(gamma)
    value = arch_orbital(gamma, kw)
    conjugate_value, equivariant = None, None
    if d is not None and kw.degree == 2:
        pair = orbital_pair(gamma, kw)
        conjugate_value, equivariant = _render_scalar(pair.conjugate_weight), pair.equivariant
    record = OrbitalRecord(
        d=args.d,
        gamma=[_render_scalar(entry) for entry in gamma.entries],
        k=list(kw.k),
        w=kw.w,
        per_embedding=[place.value for place in report.per_embedding],
        aggregate=report.aggregate.value,
        value=_render_scalar(value),
        conjugate_value=conjugate_value,
        equivariant=equivariant,
    )
    return [record], EXIT_OK if equivariant is not False else EXIT_FAILED


def cmd_equivariance(args: Namespace) -> CommandResult:
    m_max = _positive("m_max", args.m_max, EIGENSYSTEM_M_MAX if args.suite == "eigensystems" else VERIFY_M_MAX)
    samples = _positive("samples", args.samples, None)
    if args.suite == "rational-traces":
        k_list = parse_weight_list(args.k_list) if args.k_list else list(range(4, 31, 2))
        report = trace_identity_suite(k_list, range(1, m_max + 1))
    elif args.suite == "hilbert-orbital":
        kwargs = {"seed": args.seed} if args.seed is not None else {}
        if samples is not None:
            kwargs.update(samples=samples, vanishing_samples=2 * samples)
        report = hilbert_orbital_suite(**kwargs)
    else:
        k_list = parse_weight_list(args.k_list) if args.k_list else [12, 16, 18, 20, 22, 24, 26]
        report = eigensystem_suite(k_list, m_max)
    return [report], EXIT_OK if report.passed else EXIT_FAILED


def cmd_verify(args: Namespace) -> CommandResult:
    report = verify_grid(args.k_min, args.k_max, args.m_max, args.workers)
    return [report], EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "trace": cmd_trace,
    "oracle": cmd_oracle,
    "classnum": cmd_classnum,
    "orbital": cmd_orbital,
    "equivariance": cmd_equivariance,
    "verify": cmd_verify,
}
