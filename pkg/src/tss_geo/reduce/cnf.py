"""CNF formulas, DIMACS I/O and the restricted 3-SAT occurrence check."""

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from tss_geo.errors import InputError, ParseError
from tss_geo.graphcore.validators import ValidationReport

logger = logging.getLogger(__name__)

Clause = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CnfFormula:
    """Variables 1..num_vars; literals are signed variable indices."""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise InputError(f"num_vars must be >= 0, got {self.num_vars}")
        for j, clause in enumerate(self.clauses):
            if not clause:
                raise InputError(f"clause {j} is empty", details={"clause": j})
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InputError(
                        f"literal {lit} in clause {j} out of range",
                        details={"clause": j, "literal": lit},
                    )
            if len(set(clause)) != len(clause):
                raise InputError(
                    f"clause {j} repeats a literal", details={"clause": j}
                )

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        return cls(num_vars, tuple(tuple(c) for c in clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        lines.extend(" ".join(str(lit) for lit in c) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        return {"num_vars": self.num_vars, "clauses": [list(c) for c in self.clauses]}


@dataclass(frozen=True, slots=True)
class Assignment:
    """Truth values; ``values[i]`` belongs to variable i + 1."""

    values: tuple[bool, ...]

    @classmethod
    def of(cls, values: Sequence[int | bool]) -> "Assignment":
        return cls(tuple(bool(v) for v in values))

    def value(self, var: int) -> bool:
        return self.values[var - 1]

    def literal(self, lit: int) -> bool:
        v = self.value(abs(lit))
        return v if lit > 0 else not v

    def to_list(self) -> list[int]:
        return [int(v) for v in self.values]


def satisfies(f: CnfFormula, a: Assignment) -> bool:
    if len(a.values) != f.num_vars:
        raise InputError(f"assignment has {len(a.values)} values for {f.num_vars} vars")
    return all(any(a.literal(lit) for lit in c) for c in f.clauses)


def satisfying_assignments(f: CnfFormula) -> list[Assignment]:
    """All satisfying assignments, enumerated (small formulas only)."""
    found = []
    for bits in itertools.product((False, True), repeat=f.num_vars):
        a = Assignment(bits)
        if satisfies(f, a):
            found.append(a)
    return found


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text.

    Comment lines start with ``c``; a ``%`` line ends the input. Clauses end at
    each ``0`` token and may span lines or share one.

    Raises:
        ParseError: on a missing or malformed header, a non-integer or
            out-of-range literal, an empty or unterminated clause. ``details``
            carries the 1-based line number.
    """
    num_vars: int | None = None
    declared = 0
    clauses: list[Clause] = []
    current: list[int] = []
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise ParseError("duplicate problem line", details={"line": lineno})
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(
                    f"invalid problem line: {line!r}", details={"line": lineno}
                )
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError(
                    f"invalid problem line: {line!r}", details={"line": lineno}
                ) from exc
            if num_vars < 0 or declared < 0:
                raise ParseError("negative header counts", details={"line": lineno})
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", details={"line": lineno})
        for token in line.split():
            try:
                lit = int(token)
            except ValueError as exc:
                raise ParseError(
                    f"invalid literal {token!r}", details={"line": lineno}
                ) from exc
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", details={"line": lineno})
                if len(set(current)) != len(current):
                    raise ParseError(
                        "clause repeats a literal", details={"line": lineno}
                    )
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise ParseError(
                    f"literal {lit} exceeds {num_vars} variables",
                    details={"line": lineno},
                )
            else:
                current.append(lit)
        last_line = lineno

    if num_vars is None:
        raise ParseError("missing problem line", details={"line": 0})
    if current:
        raise ParseError("unterminated clause", details={"line": last_line})
    if declared != len(clauses):
        logger.warning("header declares %d clauses, found %d", declared, len(clauses))
    return CnfFormula(num_vars, tuple(clauses))


def validate_restricted_3sat(f: CnfFormula) -> ValidationReport:
    """Clauses of size <= 3; each variable twice positive and once negative.

    Planarity of the variable-clause incidence graph is not checked.
    """
    report = ValidationReport()
    for j, clause in enumerate(f.clauses):
        if len(clause) > 3:
            report.add(
                "clause_too_long", f"clause {j} has {len(clause)} literals", j
            )
    positive = [0] * (f.num_vars + 1)
    negative = [0] * (f.num_vars + 1)
    for clause in f.clauses:
        for lit in clause:
            if lit > 0:
                positive[lit] += 1
            else:
                negative[-lit] += 1
    for var in range(1, f.num_vars + 1):
        if positive[var] != 2 or negative[var] != 1:
            report.add(
                "occurrence_pattern",
                f"x{var} occurs {positive[var]}x positive, {negative[var]}x negative",
                var,
            )
    return report
