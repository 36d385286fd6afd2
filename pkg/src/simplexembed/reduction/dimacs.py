"""Reading and writing 3-CNF formulas in DIMACS format."""

from typing import List, Optional

from simplexembed.reduction.models import CnfFormula, DimacsError


def _parse_header(tokens: List[str], line_number: int) -> tuple:
    if len(tokens) != 4 or tokens[1] != "cnf":
        raise DimacsError(f"Line {line_number}: malformed header {' '.join(tokens)!r}")
    try:
        variables, clauses = int(tokens[2]), int(tokens[3])
    except ValueError as e:
        raise DimacsError(f"Line {line_number}: malformed header counts") from e
    if variables < 0 or clauses < 0:
        raise DimacsError(f"Line {line_number}: header counts must be nonnegative")
    return variables, clauses


def parse_dimacs(text: str) -> CnfFormula:
    """
    Parse a DIMACS CNF document holding a 3-CNF formula.

    Comment lines start with ``c``; a ``%`` line ends the input. The ``p cnf``
    header is optional, but when present its counts are enforced.

    Raises:
        DimacsError: On a malformed header, a bad token, a clause whose width
            is not 3, a clause holding a literal and its negation, or counts
            that disagree with the header.
    """
    header: Optional[tuple] = None
    clauses = []
    current: List[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None or clauses or current:
                raise DimacsError(f"Line {line_number}: unexpected header")
            header = _parse_header(tokens, line_number)
            continue
        for token in tokens:
            try:
                literal = int(token)
            except ValueError as e:
                raise DimacsError(f"Line {line_number}: invalid literal {token!r}") from e
            if literal != 0:
                current.append(literal)
                continue
            if len(current) != 3:
                raise DimacsError(
                    f"Line {line_number}: clause has {len(current)} literals, expected 3"
                )
            if any(-lit in current for lit in current):
                raise DimacsError(
                    f"Line {line_number}: clause contains a literal and its negation"
                )
            clauses.append(tuple(current))
            current = []
    if current:
        raise DimacsError("Unterminated clause at end of input")

    max_variable = max((abs(lit) for clause in clauses for lit in clause), default=0)
    if header is None:
        return CnfFormula(variable_count=max_variable, clauses=tuple(clauses))
    variables, count = header
    if count != len(clauses):
        raise DimacsError(f"Header declares {count} clauses, found {len(clauses)}")
    if max_variable > variables:
        raise DimacsError(f"Variable {max_variable} exceeds declared count {variables}")
    return CnfFormula(variable_count=variables, clauses=tuple(clauses))


def format_dimacs(formula: CnfFormula) -> str:
    """Render a formula as DIMACS text."""
    lines = [f"p cnf {formula.variable_count} {len(formula.clauses)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
