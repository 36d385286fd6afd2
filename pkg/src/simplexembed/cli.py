"""CLI entry point for simplexembed."""

import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, NoReturn, Optional, Tuple, TypeVar

import typer
from pydantic import BaseModel
from rich.console import Console

from simplexembed.complex.models import ComplexError, ComplexFormatError, SimplicialComplex
from simplexembed.complex.serialization import load_complex, save_document
from simplexembed.embed22 import Embed22Error, Embed22TextFormatter, decide_embed22
from simplexembed.geometry import (
    GenericMapExhaustedError,
    NonGenericMapError,
    ParityTextFormatter,
    VerificationTextFormatter,
    moment_parity,
    verify_coset,
    verify_moment_lemma,
)
from simplexembed.global_models import (
    DecisionMode,
    Embed22Verdict,
    ExitCode,
    OutputFormat,
    Verdict,
)
from simplexembed.homology import HomologyError, SummaryTextFormatter, summarize
from simplexembed.linalg.matrices import LinalgError, SnfIdentityError
from simplexembed.reduction import (
    DimacsError,
    GadgetComplex,
    GadgetParameterError,
    GadgetTextFormatter,
    ReductionError,
    clause_gadget_2_4,
    clause_gadget_general,
    conflict_gadget_l1,
    parse_dimacs,
)
from simplexembed.reduction import reduce as reduce_formula
from simplexembed.utils.config import ConfigSettings, load_config
from simplexembed.utils.file_utils import read_text_file
from simplexembed.utils.output import JsonFormatter, OutputWriter
from simplexembed.vankampen import (
    ObstructionError,
    ObstructionSymmetryError,
    VanKampenTextFormatter,
    analyze,
    build_obstruction_system,
    save_obstruction_dump,
)


app = typer.Typer(
    name="simplexembed",
    help="Decide and certify embeddability of simplicial complexes in Euclidean space.",
    invoke_without_command=False,
)
console = Console()
err_console = Console(stderr=True)

T = TypeVar("T")

DEFAULT_SEED = 0
DEFAULT_TRIALS = 20
DEFAULT_COORDINATE_BOUND = 50
DEFAULT_MAX_ATTEMPTS = 100

INTERNAL_ERRORS = (SnfIdentityError, ObstructionSymmetryError, ReductionError)
INPUT_ERRORS = (ComplexFormatError, DimacsError, OSError)
PRECONDITION_ERRORS = (
    ComplexError,
    ObstructionError,
    Embed22Error,
    GadgetParameterError,
    GenericMapExhaustedError,
    NonGenericMapError,
    HomologyError,
    LinalgError,
    ValueError,
)

# click's base exception as typer raises it; typer may bundle its own click.
ClickException = next(
    cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException"
)

VERDICT_EXIT_CODES = {
    Verdict.EMBEDDABLE: ExitCode.OK,
    Verdict.NOT_EMBEDDABLE: ExitCode.NEGATIVE,
    Verdict.INCONCLUSIVE_VANISHING: ExitCode.INCONCLUSIVE,
}


def _fail(message: str, code: ExitCode) -> NoReturn:
    err_console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(int(code))


@contextmanager
def _reporting_errors() -> Iterator[None]:
    """Translate library exceptions into error messages and exit codes."""
    try:
        yield
    except typer.Exit:
        raise
    except INTERNAL_ERRORS as e:
        _fail(f"Internal check failed: {e}", ExitCode.INTERNAL)
    except INPUT_ERRORS as e:
        _fail(str(e), ExitCode.USAGE)
    except PRECONDITION_ERRORS as e:
        _fail(str(e), ExitCode.PRECONDITION)
    except Exception as e:
        _fail(f"Unexpected error: {e}", ExitCode.INTERNAL)


def _pick(cli_value: Optional[T], config_value: Optional[T], default: T) -> T:
    """CLI value, else config value, else default; zero is a real value."""
    if cli_value is not None:
        return cli_value
    if config_value is not None:
        return config_value
    return default


def _resolve_format(json_output: bool, config: ConfigSettings) -> OutputFormat:
    if json_output:
        return OutputFormat.JSON
    return OutputFormat(config.output_format or OutputFormat.TEXT.value)


def _load(complex_file: Path) -> SimplicialComplex:
    try:
        return load_complex(complex_file)
    except (OSError, ValueError, ComplexError) as e:
        _fail(str(e), ExitCode.USAGE)


def _emit(
    text: str,
    report: BaseModel,
    output_format: OutputFormat,
    output_file: Optional[Path],
    what: str,
) -> None:
    content = JsonFormatter.format(report) if output_format == OutputFormat.JSON else text
    OutputWriter.write(content, output_file)
    if output_file:
        console.print(f"[green]Success:[/green] {what} written to {output_file}")


def _write_gadget(gadget: GadgetComplex, output_file: Optional[Path]) -> None:
    """Save a gadget with its metadata; stdout gets the JSON document."""
    document = gadget.to_document()
    if output_file is None:
        OutputWriter.write(document.model_dump_json(indent=2))
        return
    save_document(document, output_file)
    console.print(f"[green]Success:[/green] Complex written to {output_file}")


def _finish(code: ExitCode, exit_verdict: bool) -> None:
    if exit_verdict and code != ExitCode.OK:
        raise typer.Exit(int(code))


@app.callback()
def main():
    """simplexembed - embeddability of simplicial complexes."""
    pass


@app.command()
def decide(
    complex_file: Path = typer.Argument(
        ..., help="Complex file (.json for the structured format, otherwise text)"
    ),
    mode: DecisionMode = typer.Option(
        DecisionMode.VANKAMPEN,
        "--mode",
        "-m",
        help="Decision procedure: 'vankampen' for R^(2k), 'plane' for 2-complexes in R^2",
    ),
    k: Optional[int] = typer.Option(
        None,
        "--k",
        "-k",
        min=1,
        help="Dimension parameter of the Van Kampen test (default: dim K)",
    ),
    mod2: bool = typer.Option(
        False, "--mod2", help="Solve the obstruction system over GF(2) instead of Z"
    ),
    dump_obstruction: Optional[Path] = typer.Option(
        None,
        "--dump-obstruction",
        help="Write o_gamma and the finger-move vectors as JSON to this path",
    ),
    json_output: bool = typer.Option(
        False, "--json", help="Emit the report as JSON (default: text, or from config)"
    ),
    output_file: Optional[Path] = typer.Option(
        None, "--output-file", "-o", help="Write the report to file instead of stdout"
    ),
    exit_verdict: bool = typer.Option(
        False,
        "--exit-verdict",
        help="Exit 10 on a negative and 11 on an inconclusive verdict",
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Print system statistics to stderr"
    ),
) -> None:
    """
    Decide embeddability of a complex.

    Configuration can be set in simplexembed.toml in the current directory.
    CLI arguments override configuration file values.

    Examples:

        # K5 does not embed in the plane
        simplexembed decide --k 1 k5.txt

        # 2-skeleton of the 6-simplex in R^4, with an audit dump
        simplexembed decide --k 2 --dump-obstruction dump.json delta6.txt

        # Plane embeddability of a 2-complex
        simplexembed decide --mode plane disk.txt

        # Structured report and verdict in the exit code
        simplexembed decide --k 1 --json --exit-verdict k4.txt
    """
    config = load_config()
    output_format = _resolve_format(json_output, config)
    exit_verdict = exit_verdict or config.exit_verdict or False
    verbose = verbose or config.verbose or False

    K = _load(complex_file)

    with _reporting_errors():
        if mode == DecisionMode.PLANE:
            if k is not None or mod2 or dump_obstruction is not None:
                _fail(
                    "--k, --mod2 and --dump-obstruction apply to --mode vankampen only",
                    ExitCode.USAGE,
                )
            plane_report = decide_embed22(K)
            _emit(
                Embed22TextFormatter.format(plane_report),
                plane_report,
                output_format,
                output_file,
                "Report",
            )
            code = (
                ExitCode.OK
                if plane_report.verdict == Embed22Verdict.YES
                else ExitCode.NEGATIVE
            )
        else:
            k = k if k is not None else max(K.dimension, 1)
            started = time.perf_counter()
            system = build_obstruction_system(K, k)
            report = analyze(K, k, mod2=mod2, system=system)
            if dump_obstruction is not None:
                save_obstruction_dump(system, dump_obstruction)
            if verbose:
                err_console.print(
                    f"[dim]pairs={report.pair_count} finger_moves={report.column_count} "
                    f"eliminated={report.eliminated_pivots} "
                    f"core={report.core_rows}x{report.core_columns} "
                    f"elapsed={time.perf_counter() - started:.3f}s[/dim]"
                )
            _emit(
                VanKampenTextFormatter.format(report),
                report,
                output_format,
                output_file,
                "Report",
            )
            code = VERDICT_EXIT_CODES[report.verdict]

    _finish(code, exit_verdict)


@app.command("reduce")
def reduce_command(
    cnf_file: Path = typer.Argument(..., help="3-CNF formula in DIMACS format"),
    output_file: Optional[Path] = typer.Option(
        None,
        "--output-file",
        "-o",
        help="Write the complex to file (.json keeps provenance); stdout gets JSON",
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Print a summary of the complex to stderr"
    ),
) -> None:
    """
    Compile a 3-CNF formula into a 2-complex.

    The complex embeds in R^4 when the formula is satisfiable.

    Examples:

        simplexembed reduce formula.cnf -o complex.json

        simplexembed reduce formula.cnf --verbose > complex.json
    """
    config = load_config()
    verbose = verbose or config.verbose or False

    try:
        formula = parse_dimacs(read_text_file(cnf_file))
    except (OSError, ValueError, DimacsError) as e:
        _fail(str(e), ExitCode.USAGE)

    if not formula.clauses:
        _fail("Formula has no clauses", ExitCode.PRECONDITION)

    with _reporting_errors():
        gadget = reduce_formula(formula)
        if verbose:
            err_console.print(GadgetTextFormatter.format(gadget), highlight=False)
        _write_gadget(gadget, output_file)


@app.command()
def gadget(
    clause: Tuple[int, int] = typer.Option(
        (None, None),
        "--clause",
        metavar="K L",
        help="Clause gadget for k-complexes in R^(k+l+1), 1 <= l < k",
    ),
    clause_2_4: bool = typer.Option(
        False, "--clause-2-4", help="Clause gadget for 2-complexes in R^4"
    ),
    conflict: bool = typer.Option(False, "--conflict", help="Conflict gadget (squeezed torus)"),
    output_file: Optional[Path] = typer.Option(
        None,
        "--output-file",
        "-o",
        help="Write the complex to file (.json keeps openings); stdout gets JSON",
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Print a summary of the gadget to stderr"
    ),
) -> None:
    """
    Generate a single gadget complex.

    Examples:

        simplexembed gadget --clause-2-4 -o cg.json

        simplexembed gadget --clause 3 1 -o cg31.json

        simplexembed gadget --conflict -o tg.txt
    """
    config = load_config()
    verbose = verbose or config.verbose or False

    chosen = [clause[0] is not None, clause_2_4, conflict]
    if sum(chosen) != 1:
        _fail("Choose exactly one of --clause K L, --clause-2-4, --conflict", ExitCode.USAGE)

    with _reporting_errors():
        if clause[0] is not None:
            result = clause_gadget_general(clause[0], clause[1])
        elif clause_2_4:
            result = clause_gadget_2_4()
        else:
            result = conflict_gadget_l1()
        if verbose:
            err_console.print(GadgetTextFormatter.format(result), highlight=False)
        _write_gadget(result, output_file)


@app.command()
def info(
    complex_file: Path = typer.Argument(..., help="Complex file"),
    json_output: bool = typer.Option(False, "--json", help="Emit the summary as JSON"),
    output_file: Optional[Path] = typer.Option(
        None, "--output-file", "-o", help="Write the summary to file instead of stdout"
    ),
) -> None:
    """
    Print face counts, Euler characteristic and mod-2 Betti numbers.

    Examples:

        simplexembed info tg.json

        simplexembed info --json complex.txt
    """
    config = load_config()
    output_format = _resolve_format(json_output, config)

    K = _load(complex_file)

    with _reporting_errors():
        summary = summarize(K)
        _emit(SummaryTextFormatter.format(summary), summary, output_format, output_file, "Summary")


@app.command()
def verify(
    complex_file: Path = typer.Argument(..., help="Complex file"),
    moment_lemma: bool = typer.Option(
        False, "--moment-lemma", help="Compare moment-map intersections with o_gamma"
    ),
    coset: bool = typer.Option(
        False, "--coset", help="Check o_f against the obstruction coset for random maps f"
    ),
    parity: bool = typer.Option(
        False, "--parity", help="Parity of the moment-map intersection count (dim K = k)"
    ),
    k: Optional[int] = typer.Option(
        None, "--k", "-k", min=1, help="Dimension parameter (default: dim K)"
    ),
    trials: Optional[int] = typer.Option(
        None, "--trials", min=1, help="Random maps for --coset (default: 20, or from config)"
    ),
    seed: Optional[int] = typer.Option(
        None, "--seed", help="Random seed for --coset (default: 0, or from config)"
    ),
    bound: Optional[int] = typer.Option(
        None, "--bound", min=1, help="Coordinate bound for random maps (default: 50)"
    ),
    max_attempts: Optional[int] = typer.Option(
        None, "--max-attempts", min=1, help="Draws per generic map (default: 100)"
    ),
    json_output: bool = typer.Option(False, "--json", help="Emit the report as JSON"),
    output_file: Optional[Path] = typer.Option(
        None, "--output-file", "-o", help="Write the report to file instead of stdout"
    ),
    exit_verdict: bool = typer.Option(False, "--exit-verdict", help="Exit 10 on FAIL"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Print timing to stderr"),
) -> None:
    """
    Check geometric identities of the obstruction on a complex.

    Examples:

        # Moment-map intersections against o_gamma
        simplexembed verify --moment-lemma --k 2 delta6.txt

        # Random generic maps land in the obstruction coset
        simplexembed verify --coset --trials 5 --seed 7 k4.txt

        # The Van Kampen-Flores complexes have odd intersection count
        simplexembed verify --parity --k 1 k5.txt
    """
    config = load_config()
    output_format = _resolve_format(json_output, config)
    exit_verdict = exit_verdict or config.exit_verdict or False
    verbose = verbose or config.verbose or False

    if sum([moment_lemma, coset, parity]) != 1:
        _fail("Choose exactly one of --moment-lemma, --coset, --parity", ExitCode.USAGE)

    K = _load(complex_file)
    k = k if k is not None else max(K.dimension, 1)
    code = ExitCode.OK

    with _reporting_errors():
        started = time.perf_counter()
        if parity:
            parity_report = moment_parity(K, k)
            _emit(
                ParityTextFormatter.format(parity_report),
                parity_report,
                output_format,
                output_file,
                "Report",
            )
        else:
            if moment_lemma:
                report = verify_moment_lemma(K, k)
            else:
                report = verify_coset(
                    K,
                    k,
                    trials=_pick(trials, config.trials, DEFAULT_TRIALS),
                    seed=_pick(seed, config.seed, DEFAULT_SEED),
                    bound=_pick(bound, config.coordinate_bound, DEFAULT_COORDINATE_BOUND),
                    max_attempts=_pick(max_attempts, config.max_attempts, DEFAULT_MAX_ATTEMPTS),
                )
            _emit(
                VerificationTextFormatter.format(report),
                report,
                output_format,
                output_file,
                "Report",
            )
            code = ExitCode.OK if report.passed else ExitCode.NEGATIVE
        if verbose:
            err_console.print(f"[dim]elapsed={time.perf_counter() - started:.3f}s[/dim]")

    _finish(code, exit_verdict)


def run() -> None:
    """Console-script entry point; click usage errors exit with code 1."""
    try:
        code = app(standalone_mode=False)
    except ClickException as e:
        e.show()
        sys.exit(int(ExitCode.USAGE))
    except typer.Abort:
        err_console.print("[red]Aborted[/red]")
        sys.exit(int(ExitCode.USAGE))
    sys.exit(code or 0)


if __name__ == "__main__":
    run()
