# Copyright The Volcano Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Main CLI entry point for vtmkit.

Commands generate words, check claims about vtm, rebuild its automaton,
decide predicates and search for squarefree morphisms. Reports go to
stdout; progress and errors go to stderr.

Exit status: 0 confirmed/true, 1 refuted/false/inconclusive, 2 error.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import typer
from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from vtmkit.models import RunReport
from vtmkit.runtime import CheckRuntime, DfaoRuntime, GenerateRuntime, MorphismRuntime, PredicateRuntime
from vtmkit.services import ArtifactService, ConfigService, ToolkitConfig
from vtmkit.utils import configure_logging
from vtmkit.words import Word

logger = logging.getLogger(__name__)

# Progress and errors go to stderr so stdout carries only words and reports
console = Console(stderr=True)

app = typer.Typer(
    name="vtmkit",
    help="vtmkit - squarefree words, automatic sequences and arithmetic progressions in vtm",
    no_args_is_help=True,
    rich_markup_mode="rich",
    add_completion=False,
)

USAGE_ERROR = 2


@dataclass
class CliState:
    verbose: bool = False
    config_path: Optional[Path] = None
    seed: Optional[int] = None


def version_callback(value: bool) -> None:
    """Show version information and exit."""
    if value:
        from vtmkit import __version__
        console.print(f"vtmkit version: [bold green]{__version__}[/bold green]")
        raise typer.Exit()


def _handle_error(e: Exception, command_name: str, verbose: bool):
    console.print(f"Error {command_name}: [red]{escape(str(e))}[/red]", highlight=False)
    if verbose:
        import traceback
        console.print(traceback.format_exc())
    raise typer.Exit(USAGE_ERROR)


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState()


def _config(state: CliState) -> ToolkitConfig:
    return ConfigService(verbose=state.verbose).load_config(state.config_path)


def _emit(report: RunReport, as_json: bool, timings: bool, table: bool = False) -> None:
    if as_json:
        typer.echo(report.to_json(include_timings=timings))
    else:
        typer.echo(report.to_text(include_timings=timings), nl=False)
    if table and report.entries:
        _print_table(report)
    raise typer.Exit(report.exit_code)


def _print_table(report: RunReport) -> None:
    table = Table(title=report.command)
    columns = list(report.entries[0])
    for column in columns:
        table.add_column(column, style="cyan" if column == columns[0] else "green")
    for entry in report.entries:
        table.add_row(*(str(entry.get(column, "")) for column in columns))
    console.print(table)


def _spinner(description: str) -> Progress:
    return Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"),
                    console=console, transient=True)


def parse_k_range(text: str) -> Tuple[int, int]:
    """Parse "A..B" (or a single "A")."""
    low, sep, high = text.partition("..")
    try:
        return (int(low), int(high)) if sep else (int(low), int(low))
    except ValueError:
        raise typer.BadParameter(f"Expected A..B, got {text!r}")


def parse_assignments(items: List[str]) -> Dict[str, int]:
    """Parse ["k=5", "i=1,j=2"] into {"k": 5, "i": 1, "j": 2}."""
    values: Dict[str, int] = {}
    for item in items:
        for part in item.split(","):
            name, sep, value = part.partition("=")
            if not sep or not name.strip() or not value.strip().isdigit():
                raise typer.BadParameter(f"Expected NAME=VALUE, got {part!r}")
            values[name.strip()] = int(value)
    return values


def parse_sequence_files(items: List[str]) -> Dict[str, Path]:
    files: Dict[str, Path] = {}
    for item in items:
        name, sep, path = item.partition("=")
        if not sep or not name or not path:
            raise typer.BadParameter(f"Expected NAME=FILE, got {item!r}")
        files[name] = Path(path)
    return files


@app.callback()
def main(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-v",
        help="Enable verbose output",
    ),
    config: Optional[Path] = typer.Option(
        None,
        "--config",
        help="Path to a vtmkit.yaml file",
    ),
    seed: Optional[int] = typer.Option(
        None,
        "--seed",
        help="Reserved; every algorithm is deterministic",
    ),
) -> None:
    """vtmkit - experiments on the ternary squarefree word vtm."""
    configure_logging(verbose)
    if seed is not None:
        logger.debug(f"--seed {seed} has no effect")
    ctx.obj = CliState(verbose=verbose, config_path=config, seed=seed)


@app.command()
def generate(
    ctx: typer.Context,
    length: int = typer.Option(..., "--length", "-n", help="Number of letters"),
    vtm: bool = typer.Option(False, "--vtm", help="Generate vtm (the default)"),
    morphism: Optional[str] = typer.Option(None, "--morphism", help='Morphism such as "0:01,1:10"'),
    start: int = typer.Option(0, "--start", help="Letter the fixed point starts from"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the word to this file"),
) -> None:
    """
    Generate a prefix of a morphic fixed point as a digit string.
    """
    state = _state(ctx)
    try:
        if vtm and morphism:
            raise typer.BadParameter("--vtm and --morphism are mutually exclusive")
        runtime = GenerateRuntime(_config(state), verbose=state.verbose)
        result = runtime.generate(length, morphism=morphism, seed=start, out=out)
    except Exception as e:
        _handle_error(e, "generating word", state.verbose)
    if result["path"]:
        console.print(f"Wrote {result['length']} letters to [blue]{result['path']}[/blue]")
    else:
        typer.echo(result["word"].to_string())


@app.command()
def check(
    ctx: typer.Context,
    squarefree: Optional[Path] = typer.Option(None, "--squarefree", help="Check that a word file is squarefree"),
    theorem1: bool = typer.Option(False, "--theorem1", help="Look for 00 or 22 in (v_kn) for each k"),
    proof: bool = typer.Option(False, "--proof", help="Follow the odd/even/power-of-two case analysis"),
    residues: bool = typer.Option(False, "--residues", help="Residues mod k of a factor's occurrences"),
    doubling: bool = typer.Option(False, "--doubling", help="Doubling and power-of-two facts of the DFAO"),
    k_range: str = typer.Option("2..1000", "--k-range", help="Range A..B of k"),
    k: int = typer.Option(3, "--k", help="Modulus for --residues"),
    factor: str = typer.Option("0", "--factor", help="Factor for --residues"),
    prefix: Optional[int] = typer.Option(None, "--prefix", help="Length of the vtm prefix to scan"),
    bound: int = typer.Option(10**6, "--bound", help="Bound for --doubling"),
    max_exp: int = typer.Option(19, "--max-exp", help="Largest exponent for the power-of-two check"),
    as_json: bool = typer.Option(False, "--json", help="Emit the report as JSON"),
    no_timings: bool = typer.Option(False, "--no-timings", help="Leave timings out of the report"),
    table: bool = typer.Option(False, "--table", help="Also print per-k entries as a table"),
) -> None:
    """
    Check a claim and report confirmed, inconclusive or refuted.
    """
    state = _state(ctx)
    try:
        modes = [squarefree is not None, theorem1, proof, residues, doubling]
        if sum(modes) != 1:
            raise typer.BadParameter("Choose exactly one of --squarefree, --theorem1, --proof, --residues, --doubling")
        runtime = CheckRuntime(_config(state), verbose=state.verbose)
        with _spinner("Checking...") as progress:
            progress.add_task("Checking...", total=None)
            if squarefree is not None:
                word = ArtifactService(state.verbose).read_word(squarefree)
                report = runtime.check_squarefree(word, source=str(squarefree))
            elif theorem1:
                report = runtime.check_theorem1(*parse_k_range(k_range), prefix_len=prefix)
            elif proof:
                report = runtime.check_proof(*parse_k_range(k_range), prefix_len=prefix)
            elif residues:
                report = runtime.check_residues(k, Word.from_string(factor), prefix_len=prefix)
            else:
                report = runtime.check_doubling(bound, max_exp)
    except Exception as e:
        _handle_error(e, "checking", state.verbose)
    _emit(report, as_json, not no_timings, table)


@app.command()
def dfao(
    ctx: typer.Context,
    out: Optional[Path] = typer.Option(None, "--out", help="Write the rebuilt DFAO to this file"),
    golden: Optional[Path] = typer.Option(None, "--golden", help="Golden DFAO file (packaged one by default)"),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write a DOT rendering to this file"),
    as_json: bool = typer.Option(False, "--json", help="Emit the report as JSON"),
    no_timings: bool = typer.Option(False, "--no-timings", help="Leave timings out of the report"),
) -> None:
    """
    Rebuild the vtm DFAO from its 2-kernel and compare it with the golden file.
    """
    state = _state(ctx)
    try:
        runtime = DfaoRuntime(_config(state), verbose=state.verbose)
        with _spinner("Rebuilding DFAO...") as progress:
            progress.add_task("Rebuilding DFAO...", total=None)
            report = runtime.build(out=out, golden=golden, dot=dot)
    except Exception as e:
        _handle_error(e, "rebuilding DFAO", state.verbose)
    _emit(report, as_json, not no_timings)


@app.command()
def predicate(
    ctx: typer.Context,
    formula: str = typer.Option(..., "--eval", help="Predicate, e.g. \"Ei VTM[i]=@0\""),
    seq: List[str] = typer.Option([], "--seq", help="Register a sequence: NAME=DFAO_FILE"),
    member: List[str] = typer.Option([], "--member", help="Test an assignment: k=5 (repeatable or comma list)"),
    enumerate_limit: Optional[int] = typer.Option(None, "--enumerate", help="List this many accepted assignments"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the automaton to this file"),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write the automaton as DOT"),
    as_json: bool = typer.Option(False, "--json", help="Emit the report as JSON"),
    no_timings: bool = typer.Option(False, "--no-timings", help="Leave timings out of the report"),
) -> None:
    """
    Compile a predicate to an automaton and decide or query it.
    """
    state = _state(ctx)
    try:
        runtime = PredicateRuntime(_config(state), verbose=state.verbose)
        with _spinner("Compiling predicate...") as progress:
            progress.add_task("Compiling predicate...", total=None)
            report = runtime.evaluate(
                formula,
                sequence_files=parse_sequence_files(seq),
                member=parse_assignments(member) if member else None,
                enumerate_limit=enumerate_limit,
                out=out,
                dot=dot,
            )
    except Exception as e:
        _handle_error(e, "evaluating predicate", state.verbose)
    _emit(report, as_json, not no_timings)


@app.command()
def morphism(
    ctx: typer.Context,
    search: bool = typer.Option(False, "--search", help="Search for a cyclic squarefree k-uniform morphism"),
    embed: bool = typer.Option(False, "--embed", help="Embed a squarefree word with a certified morphism"),
    k: Optional[int] = typer.Option(None, "--k", help="Uniform image length for --search"),
    exhaustive: bool = typer.Option(False, "--exhaustive", help="List every solution (k <= 13)"),
    word: Optional[Path] = typer.Option(None, "--word", help="Word file for --embed"),
    morphism_file: Optional[Path] = typer.Option(None, "--morphism", help="Morphism file for --embed"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the morphism or embedded word here"),
    as_json: bool = typer.Option(False, "--json", help="Emit the report as JSON"),
    no_timings: bool = typer.Option(False, "--no-timings", help="Leave timings out of the report"),
    table: bool = typer.Option(False, "--table", help="Also print found morphisms as a table"),
) -> None:
    """
    Search for cyclic squarefree morphisms or embed a word with one.
    """
    state = _state(ctx)
    try:
        if search == embed:
            raise typer.BadParameter("Choose exactly one of --search and --embed")
        runtime = MorphismRuntime(_config(state), verbose=state.verbose)
        with _spinner("Working...") as progress:
            progress.add_task("Searching..." if search else "Embedding...", total=None)
            if search:
                if k is None:
                    raise typer.BadParameter("--search needs --k")
                report = runtime.search(k, exhaustive=exhaustive, out=out)
            else:
                if word is None or morphism_file is None:
                    raise typer.BadParameter("--embed needs --word and --morphism")
                report = runtime.embed(word, morphism_file, out=out)
    except Exception as e:
        _handle_error(e, "running morphism command", state.verbose)
    _emit(report, as_json, not no_timings, table)


if __name__ == "__main__":
    app()
