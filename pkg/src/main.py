"""
Command-line entry point for lambda-theories
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import TypeAdapter
from rich.console import Console
from rich.table import Table

from .algebras import AlgebraError, load_presentation
from .config import Settings, get_settings
from .reporting import (
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    EXIT_REFUTED,
    EXIT_USAGE,
    SuiteReport,
)
from .semiclosed import (
    ObstructionWitness,
    SyntacticLambdaTheory,
    initial_lambda_theory,
    interpret,
    lambda_extension_theory,
    obstruction_table,
)
from .suites import SUITE_ALIASES, SUITES, SuiteOptions, SuiteRunner
from .terms import (
    BetaEquality,
    FuelExhausted,
    TermError,
    TermSyntaxError,
    parse,
    print_term,
)
from .utils import get_logger, setup_logging

logger = get_logger(__name__)

VERDICT_EXIT = {"Equal": EXIT_PASS, "Distinct": EXIT_REFUTED, "Unknown": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    """Bad command line; always exit 1"""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which the exit-code contract reserves for Unknown
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _context(text: str) -> list[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=None, help="β-steps per query")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    common.add_argument("--eta", action="store_true", default=None, help="enable η-reduction")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--context", type=_context, default=[], help="comma separated free identifiers"
    )

    parser = _Parser(
        prog="lambda-theories",
        description="λ-theories, Λ-algebras and their identities checked by β-normalization",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    norm = commands.add_parser("norm", parents=[common], help="normalize a term")
    norm.add_argument("term")

    eq = commands.add_parser("eq", parents=[common], help="decide t =β u")
    eq.add_argument("left")
    eq.add_argument("right")

    suite = commands.add_parser("suite", parents=[common], help="run a check suite")
    suite.add_argument("name", choices=[*SUITES, *SUITE_ALIASES, "all"])
    suite.add_argument(
        "--exhaustive-finite",
        action="store_true",
        help="enumerate the finite clone instead of sampling it",
    )

    for alias in ("karoubi", "fundamental"):
        commands.add_parser(
            f"{alias}-suite", parents=[common], help=f"same as `suite {alias}`"
        )

    interp = commands.add_parser(
        "interpret", parents=[common], help="interpret a term in a λ-theory"
    )
    interp.add_argument("term")
    interp.add_argument(
        "--theory",
        default="lambda",
        help="lambda, or lambda-ext:<algebra.json> for Λ_A",
    )

    obstruction = commands.add_parser(
        "obstruction", parents=[common], help="counting obstruction for finite clones"
    )
    obstruction.add_argument("--size", type=int, default=4, help="largest carrier size")
    obstruction.add_argument("--arity", type=int, default=2, help="largest arity n")
    return parser


class Cli:
    """Dispatches parsed arguments; every command returns an exit code"""

    def __init__(self, args: argparse.Namespace, settings: Settings) -> None:
        self.args = args
        self.settings = settings
        self.options = SuiteOptions.from_settings(
            settings,
            seed=args.seed,
            fuel=args.fuel,
            eta=args.eta,
            exhaustive_finite=getattr(args, "exhaustive_finite", False),
        )
        self.equality = BetaEquality(self.options.fuel, self.options.eta, settings.max_term_size)
        self.console = Console(highlight=False)

    def dispatch(self) -> int:
        command = self.args.command
        if command.endswith("-suite"):
            return self.suite(command.removesuffix("-suite"))
        handler = {
            "norm": self.norm,
            "eq": self.eq,
            "suite": lambda: self.suite(self.args.name),
            "interpret": self.interpret,
            "obstruction": self.obstruction,
        }[command]
        return handler()

    def norm(self) -> int:
        context = self.args.context
        outcome = self.equality.normalize(parse(self.args.term, context))
        exhausted = isinstance(outcome, FuelExhausted)
        printed = print_term(outcome.partial if exhausted else outcome.term, context)
        if self.args.json:
            payload = {"normal_form": not exhausted, "term": printed, "steps": outcome.steps}
            self.console.out(TypeAdapter(dict).dump_json(payload, indent=2).decode())
        elif exhausted:
            self.console.out(f"fuel exhausted after {outcome.steps} steps: {printed}")
        else:
            self.console.out(printed)
        return EXIT_INCONCLUSIVE if exhausted else EXIT_PASS

    def eq(self) -> int:
        context = self.args.context
        left = parse(self.args.left, context)
        right = parse(self.args.right, context)
        verdict = self.equality.eq(left, right)
        if self.args.json:
            payload = {"verdict": verdict.verdict.value, "steps": verdict.steps}
            self.console.out(TypeAdapter(dict).dump_json(payload, indent=2).decode())
        else:
            self.console.out(f"{verdict.verdict.value} ({verdict.steps} steps)")
        return VERDICT_EXIT[verdict.verdict.value]

    def suite(self, name: str) -> int:
        report = SuiteRunner(self.options, self.settings).run(name)
        if self.args.json:
            self.console.out(report.to_json())
        else:
            self._render(report)
        return report.exit_code

    def _render(self, report: SuiteReport) -> None:
        summary = report.summary
        failures = report.failures()
        if failures:
            table = Table(title=f"{report.suite}: checks not Equal")
            table.add_column("id")
            table.add_column("identity")
            table.add_column("verdict")
            table.add_column("detail")
            for record in failures:
                table.add_row(record.id, record.identity, record.verdict.value, record.detail or "")
            self.console.print(table)
        self.console.out(
            f"{report.suite}: {len(report.records)} checks, "
            f"{summary.equal} Equal, {summary.distinct} Distinct, {summary.unknown} Unknown "
            f"(seed {report.seed}, fuel {report.fuel})"
        )

    def _theory(self) -> SyntacticLambdaTheory:
        choice = self.args.theory
        if choice == "lambda":
            return initial_lambda_theory(self.equality)
        if choice.startswith("lambda-ext:"):
            algebra = load_presentation(Path(choice.removeprefix("lambda-ext:")), self.equality)
            return lambda_extension_theory(algebra, self.equality)
        raise UsageError(f"unknown theory {choice!r}; use lambda or lambda-ext:<file>")

    def interpret(self) -> int:
        theory = self._theory()
        context = self.args.context
        term = theory.theory.parse(self.args.term, context).payload
        element = interpret(term, len(context), theory)
        described = theory.describe(element)
        if self.args.json:
            payload = {"theory": theory.theory_id, "arity": element.arity, "element": described}
            self.console.out(TypeAdapter(dict).dump_json(payload, indent=2).decode())
        else:
            self.console.out(f"{theory.theory_id}({element.arity}) ∋ {described}")
        return EXIT_PASS

    def obstruction(self) -> int:
        if self.args.size < 1 or self.args.arity < 0:
            raise UsageError("--size must be at least 1 and --arity non-negative")
        table = obstruction_table(self.args.size, self.args.arity)
        if self.args.json:
            adapter = TypeAdapter(list[ObstructionWitness])
            self.console.out(adapter.dump_json(table, indent=2).decode())
            return EXIT_PASS
        rendered = Table(title="semi-closed structure on finite endomorphism clones")
        for column in ("|X|", "n", "|T(n)|", "|T(n+1)|", "possible", "reason"):
            rendered.add_column(column)
        for witness in table:
            rendered.add_row(
                str(witness.carrier_size),
                str(witness.arity),
                str(witness.smaller),
                str(witness.larger),
                "yes" if witness.semi_closed_possible else "no",
                witness.explanation,
            )
        self.console.print(rendered)
        return EXIT_PASS


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one command and return its exit code"""
    settings = get_settings()
    setup_logging()
    errors = Console(stderr=True, highlight=False)
    try:
        args = build_parser().parse_args(argv)
        return Cli(args, settings).dispatch()
    except UsageError as e:
        errors.out(f"usage error: {e}")
        return EXIT_USAGE
    except TermSyntaxError as e:
        logger.error("Term syntax error", message=e.message, position=e.position)
        errors.out(f"syntax error: {e.message} at position {e.position}")
        return EXIT_USAGE
    except (TermError, AlgebraError, OSError, ValueError) as e:
        logger.error("Command failed", error=str(e))
        errors.out(f"error: {e}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
