import json
import logging
import sys
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, List

import click
from pydantic import ValidationError

from .config import DescentConfig, FieldConfig, SelftestConfig, WorkbenchConfig
from .cover import COVER_FORMAT, BoundarySpec, audit_cover_document, plan_to_document
from .descent import (
    TorsorDocument,
    VerificationReport,
    to_document,
    verify_certificate,
)
from .errors import AsDescentError, NoResidueRoot, ParseError
from .selftest import run_selftest
from .workbench import Workbench

logger = logging.getLogger("asdescent")

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTATION = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    raise SystemExit(code)


def _handle_errors(command: Callable) -> Callable:
    """Map library errors to the documented exit codes."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ParseError as e:
            _fail(f"parse error at position {e.position}: {e}", EXIT_USAGE)
        except ValidationError as e:
            _fail(str(e).splitlines()[0], EXIT_USAGE)
        except NoResidueRoot as e:
            _fail(f"{e}; retry with --extend-constants", EXIT_COMPUTATION)
        except (AsDescentError, ArithmeticError, RuntimeError) as e:
            _fail(str(e), EXIT_COMPUTATION)
        except ValueError as e:
            _fail(str(e), EXIT_USAGE)

    return wrapper


def _field_options(command: Callable) -> Callable:
    command = click.option(
        "--extend-constants",
        type=int,
        default=1,
        show_default=True,
        help="Compute over F_(q^e) instead of F_q.",
    )(command)
    command = click.option(
        "--modulus",
        default=None,
        help="Defining polynomial of F_q, comma-separated from the constant term up.",
    )(command)
    command = click.option("--k", "k", type=int, default=1, show_default=True)(command)
    command = click.option("--p", "p", type=int, required=True, help="Characteristic.")(
        command
    )
    return command


def _descent_options(command: Callable) -> Callable:
    command = click.option("--min-s", type=int, default=1, show_default=True)(command)
    command = click.option("--max-retries", type=int, default=4, show_default=True)(
        command
    )
    return command


def _modulus(text: str | None) -> List[int] | None:
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a list of integers", param_hint="--modulus")


def _workbench(
    field: FieldConfig, extend_constants: int, max_retries: int = 4, min_s: int = 1
) -> Workbench:
    return Workbench(
        WorkbenchConfig(
            field=field,
            descent=DescentConfig(max_retries=max_retries, min_s=min_s),
            extend_constants=extend_constants,
        )
    )


def _emit(payload: Dict[str, Any] | str, output: str | None = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if output:
        Path(output).write_text(text + "\n")
        logger.info(f"Wrote {output}")
    else:
        click.echo(text)


def _report(report: VerificationReport) -> None:
    click.echo(report.table(), err=True)
    _emit(report.to_dict())
    if not report.passed:
        raise SystemExit(EXIT_VERIFICATION_FAILED)


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool):
    """Artin-Schreier descent: classify, normalize, kill and verify torsor classes."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@_field_options
@click.option("--f", "f_text", required=True, help="Rational function in t.")
@click.option("--place", required=True)
@_handle_errors
def classify(p, k, modulus, extend_constants, f_text, place):
    """Ramification of a place in x^p - x = f."""
    workbench = _workbench(FieldConfig(p=p, k=k, modulus=_modulus(modulus)), extend_constants)
    point = workbench.place(place)
    reduction, report = workbench.classify(workbench.element(f_text), point)
    click.echo(
        f"{report.case.value}: e = {report.e}, f = {report.f}, g = {report.g}", err=True
    )
    _emit(
        {
            "place": str(point),
            "f": f_text,
            "reduction": None
            if reduction is None
            else {
                "reduced": str(reduction.reduced),
                "g": str(reduction.g),
                "rounds": reduction.rounds,
            },
            "report": {
                "case": report.case.value,
                "e": report.e,
                "f": report.f,
                "g": report.g,
            },
        }
    )


@main.command("normal-form")
@_field_options
@click.option("--a", "a_text", required=True)
@click.option("--place", required=True)
@click.option("--N", "exponent", type=int, default=1, show_default=True)
@_handle_errors
def normal_form_command(p, k, modulus, extend_constants, a_text, place, exponent):
    """Normal form of a class in K / (O_P + K^(p^N))."""
    workbench = _workbench(FieldConfig(p=p, k=k, modulus=_modulus(modulus)), extend_constants)
    form = workbench.normal_form(workbench.element(a_text), workbench.place(place), exponent)
    field = workbench.field
    click.echo(f"class: {form.qclass}", err=True)
    _emit(
        {
            "place": str(form.qclass.place),
            "N": exponent,
            "terms": [
                {"n": n, "c": field.format_element(c)} for n, c in form.qclass.terms
            ],
            "integral": str(form.integral),
            "root": str(form.root),
            "extendable": form.qclass.is_zero(),
        }
    )


@main.command()
@_field_options
@_descent_options
@click.option("--a", "a_text", required=True)
@click.option("--place", required=True)
@click.option("--N", "exponent", type=int, default=1, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
@_handle_errors
def kill(p, k, modulus, extend_constants, min_s, max_retries, a_text, place, exponent, output):
    """Certificate killing the class of a at one place."""
    workbench = _workbench(
        FieldConfig(p=p, k=k, modulus=_modulus(modulus)), extend_constants, max_retries, min_s
    )
    certificate = workbench.kill(workbench.element(a_text), workbench.place(place), exponent)
    _emit(to_document(certificate).model_dump_json(indent=2), output)


@main.command("kill-multi")
@_field_options
@_descent_options
@click.option("--a", "a_text", required=True)
@click.option("--places", multiple=True, required=True, help="Repeat for every place.")
@click.option("--N", "exponent", type=int, default=1, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
@_handle_errors
def kill_multi(
    p, k, modulus, extend_constants, min_s, max_retries, a_text, places, exponent, output
):
    """Certificate killing the class of a at several places with one tower."""
    workbench = _workbench(
        FieldConfig(p=p, k=k, modulus=_modulus(modulus)), extend_constants, max_retries, min_s
    )
    certificate = workbench.kill_multi(
        workbench.element(a_text), workbench.places(places), exponent
    )
    _emit(to_document(certificate).model_dump_json(indent=2), output)


@main.command()
@_descent_options
@click.option("--torsor", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--boundary", multiple=True, required=True, help="Repeat for every place.")
@click.option("--samples", multiple=True, help="Interior places to spot-check.")
@click.option("--extend-constants", type=int, default=1, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
@_handle_errors
def cover(min_s, max_retries, torsor, boundary, samples, extend_constants, output):
    """Cover plan of P^1 ramified only over the boundary."""
    document = TorsorDocument.model_validate_json(Path(torsor).read_text())
    workbench = _workbench(document.base_field, extend_constants, max_retries, min_s)
    data = workbench.lift_torsor(document.to_torsor_data())
    spec = BoundarySpec.create(workbench.places(boundary), workbench.places(samples))
    plan = workbench.cover(data, spec)
    for entry in plan.table:
        click.echo(
            f"layer {entry.layer}  {str(entry.place):<16} {entry.report.case.value}",
            err=True,
        )
    _emit(plan_to_document(plan).model_dump_json(indent=2), output)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@_handle_errors
def verify(file):
    """Verify a certificate or cover plan file; exit 0 iff every check passes."""
    text = Path(file).read_bytes().decode("utf-8", errors="replace")
    try:
        content = json.loads(text)
    except ValueError:
        content = None
    if isinstance(content, dict) and content.get("format") == COVER_FORMAT:
        report = audit_cover_document(text)
    else:
        report = verify_certificate(text)
    _report(report)


@main.command()
@click.option("--samples", type=int, default=None, help="Random inputs per suite.")
@click.option("--seed", type=int, default=None, help="Overrides ASDESCENT_SEED.")
@_handle_errors
def selftest(samples, seed):
    """Run the seeded invariant suites."""
    values = {}
    if samples is not None:
        values["samples"] = samples
    if seed is not None:
        values["seed"] = seed
    _report(run_selftest(SelftestConfig(**values)))

