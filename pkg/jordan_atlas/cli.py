"""Command-line front end.

Every command prints one JSON document on standard output. Errors are
reported as ``{"error", "detail", "violations"}`` on standard error with
exit status 2 for validation problems and 3 for everything else.
"""
from __future__ import annotations

import json
import logging
from functools import wraps

import click

from . import codec, config
from .catalog import build, catalog_form, validate_spec
from .errors import AtlasError, SpecInvalid
from .invariants import (are_conjugate, conjugacy_caveat, count_classes_formula, default_embedding,
                         discrepancy, enumerate_classes, invariant_vector, k_caveat, k_preserved,
                         subalgebra_invariants)
from .jordan import Subalgebra
from .models import AMBIENT_NAMES, Ambient, CanonicalSpec, Embedding, Family, TypeLabel
from .verify import LEVELS, SUITES, run_verification

logger = logging.getLogger(__name__)

AMBIENT_CHOICES = [f.value for f in AMBIENT_NAMES]
TYPE_CHOICES = [f.value for f in Family]
EMBEDDING_CHOICES = [e.value for e in Embedding]

# failures in a verify report share the exit status of invariant violations
VERIFY_FAILED = 3


def _report(payload: dict, code: int):
    payload.setdefault("violations", [])
    click.echo(json.dumps(payload), err=True)
    click.get_current_context().exit(code)


def json_errors(f):
    """Map errors raised by a command onto the JSON error document."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit):
            raise
        except AtlasError as e:
            logger.info("%s failed: %s", f.__name__, e)
            _report(e.to_dict(), e.exit_code)
        except Exception as e:
            logger.exception("unhandled error in %s", f.__name__)
            _report({"error": "InternalError", "detail": str(e)}, 3)

    return wrapper


def emit(document, out=None):
    text = codec.dumps(document)
    if out:
        path = config.resolve_output_path(out)
        path.write_text(text + "\n")
        logger.info("wrote %s", path)
    click.echo(text)


def _type_label(kind, m, spin_dim) -> TypeLabel:
    family = Family(kind)
    if family is Family.SPIN:
        if spin_dim is None:
            raise click.UsageError("--spin-dim is required for --type spin")
        return TypeLabel(family, spin_dim)
    if m is None:
        raise click.UsageError(f"--m is required for --type {kind}")
    return TypeLabel(family, m)


def _load_spec(source) -> CanonicalSpec:
    return CanonicalSpec.from_dict(codec.load_document(source))


def _checked_spec(source) -> CanonicalSpec:
    spec = _load_spec(source)
    violations = validate_spec(spec)
    if violations:
        raise SpecInvalid(violations)
    return spec


def ambient_options(f):
    f = click.option("--n", "n", type=int, help="Matrix order of the ambient algebra.")(f)
    f = click.option("--ambient", type=click.Choice(AMBIENT_CHOICES),
                     help="Ambient kind: FullPlus, SymmetricH or SymplecticH.")(f)
    return f


def type_options(f):
    f = click.option("--spin-dim", type=int, help="dim V for --type spin.")(f)
    f = click.option("--m", "m", type=int, help="Degree of a matrix type.")(f)
    f = click.option("--type", "kind", type=click.Choice(TYPE_CHOICES), help="Type family.")(f)
    return f


def _ambient(kind, n) -> Ambient:
    if kind is None or n is None:
        raise click.UsageError("--ambient and --n are required")
    return Ambient(Family(kind), n)


@click.group()
def cli():
    """Canonical simple subalgebras of special Jordan algebras."""
    config.init_logging()


@cli.command("build")
@click.argument("spec", required=False)
@ambient_options
@type_options
@click.option("--l", "l", type=int, default=1, show_default=True, help="Number of X blocks.")
@click.option("--k", "k", type=int, default=0, show_default=True, help="Number of transposed blocks.")
@click.option("--embedding", type=click.Choice(EMBEDDING_CHOICES), help="Spin embedding type.")
@click.option("--out", type=click.Path(dir_okay=False), help="Also write the JSON to this file.")
@json_errors
def build_cmd(spec, ambient, n, kind, m, spin_dim, l, k, embedding, out):
    """Build the canonical subalgebra of SPEC (a JSON file or inline JSON) or of the flags."""
    if spec is not None:
        parsed = _load_spec(spec)
    else:
        if kind is None:
            raise click.UsageError("give a SPEC or --type")
        t = _type_label(kind, m, spin_dim)
        chosen = Embedding(embedding) if embedding else default_embedding(t)
        parsed = CanonicalSpec(_ambient(ambient, n), t, l, k, embedding=chosen)
    s = build(parsed)
    document = {
        "form": catalog_form(parsed),
        "spec": parsed.to_dict(),
        "invariants": invariant_vector(parsed).to_dict(),
        "k_a_preserved": k_preserved(parsed.ambient),
        **s.to_dict(),
    }
    emit(document, out)


@cli.command("classify")
@ambient_options
@type_options
@click.option("--out", type=click.Path(dir_okay=False), help="Also write the JSON to this file.")
@json_errors
def classify_cmd(ambient, n, kind, m, spin_dim, out):
    """List the conjugacy classes of one type inside one ambient."""
    if kind is None:
        raise click.UsageError("--type is required")
    amb = _ambient(ambient, n)
    t = _type_label(kind, m, spin_dim)
    atlas = enumerate_classes(amb, t)
    found = discrepancy(amb, t, atlas)
    caveat = k_caveat(amb, t, atlas)
    document = atlas.to_dict()
    document["count"] = len(atlas)
    document["formula_count"] = count_classes_formula(amb, t)
    document["discrepancy"] = None if found is None else found.to_dict()
    document["caveat"] = None if caveat is None else caveat.to_dict()
    emit(document, out)


@cli.command("conjugate")
@click.argument("spec_a")
@click.argument("spec_b")
@json_errors
def conjugate_cmd(spec_a, spec_b):
    """Decide whether two canonical specs give conjugate subalgebras."""
    a, b = _checked_spec(spec_a), _checked_spec(spec_b)
    verdict = are_conjugate(a, b)
    caveat = conjugacy_caveat(a, b)
    emit({
        "conjugate": verdict,
        "invariants_a": invariant_vector(a).to_dict(),
        "invariants_b": invariant_vector(b).to_dict(),
        "caveat": None if caveat is None else caveat.to_dict(),
    })


@cli.command("inspect")
@click.argument("subalgebra")
@json_errors
def inspect_cmd(subalgebra):
    """Type, identity rank and k_A of a subalgebra given by its basis (build output works)."""
    s = Subalgebra.from_dict(codec.load_document(subalgebra))
    document = {"ambient": s.ambient.to_dict(), "dim": s.dim, "k_a_preserved": k_preserved(s.ambient)}
    document.update(subalgebra_invariants(s).to_dict())
    emit(document)


@cli.command("verify")
@click.option("--level", type=click.Choice(sorted(LEVELS)), default="quick", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITES),
              help="Run only these suites (repeatable).")
@click.option("--out", type=click.Path(dir_okay=False), help="Also write the report to this file.")
@json_errors
def verify_cmd(level, seed, suites, out):
    """Run the property suites; exit 3 when any case fails."""
    selected = [name for name in SUITES if name in suites] if suites else SUITES
    report = run_verification(level, seed, suites=selected)
    emit(report.to_dict(), out)
    if not report.passed:
        failed = sum(len(s.failures) for s in report.suites)
        logger.warning("verification found %d failing cases", failed)
        click.get_current_context().exit(VERIFY_FAILED)


def main():
    cli(prog_name="jordan-atlas")
