"""Command-line surface for the library.

Subcommands:

* ``series`` — print exact q-expansions of the built-in series;
* ``lattice`` — invariants or theta enumeration for a lattice expression;
* ``count`` — full curve-count pipeline on a fibration config, with an
  optional machine-readable JSON report;
* ``fibration`` — numerical checks on a config: singular-fiber count from
  Euler numbers, the degree/defect identity, dimension formulas.

Configs are TOML documents with keys: name, base_genus, euler_total
(optional), calabi_yau, iso_trivial, lattice_M (a lattice expression such
as "H + -E8"), and an optional [[fibers]] array whose entries carry
count, kind ("ADE" | "quasi_homogeneous"), and optionally euler,
exponents, and exactly one of defect (an exact string like "1/12") or
monodromy_order for non-ADE fibers.  Unknown keys are rejected.

Exit codes: 0 success; 1 validation failure (bad config, bad input
data); 2 internal invariant breach (a bug); 64 usage errors.
"""

from __future__ import annotations

import hashlib
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

import click

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .counting import CountingReport, generating_function
from .errors import (
    ConfigError,
    K3CountError,
    PipelineInvariantError,
    UnderdeterminedThetaWarning,
)
from .exactq import delta, eisenstein, yau_zaslow
from .fibration import (
    K3FibrationSpec,
    SingularFiberSpec,
    expected_dimensions,
    defect_sum,
    solve_singular_fiber_count,
    validate,
    wp_degree,
)
from .lattice import LatticeInvariants, build, invariants, theta_definite

__all__ = ["main", "cli", "load_config", "parse_config"]


# ---------------------------------------------------------------------------
# Config parsing.
# ---------------------------------------------------------------------------

# field -> (TOML type, required)
_TOP_FIELDS = {
    "name": (str, True),
    "base_genus": (int, True),
    "euler_total": (int, False),
    "calabi_yau": (bool, True),
    "iso_trivial": (bool, True),
    "lattice_M": (str, True),
    "fibers": (list, False),
}
_FIBER_FIELDS = {
    "count": (int, True),
    "euler": (int, False),
    "monodromy_order": (int, False),
    "defect": (str, False),
    "kind": (str, True),
    "exponents": (list, False),
}


def _check_table(table: dict, fields: dict, where: str) -> None:
    unknown = sorted(set(table) - set(fields))
    if unknown:
        raise ConfigError(f"{where}: unknown keys {unknown}")
    missing = sorted(k for k, (_, req) in fields.items() if req and k not in table)
    if missing:
        raise ConfigError(f"{where}: missing required keys {missing}")
    for key, (typ, _) in fields.items():
        if key not in table:
            continue
        value = table[key]
        # TOML distinguishes booleans from integers; mirror that strictly
        if typ is bool:
            ok = isinstance(value, bool)
        elif typ is int:
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = isinstance(value, typ)
        if not ok:
            raise ConfigError(
                f"{where}: key {key!r} must be of type {typ.__name__}, "
                f"got {value!r}"
            )


def _parse_fiber(table: dict, where: str) -> SingularFiberSpec:
    _check_table(table, _FIBER_FIELDS, where)
    kind = table["kind"]
    has_defect = "defect" in table
    has_order = "monodromy_order" in table
    if kind == "ADE":
        if has_defect or has_order:
            raise ConfigError(
                f"{where}: ADE fibers have defect 0; give neither "
                "defect nor monodromy_order"
            )
    else:
        if has_defect == has_order:
            raise ConfigError(
                f"{where}: give exactly one of defect or monodromy_order"
            )
    defect = None
    if has_defect:
        try:
            defect = Fraction(table["defect"])
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(
                f"{where}: defect must be an exact string like \"1/12\": {exc}"
            ) from None
    exponents = None
    if "exponents" in table:
        raw = table["exponents"]
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in raw):
            raise ConfigError(f"{where}: exponents must be a list of integers")
        exponents = tuple(raw)
    try:
        return SingularFiberSpec(
            count=table["count"],
            kind=kind,
            euler=table.get("euler"),
            monodromy_order=table.get("monodromy_order"),
            defect=defect,
            exponents=exponents,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_config(raw: bytes, source: str = "<config>") -> K3FibrationSpec:
    """Parse a TOML fibration config into a spec; reject unknown keys."""
    try:
        data = tomllib.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"{source}: not a valid config: {exc}") from None
    _check_table(data, _TOP_FIELDS, source)
    try:
        lattice = build(data["lattice_M"])
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{source}: lattice_M: {exc}") from None
    fibers = []
    for i, entry in enumerate(data.get("fibers", [])):
        where = f"{source}: fibers[{i}]"
        if not isinstance(entry, dict):
            raise ConfigError(f"{where}: expected a table")
        fibers.append(_parse_fiber(entry, where))
    try:
        return K3FibrationSpec(
            name=data["name"],
            base_genus=data["base_genus"],
            calabi_yau=data["calabi_yau"],
            iso_trivial=data["iso_trivial"],
            fiber_lattice=lattice,
            fibers=tuple(fibers),
            euler_total=data.get("euler_total"),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from None


def _read_config(path: str) -> Tuple[K3FibrationSpec, str]:
    """Load a config file, returning the spec and the sha256 of its bytes."""
    raw = Path(path).read_bytes()
    return parse_config(raw, source=path), hashlib.sha256(raw).hexdigest()


def load_config(path: str) -> K3FibrationSpec:
    """Load a TOML fibration config file into a spec."""
    return _read_config(path)[0]


def _require_valid(spec: K3FibrationSpec) -> None:
    diagnostics = validate(spec)
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors:
        lines = "; ".join(f"{d.code}: {d.message}" for d in errors)
        raise ConfigError(f"config for {spec.name!r} fails validation: {lines}")


# ---------------------------------------------------------------------------
# Output shaping.
# ---------------------------------------------------------------------------

def _lattice_payload(inv: LatticeInvariants) -> dict:
    return {
        "rank": inv.rank,
        "signature": list(inv.signature),
        "determinant": str(inv.determinant),
        "even": inv.is_even,
        "unimodular": inv.is_unimodular,
    }


def _report_payload(
    rep: CountingReport, trunc: int, digest: str, hm_sign: bool
) -> dict:
    sign = -1 if hm_sign else 1
    return {
        "tool": "k3count",
        "version": __version__,
        "config_sha256": digest,
        "spec": rep.spec_name,
        "truncation": trunc,
        "hm_sign": hm_sign,
        "fiber_lattice": _lattice_payload(rep.fiber_lattice_invariants),
        "transcendental_lattice": _lattice_payload(rep.transcendental_invariants),
        "weight": rep.weight,
        "theta": rep.theta_label,
        "theta_coefficients": [str(c) for c in rep.theta_reg.coeffs],
        "wp_degree": str(rep.wp_deg),
        "defect_sum": str(rep.defect_sum),
        "prefactor": str(sign * rep.prefactor),
        "coefficients": [str(sign * rep.n(d)) for d in range(trunc + 1)],
        "warnings": list(rep.warnings),
    }


def _print_series(series) -> None:
    for n, value in enumerate(series.coeffs):
        click.echo(f"{n}: {value}")


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------

@click.group(name="k3count")
@click.version_option(__version__, prog_name="k3count")
def cli():
    """Exact curve-count generating functions for K3-fibered threefolds."""


@cli.command("series")
@click.argument("kind", type=click.Choice(["e2", "e4", "e6", "delta", "yz"]))
@click.argument("n", type=click.IntRange(min=0))
def cmd_series(kind: str, n: int):
    """Print coefficients 0..N of a built-in series, one per line."""
    if kind in ("e2", "e4", "e6"):
        series = eisenstein(int(kind[1]), n)
    elif kind == "delta":
        series = delta(n)
    else:
        series = yau_zaslow(n)
    _print_series(series)


# Lattice expressions may begin with a minus sign ("-E8 + -E8"), which the
# option parser would otherwise reject as an unknown option.
@cli.command("lattice", context_settings={"ignore_unknown_options": True})
@click.argument("expr")
@click.option(
    "--invariants", "show_invariants", is_flag=True, help="Print the invariants line."
)
@click.option(
    "--theta",
    "theta_n",
    type=click.IntRange(min=0),
    default=None,
    help="Enumerate the theta series through q**N (definite lattices only).",
)
def cmd_lattice(expr: str, show_invariants: bool, theta_n: Optional[int]):
    """Invariants or theta enumeration of a lattice expression.

    EXPR uses '+'-joined tokens H, E8, -E8, rank1(d), optionally repeated
    as in "3H + 2(-E8)".
    """
    lat = build(expr)
    if theta_n is not None:
        click.echo(", ".join(str(c) for c in theta_definite(lat, theta_n).coeffs))
    if show_invariants or theta_n is None:
        click.echo(invariants(lat).describe())


@cli.command("count")
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.argument("n", type=click.IntRange(min=0))
@click.option(
    "--hm-sign",
    is_flag=True,
    help="Flip the overall sign to the opposite orientation convention.",
)
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the machine-readable report to this path ('-' for stdout).",
)
def cmd_count(config_path: str, n: int, hm_sign: bool, json_path: Optional[str]):
    """Run the curve-count pipeline on a fibration config through q**N."""
    spec, digest = _read_config(config_path)
    _require_valid(spec)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderdeterminedThetaWarning)
        rep = generating_function(spec, n)
    for note in rep.warnings:
        click.echo(f"warning: {note}", err=True)

    payload = _report_payload(rep, n, digest, hm_sign)
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if json_path == "-":
        click.echo(text, nl=False)
        return
    if json_path is not None:
        Path(json_path).write_text(text)

    sign = -1 if hm_sign else 1
    click.echo(f"spec: {rep.spec_name}")
    click.echo(f"fiber lattice: {rep.fiber_lattice_invariants.describe()}")
    click.echo(f"transcendental lattice: {rep.transcendental_invariants.describe()}")
    click.echo(f"weight: {rep.weight}")
    click.echo(f"theta: {rep.theta_label}")
    click.echo(f"wp degree: {rep.wp_deg}")
    click.echo(f"defect sum: {rep.defect_sum}")
    click.echo(f"prefactor: {sign * rep.prefactor}")
    if hm_sign:
        click.echo("sign: flipped to the opposite orientation convention")
    click.echo("n:")
    for d in range(n + 1):
        click.echo(f"{d}: {sign * rep.n(d)}")


@cli.command("fibration")
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.argument("check", type=click.Choice(["euler", "defect", "dims"]))
@click.argument("args", nargs=-1, type=int)
def cmd_fibration(config_path: str, check: str, args: Tuple[int, ...]):
    """Run a numerical check on a fibration config.

    CHECK is one of: euler (solve the singular-fiber count from the
    declared total Euler number), defect (the degree/defect identity),
    dims C_SQUARED GENUS (the dimension ledger).
    """
    spec, _ = _read_config(config_path)
    _require_valid(spec)

    if check == "dims":
        if len(args) != 2:
            raise click.UsageError("dims needs two arguments: C_SQUARED GENUS")
        rep = expected_dimensions(args[0], args[1])
        click.echo(
            f"l={rep.nodes}, family_dim={rep.family_dim}, eta_grade={rep.eta_grade}"
        )
        return
    if args:
        raise click.UsageError(f"check {check!r} takes no extra arguments")

    if check == "euler":
        if spec.euler_total is None:
            raise ConfigError(
                f"config for {spec.name!r} declares no euler_total; "
                "the euler check needs it"
            )
        if len(spec.fibers) != 1:
            raise ConfigError(
                "the euler check needs exactly one singular-fiber orbit"
            )
        fiber = spec.fibers[0]
        if fiber.resolved_euler is None:
            raise ConfigError(
                "the singular fiber has no Euler number; give euler = ..."
            )
        count = solve_singular_fiber_count(
            spec.euler_total, spec.base_genus, fiber.resolved_euler
        )
        if count != fiber.count:
            raise ConfigError(
                f"declared count {fiber.count} but the Euler numbers force {count}"
            )
        click.echo(f"singular fibers: {count}")
        return

    # check == "defect"
    wp = wp_degree(spec)
    defects = defect_sum(spec)
    base = spec.base_degree
    if wp + defects != base:
        raise PipelineInvariantError(
            f"degree/defect identity broke: {wp} + {defects} != {base}"
        )
    click.echo(f"wp {wp} + defects {defects} = c1(B)[B] {base} ✓")


# ---------------------------------------------------------------------------
# Entry point with the exit-code contract.
# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 64
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except PipelineInvariantError as exc:
        click.echo(f"internal error: {exc}", err=True)
        return 2
    except (K3CountError, OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
