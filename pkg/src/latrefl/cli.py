"""Command-line front end.

Verbs: lat-info, roots, vinberg, classify-isotropic, cubic4 (setup /
special / planes / arrangement), strata, cohom secant-table, reproduce.
All JSON output carries a top-level ``schema`` version.  Exit codes:
0 success, 1 check failure, 2 usage error, 3 enumeration budget exhausted.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import cohomring, cubic4, dynkin, enumlib, rootsys, strata, vinberg
from .errors import ClassificationError, EnumerationBudgetError, LatticeError
from .lattice import (GramLattice, LatticeVector, discriminant_group, is_even,
                      parse_spec, signature)

SCHEMA = 1


def _emit(data: dict):
    data = {"schema": SCHEMA, **data}
    click.echo(json.dumps(data, indent=2, sort_keys=True))


def _fail(kind: str, message: str, code: int = 1):
    click.echo(json.dumps({"schema": SCHEMA, "error": kind,
                           "message": message}, sort_keys=True), err=True)
    sys.exit(code)


def _guard(fn):
    """Map domain errors to the documented exit codes."""
    import functools

    @functools.wraps(fn)
    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EnumerationBudgetError as exc:
            _fail("budget-exhausted", str(exc), code=3)
        except (LatticeError, ClassificationError) as exc:
            _fail(type(exc).__name__, str(exc), code=1)
        except click.ClickException:
            raise
        except ValueError as exc:
            _fail("invalid-argument", str(exc), code=2)
    return wrapped


def _parse_vector(lat: GramLattice, text: str) -> LatticeVector:
    try:
        coords = [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"cannot parse vector {text!r}")
    if len(coords) != lat.rank:
        raise click.UsageError(
            f"vector has {len(coords)} coordinates, lattice rank is {lat.rank}")
    return LatticeVector(lat, coords)


@click.group()
def main():
    """Exact lattices, root systems and hyperbolic reflection groups."""


@main.command("lat-info")
@click.argument("spec")
@_guard
def lat_info(spec):
    """Invariants of the lattice given by SPEC (e.g. '2E8+A2+U')."""
    lat = parse_spec(spec)
    p, q, z = signature(lat)
    disc = discriminant_group(lat) if lat.det() != 0 else None
    _emit({
        "spec": spec,
        "rank": lat.rank,
        "signature": [p, q, z],
        "det": str(lat.det()),
        "even": is_even(lat),
        "gram": lat.to_json(),
        "discriminant": None if disc is None else {
            "invariant_factors": list(disc.invariant_factors),
            "order": disc.order,
            "exponent": disc.exponent,
        },
    })


@main.command("roots")
@click.argument("spec")
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]),
              default="json")
@click.option("--budget", type=int, default=enumlib.DEFAULT_BUDGET)
@_guard
def roots_cmd(spec, fmt, budget):
    """Crystallographic roots and root-system type of a definite lattice."""
    lat = parse_spec(spec)
    roots = enumlib.roots_of(lat, budget=budget)
    rtype = rootsys.type_of_roots(roots)
    simple = rootsys.simple_system(roots)
    diag = dynkin.build_diagram(simple)
    if fmt == "dot":
        click.echo(dynkin.to_dot(diag), nl=False)
        return
    if fmt == "text":
        census = {}
        for r in roots:
            census[str(r.norm)] = census.get(str(r.norm), 0) + 1
        click.echo(f"{spec}: {rtype.name}, {len(roots)} roots, norms {census}")
        return
    _emit({
        "spec": spec,
        "type": rtype.name,
        "count": len(roots),
        "roots": [[str(c) for c in r.vector.coords] for r in roots],
        "simple_system": [[str(c) for c in r.vector.coords] for r in simple],
        "diagram": dynkin.to_json(diag),
    })


@main.command("vinberg")
@click.argument("spec")
@click.option("--v0", required=True, help="controlling vector, comma-separated")
@click.option("--max-weight", default="1200", help="weight cutoff (rational)")
@click.option("--budget", type=int, default=vinberg.RUN_BUDGET)
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]),
              default="json")
@_guard
def vinberg_cmd(spec, v0, max_weight, budget, fmt):
    """Fundamental roots of the hyperbolic reflection group of SPEC."""
    lat = parse_spec(spec)
    vec = _parse_vector(lat, v0)
    run = vinberg.run_vinberg(lat, vec, max_weight=Fraction(max_weight),
                              budget=budget)
    if fmt == "dot":
        click.echo(dynkin.to_dot(run.diagram()), nl=False)
        return
    _emit({"spec": spec, **run.to_json()})
    if run.status != "finite_volume":
        sys.exit(1)


@main.command("classify-isotropic")
@click.argument("label", type=click.Choice(cubic4.PLANE_LABELS))
@click.option("--budget", type=int, default=vinberg.RUN_BUDGET)
@_guard
def classify_isotropic(label, budget):
    """Classify the isotropic plane attached to a pure-affine subdiagram."""
    setup = cubic4.build_setup()
    run = vinberg.run_vinberg(setup.lam1, setup.default_v0(), budget=budget)
    k = cubic4.isotropic_plane_from_affine(setup, label, run=run)
    full, quot = cubic4.classify_isotropic_plane(setup, k)
    _emit({
        "label": label,
        "plane_basis": [[str(c) for c in v.coords] for v in k.basis],
        "full_type": full.name,
        "stripped_type": full.stripped().name,
        "quotient_gram": quot.lattice.to_json(),
    })


@main.group("cubic4")
def cubic4_group():
    """Constructions on the cubic-fourfold lattices."""


@cubic4_group.command("setup")
@_guard
def cubic4_setup():
    """Build and verify the ambient lattices; print a summary."""
    s = cubic4.build_setup()
    _emit({
        "lambda": {"rank": s.lam.rank, "det": str(s.lam.det()),
                   "signature": list(signature(s.lam))},
        "lambda_o": {"rank": s.lam_o.rank, "det": str(s.lam_o.det()),
                     "signature": list(signature(s.lam_o)),
                     "even": is_even(s.lam_o)},
        "lambda_1": {"rank": s.lam1.rank, "det": str(s.lam1.det()),
                     "signature": list(signature(s.lam1))},
        "eta_norm": str(s.eta.norm()),
        "h_vectors": {f"h{i}": [str(c) for c in s.h_special(i).coords]
                      for i in (1, 2, 3)},
    })


@cubic4_group.command("special")
@click.option("--check", "vector", required=True,
              help="vector in eta-perp coordinates, comma-separated")
@_guard
def cubic4_special(vector):
    """Test whether a vector of eta-perp is special."""
    s = cubic4.build_setup()
    v = _parse_vector(s.lam_o, vector)
    special = cubic4.is_special(s, v)
    out = {"vector": [str(c) for c in v.coords],
           "norm": str(v.norm()), "special": special}
    if special:
        out["short_root"] = [str(c) for c in
                             cubic4.short_root(s, v).vector.coords]
    _emit(out)


@cubic4_group.command("planes")
@click.option("--classify", is_flag=True, default=True)
@click.option("--label", type=click.Choice(cubic4.PLANE_LABELS), default=None)
@click.option("--budget", type=int, default=vinberg.RUN_BUDGET)
@_guard
def cubic4_planes(classify, label, budget):
    """Classify the isotropic planes of all six (or one) affine types."""
    s = cubic4.build_setup()
    run = vinberg.run_vinberg(s.lam1, s.default_v0(), budget=budget)
    labels = [label] if label else list(cubic4.PLANE_LABELS)
    out = {}
    for lab in labels:
        k = cubic4.isotropic_plane_from_affine(s, lab, run=run)
        full, _quot = cubic4.classify_isotropic_plane(s, k)
        out[lab] = {"full_type": full.name,
                    "stripped_type": full.stripped().name}
    _emit({"planes": out})


@cubic4_group.command("arrangement")
@click.option("--label", type=click.Choice(cubic4.PLANE_LABELS), default=None)
@click.option("--budget", type=int, default=vinberg.RUN_BUDGET)
@_guard
def cubic4_arrangement(label, budget):
    """Which strata carry special vectors in the plane's perp."""
    s = cubic4.build_setup()
    run = vinberg.run_vinberg(s.lam1, s.default_v0(), budget=budget)
    labels = [label] if label else list(cubic4.PLANE_LABELS)
    _emit({"meets_arrangement": {
        lab: cubic4.stratum_meets_arrangement(s, lab, run=run, budget=budget)
        for lab in labels}})


@main.command("strata")
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]),
              default="json")
@_guard
def strata_cmd(fmt):
    """The eleven boundary strata and their printed incidences."""
    scheme = strata.build_strata()
    if fmt == "dot":
        click.echo(strata.emit(scheme, "dot"), nl=False)
        return
    _emit({"strata": strata.to_json(scheme),
           "dim_formula": strata.dim_formula_check()})


@main.group("cohom")
def cohom_group():
    """Truncated intersection rings of the secant-variety geometry."""


@cohom_group.command("secant-table")
@_guard
def secant_table_cmd():
    """Print the verified intersection-number table."""
    _emit(cohomring.secant_table())


@main.command("reproduce")
@click.option("--seed", type=int, default=2026)
@click.option("--budget", type=int, default=enumlib.DEFAULT_BUDGET)
@click.option("--translates", type=int, default=200,
              help="number of seeded random isometry translates to test")
@_guard
def reproduce(seed, budget, translates):
    """Re-derive the checked claims end to end; nonzero exit on failure."""
    from .reproduce import run_all
    report = run_all(seed=seed, budget=budget, translates=translates)
    _emit(report)
    if not report["all_passed"]:
        sys.exit(1)


if __name__ == "__main__":
    main()
