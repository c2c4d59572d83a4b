"""Command-line frontend.

Inputs are either a path to a quandle table file or a family spec, e.g.::

    quandles check "alexander orders=3,3 t=-1"
    quandles check alexander 3 t=-1
    quandles homology --mode rack --degree 2 dihedral n=3
    quandles verify --suite homotopy alexander orders=5 t=2
    quandles covering --export-dir outdir alexander orders=3,3 t=-1
    quandles census --jobs 4

Family grammar: a family name followed by key=value settings (bare values
are matched positionally).  Families: alexander (orders, t — t is a scalar
or a matrix written rows-semicolon, entries-comma, e.g. t=0,1;1,1),
dihedral (n), trivial (n), symplectic (g, q), spherical (n, q),
core (group), coxeter (type), covering (orders, t).  `grid:<key>` names a
built-in catalogue entry.

Exit codes: 0 all checks passed, 1 some check failed, 2 bad input or an
unmet precondition.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from . import __version__, families
from .adjoint import (
    BAR_GROUP_CAP,
    IdentityFailed,
    NotConnected,
    action_kernel,
    central_power_check,
    clauwens_group,
    eisermann_h2,
    group_h2_bar,
    verify_homotopy_2,
    verify_homotopy_3,
)
from .core import AxiomViolation, FiniteQuandle, load_table
from .coverings import covering_properties, export_covering, universal_covering_alexander
from .families import AlexanderModuleSpec
from .fields import FiniteField
from .grid import grid_by_key, standard_grid
from .groups import GroupTable, named_group, symmetric_group, dihedral_group
from .homology import QUANDLE, RACK, SizeCap, adjoint_abelianization, homology, quandle_h2
from .intlin import AbelianGroupInvariants
from .report import ReportDocument


class CLIError(ValueError):
    """Bad input or unmet precondition; maps to exit code 2."""


# ---------------------------------------------------------------------------
# input parsing


@dataclass
class ParsedInput:
    description: str
    build: Callable[[], FiniteQuandle]
    alexander_spec: Optional[AlexanderModuleSpec] = None
    coxeter_kind: Optional[str] = None
    group: Optional[GroupTable] = None


_FAMILIES = {
    "alexander": ("orders", "t"),
    "covering": ("orders", "t"),
    "dihedral": ("n",),
    "trivial": ("n",),
    "symplectic": ("g", "q"),
    "spherical": ("n", "q"),
    "core": ("group",),
    "coxeter": ("type",),
}


def _settings(tokens, names) -> dict:
    """key=value tokens plus positional bare tokens, matched to names."""
    out = {}
    position = 0
    for tok in tokens:
        if "=" in tok:
            key, _, value = tok.partition("=")
            key = key.strip().lower()
            if key not in names:
                raise CLIError(f"unknown setting {key!r} (expected {', '.join(names)})")
            if key in out:
                raise CLIError(f"setting {key!r} given twice")
            out[key] = value.strip()
        else:
            while position < len(names) and names[position] in out:
                position += 1
            if position >= len(names):
                raise CLIError(f"unexpected value {tok!r}")
            out[names[position]] = tok.strip()
            position += 1
    missing = [n for n in names if n not in out]
    if missing:
        raise CLIError(f"missing setting(s): {', '.join(missing)}")
    return out


def _parse_int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CLIError(f"{what} must be an integer, got {value!r}") from None


def _parse_alexander(settings) -> AlexanderModuleSpec:
    try:
        orders = tuple(int(v) for v in settings["orders"].split(",") if v != "")
    except ValueError:
        raise CLIError(f"bad orders {settings['orders']!r}") from None
    t = settings["t"]
    try:
        if ";" in t or "," in t:
            matrix = [[int(v) for v in row.split(",")] for row in t.split(";")]
            return AlexanderModuleSpec(orders, matrix)
        return AlexanderModuleSpec.scalar(orders, int(t))
    except CLIError:
        raise
    except ValueError as exc:
        raise CLIError(f"bad module spec: {exc}") from None


def parse_input(tokens) -> ParsedInput:
    """Turn CLI input tokens into a quandle recipe."""
    if not tokens:
        raise CLIError("empty input")
    tokens = [t for piece in tokens for t in piece.split()]
    head = tokens[0].lower()

    if head.startswith("grid:"):
        key = tokens[0][len("grid:") :]
        entry = grid_by_key().get(key)
        if entry is None:
            raise CLIError(f"no grid entry {key!r}")
        return ParsedInput(
            description=f"grid:{key}",
            build=entry.build,
            alexander_spec=entry.alexander_spec,
        )

    if head in _FAMILIES:
        settings = _settings(tokens[1:], _FAMILIES[head])
        if head in ("alexander", "covering"):
            spec = _parse_alexander(settings)
            if head == "alexander":
                return ParsedInput(
                    description=spec.label(),
                    build=lambda: families.alexander(spec),
                    alexander_spec=spec,
                )
            if not spec.is_connected():
                raise CLIError("covering needs a connected module spec")
            return ParsedInput(
                description="covering of " + spec.label(),
                build=lambda: universal_covering_alexander(spec).total,
                alexander_spec=spec,
            )
        if head in ("dihedral", "trivial"):
            n = _parse_int(settings["n"], "n")
            if n < 1:
                raise CLIError("n must be >= 1")
            builder = families.dihedral if head == "dihedral" else families.trivial
            return ParsedInput(description=f"{head} n={n}", build=lambda: builder(n))
        if head == "symplectic":
            g = _parse_int(settings["g"], "g")
            q = _parse_int(settings["q"], "q")
            if g < 1:
                raise CLIError("g must be >= 1")
            try:
                field = FiniteField.of(q)
            except ValueError as exc:
                raise CLIError(str(exc)) from None
            return ParsedInput(
                description=f"symplectic g={g} q={q}",
                build=lambda: families.symplectic(g, field),
            )
        if head == "spherical":
            n = _parse_int(settings["n"], "n")
            q = _parse_int(settings["q"], "q")
            if n < 1:
                raise CLIError("n must be >= 1")
            try:
                field = FiniteField.of(q)
                families_check = field.p != 2
            except ValueError as exc:
                raise CLIError(str(exc)) from None
            if not families_check:
                raise CLIError("spherical needs odd characteristic")
            return ParsedInput(
                description=f"spherical n={n} q={q}",
                build=lambda: families.spherical(n, field),
            )
        if head == "core":
            try:
                group = named_group(settings["group"])
            except ValueError as exc:
                raise CLIError(str(exc)) from None
            return ParsedInput(
                description=f"core group={settings['group']}",
                build=lambda: families.core(group),
                group=group,
            )
        if head == "coxeter":
            kind = settings["type"]
            try:
                builder = families.coxeter_reflection_quandle
                builder(kind)  # validate the label eagerly
            except ValueError as exc:
                raise CLIError(str(exc)) from None
            return ParsedInput(
                description=f"coxeter type={kind}",
                build=lambda: builder(kind),
                coxeter_kind=kind,
            )

    if len(tokens) == 1 and (os.path.exists(tokens[0]) or os.sep in tokens[0]):
        path = tokens[0]
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CLIError(f"cannot read {path}: {exc}") from None
        return ParsedInput(description=path, build=lambda: load_table(text))

    raise CLIError(
        f"cannot interpret input {' '.join(tokens)!r}: not a family spec, "
        "grid key, or readable file"
    )


def _coxeter_group(kind: str) -> GroupTable:
    """The reflection group a Coxeter label names, as a multiplication table."""
    kind = kind.strip().upper()
    try:
        if kind.startswith("A") and kind[1:].isdigit():
            return symmetric_group(int(kind[1:]) + 1)
        if kind == "B2":
            return dihedral_group(4)
        if kind == "G2":
            return dihedral_group(6)
        if kind.startswith("I2(") and kind.endswith(")"):
            return dihedral_group(int(kind[3:-1]))
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    raise CLIError(f"no group table for Coxeter label {kind!r}")


# ---------------------------------------------------------------------------
# shared report pieces


def _profile_entry(doc: ReportDocument, q: FiniteQuandle, seconds: float):
    p = q.profile()
    doc.add(
        "profile",
        "summary invariants of the quandle",
        "reported",
        {
            "order": p.order,
            "type": p.type,
            "connected": p.connected,
            "orbits": len(p.orbits),
            "inn_order": p.inn_order,
        },
        seconds=seconds,
    )


def _abelianization_entry(doc: ReportDocument, q: FiniteQuandle):
    start = time.perf_counter()
    ab = adjoint_abelianization(q)
    orbit_count = len(q.orbits())
    ok = ab == AbelianGroupInvariants(orbit_count, ())
    doc.add(
        "abelianization",
        "abelianized adjoint group is free of rank the number of orbits",
        "pass" if ok else "fail",
        {"group": str(ab), "orbits": orbit_count},
        seconds=time.perf_counter() - start,
    )


def _build_quandle(parsed: ParsedInput) -> FiniteQuandle:
    try:
        return parsed.build()
    except AxiomViolation:
        raise
    except (ValueError, OSError) as exc:
        raise CLIError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> tuple[ReportDocument, int]:
    parsed = parse_input(args.input)
    doc = ReportDocument(parsed.description, __version__)
    start = time.perf_counter()
    try:
        q = _build_quandle(parsed)
    except AxiomViolation as exc:
        doc.add(
            "axioms",
            "the table satisfies the three quandle axioms",
            "fail",
            {"axiom": exc.axiom, "witness": exc.witness},
            seconds=time.perf_counter() - start,
        )
        return doc, doc.exit_code()
    doc.add(
        "axioms",
        "the table satisfies the three quandle axioms",
        "pass",
        {"order": q.order},
        seconds=time.perf_counter() - start,
    )
    start = time.perf_counter()
    _profile_entry(doc, q, time.perf_counter() - start)
    return doc, doc.exit_code()


def cmd_invariants(args) -> tuple[ReportDocument, int]:
    parsed = parse_input(args.input)
    doc = ReportDocument(parsed.description, __version__)
    start = time.perf_counter()
    q = _build_quandle(parsed)
    _profile_entry(doc, q, time.perf_counter() - start)
    _abelianization_entry(doc, q)
    spec = parsed.alexander_spec
    if spec is not None:
        doc.add(
            "module",
            "module data of the linear construction",
            "reported",
            {
                "orders": list(spec.torsion_orders),
                "t_order": spec.t_order(),
                "connected": spec.is_connected(),
            },
        )
    return doc, doc.exit_code()


def cmd_homology(args) -> tuple[ReportDocument, int]:
    parsed = parse_input(args.input)
    doc = ReportDocument(parsed.description, __version__)
    q = _build_quandle(parsed)
    mode = QUANDLE if args.mode == "quandle" else RACK
    start = time.perf_counter()
    try:
        group = homology(q, args.degree, mode, cap=args.cap_cells)
    except SizeCap as exc:
        doc.add(
            "homology",
            f"degree-{args.degree} {args.mode} homology of the table",
            "skipped",
            {"needed_cells": exc.needed, "cap": exc.cap},
            seconds=time.perf_counter() - start,
        )
        return doc, doc.exit_code()
    doc.add(
        "homology",
        f"degree-{args.degree} {args.mode} homology of the table",
        "reported",
        {"group": str(group), "degree": args.degree, "mode": args.mode},
        seconds=time.perf_counter() - start,
    )
    return doc, doc.exit_code()


def _require_connected_alexander(parsed: ParsedInput) -> AlexanderModuleSpec:
    spec = parsed.alexander_spec
    if spec is None:
        raise CLIError("this command needs a linear-family input (alexander ...)")
    if not spec.is_connected():
        raise CLIError(f"{spec.label()} is not connected (1 - T is not onto)")
    return spec


def cmd_adjoint(args) -> tuple[ReportDocument, int]:
    parsed = parse_input(args.input)
    spec = _require_connected_alexander(parsed)
    doc = ReportDocument(parsed.description, __version__)

    start = time.perf_counter()
    try:
        model = clauwens_group(spec)
        doc.add(
            "model",
            "adjoint-group model satisfies the defining relations and acts correctly",
            "pass",
            {"coker": str(model.coker_invariants), "generators": spec.size},
            seconds=time.perf_counter() - start,
        )
    except AssertionError as exc:
        doc.add(
            "model",
            "adjoint-group model satisfies the defining relations and acts correctly",
            "fail",
            {"detail": str(exc)},
            seconds=time.perf_counter() - start,
        )
        return doc, doc.exit_code()

    start = time.perf_counter()
    t, coker = action_kernel(spec)
    doc.add(
        "kernel",
        "kernel of the action on the quandle is (type * Z) x coker",
        "pass",
        {"type": t, "coker": str(coker)},
        seconds=time.perf_counter() - start,
    )

    start = time.perf_counter()
    central = central_power_check(spec)
    doc.add(
        "central-power",
        "the type-th power of every generator is one central element",
        "pass" if central else "fail",
        {"type": t},
        seconds=time.perf_counter() - start,
    )

    start = time.perf_counter()
    h2 = eisermann_h2(spec)
    doc.add(
        "h2",
        "second homology read off the base-point stabilizer of the model",
        "reported",
        {"group": str(h2)},
        seconds=time.perf_counter() - start,
    )
    return doc, doc.exit_code()


def _verify_clauwens(doc: ReportDocument, spec: AlexanderModuleSpec):
    start = time.perf_counter()
    try:
        model = clauwens_group(spec)
        status, data = "pass", {"coker": str(model.coker_invariants)}
    except AssertionError as exc:
        status, data = "fail", {"detail": str(exc)}
    doc.add(
        "relations",
        "generators satisfy e(x <| y) = e(y)^-1 e(x) e(y) and act as the columns",
        status,
        data,
        seconds=time.perf_counter() - start,
    )
    start = time.perf_counter()
    try:
        t, coker = action_kernel(spec)
        status, data = "pass", {"type": t, "coker": str(coker)}
    except AssertionError as exc:
        status, data = "fail", {"detail": str(exc)}
    doc.add(
        "kernel-structure",
        "action kernel is exactly (type * Z) x coker",
        status,
        data,
        seconds=time.perf_counter() - start,
    )
    start = time.perf_counter()
    ok = central_power_check(spec)
    doc.add(
        "central-power",
        "the type-th power of every generator is one central element",
        "pass" if ok else "fail",
        {},
        seconds=time.perf_counter() - start,
    )


def _verify_homotopy(doc: ReportDocument, spec: AlexanderModuleSpec):
    start = time.perf_counter()
    try:
        r2 = verify_homotopy_2(spec)
        status, data = "pass", {"pairs": r2.tuples_checked, "type": r2.type}
    except IdentityFailed as exc:
        status, data = "fail", {"at": str(exc.tuple), "detail": str(exc)}
    doc.add(
        "degree-2",
        "h1 after the rack boundary minus the group boundary after h2 "
        "equals type times the 2-cycle, on every pair",
        status,
        data,
        seconds=time.perf_counter() - start,
    )
    start = time.perf_counter()
    try:
        r3 = verify_homotopy_3(spec)
        status, data = "pass", {"triples": r3.tuples_checked, "type": r3.type}
    except IdentityFailed as exc:
        status, data = "fail", {"at": str(exc.tuple), "detail": str(exc)}
    doc.add(
        "degree-3",
        "the degree-3 residual is independent of the first argument, matches "
        "its closed form, and the 3-cycle vanishes on repeated arguments",
        status,
        data,
        seconds=time.perf_counter() - start,
    )


def _verify_eisermann(doc: ReportDocument, spec: AlexanderModuleSpec, cap):
    start = time.perf_counter()
    model = clauwens_group(spec)
    coker = model.coker_invariants
    stab = eisermann_h2(spec)
    try:
        chain = quandle_h2(families.alexander(spec), cap=cap)
    except SizeCap as exc:
        doc.add(
            "triple-oracle",
            "chain-level H2, stabilizer H2 and the presentation cokernel agree",
            "skipped",
            {"needed_cells": exc.needed, "cap": exc.cap},
            seconds=time.perf_counter() - start,
        )
        return
    ok = chain == stab == coker
    doc.add(
        "triple-oracle",
        "chain-level H2, stabilizer H2 and the presentation cokernel agree",
        "pass" if ok else "fail",
        {"chain": str(chain), "stabilizer": str(stab), "cokernel": str(coker)},
        seconds=time.perf_counter() - start,
    )


def _verify_covering(doc: ReportDocument, spec: AlexanderModuleSpec, cap):
    start = time.perf_counter()
    try:
        inst = universal_covering_alexander(spec)
    except (AssertionError, ValueError) as exc:
        doc.add(
            "construction",
            "universal covering assembles and projects as a covering map",
            "fail",
            {"detail": str(exc)},
            seconds=time.perf_counter() - start,
        )
        return
    doc.add(
        "construction",
        "universal covering assembles and projects as a covering map",
        "pass",
        {
            "total_order": inst.total.order,
            "fiber": inst.fiber_size,
            "base_order": inst.base.order,
        },
        seconds=time.perf_counter() - start,
    )
    start = time.perf_counter()
    entries = covering_properties(inst, cap=cap)
    elapsed = time.perf_counter() - start
    for entry in entries:
        doc.add(entry.name, entry.claim, entry.status, entry.data)
    if doc.entries:
        doc.entries[-1].seconds = elapsed


def _verify_coxeter(doc: ReportDocument, group: GroupTable, cap):
    limit = BAR_GROUP_CAP if cap is None else cap
    if group.order > limit:
        doc.add(
            "schur-2-power",
            "bar-complex H2 of the reflection group has only 2-power torsion",
            "skipped",
            {"order": group.order, "cap": limit},
        )
        return
    start = time.perf_counter()
    h2 = group_h2_bar(group, cap=limit)
    ok = h2.free_rank == 0 and all(
        d & (d - 1) == 0 for d in h2.torsion
    )
    doc.add(
        "schur-2-power",
        "bar-complex H2 of the reflection group has only 2-power torsion",
        "pass" if ok else "fail",
        {"group": group.name, "h2": str(h2), "order": group.order},
        seconds=time.perf_counter() - start,
    )


def cmd_verify(args) -> tuple[ReportDocument, int]:
    suite = args.suite
    if suite == "coxeter":
        tokens = [t for piece in args.input for t in piece.split()]
        if tokens and tokens[0].lower() == "coxeter":
            parsed = parse_input(args.input)
            group = _coxeter_group(parsed.coxeter_kind)
            description = parsed.description
        else:
            name = " ".join(tokens)
            try:
                group = named_group(name)
            except ValueError:
                try:
                    group = _coxeter_group(name)
                except CLIError:
                    raise CLIError(
                        f"coxeter suite needs a group name or Coxeter label, got {name!r}"
                    ) from None
            description = f"group {name}"
        doc = ReportDocument(f"verify coxeter: {description}", __version__)
        _verify_coxeter(doc, group, args.cap_group)
        return doc, doc.exit_code()

    parsed = parse_input(args.input)
    spec = _require_connected_alexander(parsed)
    doc = ReportDocument(f"verify {suite}: {parsed.description}", __version__)
    if suite == "clauwens":
        _verify_clauwens(doc, spec)
    elif suite == "homotopy":
        _verify_homotopy(doc, spec)
    elif suite == "eisermann":
        _verify_eisermann(doc, spec, args.cap_cells)
    elif suite == "covering":
        _verify_covering(doc, spec, args.cap_cells)
    else:  # pragma: no cover - argparse restricts choices
        raise CLIError(f"unknown suite {suite!r}")
    return doc, doc.exit_code()


def cmd_covering(args) -> tuple[ReportDocument, int]:
    parsed = parse_input(args.input)
    spec = _require_connected_alexander(parsed)
    doc = ReportDocument(f"covering: {parsed.description}", __version__)
    _verify_covering(doc, spec, args.cap_cells)
    if args.export_dir and not doc.failed:
        inst = universal_covering_alexander(spec)
        os.makedirs(args.export_dir, exist_ok=True)
        written = export_covering(inst, args.export_dir)
        doc.add(
            "export",
            "base table, total table and projection map written to disk",
            "reported",
            {"files": sorted(os.path.basename(p) for p in written)},
        )
    return doc, doc.exit_code()


# ---------------------------------------------------------------------------
# census


def _census_row(key: str, cap: Optional[int]) -> tuple[str, str, dict, float]:
    """Worker: rebuild one grid entry from its key and measure it."""
    entry = grid_by_key()[key]
    start = time.perf_counter()
    data: dict = {"kind": entry.kind}
    status = "pass"
    try:
        q = entry.build()
        p = q.profile()
        data.update(
            order=p.order,
            type=p.type,
            connected=p.connected,
            orbits=len(p.orbits),
            inn_order=p.inn_order,
        )
        ab = adjoint_abelianization(q)
        data["ab"] = str(ab)
        if ab != AbelianGroupInvariants(len(p.orbits), ()):
            status = "fail"
            data["detail"] = "abelianization is not free of orbit rank"
        spec = entry.alexander_spec
        if spec is not None and spec.is_connected():
            t, coker = action_kernel(spec)
            data["kernel_type"] = t
            data["kernel_coker"] = str(coker)
            if spec.size <= 16:
                stab = eisermann_h2(spec)
                chain = quandle_h2(q, cap=cap)
                data["h2"] = str(chain)
                if not (chain == stab == coker):
                    status = "fail"
                    data["detail"] = (
                        f"H2 oracles disagree: chain {chain}, "
                        f"stabilizer {stab}, cokernel {coker}"
                    )
    except SizeCap as exc:
        status = "skipped"
        data.update(needed_cells=exc.needed, cap=exc.cap)
    except (AssertionError, ValueError) as exc:
        status = "fail"
        data["detail"] = str(exc)
    return key, status, data, time.perf_counter() - start


def cmd_census(args) -> tuple[ReportDocument, int]:
    if args.dir:
        doc = ReportDocument(f"census: directory {args.dir}", __version__)
        try:
            names = sorted(
                f for f in os.listdir(args.dir) if f.endswith(".quandle")
            )
        except OSError as exc:
            raise CLIError(f"cannot list {args.dir}: {exc}") from None
        if not names:
            raise CLIError(f"no .quandle files in {args.dir}")
        for name in names:
            start = time.perf_counter()
            path = os.path.join(args.dir, name)
            try:
                with open(path) as fh:
                    q = load_table(fh.read())
            except AxiomViolation as exc:
                doc.add(
                    name,
                    "the file holds a valid quandle table",
                    "fail",
                    {"axiom": exc.axiom, "witness": exc.witness},
                    seconds=time.perf_counter() - start,
                )
                continue
            except (OSError, ValueError) as exc:
                raise CLIError(f"{path}: {exc}") from None
            p = q.profile()
            doc.add(
                name,
                "the file holds a valid quandle table",
                "pass",
                {
                    "order": p.order,
                    "type": p.type,
                    "connected": p.connected,
                    "orbits": len(p.orbits),
                    "inn_order": p.inn_order,
                },
                seconds=time.perf_counter() - start,
            )
        return doc, doc.exit_code()

    keys = [e.key for e in standard_grid()]
    doc = ReportDocument(f"census: built-in grid ({len(keys)} entries)", __version__)
    results = {}
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for key, status, data, seconds in pool.map(
                _census_row, keys, [args.cap_cells] * len(keys)
            ):
                results[key] = (status, data, seconds)
    else:
        for key in keys:
            key, status, data, seconds = _census_row(key, args.cap_cells)
            results[key] = (status, data, seconds)
    for key in keys:
        status, data, seconds = results[key]
        doc.add(
            key,
            "entry builds, passes the axioms, and matches its invariant contracts",
            status,
            data,
            seconds=seconds,
        )
    return doc, doc.exit_code()


# ---------------------------------------------------------------------------
# argument plumbing


def _add_input(p):
    p.add_argument(
        "input",
        nargs="+",
        help="family spec (e.g. alexander orders=3,3 t=-1), grid:<key>, or a table file",
    )


def _add_common(p):
    p.add_argument("--timings", action="store_true", help="include per-check seconds")
    p.add_argument("--out", help="write the report to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="exact computations with finite quandles",
    )
    parser.add_argument("--version", action="version", version=f"quandles {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate the axioms and profile the input")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="profile plus abelianization and module data")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("homology", help="rack/quandle homology of the input")
    _add_input(p)
    p.add_argument("--mode", choices=["rack", "quandle"], default="quandle")
    p.add_argument("--degree", type=int, choices=[2, 3], default=2)
    p.add_argument("--cap-cells", type=int, default=None, help="cell-count cap")
    _add_common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("adjoint", help="adjoint-group model of a linear quandle")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["clauwens", "homotopy", "eisermann", "covering", "coxeter"],
    )
    _add_input(p)
    p.add_argument("--cap-cells", type=int, default=None, help="cell-count cap")
    p.add_argument("--cap-group", type=int, default=None, help="bar-complex group cap")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("covering", help="universal covering of a linear quandle")
    _add_input(p)
    p.add_argument("--cap-cells", type=int, default=None, help="cell-count cap")
    p.add_argument(
        "--export-dir", help="write base/total tables and the projection map here"
    )
    _add_common(p)
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("census", help="survey the built-in grid or a directory")
    p.add_argument("--dir", help="directory of .quandle files (default: built-in grid)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--cap-cells", type=int, default=None, help="cell-count cap")
    _add_common(p)
    p.set_defaults(func=cmd_census)

    return parser


def _emit(doc: ReportDocument, args) -> None:
    text = doc.render(timings=getattr(args, "timings", False))
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotConnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(doc, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
