"""A fixed, deterministic catalogue of small quandles.

The grid is the built-in test bed: a list of named constructions spanning
every family in the package, with orders from 1 to 64.  Entry keys are
stable identifiers (used by the census command and by tests), and each
entry freezes the expected order of the quandle it builds so that a
construction drifting in size is caught immediately.

Entries are pure recipes: building is deferred until `build()` is called,
and rebuilding from the key alone is always possible via `grid_by_key`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import families
from .core import FiniteQuandle
from .coverings import universal_covering_alexander
from .families import AlexanderModuleSpec
from .fields import FiniteField
from .groups import named_group


@dataclass
class GridEntry:
    key: str
    kind: str
    order: int
    _build: Callable[[], FiniteQuandle]
    alexander_spec: Optional[AlexanderModuleSpec] = None
    notes: dict = field(default_factory=dict)

    def build(self) -> FiniteQuandle:
        q = self._build()
        if q.order != self.order:
            raise AssertionError(
                f"grid entry {self.key!r} built order {q.order}, expected {self.order}"
            )
        return q


def _alex(key_tail: str, orders, t_matrix_or_scalar, order: int) -> GridEntry:
    if isinstance(t_matrix_or_scalar, int):
        spec = AlexanderModuleSpec.scalar(orders, t_matrix_or_scalar)
    else:
        spec = AlexanderModuleSpec(orders, t_matrix_or_scalar)
    return GridEntry(
        key=f"alexander:{key_tail}",
        kind="alexander",
        order=order,
        _build=lambda: families.alexander(spec),
        alexander_spec=spec,
    )


def _cover(key_tail: str, orders, t_matrix_or_scalar, order: int) -> GridEntry:
    if isinstance(t_matrix_or_scalar, int):
        spec = AlexanderModuleSpec.scalar(orders, t_matrix_or_scalar)
    else:
        spec = AlexanderModuleSpec(orders, t_matrix_or_scalar)
    return GridEntry(
        key=f"covering:{key_tail}",
        kind="covering",
        order=order,
        _build=lambda: universal_covering_alexander(spec).total,
        notes={"base": spec.label()},
    )


def _simple(key: str, kind: str, order: int, build: Callable[[], FiniteQuandle]) -> GridEntry:
    return GridEntry(key=key, kind=kind, order=order, _build=build)


def _symplectic(g: int, q: int, order: int) -> GridEntry:
    return _simple(
        f"symplectic:g{g}:q{q}",
        "symplectic",
        order,
        lambda: families.symplectic(g, FiniteField.of(q)),
    )


def _spherical(n: int, q: int, order: int) -> GridEntry:
    return _simple(
        f"spherical:n{n}:q{q}",
        "spherical",
        order,
        lambda: families.spherical(n, FiniteField.of(q)),
    )


def _core(group_name: str, order: int) -> GridEntry:
    return _simple(
        f"core:{group_name}",
        "core",
        order,
        lambda: families.core(named_group(group_name)),
    )


def _coxeter(kind: str, order: int) -> GridEntry:
    return _simple(
        f"coxeter:{kind}",
        "coxeter",
        order,
        lambda: families.coxeter_reflection_quandle(kind),
    )


def standard_grid() -> list[GridEntry]:
    """The built-in catalogue, in a fixed order."""
    entries = [
        # connected linear quandles of order <= 16 (cyclic module, scalar T)
        _alex("3:t-1", (3,), -1, 3),
        _alex("5:t2", (5,), 2, 5),
        _alex("5:t-1", (5,), -1, 5),
        _alex("7:t3", (7,), 3, 7),
        _alex("7:t-1", (7,), -1, 7),
        _alex("9:t2", (9,), 2, 9),
        _alex("9:t-1", (9,), -1, 9),
        _alex("11:t-1", (11,), -1, 11),
        _alex("13:t-1", (13,), -1, 13),
        _alex("15:t2", (15,), 2, 15),
        # connected linear quandles of order <= 16 (matrix T)
        _alex("2,2:fib", (2, 2), [[0, 1], [1, 1]], 4),
        _alex("2,2,2:frob", (2, 2, 2), [[0, 0, 1], [1, 0, 1], [0, 1, 0]], 8),
        _alex("3,3:t-1", (3, 3), -1, 9),
        _alex("3,3:rot", (3, 3), [[0, 1], [2, 0]], 9),
        # larger linear quandles
        _alex("17:t-1", (17,), -1, 17),
        _alex("25:t7", (25,), 7, 25),
        _alex("5,5:t-1", (5, 5), -1, 25),
        _alex("3,3,3:t-1", (3, 3, 3), -1, 27),
        # dihedral quandles (includes disconnected even cases)
        _simple("dihedral:1", "dihedral", 1, lambda: families.dihedral(1)),
        _simple("dihedral:2", "dihedral", 2, lambda: families.dihedral(2)),
        _simple("dihedral:3", "dihedral", 3, lambda: families.dihedral(3)),
        _simple("dihedral:4", "dihedral", 4, lambda: families.dihedral(4)),
        _simple("dihedral:6", "dihedral", 6, lambda: families.dihedral(6)),
        _simple("dihedral:8", "dihedral", 8, lambda: families.dihedral(8)),
        _simple("dihedral:10", "dihedral", 10, lambda: families.dihedral(10)),
        # trivial quandles
        _simple("trivial:1", "trivial", 1, lambda: families.trivial(1)),
        _simple("trivial:2", "trivial", 2, lambda: families.trivial(2)),
        _simple("trivial:4", "trivial", 4, lambda: families.trivial(4)),
        # transvection quandles on nonzero vectors of F_q^{2g}
        _symplectic(1, 2, 3),
        _symplectic(1, 3, 8),
        _symplectic(1, 4, 15),
        _symplectic(1, 5, 24),
        _symplectic(1, 7, 48),
        _symplectic(1, 8, 63),
        _symplectic(2, 2, 15),
        # reflection quandles on spheres over F_q
        _spherical(2, 3, 6),
        _spherical(2, 5, 30),
        _spherical(2, 7, 42),
        _spherical(3, 3, 24),
        # core quandles of small groups
        _core("cyclic:3", 3),
        _core("cyclic:4", 4),
        _core("cyclic:5", 5),
        _core("cyclic:7", 7),
        _core("klein4", 4),
        _core("s3", 6),
        _core("q8", 8),
        _core("dihedral:4", 8),
        # reflection quandles of finite Coxeter groups
        _coxeter("A2", 3),
        _coxeter("A3", 6),
        _coxeter("A4", 10),
        _coxeter("B2", 4),
        _coxeter("G2", 6),
        _coxeter("I2(5)", 5),
        _coxeter("I2(7)", 7),
        _coxeter("I2(8)", 8),
        # total spaces of universal coverings of linear quandles
        _cover("2,2:fib", (2, 2), [[0, 1], [1, 1]], 8),
        _cover("3,3:t-1", (3, 3), -1, 27),
    ]
    keys = [e.key for e in entries]
    if len(set(keys)) != len(keys):
        raise AssertionError("duplicate grid keys")
    return entries


def grid_by_key() -> dict[str, GridEntry]:
    return {e.key: e for e in standard_grid()}


def connected_alexander_specs(max_order: int = 16) -> list[AlexanderModuleSpec]:
    """Specs of all grid Alexander entries that are connected, up to max_order."""
    out = []
    for e in standard_grid():
        spec = e.alexander_spec
        if spec is not None and spec.size <= max_order and spec.is_connected():
            out.append(spec)
    return out


def homotopy_suite_specs() -> list[AlexanderModuleSpec]:
    """Connected linear quandles spanning several types, kept small enough
    that degree-3 chain computations stay fast."""
    return [
        AlexanderModuleSpec.scalar((3,), -1),          # type 2
        AlexanderModuleSpec((2, 2), [[0, 1], [1, 1]]),  # type 3
        AlexanderModuleSpec.scalar((5,), 2),           # type 4
        AlexanderModuleSpec.scalar((3, 3), -1),        # type 2, rank 2
        AlexanderModuleSpec.scalar((7,), 3),           # type 6
    ]
