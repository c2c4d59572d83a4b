"""Universal coverings of connected linear quandles.

Oracles: the covering axioms re-checked through the generic morphism
predicates, frozen sizes (total order = base order x presentation-cokernel
order), and transport of type/connectivity/homology along the projection.
"""

import pytest

from quandles import families
from quandles.adjoint import ClauwensGroup
from quandles.core import is_covering, is_homomorphism, load_table
from quandles.coverings import (
    base_point_independent,
    covering_properties,
    export_covering,
    universal_covering_alexander,
)
from quandles.families import AlexanderModuleSpec
from quandles.homology import quandle_h2


FIB = AlexanderModuleSpec((2, 2), [[0, 1], [1, 1]])  # order 4, type 3
NEG33 = AlexanderModuleSpec.scalar((3, 3), -1)  # order 9, type 2


class TestConstruction:
    def test_dihedral3_cover_is_itself(self):
        spec = AlexanderModuleSpec.scalar((3,), -1)
        inst = universal_covering_alexander(spec)
        assert inst.total.order == 3
        assert inst.fiber_size == 1

    def test_fiber_size_is_coker_order(self):
        for spec in (FIB, NEG33):
            inst = universal_covering_alexander(spec)
            model = ClauwensGroup(spec)
            assert inst.fiber_size == model.coker_order
            assert inst.total.order == spec.size * model.coker_order

    def test_projection_is_covering(self):
        inst = universal_covering_alexander(FIB)
        assert is_homomorphism(inst.projection, inst.total, inst.base)
        assert is_covering(inst.projection, inst.total, inst.base)

    def test_fibers_uniform(self):
        inst = universal_covering_alexander(NEG33)
        fibers = inst.fibers()
        assert len(fibers) == 9
        assert all(len(f) == 3 for f in fibers.values())

    def test_rejects_disconnected(self):
        spec = AlexanderModuleSpec.scalar((4,), -1)
        with pytest.raises(Exception):
            universal_covering_alexander(spec)


class TestProperties:
    def test_all_pass_for_neg33(self):
        inst = universal_covering_alexander(NEG33)
        entries = covering_properties(inst, cap=None)
        assert {e.name for e in entries} == {
            "total_connected",
            "type_preserved",
            "h2_torsion",
            "h2_annihilated",
            "projection_covering",
        }
        assert all(e.status == "pass" for e in entries)

    def test_total_h2_killed_by_type(self):
        inst = universal_covering_alexander(NEG33)
        h2 = quandle_h2(inst.total)
        assert h2.torsion_annihilated_by(inst.base.type)

    def test_base_h2_versus_total_h2(self):
        # the base has H2 = Z/3; the simply-connected total drops it
        assert quandle_h2(families.alexander(NEG33)).torsion == (3,)
        inst = universal_covering_alexander(NEG33)
        assert quandle_h2(inst.total).torsion == ()

    def test_size_cap_skips(self):
        inst = universal_covering_alexander(FIB)
        entries = covering_properties(inst, cap=10)
        skipped = [e for e in entries if e.status == "skipped"]
        assert skipped, "cap of 10 cells must skip the homology checks"


class TestBasePoint:
    def test_independent_of_base_point(self):
        assert base_point_independent(FIB)
        assert base_point_independent(AlexanderModuleSpec.scalar((3,), -1))


class TestExport:
    def test_round_trip(self, tmp_path):
        inst = universal_covering_alexander(FIB)
        written = export_covering(inst, str(tmp_path))
        names = {p.split("/")[-1] for p in written}
        assert names == {"base.quandle", "total.quandle", "projection.map"}
        base = load_table((tmp_path / "base.quandle").read_text())
        total = load_table((tmp_path / "total.quandle").read_text())
        assert base.table == inst.base.table
        assert total.table == inst.total.table
        lines = [
            ln
            for ln in (tmp_path / "projection.map").read_text().splitlines()
            if ln and not ln.startswith("#")
        ]
        n, m = map(int, lines[0].split())
        assert (n, m) == (total.order, base.order)
        mapping = [0] * n
        for ln in lines[1:]:
            i, p = map(int, ln.split())
            mapping[i] = p
        assert is_covering(mapping, total, base)
