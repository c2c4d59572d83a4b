"""Rack/quandle chain complexes and their low-degree homology.

Oracles:
- frozen classical values (dihedral quandles, trivial quandles),
- the degree-2 splitting: rack H2 = quandle H2 + Z^(number of orbits),
- the boundary-squared identity on random chains,
- the abelianized adjoint group being free of orbit rank.
"""

import pytest

from quandles import families
from quandles.core import validate
from quandles.families import AlexanderModuleSpec
from quandles.homology import (
    CAP_ENV_VAR,
    QUANDLE,
    RACK,
    SizeCap,
    adjoint_abelianization,
    boundary_chain,
    build_complex,
    effective_cap,
    homology,
    quandle_h2,
    rack_h2,
)
from quandles.intlin import AbelianGroupInvariants


def Z(rank=0, *torsion):
    return AbelianGroupInvariants(rank, tuple(torsion))


class TestFrozenValues:
    def test_dihedral3(self):
        r3 = families.dihedral(3)
        assert quandle_h2(r3) == Z()
        assert rack_h2(r3) == Z(1)

    def test_dihedral3_degree3(self):
        # the classical value: third quandle homology of the three-element
        # dihedral quandle has exactly one 3-torsion class
        r3 = families.dihedral(3)
        assert homology(r3, 3, QUANDLE) == Z(0, 3)
        assert homology(r3, 3, RACK) == Z(1, 3)

    def test_singleton(self):
        single = families.trivial(1)
        assert rack_h2(single) == Z(1)
        assert quandle_h2(single) == Z()

    def test_trivial2(self):
        t2 = families.trivial(2)
        assert rack_h2(t2) == Z(4)
        assert quandle_h2(t2) == Z(2)

    def test_dihedral4(self):
        assert quandle_h2(families.dihedral(4)) == Z(2, 2, 2)

    def test_dihedral5(self):
        assert quandle_h2(families.dihedral(5)) == Z()

    def test_connected_alexander_with_torsion(self):
        spec = AlexanderModuleSpec.scalar((3, 3), -1)
        assert quandle_h2(families.alexander(spec)) == Z(0, 3)


class TestBoundary:
    def test_boundary_of_pair(self):
        r3 = families.dihedral(3)
        chain = boundary_chain(r3, (0, 1))
        # d(x, y) = (x) - (x <| y)
        assert chain == {(0,): 1, (r3.apply(0, 1),): -1}

    def test_boundary_squares_to_zero(self):
        r3 = families.dihedral(3)
        for x in range(3):
            for y in range(3):
                for z in range(3):
                    outer = {}
                    for tup, c in boundary_chain(r3, (x, y, z)).items():
                        for t2, c2 in boundary_chain(r3, tup).items():
                            outer[t2] = outer.get(t2, 0) + c * c2
                    assert all(v == 0 for v in outer.values()), (x, y, z)

    def test_complex_certified_on_build(self):
        # build_complex runs the composite-zero check internally
        slice3 = build_complex(families.dihedral(3), QUANDLE)
        assert slice3.homology(2) == Z()


class TestSplitting:
    @pytest.mark.parametrize(
        "make",
        [
            lambda: families.dihedral(3),
            lambda: families.dihedral(4),
            lambda: families.dihedral(6),
            lambda: families.trivial(3),
            lambda: families.alexander(AlexanderModuleSpec.scalar((5,), 2)),
            lambda: families.alexander(AlexanderModuleSpec.scalar((3, 3), -1)),
            lambda: families.core(__import__("quandles").groups.quaternion8()),
        ],
    )
    def test_rack_h2_splits_off_orbit_lattice(self, make):
        q = make()
        rack = rack_h2(q)
        quandle = quandle_h2(q)
        orbits = len(q.orbits())
        assert rack.free_rank == quandle.free_rank + orbits
        assert rack.torsion == quandle.torsion


class TestAbelianization:
    @pytest.mark.parametrize(
        "make,rank",
        [
            (lambda: families.dihedral(3), 1),
            (lambda: families.dihedral(4), 2),
            (lambda: families.trivial(2), 2),
            (lambda: families.alexander(AlexanderModuleSpec.scalar((4,), -1)), 2),
        ],
    )
    def test_free_of_orbit_rank(self, make, rank):
        q = make()
        assert adjoint_abelianization(q) == Z(rank)
        assert len(q.orbits()) == rank


class TestCaps:
    def test_size_cap_raised(self):
        q = families.dihedral(8)
        with pytest.raises(SizeCap) as exc:
            quandle_h2(q, cap=10)
        assert exc.value.needed > 10
        assert exc.value.cap == 10

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "123")
        assert effective_cap(None) == 123
        monkeypatch.delenv(CAP_ENV_VAR)
        assert effective_cap(7) == 7

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            homology(families.dihedral(3), 4)


class TestModes:
    def test_quandle_complex_drops_degenerate_cells(self):
        q = families.dihedral(3)
        rack_slice = build_complex(q, RACK)
        quandle_slice = build_complex(q, QUANDLE)
        assert quandle_slice.basis_size(2) == 6  # 9 pairs minus 3 diagonal
        assert rack_slice.basis_size(2) == 9

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            build_complex(families.dihedral(3), "simplicial")
