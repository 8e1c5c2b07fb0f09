import pytest

import spckit


def test_group_basics():
    z2 = spckit.Group.from_spec("Z2")
    assert z2.order == 2
    assert z2.mul(1, 1) == 0
    s3 = spckit.Group.symmetric(3)
    assert s3.order == 6 and not s3.is_abelian()
    with pytest.raises(Exception):
        spckit.Group.from_spec("Q8")


def test_spc_enumeration_counts():
    one = spckit.Group.trivial()
    z2 = spckit.Group.cyclic(2)
    assert len(spckit.enumerate_spc(2, one)) == 5
    assert len(spckit.enumerate_spc(2, z2)) == 6
    assert len(spckit.enumerate_spc(3, z2)) == 24


def test_lattices():
    one = spckit.Group.trivial()
    z2 = spckit.Group.cyclic(2)
    assert len(spckit.dowling_lattice(2, one)) == 5
    d = spckit.dowling_lattice(2, z2)
    assert len(d) == 6 and d.is_geometric() and len(d.atoms()) == 4
    assert len(spckit.rhodes_hat_lattice(2, z2)) == 7
    p = spckit.rhodes_poset(2, one)
    assert p["count"] == 5 and p["is_lattice"]
    p = spckit.rhodes_poset(2, z2)
    assert p["count"] == 6 and not p["is_lattice"] and "no_lub_pair" in p
    assert spckit.lattice_isomorphic(spckit.dowling_lattice(2, one),
                                     spckit.partition_lattice(3))


def test_complexes_and_matroids():
    z2 = spckit.Group.cyclic(2)
    lift = spckit.lift_matroid_of_delta(3, z2)
    assert len(lift.facets()) == 16
    assert lift.rank == 3 and lift.is_matroid()
    assert spckit.lift_facets_formula_corrected(3, 2) == 16
    assert spckit.lift_facets_formula(3, 2) == 28
    h = spckit.rhodes_complex(3, spckit.Group.trivial())
    assert [len(f) for f in h.facets()] == [5, 5, 5]
    assert h.is_boolean_representable()


def test_matrices():
    mtx = spckit.ln_matrix(3, spckit.Group.trivial())
    assert "000101" in mtx.to_text()
    u23 = spckit.uniform_matroid(2, 3)
    fm = spckit.flats_matrix(u23)
    assert fm.complex() == u23
    assert spckit.mindeg_lower_bound(u23) == 2


def test_verify_suite_roundtrip():
    assert "orders" in spckit.verify_suites()
    passed, details = spckit.run_verify_suite("groupoid")
    assert passed, details
