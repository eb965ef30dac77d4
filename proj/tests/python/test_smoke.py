import json

import pytest

import crystal_pop as cp


def test_operators_on_worked_example():
    assert cp.lowering_f("1,1,2,2,3/3,3", 2, 1) == "1,2,2,2,3/3,3"
    assert cp.lowering_f("1,1,2,2,3/3,3", 2, 2) is None
    assert cp.raising_e("1,2,2,2,3/3,3", 2, 1) == "1,1,2,2,3/3,3"


def test_crystal_basics():
    b = cp.Crystal([2, 1], 2)
    assert len(b) == 8 == cp.hook_content_count([2, 1], 2)
    assert b.n == 2 and b.shape == [2, 1]
    assert len(b.edges()) == 8
    assert all(src < dst for src, dst, _ in b.edges())
    low = b.find("1,1/2")
    high = b.find("2,3/3")
    assert b.leq(low, high) and not b.leq(high, low)
    assert b.tableaux()[low] == "1,1/2"


def test_pop_orbits_and_lattice():
    b = cp.Crystal([2, 1], 2)
    assert b.max_orbit()[0] == 3
    assert b.pop_orbit(b.find("2,3/3"))[-1] == b.find("1,1/2")
    assert b.is_lattice() and b.is_poppable()
    assert any(b.semilattice_pop(v) != b.pop(v) for v in range(len(b)))
    assert b.certificate() is None


def test_non_lattice_certificate():
    b = cp.Crystal([5, 2], 3)
    assert not b.is_lattice()
    cert = b.certificate()
    assert cert["kind"] == "bowtie"
    assert cert["tableaux"][0] == "1,1,1,1,3/3,4"


def test_keys_and_serialization():
    b = cp.Crystal([2, 1], 2)
    keys = b.keys()
    assert keys[b.find("1,1/2")] == "123"
    assert keys[b.find("1,2/3")] == "312"
    doc = json.loads(b.to_json())
    assert len(doc["vertices"]) == 8
    assert b.to_dot().startswith("digraph crystal")


def test_permutations_and_classifier():
    assert cp.pop_permutation("3412") == cp.coxeter_pop("3412") == "3142"
    assert cp.predict_lattice([3, 2, 1], 3) == (True, "staircase-321")
    assert cp.predict_lattice([3, 2, 1], 4) == (False, "none")
    rows = cp.classification_sweep(3, 4)
    assert rows and all(r["predicted"] == r["brute_force"] for r in rows)


def test_errors_are_reported():
    with pytest.raises(cp.CrystalPopError):
        cp.Crystal([1, 2], 3)
    with pytest.raises(ValueError):
        cp.Crystal([1, 1, 1], 2)
    with pytest.raises(cp.CrystalPopError):
        cp.Crystal([4, 4], 3, cap=10)
