"""The named verification suite, including fault injection."""

from gmlattice import standard_lattice, twist
from gmlattice.verify import (
    check_list,
    check_mukai_embedding_complement,
    check_mukai_lattice,
    check_vanishing_lattice,
    run_checks,
)


def test_all_checks_pass():
    results = run_checks()
    assert len(results) == 20
    for r in results:
        assert r.passed, f"{r.name}: {r.detail}"


def test_check_list_matches_results():
    names = [name for name, _ in check_list()]
    assert len(names) == len(set(names)) == 20
    assert [r.name for r in run_checks()] == names


def test_run_checks_subset():
    got = run_checks(names={"d50-separates-conditions"})
    assert len(got) == 1 and got[0].passed


def test_fault_injection_mukai_sign_error():
    # a sign error in the rank-24 lattice must fail the named check
    wrong = twist(standard_lattice("LambdaTilde"), -1)
    ok, _ = check_mukai_lattice(wrong)
    assert not ok


def test_fault_injection_vanishing_lattice():
    wrong = standard_lattice("LambdaTilde")  # rank 24, not 22
    ok, _ = check_vanishing_lattice(wrong)
    assert not ok
    ok2, _ = check_vanishing_lattice(twist(standard_lattice("Lambda"), -1))
    assert not ok2


def test_fault_injection_embedding():
    # perturbing one pairing breaks the complement invariants
    M = standard_lattice("LambdaTilde")
    ok, _ = check_mukai_embedding_complement(M)  # wrong sign convention
    assert not ok
