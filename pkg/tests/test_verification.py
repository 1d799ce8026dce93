"""Corpus generation and the theorem-shaped check battery."""

import pytest
from hypothesis import given, settings

from conftest import antichain, chain, diamond, posets, vee, wedge
from oracles import all_posets_naive
from posetideals import (
    CapacityExceeded,
    Poset,
    build_atoms_lattice,
    build_chain_bundle,
    build_idemb_tower,
    check_acc,
    check_corollary_2_3_hypothesis,
    check_corollary_3_2,
    check_lemma_5_1,
    check_theorem_2_1,
    check_theorem_3_1,
    classify,
    generate_corpus,
    ideals,
    run_suite,
)
from posetideals.morphisms import STRICTLY_ISOTONE, are_isomorphic, canonical_key
from posetideals.poset import adjoin_bounds
from posetideals.verification import (
    FAILS,
    HOLDS,
    UNKNOWN,
    VACUOUS,
    CheckReport,
    chains_battery,
    check_kurepa_atoms,
    summarize,
)

CORPUS_COUNTS = (1, 1, 2, 5, 16, 63)


def test_corpus_counts(corpus5):
    assert tuple(len(row) for row in corpus5.by_size) == CORPUS_COUNTS
    assert corpus5.provenance == "orderly-extension-v1"
    ids = [iid for iid, _ in corpus5.items()]
    assert ids[0] == "n0/00" and ids[-1] == "n5/62" and len(ids) == 88


def test_corpus_matches_the_relation_scan(corpus4):
    # independent count: every reflexive transitive antisymmetric relation,
    # deduplicated over relabelings
    for n in range(5):
        assert len(all_posets_naive(n)) == len(corpus4.by_size[n])


def test_corpus_members_are_canonical_and_distinct(corpus5):
    for _, P in corpus5.items():
        assert canonical_key(P) == P.up
    keys = {P.up for _, P in corpus5.items()}
    assert len(keys) == 88


def test_corpus_ceiling():
    with pytest.raises(CapacityExceeded):
        generate_corpus(7)


def test_theorem_2_1_check():
    assert check_theorem_2_1(diamond()).verdict == HOLDS
    assert check_theorem_2_1(Poset(0, ())).verdict == HOLDS
    r = check_theorem_2_1(chain(3), budget=1)
    assert r.verdict == UNKNOWN and r.witness == {"budget": 1}


def test_theorem_2_1_needs_the_extra_point():
    # the family order has one more element than the base, and a strictly
    # isotone map must be injective on a chain, so even the longest chain
    # in the family cannot fit; spot-check the counting on a chain
    F = ideals(chain(3), True)
    assert F.order.n == 4


def test_theorem_3_1_check():
    assert check_theorem_3_1(diamond()).verdict == HOLDS
    assert check_theorem_3_1(wedge()).verdict == HOLDS
    with pytest.raises(ValueError):
        check_theorem_3_1(vee())
    with pytest.raises(ValueError):
        check_theorem_3_1(antichain(2))


def test_corollary_2_3_check():
    r = check_corollary_2_3_hypothesis(diamond())
    assert r.verdict == VACUOUS and r.witness == {"nonminimal_tried": 3}
    assert check_corollary_2_3_hypothesis(antichain(3)).witness \
        == {"nonminimal_tried": 0}
    assert check_corollary_2_3_hypothesis(chain(4), budget=1).verdict == UNKNOWN


def test_corollary_3_2_check():
    r = check_corollary_3_2(diamond())
    assert r.verdict == HOLDS and r.witness == {"downsets": 6, "exhaustive": True}
    r5 = check_corollary_3_2(chain(5))
    assert r5.verdict == HOLDS and r5.witness["exhaustive"] is False
    assert check_corollary_3_2(chain(5), exhaustive=True).verdict == HOLDS


def test_acc_check(corpus4):
    for iid, P in corpus4.items():
        assert check_acc(P, iid).verdict == HOLDS


def test_chain_bundle_shape():
    assert are_isomorphic(build_chain_bundle(1), chain(3))
    B = build_chain_bundle(3)
    assert B.n == 8
    assert classify(B).is_lattice
    assert B.labels == ("0", "c1.0", "c2.0", "c2.1", "c3.0", "c3.1", "c3.2", "1")
    # chain j climbs from c{j}.0 up to c{j}.{j-1}
    assert B.lt(2, 3) and B.lt(4, 5) and B.lt(5, 6) and not B.leq(1, 2)
    assert check_theorem_2_1(B).verdict == HOLDS
    assert are_isomorphic(ideals(B, True).order, adjoin_bounds(B, add_top=False))
    with pytest.raises(ValueError):
        build_chain_bundle(0)


def test_atoms_lattice_and_its_map():
    M, f = build_atoms_lattice(2)
    assert M.n == 4 and len(ideals(M, True)) == 5
    assert f.kind == STRICTLY_ISOTONE  # strongest class: not an embedding
    assert len(set(f.image)) == M.n    # injective
    assert len(set(f.image)) < f.target.n  # not surjective
    M3, f3 = build_atoms_lattice(3)
    assert M3.n == 5 and len(ideals(M3, True)) == 6
    assert f3.kind == STRICTLY_ISOTONE
    with pytest.raises(ValueError):
        build_atoms_lattice(1)


def test_atoms_map_breaks_order_reflection():
    # a0 and a1 are incomparable, yet their assigned ideals nest
    M, f = build_atoms_lattice(3)
    F = ideals(M, True)
    assert not M.leq(1, 2) and not M.leq(2, 1)
    assert F.order.leq(f.image[1], f.image[2])


def test_idemb_tower():
    T = build_idemb_tower(chain(1), 1)
    assert are_isomorphic(T, diamond())
    T2 = build_idemb_tower(diamond(), 1)
    assert T2.n == 10 and classify(T2).is_lattice
    assert build_idemb_tower(diamond(), 0).n == 6
    with pytest.raises(ValueError):
        build_idemb_tower(vee(), 1)
    with pytest.raises(ValueError):
        build_idemb_tower(Poset(0, ()), 1)
    with pytest.raises(ValueError):
        build_idemb_tower(diamond(), -1)


def test_kurepa_atoms_check():
    for k in (2, 3, 4):
        r = check_kurepa_atoms(k)
        assert r.verdict == HOLDS
        assert r.witness["trace"] == ["∅", "{0}", "{a0,0}", "{a1,a0,0}"]
        assert r.witness["reason"] == "NotAnIdealOfChains"
        assert r.witness["fail_step"] == 3


def test_lemma_5_1_with_chains(corpus4):
    reports = check_lemma_5_1(corpus4, chains_battery(3), "chains<=3")
    assert [r.check for r in reports] == [
        "lemma51.i", "lemma51.iia_to_iib", "lemma51.i_iia_to_iic",
        "lemma51.i_iia_to_iid"]
    assert all(r.verdict == HOLDS for r in reports)
    assert reports[0].witness["every_member_directed"] is True
    assert reports[0].witness["all_downsets_ideals"] is True
    assert reports[1].witness["pair_condition"] is True


def test_lemma_5_1_with_an_antichain_member(corpus4):
    X = chains_battery(2) + [antichain(2)]
    reports = check_lemma_5_1(corpus4, X, "chains+antichain")
    eq = reports[0]
    assert eq.verdict == HOLDS  # both sides of the equivalence go false
    assert eq.witness["every_member_directed"] is False
    assert eq.witness["all_downsets_ideals"] is False
    assert eq.witness["ideal_failure"] is not None
    pairs = reports[1]
    assert pairs.verdict == VACUOUS
    assert pairs.witness["pair_condition"] is False
    # the meet closure happens to survive, and the report records that
    assert pairs.witness["consequent_holds"] is True
    assert reports[2].verdict == VACUOUS and reports[3].verdict == VACUOUS


def test_run_suite_and_summarize(corpus4):
    reports = run_suite("thm21", max_n=4)
    assert summarize(reports, corpus4) == "16+5+2+1+1 instances: holds"
    assert summarize(reports) == "25 instances: holds"
    vac = run_suite("cor23", max_n=3)
    assert summarize(vac) == "9 instances: vacuous"
    mixed = [CheckReport("x", "a", HOLDS), CheckReport("x", "b", FAILS),
             CheckReport("x", "c", FAILS), CheckReport("x", "d", UNKNOWN)]
    assert summarize(mixed) == "4 instances: 1 holds, 2 fails, 1 unknown"
    with pytest.raises(ValueError):
        run_suite("nope")


def test_run_suite_thm31_filters_to_upper_semilattices(corpus4):
    reports = run_suite("thm31", max_n=4)
    expected = sum(1 for _, P in corpus4.items() if classify(P).is_upper)
    assert len(reports) == expected == 10
    assert all(r.verdict == HOLDS for r in reports)


def test_report_shape():
    r = check_theorem_2_1(diamond(), "d")
    assert r.ok and r.to_json() == {"check": "thm21", "instance": "d",
                                    "verdict": "holds", "witness": None}


@settings(max_examples=25)
@given(posets(4))
def test_checks_hold_on_random_posets(P):
    assert check_theorem_2_1(P).verdict == HOLDS
    assert check_acc(P).verdict == HOLDS
    assert check_corollary_2_3_hypothesis(P).verdict == VACUOUS
    S = classify(P)
    if S.is_upper:
        assert check_theorem_3_1(P).verdict == HOLDS
