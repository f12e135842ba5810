from itertools import product

import pytest
from hypothesis import given, strategies as st

from lbo.errors import OrderMismatch, ParseError, RangeError, Unsupported
from lbo.magma import (MulTable, adjoin_zero, are_isomorphic, classify,
                       enumerate_tables, find_left_zeros, find_right_zeros,
                       find_units, find_zeros, is_associative, is_commutative,
                       is_idempotent, is_pre_unital, is_proto_unital,
                       is_right_self_distributive, parse_table,
                       satisfies_abbc)

from conftest import ABBC_ONLY_4, ASSOC_SHELF_4, IDEM_SG_4, SEMILATTICE_2, TRIVIAL_QUANDLE_2


def all_magmas(n):
    """Brute-force oracle: every n x n table."""
    for cells in product(range(n), repeat=n * n):
        yield MulTable(tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n)))


small_tables = st.integers(1, 3).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
        min_size=n, max_size=n,
    ).map(lambda rows: MulTable(tuple(tuple(r) for r in rows)))
)


class TestParse:
    def test_brace(self):
        t = parse_table("{{0,0},{0,1}}")
        assert t.order == 2
        assert t(0, 0) == 0 and t(0, 1) == 0 and t(1, 0) == 0 and t(1, 1) == 1

    def test_singleton(self):
        assert parse_table("{{0}}").order == 1

    def test_out_of_range(self):
        with pytest.raises(RangeError):
            parse_table("{{0,2},{0,1}}")
        with pytest.raises(RangeError):
            parse_table("[[0,-1],[0,1]]")

    def test_json_rows(self):
        assert parse_table("[[0, 0], [0, 1]]").rows == ((0, 0), (0, 1))

    def test_whitespace_insensitive(self):
        assert parse_table(" { { 0 ,0 } , {0, 1}} ").rows == ((0, 0), (0, 1))

    def test_ragged(self):
        with pytest.raises(ParseError):
            parse_table("{{0,0},{0}}")

    def test_garbage(self):
        for bad in ("", "{{0,0}", "[[0,0],[0,x]]", "[0,1]", "[[0.5,0],[0,1]]",
                    "[[true,false],[false,true]]"):
            with pytest.raises(ParseError):
                parse_table(bad)

    def test_roundtrip(self):
        assert parse_table(IDEM_SG_4.brace()).rows == IDEM_SG_4.rows


class TestApply:
    def test_idem_example_entry(self):
        assert IDEM_SG_4.apply(1, 3) == 3

    def test_shelf_example_entry(self):
        assert ASSOC_SHELF_4.apply(3, 2) == 2

    def test_idempotent_diagonal(self):
        for a in range(IDEM_SG_4.order):
            assert IDEM_SG_4.apply(a, a) == a

    def test_prod_left_associated(self):
        # 1*3*1 in the idempotent example: (1*3)*1 = 3*1 = 1
        assert IDEM_SG_4.prod([1, 3, 1]) == 1


class TestPredicates:
    def test_left_projection(self):
        t = TRIVIAL_QUANDLE_2
        assert is_associative(t) and is_right_self_distributive(t)
        assert is_idempotent(t) and not is_commutative(t)

    def test_abbc_without_idempotence(self):
        t = ABBC_ONLY_4
        assert satisfies_abbc(t)
        assert is_associative(t)
        assert not is_idempotent(t)  # 1*1 = 0
        assert not is_right_self_distributive(t)
        assert not is_proto_unital(t)

    def test_one_element_all_flags(self):
        report = classify(parse_table("{{0}}"))
        assert all(report.flags().values())

    def test_proto_unital_semilattice(self):
        assert is_proto_unital(SEMILATTICE_2)
        assert find_units(SEMILATTICE_2) == [1]

    def test_proto_unital_right_projection(self):
        assert is_proto_unital(parse_table("{{0,1},{0,1}}"))

    def test_left_projection_not_proto(self):
        # a*b = a but b*(a*b) = b
        assert not is_proto_unital(TRIVIAL_QUANDLE_2)

    def test_pair_axioms_alone_do_not_give_associativity(self):
        # the ambient shelf axiom is an essential part of proto-unitality
        t = parse_table("{{0,0,0},{0,0,2},{0,0,2}}")
        r = t.rows
        assert all(r[b][r[a][b]] == r[a][b] == r[r[a][b]][b]
                   for a in range(3) for b in range(3))
        assert not is_associative(t)
        assert not is_proto_unital(t)

    def test_xor_table_is_associative_but_ineligible(self):
        t = parse_table("{{0,1},{1,0}}")
        assert is_associative(t)
        assert not satisfies_abbc(t)
        assert not classify(t).homology_eligible


class TestZeros:
    def test_idem_example_zeros(self):
        assert find_zeros(IDEM_SG_4) == [0]

    def test_semilattice_zeros(self):
        assert find_left_zeros(SEMILATTICE_2) == [0]
        assert find_right_zeros(SEMILATTICE_2) == [0]
        assert find_zeros(SEMILATTICE_2) == [0]

    def test_left_projection_no_zero(self):
        assert find_zeros(TRIVIAL_QUANDLE_2) == []
        assert find_left_zeros(TRIVIAL_QUANDLE_2) == [0, 1]
        assert find_right_zeros(TRIVIAL_QUANDLE_2) == []


class TestAdjoinZero:
    def test_adjoins_to_singleton(self):
        out = adjoin_zero(parse_table("{{0}}"))
        assert out.rows == ((0, 1), (1, 1))
        assert are_isomorphic(out, SEMILATTICE_2)

    def test_flags_preserved_on_shelf(self):
        out = adjoin_zero(ASSOC_SHELF_4)
        assert is_associative(out) and is_right_self_distributive(out)

    def test_twice_only_newest_is_zero(self):
        out = adjoin_zero(adjoin_zero(TRIVIAL_QUANDLE_2))
        assert find_zeros(out) == [out.order - 1]

    @given(small_tables)
    def test_flags_preserved_random(self, t):
        out = adjoin_zero(t)
        assert find_zeros(out)[-1] == t.order
        for pred in (is_associative, is_right_self_distributive, is_idempotent,
                     satisfies_abbc):
            assert pred(out) == pred(t)


class TestClassify:
    def test_semilattice(self):
        r = classify(SEMILATTICE_2)
        assert r.associative and r.right_self_distributive and r.idempotent
        assert r.proto_unital and r.pre_unital and r.unital
        assert r.homology_eligible
        assert r.units == (1,) and r.zeros == (0,)

    def test_abbc_only(self):
        r = classify(ABBC_ONLY_4)
        assert r.associative and r.abbc and r.homology_eligible
        assert not r.idempotent and not r.right_self_distributive
        assert not r.proto_unital

    def test_trivial_quandle_order3(self):
        r = classify(parse_table("{{0,0,0},{1,1,1},{2,2,2}}"))
        assert r.associative and r.right_self_distributive and r.idempotent
        assert not r.commutative
        assert r.is_rack and r.is_spindle

    def test_rack_flag_requires_bijective_translations(self):
        assert not classify(SEMILATTICE_2).is_rack
        assert classify(TRIVIAL_QUANDLE_2).is_rack


class TestIsomorphism:
    def test_identity_permutation(self):
        assert are_isomorphic(IDEM_SG_4, IDEM_SG_4)

    def test_constant_tables(self):
        assert are_isomorphic(parse_table("{{0,0},{0,0}}"),
                              parse_table("{{1,1},{1,1}}"))

    def test_left_projection_class_is_closed(self):
        # relabeling the left projection gives the left projection again
        assert not are_isomorphic(TRIVIAL_QUANDLE_2, parse_table("{{1,0},{1,0}}"))

    def test_min_max_semilattices(self):
        assert are_isomorphic(SEMILATTICE_2, parse_table("{{0,1},{1,1}}"))

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            are_isomorphic(SEMILATTICE_2, parse_table("{{0}}"))

    @given(st.tuples(small_tables, small_tables, small_tables))
    def test_equivalence_relation(self, triple):
        a, b, c = triple
        assert are_isomorphic(a, a)
        if a.order == b.order:
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
            if b.order == c.order and are_isomorphic(a, b) and are_isomorphic(b, c):
                assert are_isomorphic(a, c)


class TestEnumeration:
    def test_order1(self):
        for family in ("assoc-shelf", "idem-sg", "abbc-sg", "proto-unital"):
            assert len(enumerate_tables(1, family)) == 1

    def test_order2_assoc_shelves_labeled(self):
        got = enumerate_tables(2, "assoc-shelf")
        oracle = [t for t in all_magmas(2)
                  if is_associative(t) and is_right_self_distributive(t)]
        assert [t.rows for t in got] == [t.rows for t in oracle]
        assert len(got) == 6

    def test_order2_assoc_shelves_up_to_iso(self):
        got = enumerate_tables(2, "assoc-shelf", up_to_iso=True)
        assert [t.brace() for t in got] == [
            "{{0,0},{0,0}}", "{{0,0},{0,1}}", "{{0,0},{1,1}}", "{{0,1},{0,1}}"]

    def test_order3_assoc_shelves_against_oracle(self):
        got = enumerate_tables(3, "assoc-shelf")
        oracle = [t.rows for t in all_magmas(3)
                  if is_associative(t) and is_right_self_distributive(t)]
        assert [t.rows for t in got] == oracle
        assert len(got) == 71

    def test_order3_idem_semigroups_against_oracle(self):
        got = enumerate_tables(3, "idem-sg")
        oracle = [t.rows for t in all_magmas(3)
                  if is_associative(t) and is_idempotent(t)]
        assert [t.rows for t in got] == oracle
        assert len(got) == 35
        assert len(enumerate_tables(3, "idem-sg", up_to_iso=True)) == 10

    def test_enumerated_shelves_satisfy_abbc(self):
        for n in (2, 3):
            for t in enumerate_tables(n, "assoc-shelf"):
                assert satisfies_abbc(t)

    def test_enumerated_idem_semigroups_satisfy_abbc(self):
        for n in (2, 3):
            for t in enumerate_tables(n, "idem-sg"):
                assert satisfies_abbc(t)

    def test_enumerated_proto_unital_are_associative_shelves(self):
        for n in (2, 3):
            for t in enumerate_tables(n, "proto-unital"):
                assert is_associative(t) and is_right_self_distributive(t)
                if is_idempotent(t):
                    assert is_pre_unital(t)

    def test_abbc_family_is_superset(self):
        shelves = {t.rows for t in enumerate_tables(3, "assoc-shelf")}
        abbc = {t.rows for t in enumerate_tables(3, "abbc-sg")}
        assert shelves <= abbc

    def test_unsupported(self):
        with pytest.raises(Unsupported):
            enumerate_tables(5, "assoc-shelf")
        with pytest.raises(Unsupported):
            enumerate_tables(2, "no-such-family")
