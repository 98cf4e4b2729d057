import pytest

from pathideal import (
    BoundExceededError,
    QQ,
    BettiTable,
    betti_table_hochster,
    betti_tables_hochster,
    char_independence_report,
    gf,
    is_cohen_macaulay,
    is_sequentially_cm,
    make_complex,
    make_ideal,
    path_ideal,
    pd_from_betti,
    reduced_homology_dims,
    restrict,
    stanley_reisner_complex,
    zero_ideal,
)
from pathideal.corpus import (
    four_cycle_edge_ideal,
    line,
    projective_plane_complex,
    projective_plane_ideal,
    twelve_vertex_tree,
)
from pathideal.homology import Field, assertion_stats

from oracles import simple_homology, taylor_betti


class TestField:
    def test_prime_validation(self):
        with pytest.raises(ValueError):
            Field(4)

    def test_str(self):
        assert str(QQ) == "Q"
        assert str(gf(5)) == "GF(5)"


class TestStanleyReisner:
    def test_single_edge(self):
        cx = stanley_reisner_complex(make_ideal([{1, 2}], ambient={1, 2}))
        assert cx.facets == {frozenset({1}), frozenset({2})}

    def test_path_two_edges(self):
        cx = stanley_reisner_complex(make_ideal([{1, 2}, {2, 3}], ambient={1, 2, 3}))
        assert cx.facets == {frozenset({1, 3}), frozenset({2})}

    def test_zero_ideal_full_simplex(self):
        cx = stanley_reisner_complex(zero_ideal({1, 2, 3}))
        assert cx.facets == {frozenset({1, 2, 3})}

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            stanley_reisner_complex(zero_ideal(range(1, 20)))


class TestRestrict:
    def setup_method(self):
        self.cx = stanley_reisner_complex(make_ideal([{1, 2}, {2, 3}], ambient={1, 2, 3}))

    def test_full(self):
        assert restrict(self.cx, {1, 2, 3}).facets == self.cx.facets

    def test_empty(self):
        assert restrict(self.cx, set()).facets == {frozenset()}

    def test_pair(self):
        assert restrict(self.cx, {1, 2}).facets == {frozenset({1}), frozenset({2})}

    def test_outside_ambient_rejected(self):
        with pytest.raises(ValueError):
            restrict(self.cx, {9})


class TestReducedHomology:
    def test_empty_face_complex(self):
        cx = make_complex([set()])
        assert reduced_homology_dims(cx, QQ) == {-1: 1}

    def test_two_points(self):
        assert reduced_homology_dims(make_complex([{1}, {2}]), QQ) == {0: 1}

    def test_hollow_triangle_all_fields(self):
        cx = make_complex([{1, 2}, {2, 3}, {1, 3}])
        for f in (QQ, gf(2), gf(3), gf(5)):
            assert reduced_homology_dims(cx, f) == {1: 1}

    def test_void(self):
        cx = make_complex([])
        assert reduced_homology_dims(cx, QQ) == {}

    def test_projective_plane_torsion(self):
        rp2 = projective_plane_complex()
        assert reduced_homology_dims(rp2, QQ) == {}
        assert reduced_homology_dims(rp2, gf(2)) == {1: 1, 2: 1}
        assert reduced_homology_dims(rp2, gf(3)) == {}

    def test_matches_dense_oracle_on_small_complexes(self):
        samples = [
            [{1, 2, 3}],
            [{1, 2}, {2, 3}, {3, 4}, {1, 4}],
            [{1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {1, 2, 4}],  # 2-sphere
            [{1}, {2}, {3}],
            [{1, 2}, {3, 4}],
        ]
        for faces in samples:
            cx = make_complex(faces)
            for p in (None, 2, 3):
                field = QQ if p is None else gf(p)
                assert reduced_homology_dims(cx, field) == simple_homology(faces, p)


class TestHochster:
    def test_principal_ideal(self):
        for n, t in ((4, 4), (6, 4)):
            ideal = path_ideal(line(t), t).with_ambient(range(1, n + 1))
            table = betti_table_hochster(ideal, QQ)
            assert table.entries == {(0, t): 1}
            assert pd_from_betti(table.as_quotient()) == 1

    def test_edge_path_example(self):
        table = betti_table_hochster(path_ideal(line(3), 2), QQ)
        assert table.entries == {(0, 2): 2, (1, 3): 1}

    def test_line8_t3_quotient_pd(self):
        table = betti_table_hochster(path_ideal(line(8), 3), QQ)
        assert pd_from_betti(table.as_quotient()) == 4

    def test_matches_taylor_oracle(self):
        cases = [
            path_ideal(line(6), 2),
            path_ideal(line(7), 3),
            path_ideal(twelve_vertex_tree(), 3),
            make_ideal([{1, 2}, {3, 4}], ambient={1, 2, 3, 4}),
            four_cycle_edge_ideal(),
            projective_plane_ideal(),
        ]
        for ideal in cases:
            for p in (None, 2, 5):
                field = QQ if p is None else gf(p)
                assert betti_table_hochster(ideal, field).entries == taylor_betti(ideal, p)

    def test_multi_field_consistency(self):
        ideal = path_ideal(line(7), 2)
        tables = betti_tables_hochster(ideal, (QQ, gf(2)))
        assert tables[QQ].entries == betti_table_hochster(ideal, QQ).entries
        assert tables[gf(2)].entries == betti_table_hochster(ideal, gf(2)).entries

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            betti_table_hochster(zero_ideal(range(1, 20)), QQ)

    def test_values_are_ints(self):
        table = betti_table_hochster(path_ideal(line(6), 3), QQ)
        assert all(type(v) is int for v in table.entries.values())


class TestBettiTable:
    def test_quotient_shift(self):
        table = betti_table_hochster(path_ideal(line(6), 2), QQ)
        quo = table.as_quotient()
        assert quo.value(0, 0) == 1
        for (i, j), v in table.entries.items():
            assert quo.value(i + 1, j) == v
        assert quo.as_ideal().entries == table.entries

    def test_pd_conventions_zero_ideal(self):
        table = betti_table_hochster(zero_ideal({1, 2}), QQ)
        assert pd_from_betti(table) == -1
        assert pd_from_betti(table.as_quotient()) == 0

    def test_json_roundtrip(self):
        table = betti_table_hochster(path_ideal(line(5), 2), gf(3)).as_quotient()
        assert BettiTable.from_jsonable(table.to_jsonable()) == table


class TestCharIndependence:
    def test_twelve_vertex(self):
        ok, diffs = char_independence_report(path_ideal(twelve_vertex_tree(), 3))
        assert ok and not diffs

    def test_line9_t3(self):
        ok, _ = char_independence_report(path_ideal(line(9), 3))
        assert ok

    def test_projective_plane_detects_difference(self):
        ok, diffs = char_independence_report(projective_plane_ideal())
        assert not ok
        assert any(d[1] == gf(2) for d in diffs)


class TestCohenMacaulay:
    def test_full_simplex(self):
        assert is_cohen_macaulay(make_complex([{1, 2, 3}]), QQ)

    def test_two_disjoint_edges(self):
        assert not is_cohen_macaulay(make_complex([{1, 3}, {2, 4}]), QQ)

    def test_single_vertex(self):
        assert is_cohen_macaulay(make_complex([{1}]), QQ)

    def test_projective_plane_field_dependence(self):
        rp2 = projective_plane_complex()
        assert is_cohen_macaulay(rp2, QQ)
        assert not is_cohen_macaulay(rp2, gf(2))


class TestSequentiallyCM:
    def test_path_ideals(self):
        for t in (2, 3):
            assert is_sequentially_cm(path_ideal(twelve_vertex_tree(), t), QQ)

    def test_four_cycle_fails(self):
        assert not is_sequentially_cm(four_cycle_edge_ideal(), QQ)
        assert not is_sequentially_cm(four_cycle_edge_ideal(), gf(2))

    def test_principal(self):
        assert is_sequentially_cm(path_ideal(line(5), 5), QQ)

    def test_zero_ideal(self):
        assert is_sequentially_cm(zero_ideal({1, 2}), QQ)


class TestBounds:
    def test_env_var_overrides_hochster_bound(self, monkeypatch):
        monkeypatch.setenv("PATHIDEAL_MAX_N", "3")
        with pytest.raises(BoundExceededError):
            betti_table_hochster(path_ideal(line(5), 2), QQ)
        monkeypatch.setenv("PATHIDEAL_MAX_N", "6")
        assert betti_table_hochster(path_ideal(line(5), 2), QQ).entries

    def test_explicit_max_n_beats_env(self, monkeypatch):
        monkeypatch.setenv("PATHIDEAL_MAX_N", "3")
        assert betti_table_hochster(path_ideal(line(5), 2), QQ, max_n=10).entries


class TestExactnessChecks:
    def test_assertions_exercised(self):
        before = dict(assertion_stats)
        reduced_homology_dims(make_complex([{1, 2, 5}, {2, 3, 4}]), QQ)
        betti_table_hochster(path_ideal(line(4), 2), gf(2))
        assert assertion_stats["euler"] >= before["euler"]
        # at least one new computation ran its checks unless fully cached
        assert assertion_stats["boundary_squared"] >= before["boundary_squared"]
