"""Axiom checker tests.

The optimized per-axiom witness finders are validated against a plain
nested-loop reference evaluator on small carriers, then the battery verdicts
on the standard crossover tables are frozen exactly (verdict lists and first
witnesses were cross-checked by hand against independent enumeration before
being written down here).
"""

import itertools
import random

import pytest

from xoverlab import AlphabetSpec, Word
from xoverlab.axioms import (
    AXIOM_BODIES,
    AXIOM_IDS,
    DEFAULT_SIX_VAR_LIMIT,
    SIX_VAR_AXIOMS,
    TransitTable,
    _Ctx,
    check_all,
    check_axiom,
    recognize_hamming,
    recognize_hypercube,
    table_closure,
    table_from_closure,
    table_from_interval,
    table_from_rset,
)
from xoverlab.graphs import SimpleGraph, hamming_graph

B2X2 = AlphabetSpec.parse("2^2")
B3 = AlphabetSpec.parse("2^3")
B4 = AlphabetSpec.parse("2^4")
TT = AlphabetSpec.parse("3,3")


def cycle_graph(m):
    return SimpleGraph(list(range(m)), [(i, (i + 1) % m) for i in range(m)])


def texts(witness):
    return tuple(str(w) if isinstance(w, Word) else w for w in witness)


class TestTableBasics:
    def test_totality_required(self):
        with pytest.raises(ValueError, match="every unordered pair"):
            TransitTable([0, 1], {(0, 0): {0}, (1, 1): {1}})

    def test_member_range_checked(self):
        entries = {(0, 0): {0}, (1, 1): {1}, (0, 1): {0, 1, 5}}
        with pytest.raises(ValueError, match="outside carrier"):
            TransitTable([0, 1], entries)

    def test_bad_key(self):
        entries = {(0, 0): {0}, (1, 1): {1}, (1, 0): {0, 1}}
        with pytest.raises(ValueError, match="bad entry key"):
            TransitTable([0, 1], entries)

    def test_diagonal_entries_are_singletons_on_factories(self):
        table = table_from_rset(2, B3)
        for i, w in enumerate(table.carrier):
            assert table.entry_elements(i, i) == (w,)

    def test_rset_factory_matches_rset(self):
        table = table_from_rset(1, B3)
        i = table.carrier.index(Word.parse("000", B3))
        j = table.carrier.index(Word.parse("111", B3))
        assert table.size_of(i, j) == 6

    def test_closure_factory_equals_interval_table(self):
        closed = table_from_closure(1, B3)
        cube = table_from_interval(hamming_graph(B3))
        assert closed.carrier == cube.carrier
        v = len(closed)
        for i in range(v):
            for j in range(i, v):
                assert closed.entry_mask(i, j) == cube.entry_mask(i, j)

    def test_interval_table_of_disconnected_graph_has_empty_entries(self):
        g = SimpleGraph([0, 1, 2, 3], [(0, 1), (2, 3)])
        table = table_from_interval(g)
        assert table.entry_indices(0, 2) == frozenset()
        assert table.entry_indices(0, 1) == frozenset({0, 1})

    def test_underlying_graph_edges_are_size_two_pairs(self):
        table = table_from_rset(1, B3)
        g = table.underlying_graph()
        cube = hamming_graph(B3)
        assert set(g.edges) == set(cube.edges)

    def test_names(self):
        assert table_from_rset(1, B2X2).name == "rset:1 on 2,2"
        assert table_from_closure(2, TT).name == "closure:2 on 3,3"
        assert table_from_interval(cycle_graph(4)).name == "interval"
        t = table_from_rset(1, B2X2)
        assert table_closure(t).name == "closure of rset:1 on 2,2"
        assert t.renamed("foo").name == "foo"


def brute_force(table, axiom):
    """First witness by unpruned lexicographic scan of the full prefix."""
    ctx = _Ctx(table)
    arity, body = AXIOM_BODIES[axiom]
    if axiom == "CGp":
        ctx = _Ctx(table_closure(table))
    for tup in itertools.product(range(len(table.carrier)), repeat=arity):
        if not body(ctx, tup):
            return tup
    return None


def random_table(rng, v):
    """Arbitrary symmetric total table, no transit axioms guaranteed."""
    entries = {}
    for i in range(v):
        for j in range(i, v):
            if i == j and rng.random() < 0.7:
                entries[(i, j)] = {i}
            else:
                base = {i, j} if rng.random() < 0.8 else set()
                extra = {m for m in range(v) if rng.random() < 0.3}
                entries[(i, j)] = base | extra
    return TransitTable(list(range(v)), entries, name="random")


class TestFinderSoundness:
    """Optimized finders must agree with the plain reference evaluator."""

    STRUCTURED = [
        lambda: table_from_rset(1, B2X2),
        lambda: table_from_rset(2, B2X2),
        lambda: table_from_closure(1, AlphabetSpec.parse("2,3")),
        lambda: table_from_interval(cycle_graph(5)),
        lambda: table_from_interval(cycle_graph(6)),
        lambda: table_from_interval(
            SimpleGraph(list(range(5)), [(0, 1), (0, 2), (0, 3), (0, 4)])
        ),
    ]

    @pytest.mark.parametrize("axiom", sorted(AXIOM_IDS))
    def test_structured_tables(self, axiom):
        for build in self.STRUCTURED:
            table = build()
            expect = brute_force(table, axiom)
            got = check_axiom(table, axiom)
            if expect is None:
                assert got.holds, (table.name, axiom)
            else:
                assert not got.holds, (table.name, axiom)
                expect_elems = tuple(table.carrier[i] for i in expect)
                assert got.witness == expect_elems, (table.name, axiom)

    @pytest.mark.parametrize("axiom", sorted(AXIOM_IDS))
    def test_random_tables(self, axiom):
        rng = random.Random(20240817)
        for trial in range(6):
            v = rng.randint(3, 5)
            table = random_table(rng, v)
            expect = brute_force(table, axiom)
            got = check_axiom(table, axiom)
            if expect is None:
                assert got.holds, (trial, axiom)
            else:
                assert not got.holds, (trial, axiom)
                assert got.witness == tuple(table.carrier[i] for i in expect)

    def test_global_axioms_have_empty_witness_when_failing(self):
        table = table_from_interval(cycle_graph(6))
        rep = check_axiom(table, "A2")
        assert not rep.holds and rep.witness == ()


def witness_refails(table, report):
    """Re-evaluate the axiom body on the reported witness."""
    ctx = _Ctx(table_closure(table) if report.axiom == "CGp" else table)
    arity, body = AXIOM_BODIES[report.axiom]
    if arity == 0:
        return not body(ctx, ())
    lookup = {w: i for i, w in enumerate(table.carrier)}
    tup = tuple(lookup[w] for w in report.witness)
    return not body(ctx, tup)


class TestBattery:
    """Frozen verdicts on the n = 4 binary tables."""

    def test_rset1_verdicts(self):
        reports = {r.axiom: r for r in check_all(table_from_rset(1, B4))}
        holds = {a for a, r in reports.items() if r.holds}
        assert holds == {
            "A1", "A2", "A2p", "A3", "A4", "B1", "B3", "C4", "CGp",
            "GW3", "GW4", "H3", "MG", "Pa", "S1", "S2", "T1", "T2", "T3",
        }
        assert texts(reports["B2"].witness) == ("0000", "0111", "0011")
        assert texts(reports["M"].witness) == ("0000", "0111", "0000", "0011")
        assert texts(reports["MM"].witness) == ("0000", "0011", "0000", "0111")
        assert texts(reports["MO"].witness) == ("0000", "0010", "0101")
        assert texts(reports["CG"].witness) == ("0000", "0000", "0111", "0011")
        assert texts(reports["AX"].witness) == (
            "0000", "0010", "0001", "0011", "0101", "0111",
        )
        for r in reports.values():
            if not r.holds:
                assert witness_refails(table_from_rset(1, B4), r), r.axiom

    def test_rset2_verdicts(self):
        table = table_from_rset(2, B4)
        reports = {r.axiom: r for r in check_all(table)}
        fails = {a for a, r in reports.items() if not r.holds}
        assert fails == {"B2", "CG", "H3", "M", "MM", "MO"}
        assert reports["Pa"].holds
        b2 = reports["B2"]
        assert texts(b2.witness) == ("0000", "1111", "0111")
        # the first B2 counterexample sits at maximal distance
        from xoverlab import hamming_distance

        assert hamming_distance(b2.witness[0], b2.witness[1]) == 4
        for r in reports.values():
            if not r.holds:
                assert witness_refails(table, r), r.axiom

    def test_closure1_verdicts(self):
        reports = {r.axiom: r for r in check_all(table_from_closure(1, B4))}
        fails = {a for a, r in reports.items() if not r.holds}
        assert fails == {"H3"}
        assert texts(reports["H3"].witness) == ("0000", "0111", "0000", "0011")

    def test_uniform_crossover_is_monotone(self):
        table = table_from_rset(3, B4)
        assert check_axiom(table, "M").holds
        assert check_axiom(table, "B2").holds

    def test_ternary_closure_fails_mo(self):
        rep = check_axiom(table_from_closure(1, TT), "MO")
        assert not rep.holds
        assert texts(rep.witness) == ("00", "01", "02")

    def test_binary_closure_satisfies_mo(self):
        assert check_axiom(table_from_closure(1, B4), "MO").holds

    def test_interval_tables_satisfy_t_axioms_and_b2(self):
        for g in (cycle_graph(6), hamming_graph(TT), cycle_graph(5)):
            table = table_from_interval(g)
            for axiom in ("T1", "T2", "T3", "B2"):
                assert check_axiom(table, axiom).holds, (g.vertex_count, axiom)

    def test_interval_tables_satisfy_mm(self):
        assert check_axiom(table_from_interval(hamming_graph(TT)), "MM").holds
        assert check_axiom(table_from_interval(hamming_graph(B4)), "MM").holds


class TestReportMechanics:
    def test_determinism(self):
        a = check_all(table_from_rset(2, B4))
        b = check_all(table_from_rset(2, B4))
        assert a == b

    def test_universe_is_carrier_size(self):
        rep = check_axiom(table_from_rset(1, B3), "Pa")
        assert rep.universe == 8

    def test_cgp_reports_closure_function(self):
        rep = check_axiom(table_from_rset(1, B2X2), "CGp")
        assert rep.function == "closure of rset:1 on 2,2"
        plain = check_axiom(table_from_rset(1, B2X2), "T1")
        assert plain.function == "rset:1 on 2,2"

    def test_unknown_axiom_lists_catalog(self):
        with pytest.raises(ValueError, match="T1"):
            check_axiom(table_from_rset(1, B2X2), "B9")

    def test_six_var_guard(self):
        table = table_from_closure(1, B3)
        for axiom in SIX_VAR_AXIOMS:
            with pytest.raises(ValueError, match="six"):
                check_axiom(table, axiom, six_var_limit=4)
            assert check_axiom(table, axiom, six_var_limit=8).holds
        assert len(table) <= DEFAULT_SIX_VAR_LIMIT

    def test_implication_violation_raises_internal_error(self, monkeypatch):
        # no real table can violate M => GW3, so force a fake GW3 failure
        import xoverlab.axioms as ax

        fake = dict(ax._FINDERS)
        fake["GW3"] = lambda ctx: (0, 0, 0, 0)
        monkeypatch.setattr(ax, "_FINDERS", fake)
        with pytest.raises(RuntimeError, match="internal error"):
            check_all(table_from_rset(3, B4))


class TestRecognizers:
    def test_hypercube_on_rset_tables(self):
        for n in range(1, 5):
            spec = AlphabetSpec.parse(f"2^{n}")
            for k in range(1, n + 1):
                assert recognize_hypercube(table_from_rset(k, spec)), (n, k)

    def test_hypercube_on_closure_table(self):
        assert recognize_hypercube(table_from_closure(1, B4))
        assert recognize_hypercube(table_from_closure(1, B4), n=4)

    def test_hypercube_rejects_wrong_n(self):
        assert not recognize_hypercube(table_from_rset(1, B4), n=3)

    def test_cycle_is_not_a_hypercube(self):
        table = table_from_interval(cycle_graph(6))
        assert not recognize_hypercube(table)
        # |X| = 6 is not a power of two matching the degree
        assert not check_axiom(table, "A2").holds

    def test_hamming_recognition(self):
        table = table_from_interval(hamming_graph(TT))
        assert recognize_hamming(table)
        assert recognize_hamming(table, n=2, a=3)
        assert recognize_hamming(table, sizes=(3, 3))
        mixed = table_from_interval(hamming_graph(AlphabetSpec.parse("2,3")))
        assert recognize_hamming(mixed)
        assert recognize_hamming(mixed, sizes=(2, 3))

    def test_hamming_on_rset_table(self):
        assert recognize_hamming(table_from_rset(1, TT), n=2, a=3)

    def test_hamming_rejects_cycle(self):
        assert not recognize_hamming(table_from_interval(cycle_graph(6)))

    def test_path_is_not_a_hypercube(self):
        g = SimpleGraph([0, 1, 2], [(0, 1), (1, 2)])
        assert not recognize_hypercube(table_from_interval(g))

    def test_disconnected_interval_table_raises(self):
        g = SimpleGraph([0, 1, 2, 3], [(0, 1), (2, 3)])
        table = table_from_interval(g)
        with pytest.raises(ValueError, match="connectivity precondition unmet"):
            recognize_hypercube(table)
        with pytest.raises(ValueError, match="connectivity precondition unmet"):
            recognize_hamming(table)

    def test_disconnected_sparse_table_raises(self):
        entries = {
            (0, 0): {0}, (1, 1): {1}, (2, 2): {2}, (3, 3): {3},
            (0, 1): {0, 1}, (2, 3): {2, 3},
            (0, 2): {1}, (0, 3): set(), (1, 2): set(), (1, 3): set(),
        }
        table = TransitTable([0, 1, 2, 3], entries)
        with pytest.raises(ValueError, match="connectivity precondition unmet"):
            recognize_hypercube(table)


def random_poset_table(rng, n):
    """Interval function of a random partial order, padded to satisfy T1."""
    le = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                le[i][j] = True
    for m in range(n):  # transitive closure
        for i in range(n):
            for j in range(n):
                le[i][j] = le[i][j] or (le[i][m] and le[m][j])
    entries = {}
    for i in range(n):
        for j in range(i, n):
            between = {
                z
                for z in range(n)
                if (le[i][z] and le[z][j]) or (le[j][z] and le[z][i])
            }
            entries[(i, j)] = between | {i, j}
    return TransitTable(list(range(n)), entries, name="poset")


class TestCgImpliesConnected:
    def test_on_random_posets_and_graphs(self):
        rng = random.Random(7)
        tables = [random_poset_table(rng, rng.randint(3, 6)) for _ in range(12)]
        for _ in range(6):
            n = rng.randint(3, 6)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            g = SimpleGraph(list(range(n)), edges)
            tables.append(table_from_interval(g))
        tables.append(table_from_rset(1, B3))
        tables.append(table_from_closure(2, B3))
        seen_cg = 0
        for table in tables:
            if check_axiom(table, "CG").holds:
                seen_cg += 1
                from xoverlab.graphs import is_connected

                assert is_connected(table.underlying_graph()), table.name
        assert seen_cg >= 1  # the sweep must actually exercise the implication
