import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hjchains import (
    DeltaCase,
    IncompleteLedger,
    MissingParameter,
    bridge_degree,
    check_genT_delta_bound,
    check_main_bounds,
    correction_term,
    delta_from_case,
    discrepancies,
    expand_fraction,
    inverse_mod,
    k2_ledger,
)


def coprime_pairs(max_n):
    return (
        st.integers(2, max_n)
        .flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1)))
        .filter(lambda t: math.gcd(t[0], t[1]) == 1)
    )


class TestDiscrepancies:
    def test_examples(self):
        assert discrepancies((4,)).a == (Fraction(-1, 2),)
        assert discrepancies((2, 5)).a == (Fraction(-1, 3), Fraction(-2, 3))
        assert discrepancies((2, 2, 2)).a == (Fraction(0), Fraction(0), Fraction(0))

    def test_tridiagonal_residual_is_zero(self):
        for chain in [(2, 5), (3, 4, 2), (7, 2, 2, 3), (2, 2, 5, 2, 2)]:
            a = discrepancies(chain).a
            r = len(chain)
            for j, b in enumerate(chain):
                lhs = -b * a[j]
                if j > 0:
                    lhs += a[j - 1]
                if j < r - 1:
                    lhs += a[j + 1]
                assert lhs == b - 2

    @given(coprime_pairs(300))
    @settings(max_examples=250, deadline=None)
    def test_range_and_end_formulas(self, pair):
        n, q = pair
        chain = expand_fraction(n, q)
        a = discrepancies(chain).a
        qp = inverse_mod(n, q)
        assert all(-1 < x <= 0 for x in a)
        assert (all(x == 0 for x in a)) == all(b == 2 for b in chain)
        assert a[0] == -1 + Fraction(q + 1, n)
        assert a[-1] == -1 + Fraction(qp + 1, n)

    @given(coprime_pairs(300))
    @settings(max_examples=250, deadline=None)
    def test_cross_formula_and_bridge_identities(self, pair):
        n, q = pair
        chain = expand_fraction(n, q)
        a = discrepancies(chain).a
        qp = inverse_mod(n, q)
        assert sum(x * (b - 2) for x, b in zip(a, chain)) == sum(
            2 - b for b in chain
        ) + correction_term(n, q)
        assert -1 - a[0] - a[-1] == 1 - Fraction(2 + q + qp, n)


class TestCorrectionTerm:
    def test_examples(self):
        assert correction_term(4, 1) == 1
        assert correction_term(9, 5) == 1
        assert correction_term(19, 7) == Fraction(18, 19)

    @given(coprime_pairs(500))
    @settings(max_examples=300)
    def test_range(self, pair):
        assert 0 <= correction_term(*pair) < 2


class TestLedger:
    def test_examples(self):
        assert k2_ledger((4,), ks2=0, m=0).kw2 == 1
        assert k2_ledger((2, 2, 2), ks2=1, m=0).kw2 == 1
        assert k2_ledger((2, 5), ks2=0, m=1).kw2 == 1

    def test_kx2(self):
        led = k2_ledger((2, 5), ks2=3, m=2)
        assert led.kx2 == 1  # ks2 - m
        assert led.correction == 1


class TestDeltaTable:
    @pytest.mark.parametrize(
        "case,expected",
        [
            (DeltaCase("A"), 0),
            (DeltaCase("B1", l=5), 5),
            (DeltaCase("B2"), 1),
            (DeltaCase("C1", k=3), 4),
            (DeltaCase("C2", k=3, l=2), 5),
            (DeltaCase("D1", l=2, k=7), 9),
            (DeltaCase("D2", l=2), 3),
            (DeltaCase("D3"), 2),
        ],
    )
    def test_all_eight_cases(self, case, expected):
        assert delta_from_case(case) == expected

    def test_missing_parameter(self):
        with pytest.raises(MissingParameter):
            delta_from_case(DeltaCase("B1"))
        with pytest.raises(MissingParameter):
            delta_from_case(DeltaCase("C2", k=1))

    def test_unused_parameter_rejected(self):
        with pytest.raises(ValueError):
            delta_from_case(DeltaCase("A", l=1))

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            DeltaCase("E")


class TestMainBounds:
    def test_worked_examples(self):
        led = k2_ledger((2, 5), ks2=0, m=1, lam=Fraction(0))
        rep = check_main_bounds((2, 5), led, delta=1)
        ws = rep.checks[0]
        assert (ws.name, ws.lhs, ws.rhs, ws.holds) == ("weight-sum", 3, 5, True)

        led = k2_ledger((4,), ks2=0, m=0, lam=Fraction(0))
        ws = check_main_bounds((4,), led, delta=0).checks[0]
        assert (ws.lhs, ws.rhs, ws.slack, ws.holds) == (2, 4, 2, True)

        led = k2_ledger((2, 2, 2), ks2=1, m=0, lam=Fraction(0))
        ws = check_main_bounds((2, 2, 2), led, delta=0).checks[0]
        assert (ws.lhs, ws.rhs, ws.holds) == (0, 0, True)

    def test_requires_lambda(self):
        led = k2_ledger((2, 5), ks2=0, m=1)
        with pytest.raises(IncompleteLedger):
            check_main_bounds((2, 5), led, delta=1)

    def test_chi_checks(self):
        led = k2_ledger((2, 5), ks2=0, m=1, lam=Fraction(0), chi=1)
        rep = check_main_bounds((2, 5), led, delta=1)
        by_name = {c.name: c for c in rep.checks}
        lc = by_name["length-chi"]
        # r <= 12 chi - (4/3) kw2 - A - (1 - 1/n), A = sum(2-b) + corr = -2
        assert lc.lhs == 2
        assert lc.rhs == 12 - Fraction(4, 3) + 2 - (1 - Fraction(1, 9))
        assert lc.holds
        noe = by_name["noether"]
        assert (noe.lhs, noe.rhs, noe.holds) == (1, 4, True)

    def test_chi_absent_reports_unevaluated(self):
        led = k2_ledger((2, 5), ks2=0, m=1, lam=Fraction(0))
        rep = check_main_bounds((2, 5), led, delta=1)
        by_name = {c.name: c for c in rep.checks}
        assert by_name["length-chi"].holds is None
        assert by_name["noether"].holds is None
        assert rep.all_hold()  # unevaluated checks do not count against

    def test_record_serialisation(self):
        led = k2_ledger((2, 5), ks2=0, m=1, lam=Fraction(0))
        rec = check_main_bounds((2, 5), led, delta=1).checks[0].to_record()
        assert rec["inequality"] == "weight-sum"
        assert rec["lhs"] == "3/1"
        assert rec["slack"] == "2/1"
        assert rec["slack_decimal"] == "2.000000000000"
        assert rec["verdict"] is True


class TestGenTDeltaBound:
    def test_examples(self):
        fail = check_genT_delta_bound((2, 2, 6), 2)
        assert (fail.lhs, fail.rhs, fail.holds) == (4, 2, False)
        tight = check_genT_delta_bound((2, 2, 6), 1)
        assert (tight.lhs, tight.rhs, tight.holds) == (2, 2, True)
        trivial = check_genT_delta_bound((4,), 0)
        assert (trivial.lhs, trivial.rhs, trivial.holds) == (0, 0, True)


class TestBridgeDegree:
    def test_examples(self):
        assert bridge_degree(4, 1) == 0
        assert bridge_degree(5, 1) == Fraction(1, 11)
        assert bridge_degree(9, 5) == 0

    @given(coprime_pairs(200))
    @settings(max_examples=200, deadline=None)
    def test_extended_chain_identity(self, pair):
        # -1 - a'_1 - a'_{r+1} over the grown chain equals the closed form
        n, q = pair
        chain = expand_fraction(n, q)
        grown = (chain[0] + 1,) + chain[1:] + (2,)
        a = discrepancies(grown).a
        assert bridge_degree(n, q) == -1 - a[0] - a[-1]

    @given(coprime_pairs(300))
    @settings(max_examples=300)
    def test_sign(self, pair):
        n, q = pair
        qp = inverse_mod(n, q)
        assert (bridge_degree(n, q) > 0) == (n > 2 + q + qp)
