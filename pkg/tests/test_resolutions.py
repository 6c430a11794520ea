import pytest

from conicgin.errors import DomainError, EmptyTable, UnsupportedCase
from conicgin.resolutions import (
    BettiTable,
    base_resolution,
    betti_from_json_dict,
    betti_to_json_dict,
    catalisano_resolve,
    catalisano_step,
    closed_form_resolution,
    consecutive_cancellation_reachable,
    extremal_shifts,
    hf_from_betti,
    hilbert_burch_of_gin,
    predicted_extremal_shifts,
)
from conicgin.staircase import GinStaircase

# supported closed-form grid: (r, list of m)
CLOSED_GRID = [(4, [1, 2, 3, 4, 5, 6]), (6, [1, 2, 3, 4, 5, 6]),
               (8, [1, 2, 3, 4, 5, 6]), (5, [2, 4, 6]), (7, [2, 4, 6])]


def test_table_validation():
    with pytest.raises(ValueError):
        BettiTable((2, 2), (4, 4))  # |f0| != |f1| + 1
    with pytest.raises(ValueError):
        BettiTable((2, 2), (2,))  # syzygy shift not above initial degree
    table = BettiTable((3, 2, 2), (4, 3))
    assert table.f0 == (2, 2, 3)  # stored sorted


def test_catalisano_step_examples():
    base = base_resolution()
    assert base == BettiTable((0,), ())
    step1 = catalisano_step(base, 4, 1)
    assert step1 == BettiTable((2, 2), (4,))
    assert catalisano_step(step1, 4, 2) == BettiTable((4, 4, 4), (6, 6))
    assert catalisano_step(base, 5, 1) == BettiTable((2, 3, 3), (4, 4))
    with pytest.raises(DomainError):
        catalisano_step(base, 3, 1)
    with pytest.raises(DomainError):
        catalisano_step(base, 4, 0)


def test_catalisano_resolve_examples():
    assert catalisano_resolve(4, 0) == base_resolution()
    assert catalisano_resolve(4, 2) == BettiTable((4, 4, 4), (6, 6))
    assert catalisano_resolve(5, 2) == BettiTable((4, 5, 5, 5), (6, 6, 7))
    with pytest.raises(DomainError):
        catalisano_resolve(3, 2)


def test_closed_form_examples():
    assert closed_form_resolution(4, 2) == BettiTable((4, 4, 4), (6, 6))
    assert closed_form_resolution(5, 2) == BettiTable((4, 5, 5, 5), (6, 6, 7))
    assert closed_form_resolution(3, 2) == BettiTable((3, 4, 4, 4), (5, 5, 5))


def test_closed_form_unsupported():
    for (r, m) in [(5, 3), (7, 1), (3, 1), (3, 3), (2, 1), (2, 4), (4, 0)]:
        with pytest.raises(UnsupportedCase):
            closed_form_resolution(r, m)


def test_extremal_shifts_examples():
    assert extremal_shifts(BettiTable((2, 2), (4,))) == (2, 4)
    assert extremal_shifts(BettiTable((4, 5, 5, 5), (6, 6, 7))) == (4, 7)
    assert extremal_shifts(BettiTable((3, 4, 4, 4), (5, 5, 5))) == (3, 5)
    with pytest.raises(EmptyTable):
        extremal_shifts(base_resolution())


def test_predicted_extremal_shifts():
    assert predicted_extremal_shifts(6, 3) == (6, 11)
    assert predicted_extremal_shifts(7, 2) == (4, 9)
    assert predicted_extremal_shifts(3, 4) == (6, 9)
    for (r, m) in [(3, 3), (5, 1), (2, 1), (2, 2)]:
        with pytest.raises(UnsupportedCase):
            predicted_extremal_shifts(r, m)


def test_hilbert_burch_examples():
    assert hilbert_burch_of_gin(GinStaircase(2, (3, 1))) == \
        BettiTable((3, 2, 2), (4, 3))
    assert hilbert_burch_of_gin(GinStaircase(1, (1,))) == BettiTable((1, 1), (2,))
    assert hilbert_burch_of_gin(GinStaircase(4, (5, 4, 2, 1))) == \
        BettiTable((5, 5, 4, 4, 4), (6, 6, 5, 5))


def test_cancellation_examples():
    assert consecutive_cancellation_reachable(
        BettiTable((3, 2, 2), (4, 3)), BettiTable((2, 2), (4,))) == [3]
    table = BettiTable((4, 5, 5, 5), (6, 6, 7))
    assert consecutive_cancellation_reachable(table, table) == []
    assert consecutive_cancellation_reachable(
        BettiTable((2, 2), (4,)), BettiTable((3, 3), (6,))) is None
    # equal shift counts but differences mismatch between f0 and f1
    assert consecutive_cancellation_reachable(
        BettiTable((2, 3, 3), (4, 4)), BettiTable((2, 3), (4,))) is None


def test_hf_from_betti_examples():
    assert hf_from_betti(BettiTable((2, 2), (4,)), 2) == 2
    assert hf_from_betti(BettiTable((3, 4, 4, 4), (5, 5, 5)), 3) == 1
    assert hf_from_betti(BettiTable((1, 1), (2,)), 0) == 0
    with pytest.raises(ValueError):
        hf_from_betti(base_resolution(), -1)


def test_recursion_matches_closed_form_on_grid():
    for r, ms in CLOSED_GRID:
        for m in ms:
            assert catalisano_resolve(r, m) == closed_form_resolution(r, m), (r, m)


def test_extremal_agreement_on_grid():
    cells = [(r, m) for r, ms in CLOSED_GRID for m in ms]
    cells += [(3, m) for m in (2, 4, 6, 8)]
    for r, m in cells:
        assert extremal_shifts(closed_form_resolution(r, m)) == \
            predicted_extremal_shifts(r, m), (r, m)


def test_rank_condition_preserved():
    for r, ms in CLOSED_GRID:
        for m in ms:
            table = catalisano_resolve(r, m)
            assert len(table.f0) == len(table.f1) + 1


def test_double_step_matches_sketch_for_odd_r():
    # two recursion steps t-1 (odd, rt odd) then t (even, rt even) amount to:
    # shift the I^(t-2) table by 4, adjoin R^2 at (r(t-1)+1)/2 + 3 and R at
    # rt/2 + 2 to the syzygies, R^2 at (r(t-1)+1)/2 + 2 and R at rt/2 to the
    # generators
    for r in (5, 7, 9):
        prev = base_resolution()
        for t in (2, 4, 6):
            two_steps = catalisano_step(catalisano_step(prev, r, t - 1), r, t)
            mid = (r * (t - 1) + 1) // 2
            f1 = [u + 4 for u in prev.f1] + [mid + 3, mid + 3, r * t // 2 + 2]
            f0 = [d + 4 for d in prev.f0] + [mid + 2, mid + 2, r * t // 2]
            assert two_steps == BettiTable(tuple(f0), tuple(f1)), (r, t)
            prev = two_steps


def test_betti_json_roundtrip():
    table = closed_form_resolution(3, 4)
    doc = betti_to_json_dict(table)
    assert doc["f0"][0] == {"shift": 6, "mult": 1}
    assert betti_from_json_dict(doc) == table
