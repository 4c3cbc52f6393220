import numpy as np
import pytest

from sparsestereo.reconstruct import PeekConfig, peek_fill, propagate_rows


def row(*values):
    return np.array([values], dtype=np.int32)


def test_propagate_fill_between_equal_pairs_and_borders():
    out = propagate_rows(row(4, -1, -1, 7, -1, 7, -1, -1, 2))
    assert list(out[0]) == [4, 4, 4, 7, 7, 7, 2, 2, 2]


def test_propagate_leaves_gap_between_unequal_pair():
    out = propagate_rows(row(3, -1, 5, -1, 6, -1, 3))
    assert list(out[0]) == [3, 3, 5, -1, 6, 3, 3]


def test_propagate_fully_known_row_unchanged():
    r = row(1, 2, 3, 2, 1)
    assert (propagate_rows(r) == r).all()


def test_propagate_requires_known_border_columns():
    with pytest.raises(ValueError):
        propagate_rows(row(-1, 2, 3))
    with pytest.raises(ValueError):
        propagate_rows(row(1, 2, -1))


def test_propagate_preserves_known_cells_and_value_set():
    rng = np.random.default_rng(0)
    for _ in range(200):
        h, w = int(rng.integers(1, 6)), int(rng.integers(2, 12))
        disp = rng.integers(-1, 6, size=(h, w)).astype(np.int32)
        disp[:, 0] = rng.integers(0, 6, size=h)
        disp[:, -1] = rng.integers(0, 6, size=h)
        out = propagate_rows(disp)
        known = disp > -1
        assert (out[known] == disp[known]).all()
        for orig_row, new_row in zip(disp, out):
            present = set(orig_row[orig_row > -1])
            filled = set(new_row[new_row > -1])
            assert filled <= present
        # idempotence
        assert (propagate_rows(out) == out).all()


def test_propagate_rows_independent():
    rng = np.random.default_rng(1)
    disp = rng.integers(-1, 5, size=(6, 10)).astype(np.int32)
    disp[:, 0] = 1
    disp[:, -1] = 2
    out = propagate_rows(disp)
    perm = rng.permutation(6)
    assert (propagate_rows(disp[perm])[np.argsort(perm)] == out).all()


def test_peek_mode_and_tie_rule():
    disp = np.array([[3, 3, 5],
                     [3, -1, 5]], dtype=np.int32)
    out = peek_fill(disp, PeekConfig(3))
    assert out[1, 1] == 3  # multiset {3,3,5,3,5} -> 3

    disp = np.array([[3, 3, 5],
                     [5, -1, 5],
                     [3, 9, 9]], dtype=np.int32)
    # window holds {3,3,5,5,5,3,9,9}: 3 and 5 tie with three each -> smallest
    out = peek_fill(disp, PeekConfig(3))
    assert out[1, 1] == 3


def test_peek_no_sentinels_unchanged():
    disp = np.arange(12, dtype=np.int32).reshape(3, 4)
    assert (peek_fill(disp, PeekConfig(3)) == disp).all()


def test_peek_earlier_fills_visible():
    # (0,1) is filled first; (0,2)'s window then already contains the fill
    disp = np.array([[2, -1, -1],
                     [2, 2, 2]], dtype=np.int32)
    out = peek_fill(disp, PeekConfig(3))
    assert (out == 2).all()


def test_peek_config_validation():
    with pytest.raises(ValueError):
        PeekConfig(4)
    with pytest.raises(ValueError):
        PeekConfig(1)


def test_completeness_after_propagation():
    rng = np.random.default_rng(2)
    for _ in range(200):
        h, w = int(rng.integers(1, 8)), int(rng.integers(2, 14))
        disp = np.where(rng.random((h, w)) < 0.3,
                        rng.integers(0, 8, size=(h, w)), -1).astype(np.int32)
        disp[:, 0] = rng.integers(0, 8, size=h)
        disp[:, -1] = rng.integers(0, 8, size=h)
        out = peek_fill(propagate_rows(disp), PeekConfig(3))
        assert (out > -1).all()
        assert out.max() <= 7
