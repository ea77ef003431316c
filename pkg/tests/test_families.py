import pytest

from crossdimer.families import (
    InvalidParams, NotGridB, TrimRectParams, assign_cross_weights,
    build_A, build_F, build_TA, build_TB, build_TR, build_aztec_rectangle,
    build_augmented_aztec, derive_params, isomorphic_by_translation,
    parse_spec, reflect, translate, weight_point,
)
from crossdimer.lattice import FULL_GRID, GRID_B
from crossdimer.matchcount import count_brute, count_fkt


def test_derive_params_examples():
    p = derive_params(9, 8, 2)
    assert (p.d, p.e, p.f) == (3, 2, 4)
    assert p.case_tall and p.perimeter == 28
    p = derive_params(5, 8, 4)
    assert (p.d, p.e, p.f) == (3, 6, 2)
    assert not p.case_tall and p.perimeter == 28


def test_derive_params_errors():
    with pytest.raises(InvalidParams):
        derive_params(1, 1, 0)
    with pytest.raises(InvalidParams):
        derive_params(9, 2, 0)   # e < 0
    with pytest.raises(InvalidParams):
        derive_params(5, 2, 2)   # d < 0


def test_aztec_rectangle_full_grid():
    g = build_aztec_rectangle(FULL_GRID, 2, 2)
    assert len(g) == 12
    assert count_fkt(g) == 8
    assert count_fkt(build_aztec_rectangle(FULL_GRID, 2, 3)) == 0


def test_augmented_examples():
    assert count_fkt(build_augmented_aztec(FULL_GRID, 1, 1)) == 3
    assert count_fkt(build_augmented_aztec(FULL_GRID, 2, 2)) == 13
    assert count_fkt(build_augmented_aztec(FULL_GRID, 1, 2)) == 5


def test_family_example_counts():
    assert count_fkt(build_A(1, 9, 8, 2)) == 302_500_000_000
    assert count_fkt(build_F(1, 5, 8, 4)) == 48_000_000_000_000


def test_family_invalid():
    with pytest.raises(InvalidParams):
        build_A(1, 1, 1, 0)


def test_families_balanced():
    for (a, b, c) in ((2, 2, 0), (9, 8, 2), (5, 8, 4), (3, 4, 2)):
        for i in (1, 2, 3):
            assert build_A(i, a, b, c).is_balanced()
            assert build_F(i, a, b, c).is_balanced()


def test_tr_values():
    assert count_fkt(build_TR(1, 2)) == 100
    assert count_fkt(build_TR(2, 4)) == 12_100_000_000
    with pytest.raises(InvalidParams):
        build_TR(2, 3)


def test_tr_b_independence():
    assert count_fkt(build_TR(1, 2)) == count_fkt(build_TR(1, 3)) \
        == count_fkt(build_TR(1, 4)) == 100


def test_trim_rect_params_constraint():
    with pytest.raises(InvalidParams):
        TrimRectParams(5, 7, 1, 1, variant="TA")
    TrimRectParams(5, 7, 4, 3, variant="TA")


def test_ta_tb_counts():
    assert count_fkt(build_TA(TrimRectParams(5, 7, 4, 3, variant="TA"))) \
        == 1_125_000_000
    assert count_fkt(build_TB(TrimRectParams(5, 7, 4, 3, variant="TB"))) \
        == 72_000_000


def test_vertical_reflection_count_identities():
    # mirroring preserves counts, and the mirrored family count equals the
    # partner family's count at (f, e, d)
    for (a, b, c) in ((1, 2, 1), (5, 8, 4), (0, 2, 1)):
        p = derive_params(a, b, c)
        if p.case_tall:
            continue
        for i in (1, 2, 3):
            left = reflect(build_A(i, a, b, c), "vertical")
            right = build_F(4 - i, p.f, p.e, p.d)
            assert count_fkt(left) == count_fkt(right), (i, a, b, c)
            assert left.is_balanced() == right.is_balanced()


def test_horizontal_reflection_count_identities():
    for (a, b, c) in ((3, 2, 0), (9, 8, 2)):
        p = derive_params(a, b, c)
        assert p.case_tall
        for i, j in ((1, 1), (2, 3), (3, 2)):
            left = reflect(build_A(i, a, b, c), "horizontal")
            right = build_A(j, b, a, p.f)
            assert count_fkt(left) == count_fkt(right), (i, a, b, c)


def test_double_reflection_is_translation():
    g = build_A(1, 2, 2, 0)
    gg = reflect(reflect(g, "vertical"), "vertical")
    assert isomorphic_by_translation(g, gg)
    hh = reflect(reflect(g, "horizontal"), "horizontal")
    assert isomorphic_by_translation(g, hh)


def test_weights_unit_point_matches_unweighted():
    g = build_A(1, 2, 2, 0)
    gw = assign_cross_weights(g, weight_point(1, 1, 1))
    assert count_brute(gw) == count_brute(g) == 5


def test_weights_periodic():
    g = build_F(1, 2, 2, 0)
    w = weight_point(3, 5, 7)
    shifted = translate(g, 4, 0)
    a = assign_cross_weights(g, w)
    b = assign_cross_weights(shifted, w)
    assert count_brute(a) == count_brute(b)


def test_weights_reject_full_grid():
    g = build_aztec_rectangle(FULL_GRID, 2, 2)
    with pytest.raises(NotGridB):
        assign_cross_weights(g, weight_point(1, 1, 1))


def test_parse_spec_round_trip():
    assert count_fkt(parse_spec("TR:1,2")) == 100
    assert count_fkt(parse_spec("AR:2,2@full")) == 8
    assert count_fkt(parse_spec("AAR:2,2@full")) == 13
    assert count_fkt(parse_spec("A1:9,8,2")) == 302_500_000_000
    assert count_fkt(parse_spec("TA:5,7,4,3")) == 1_125_000_000
    with pytest.raises(InvalidParams):
        parse_spec("XX:1,2")
    with pytest.raises(InvalidParams):
        parse_spec("A1:1")
