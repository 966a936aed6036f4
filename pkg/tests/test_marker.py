import pytest
from hypothesis import given, settings

from anclab.core.errors import ParamError, SchemeAssertionError
from anclab.services.scheme.decoder import is_ancestor
from anclab.services.scheme.forest import enumerate_forests, gen_forest, is_ancestor_oracle, validate_forest
from anclab.services.scheme.marker import embed_forest, embed_tree, label_forest, label_stats
from anclab.services.scheme.params import (
    IntInterval,
    Triplet,
    build_params,
    decode_triplet,
    in_Uk,
    label_interval,
)
from conftest import depth_of, parent_arrays


def test_two_node_tree(p2_2, two_node_tree):
    labeling = label_forest(p2_2, two_node_tree)
    assert labeling.as_dict() == {1: 15, 2: 1}
    assert decode_triplet(p2_2, 15) == Triplet(1, 1, 1)


def test_star_of_three(p3_2, star3):
    assert label_forest(p3_2, star3).as_dict() == {1: 252, 2: 1, 3: 3}
    assert decode_triplet(p3_2, 252) == Triplet(2, 1, 4)


def test_single_node():
    P = build_params(1, 1)
    assert label_forest(P, validate_forest([0], 1)).as_dict() == {1: 1}


def test_roots_take_consecutive_points():
    P = build_params(4, 1)
    labels = label_forest(P, validate_forest([0, 0, 0, 0], 1)).as_dict()
    # c_2 = 9/4: each singleton gets floor(9/4) = 2 points
    assert labels == {1: 1, 2: 3, 3: 5, 4: 7}


def test_labels_are_distinct_and_in_range():
    P = build_params(200, 6)
    F = gen_forest(200, 6, seed=11)
    labels = label_forest(P, F).as_dict()
    assert len(set(labels.values())) == 200
    assert all(1 <= nu < P.gamma_k for nu in labels.values())


def test_spine_nodes_share_left_end():
    P = build_params(5, 5)
    F = validate_forest([0, 1, 2, 3, 4], 5)
    hook_calls = []
    label_forest(P, F, on_assign=lambda v, t, I, k: hook_calls.append((v, t)))
    spine = {v: t for v, t in hook_calls if v in (1, 2, 3)}
    assert {t.level for t in spine.values()} == {P.K}
    assert len({t.h for t in spine.values()}) == 1
    assert spine[3].j < spine[2].j < spine[1].j


def test_check_uk_instrumentation_accepts_every_assignment():
    P = build_params(300, 8)
    F = gen_forest(300, 8, seed=5)
    seen = []

    def hook(v, t, I, k):
        assert in_Uk(P, t, I, k)
        seen.append(v)

    label_forest(P, F, check_uk=True, on_assign=hook)
    assert sorted(seen) == list(F.nodes())


def test_embed_tree_inside_sub_interval():
    P = build_params(8, 4)
    F = validate_forest([0, 1, 1, 2], 3)
    size = (P.c[2].numerator * 4) // P.c[2].denominator
    I = IntInterval(10, 10 + size)
    labels = embed_tree(P, F, 1, I, 2, check_uk=True)
    assert sorted(labels) == [1, 2, 3, 4]
    assert all(decode_triplet(P, nu).level <= 2 for nu in labels.values())


def test_embed_forest_partial():
    P = build_params(8, 3)
    F = validate_forest([0, 1, 0, 3, 3], 2)
    I = IntInterval(1, 1 + (P.c[3].numerator * 3) // P.c[3].denominator)
    labels = embed_forest(P, F, [3], I, 3, check_uk=True)
    assert sorted(labels) == [3, 4, 5]
    assert is_ancestor(P, labels[3], labels[4])


def test_embed_rejects_bad_level(p2_2, two_node_tree):
    with pytest.raises(ParamError):
        embed_tree(p2_2, two_node_tree, 1, IntInterval(1, 5), 2)


def test_forest_too_large_for_family(p2_2):
    with pytest.raises(ParamError):
        label_forest(p2_2, validate_forest([0, 1, 1], 2))
    with pytest.raises(ParamError):
        label_forest(build_params(4, 2), validate_forest([0, 1, 2], 3))


def test_label_stats(p3_2, star3):
    stats = label_stats(label_forest(p3_2, star3))
    assert stats.node_count == 3
    assert stats.max_bits == 8
    assert stats.level_histogram == {0: 2, 2: 1}


@settings(max_examples=100, deadline=None)
@given(parents=parent_arrays(max_n=60))
def test_ancestry_matches_oracle(parents):
    d = depth_of(parents)
    F = validate_forest(parents, d)
    P = build_params(len(parents), d)
    labels = label_forest(P, F, check_uk=True)
    for u in F.nodes():
        for v in F.nodes():
            assert is_ancestor(P, labels[u], labels[v]) == is_ancestor_oracle(F, u, v)


@settings(max_examples=50, deadline=None)
@given(parents=parent_arrays(max_n=30))
def test_family_may_be_larger_than_forest(parents):
    d = depth_of(parents) + 2
    F = validate_forest(parents, d)
    P = build_params(4 * len(parents), d)
    labels = label_forest(P, F)
    for u in F.nodes():
        for v in F.nodes():
            assert is_ancestor(P, labels[u], labels[v]) == is_ancestor_oracle(F, u, v)


def test_interval_size_is_checked_under_check_uk():
    P = build_params(8, 4)
    F = validate_forest([0, 1, 1, 2], 3)
    size = (P.c[2].numerator * 4) // P.c[2].denominator
    with pytest.raises(SchemeAssertionError, match="interval of size"):
        embed_tree(P, F, 1, IntInterval(10, 11 + size), 2, check_uk=True)


def test_instrumented_run_assigns_the_same_labels():
    P = build_params(2000, 10)
    F = gen_forest(2000, 10, seed=21)
    plain = label_forest(P, F)
    hooked = label_forest(P, F, check_uk=True, on_assign=lambda v, t, I, k: None)
    assert plain.labels == hooked.labels


# ============================================================
# Structure of the assigned intervals
# ============================================================

def _labeled(parents):
    d = depth_of(parents)
    F = validate_forest(parents, d)
    P = build_params(len(parents), d)
    calls = {}
    labeling = label_forest(P, F, on_assign=lambda v, t, I, k: calls.__setitem__(v, (t, I, k)))
    intervals = {v: label_interval(P, labeling[v]) for v in F.nodes()}
    return F, calls, intervals


def _related(F, u, v):
    return is_ancestor_oracle(F, u, v) or is_ancestor_oracle(F, v, u)


@settings(max_examples=100, deadline=None)
@given(parents=parent_arrays(max_n=50))
def test_unrelated_nodes_get_disjoint_intervals(parents):
    F, _, intervals = _labeled(parents)
    for u in F.nodes():
        for v in range(u + 1, F.node_count + 1):
            if _related(F, u, v):
                continue
            _, lo_u, hi_u = intervals[u]
            _, lo_v, hi_v = intervals[v]
            assert hi_u <= lo_v or hi_v <= lo_u


@settings(max_examples=100, deadline=None)
@given(parents=parent_arrays(max_n=50))
def test_trees_of_a_forest_get_disjoint_slices(parents):
    F, _, intervals = _labeled(parents)
    spans = []
    for r in F.roots:
        members = F.subtree(r)
        spans.append((min(intervals[v][1] for v in members), max(intervals[v][2] for v in members)))
    spans.sort()
    for (_, hi), (lo, _) in zip(spans, spans[1:]):
        assert hi <= lo


@settings(max_examples=100, deadline=None)
@given(parents=parent_arrays(max_n=50))
def test_levels_never_increase_towards_the_leaves(parents):
    F, calls, _ = _labeled(parents)
    for v in F.nodes():
        t, I, k = calls[v]
        if t.level == 0:
            assert not F.children[v]
        p = F.parent[v]
        if not p:
            continue
        tp, Ip, kp = calls[p]
        assert t.level <= tp.level
        if t.level == tp.level:
            # same spine: one call, one left end
            assert (I, k, t.h) == (Ip, kp, tp.h)


def _check_equal_intervals(F, intervals):
    for u in F.nodes():
        for v in range(u + 1, F.node_count + 1):
            level_u, lo_u, hi_u = intervals[u]
            level_v, lo_v, hi_v = intervals[v]
            if (lo_u, hi_u) != (lo_v, hi_v):
                continue
            assert level_u != level_v
            upper, lower = (u, v) if level_u > level_v else (v, u)
            assert is_ancestor_oracle(F, upper, lower)


@settings(max_examples=100, deadline=None)
@given(parents=parent_arrays(max_n=50))
def test_equal_intervals_have_distinct_levels(parents):
    F, _, intervals = _labeled(parents)
    _check_equal_intervals(F, intervals)


@pytest.mark.parametrize("n", range(1, 6))
def test_equal_intervals_have_distinct_levels_exhaustive(n):
    for forest in enumerate_forests(n):
        F, _, intervals = _labeled(forest.raw_parents())
        _check_equal_intervals(F, intervals)
