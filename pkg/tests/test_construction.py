from itertools import combinations_with_replacement

from gallai_ramsey import (
    build_lower_bound_coloring,
    contains_required,
    find_mono,
    is_gallai,
    path,
    predicted_gr,
    sorted_spec,
)
from gallai_ramsey.construction import layer_sizes, layers


def test_two_path_targets_structure():
    # paths on 5 vertices in both colors: first block K_4 in color 1,
    # one extra vertex joined to everything in color 2
    spec = sorted_spec([1, 1], n=3)
    c = build_lower_bound_coloring(spec)
    assert c.n == 5
    assert layer_sizes(spec) == [4, 1]
    assert find_mono(c, 1, path(5)) is None
    assert find_mono(c, 2, path(5)) is None


def test_cycle_pair_example():
    spec = sorted_spec([2, 2], n=3)
    c = build_lower_bound_coloring(spec)
    assert c.n == 7
    blocks = layers(spec)
    assert [len(b) for b in blocks] == [5, 2]
    for u in blocks[0]:
        for v in blocks[0]:
            if u < v:
                assert c.color(u, v) == 1
    for u in blocks[1]:
        for v in range(c.n):
            if v not in blocks[1]:
                assert c.color(u, v) == 2
    assert contains_required(c, spec.targets()) is None


def test_three_cycles_nine_vertices():
    spec = sorted_spec([2, 2, 2], n=3)
    c = build_lower_bound_coloring(spec)
    assert c.n == 9
    assert layer_sizes(spec) == [5, 2, 2]
    assert is_gallai(c) is True
    assert contains_required(c, spec.targets()) is None


def test_empty_layer_is_skipped():
    # second color never appears: its block is empty
    spec = sorted_spec([3, 0], n=4)
    c = build_lower_bound_coloring(spec)
    assert c.n == 7
    assert set(c.colors) == {1}
    assert contains_required(c, spec.targets()) is None


def test_vertex_count_is_predicted_minus_one():
    for n in (3, 4):
        for k in (2, 3, 4):
            for idx in combinations_with_replacement(range(n), k):
                spec = sorted_spec(sorted(idx, reverse=True), n=n)
                c = build_lower_bound_coloring(spec)
                assert c.n == predicted_gr(spec) - 1


def test_lower_bound_soundness_sample():
    # full sweep lives in the acceptance suite; spot-check here
    for n, idx, head in [
        (3, (2, 1, 0), "cycle"),
        (3, (2, 2, 2, 2), "cycle"),
        (4, (3, 3, 1), "cycle"),
        (4, (3, 2, 2, 0), "path"),
        (4, (3, 3, 3, 3, 3, 3), "cycle"),
    ]:
        spec = sorted_spec(idx, n=n, head=head)
        c = build_lower_bound_coloring(spec)
        assert is_gallai(c) is True
        assert contains_required(c, spec.targets()) is None
