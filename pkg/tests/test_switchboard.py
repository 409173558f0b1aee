import pytest

from golden_data import CYW32_COLUMNS, CYW32_TABLEAUX, CYW33_COMPONENTS
from suprschur.alphabet_words import enumerate_cyw, is_shuffle_closed, natural_order, parse_word, word_str
from suprschur.errors import ConstructionFailureError
from suprschur.free_algebra import NCPoly, kron_ideal, kronknuth_ideal, perp_contains
from suprschur.switchboard import (
    KNUTH,
    ROTATION,
    Switch,
    Switchboard,
    build_cyw_switchboard,
    build_switchboard,
    component_schur,
    components,
    find_switch_partners,
    validate_switchboard,
)

w = parse_word


def test_find_switch_partners_examples():
    partners = find_switch_partners(w("1' 1 2"), 2)
    assert (w("1' 2 1"), KNUTH) in partners
    assert (w("1 2 1'"), ROTATION) in partners
    assert find_switch_partners(w("1 2 3"), 2) == []
    with pytest.raises(ConstructionFailureError):
        find_switch_partners(w("1 2 3"), 3)


def test_figure_one_boards():
    vertices = [w("1' 1 2"), w("1' 2 1"), w("1 2 1'"), w("2 1 1'")]
    knuth_board = Switchboard(
        vertices,
        [
            Switch.make(2, KNUTH, w("1' 1 2"), w("1' 2 1")),
            Switch.make(2, KNUTH, w("1 2 1'"), w("2 1 1'")),
        ],
    )
    rotation_board = Switchboard(
        vertices,
        [
            Switch.make(2, ROTATION, w("1' 1 2"), w("1 2 1'")),
            Switch.make(2, ROTATION, w("1' 2 1"), w("2 1 1'")),
        ],
    )
    assert validate_switchboard(knuth_board)
    assert validate_switchboard(rotation_board)
    broken = Switchboard(vertices, list(knuth_board.edges)[:1])
    assert not validate_switchboard(broken)


def test_cyw_switchboard_golden():
    board = build_cyw_switchboard((3, 2), 2)
    assert len(board.vertices) == 50
    edge = next(e for e in board.edges if w("1' 1' 1 2 2") in e.words)
    assert edge.kind == ROTATION and edge.position == 3
    assert edge.other(w("1' 1' 1 2 2")) == w("1' 1 2 1' 2")
    assert validate_switchboard(board)
    # rerunning the construction is deterministic
    assert build_cyw_switchboard((3, 2), 2).edges == board.edges


def test_rotation_closure():
    for lam, d in [((3, 2), 2), ((2, 2), 1)]:
        pool = set(enumerate_cyw(lam, d))
        for word in pool:
            for i in range(2, len(word)):
                for partner, kind in find_switch_partners(word, i):
                    if kind == ROTATION:
                        assert partner in pool


def test_single_vertex_board():
    board = build_cyw_switchboard((1,), 0)
    assert len(board.vertices) == 1 and not board.edges
    assert component_schur(board) == [{(1,): 1}]


def test_components_and_schur_golden():
    board = build_cyw_switchboard((3, 3), 2)
    comps = components(board)
    assert len(comps) == 4
    expansions = component_schur(board)
    expected = [dict(f) for f, _ in CYW33_COMPONENTS]
    assert sorted(map(sorted, (e.items() for e in expansions))) == sorted(map(sorted, (e.items() for e in expected)))
    # the displayed tableau reading words sit in the matching component
    for expansion, pairs in CYW33_COMPONENTS:
        words = {w(word) for _, word in pairs}
        matching = [comp for comp in comps if words <= set(comp)]
        assert len(matching) == 1
        idx = comps.index(matching[0])
        assert expansions[idx] == expansion


def test_board_indicator_is_perp():
    for lam, d in [((3, 2), 2), ((3, 3), 2), ((2, 2), 2)]:
        board = build_cyw_switchboard(lam, d)
        assert perp_contains(kronknuth_ideal(2), board.indicator())
        for comp in components(board):
            assert perp_contains(kronknuth_ideal(2), NCPoly({v: 1 for v in comp}))


def test_greedy_board_on_column_subsets():
    column_sets = [
        [w(word) for word in CYW32_COLUMNS[0]],
        [w(word) for col in CYW32_COLUMNS[1:3] for word in col],
        [w(word) for col in CYW32_COLUMNS[3:5] for word in col],
    ]
    for vertices in column_sets:
        assert is_shuffle_closed(vertices)
        gamma = NCPoly({v: 1 for v in vertices})
        assert perp_contains(kron_ideal(2), gamma)
        board = build_switchboard(vertices)
        assert validate_switchboard(board)


def test_columns_partition_the_vertex_set():
    words = {word_str(v) for v in enumerate_cyw((3, 2), 2)}
    listed = [word for col in CYW32_COLUMNS for word in col]
    assert len(listed) == 50 and set(listed) == words
    outlined = {text for _, text in CYW32_TABLEAUX}
    assert outlined <= set(listed)


def test_dot_and_json_export(tmp_path):
    board = build_cyw_switchboard((2, 1), 1)
    dot = board.to_dot()
    assert dot.startswith("graph switchboard {") and dot.rstrip().endswith("}")
    assert '--' in dot and 'label="~' in dot or 'label="' in dot
    payload = board.to_json()
    assert '"vertices"' in payload and '"edges"' in payload


def test_missing_partner_fails_loudly():
    vertices = [w("1' 1 2")]  # its required partners are absent
    with pytest.raises(ConstructionFailureError):
        build_switchboard(vertices)
