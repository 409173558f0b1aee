from itertools import permutations

import pytest

from suprschur.alphabet_words import enumerate_cyw, natural_order
from suprschur.errors import InvalidParameterError, ResourceLimitError
from suprschur.kronecker import (
    character_table,
    class_size,
    g_hook_oracle,
    g_hook_rule,
    g_oracle,
    g_sum_oracle,
    g_sum_rule,
    hook,
)
from suprschur.tableaux import insert, partitions_of, sqread


def test_character_table_known_values():
    table = character_table(2)
    assert table.chi((2,), (1, 1)) == 1 and table.chi((2,), (2,)) == 1
    assert table.chi((1, 1), (1, 1)) == 1 and table.chi((1, 1), (2,)) == -1
    table = character_table(3)
    assert table.chi((2, 1), (1, 1, 1)) == 2
    assert table.chi((2, 1), (2, 1)) == 0
    assert table.chi((2, 1), (3,)) == -1


def test_orthogonality():
    for n in range(1, 9):
        assert character_table(n).check_orthogonality()


def test_class_sizes():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2


def test_budget():
    with pytest.raises(ResourceLimitError):
        character_table(13)


def test_g_oracle_examples():
    values = {nu: g_oracle((3, 1), (2, 1, 1), nu) for nu in partitions_of(4)}
    assert values == {
        (4,): 0,
        (3, 1): 1,
        (2, 2): 1,
        (2, 1, 1): 1,
        (1, 1, 1, 1): 1,
    }
    assert g_oracle((2, 1), (2, 1), (2, 1)) == 1
    for lam in partitions_of(4):
        for nu in partitions_of(4):
            assert g_oracle((4,), lam, nu) == (1 if lam == nu else 0)
    with pytest.raises(InvalidParameterError):
        g_oracle((2,), (1, 1), (3,))


def test_g_oracle_symmetry():
    for n in (3, 4, 5):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    base = g_oracle(lam, mu, nu)
                    for a, b, c in permutations((lam, mu, nu)):
                        assert g_oracle(a, b, c) == base


def test_hook_rule_examples():
    assert g_hook_rule((3, 2), 2, (3, 1, 1)) == 2
    assert g_sum_rule((3, 2), 2, (3, 1, 1)) == 3
    assert g_sum_rule((3, 2), 2, (2, 1, 1, 1)) == 1
    assert g_hook_rule((3, 1), 2, (2, 2)) == 1
    for nu in partitions_of(4):
        assert g_hook_rule(nu, 0, nu) == 1  # hook with no leg is the one-row shape
        for other in partitions_of(4):
            if other != nu:
                assert g_hook_rule(nu, 0, other) == 0
    assert g_sum_rule((2, 1), 0, (2, 1)) == 1
    with pytest.raises(InvalidParameterError):
        g_hook_rule((2, 1), 3, (2, 1))
    with pytest.raises(InvalidParameterError):
        hook(3, 3)


def test_hook_rules_match_oracle_small():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for nu in partitions_of(n):
                for d in range(n):
                    assert g_hook_rule(lam, d, nu) == g_hook_oracle(lam, d, nu)
                for d in range(n + 1):
                    assert g_sum_rule(lam, d, nu) == g_sum_oracle(lam, d, nu)


def test_bar_removal_bijection():
    # removing the bar from a final barred letter matches the word sets with
    # one fewer bar, and preserves being a diagonal reading word
    for lam in [(2, 1), (2, 2), (3, 1)]:
        n = sum(lam)
        order = natural_order(len(lam))
        for d in range(n):
            plus = [w for w in enumerate_cyw(lam, d + 1) if w[-1].barred]
            minus = {w for w in enumerate_cyw(lam, d) if not w[-1].barred}
            stripped = {w[:-1] + (type(w[-1])(w[-1].value, False),) for w in plus}
            assert stripped == minus
            for word in plus:
                image = word[:-1] + (type(word[-1])(word[-1].value, False),)
                assert (sqread(insert(word, order)) == word) == (sqread(insert(image, order)) == image)
