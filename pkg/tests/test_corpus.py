import pytest

from sameorder import (
    BadParameter,
    builtin_corpus,
    eval_expr,
    expr_order,
    from_cayley_table,
    parse_group_expr,
    render,
)


def labels(max_order):
    return [render(e) for e in builtin_corpus(max_order)]


def test_corpus_at_order_six_is_exactly_the_expected_set():
    expected = {
        "C(1)", "C(2)", "C(3)", "C(4)", "C(5)", "C(6)",
        "D(4)", "D(6)",
        "EA(2,1)", "EA(2,2)", "EA(3,1)", "EA(5,1)",
        "Sym(1)", "Sym(2)", "Sym(3)",
        "Alt(1)", "Alt(2)", "Alt(3)",
        "SL2(2)",
        "Hol(1)", "Hol(2)", "Hol(3)",
        "FrobInv(3,1,c2)",
    }
    assert set(labels(6)) == expected


def test_corpus_is_sorted_and_duplicate_free():
    entries = builtin_corpus(128)
    keys = [(expr_order(e), render(e)) for e in entries]
    assert keys == sorted(keys)
    assert len(set(render(e) for e in entries)) == len(entries)


def test_corpus_is_stable_across_runs():
    assert labels(256) == labels(256)


def test_corpus_contains_the_padded_witnesses():
    all_labels = labels(512)
    for label in (
        "Hol(8)",
        "C(2) x Hol(8)",
        "C(2) x C(2) x Hol(8)",
        "C(2) x C(2) x C(2) x Hol(8)",
        "CP(D(8),D(16))",
        "C(2) x CP(D(8),D(16))",
        "C(2) x C(2) x CP(D(8),D(16))",
    ):
        assert label in all_labels
    assert "C(2) x C(2) x Hol(8)" in labels(128)


def test_corpus_orders_respect_the_bound():
    for bound in (6, 48, 200):
        for expr in builtin_corpus(bound):
            assert expr_order(expr) <= bound


def test_expr_order_matches_evaluated_size():
    for expr in builtin_corpus(96):
        assert expr_order(expr) == eval_expr(expr).size


def test_every_corpus_group_evaluates_and_passes_full_validation():
    for expr in builtin_corpus(96):
        group = eval_expr(expr)
        assert group.label == render(expr)
        from_cayley_table(group.table, group.label, check_level="full")


def test_frobenius_parameters_are_in_family():
    for expr in builtin_corpus(512):
        label = render(expr)
        if label.startswith("FrobF"):
            p, t, q = expr.args
            assert q % 2 == 1 and (p**t - 1) % q == 0


def test_corpus_rejects_out_of_range_bounds():
    with pytest.raises(BadParameter):
        builtin_corpus(0)
    with pytest.raises(BadParameter):
        builtin_corpus(513)


def test_parseable_corpus_labels():
    for expr in builtin_corpus(64):
        assert parse_group_expr(render(expr)) == expr
