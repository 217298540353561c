import itertools
import sys
import types

import pytest

from motzkin import oracle, sequences
from motzkin.errors import DomainViolationError, NotCanonicalError, RangeTooLargeError
from motzkin.word_model import parse


def test_enumerate_small_ranges():
    assert [str(w) for w in oracle.enumerate_range(1)] == ["0"]
    assert [str(w) for w in oracle.enumerate_range(2)] == ["()"]
    assert [str(w) for w in oracle.enumerate_range(3)] == ["(0)", "()0"]
    assert [str(w) for w in oracle.enumerate_range(4)] == [
        "(00)", "(0)0", "(())", "()00", "()()"]


def test_enumerate_sizes_match_unique_counts():
    for n in range(1, 15):
        assert len(oracle.enumerate_range(n)) == sequences.unique_count(n)


def test_enumerate_guards():
    with pytest.raises(DomainViolationError):
        oracle.enumerate_range(0)
    with pytest.raises(RangeTooLargeError):
        oracle.enumerate_range(oracle.MAX_ENUM_LENGTH + 1)


def test_completions_spot_values():
    assert oracle.completions(0, 0) == 1
    assert oracle.completions(3, 1) == 5
    assert oracle.completions(5, 5) == 1
    assert oracle.completions(4, 9) == 0


def test_completions_at_ground_level_are_motzkin_numbers():
    for n in range(21):
        assert oracle.completions(n, 0) == sequences.motzkin_number(n)


def test_completions_match_exhaustive_counting():
    for r in range(8):
        for h in range(5):
            count = 0
            for candidate in itertools.product("0()", repeat=r):
                balance = h
                for char in candidate:
                    balance += 1 if char == "(" else (-1 if char == ")" else 0)
                    if balance < 0:
                        break
                else:
                    if balance == 0:
                        count += 1
            assert oracle.completions(r, h) == count


def test_completions_rejects_negative_arguments():
    with pytest.raises(DomainViolationError):
        oracle.completions(-1, 0)
    with pytest.raises(DomainViolationError):
        oracle.completions(3, -2)


@pytest.mark.parametrize("text, expected", [
    ("0", 0),
    ("()", 1),
    ("()()", 8),
    ("(0())0", 28),
    ("()0(0())0", 736),
])
def test_rank_by_counting_known_positions(text, expected):
    assert oracle.rank_by_counting(parse(text)) == expected


def test_rank_by_counting_rejects_leading_zeros():
    with pytest.raises(NotCanonicalError):
        oracle.rank_by_counting(parse("0()"))


def test_rank_by_counting_matches_enumeration_position(words_through):
    for position, w in enumerate(words_through(9)):
        assert oracle.rank_by_counting(w) == position


def _poisoned_module(name: str) -> types.ModuleType:
    module = types.ModuleType(name)

    def refuse(attr, _name=name):
        raise AssertionError(f"oracle must stay independent of {_name} (touched .{attr})")

    module.__getattr__ = refuse
    return module


def test_oracle_is_independent_of_the_formula_modules():
    """Reimport the oracle with the formula modules stubbed out: it must
    keep working, proving it never calls into them."""
    saved = {name: mod for name, mod in sys.modules.items()
             if name == "motzkin" or name.startswith("motzkin.")}
    for name in saved:
        del sys.modules[name]
    sys.modules["motzkin.weights"] = _poisoned_module("motzkin.weights")
    sys.modules["motzkin.sequences"] = _poisoned_module("motzkin.sequences")
    try:
        import motzkin.oracle as fresh

        words = fresh.enumerate_range(8)
        assert len(words) == 196
        assert fresh.completions(12, 0) == 15511
        assert fresh.rank_by_counting(words[0]) == 127
        assert fresh.rank_by_counting(words[-1]) == 322
    finally:
        for name in [n for n in sys.modules
                     if n == "motzkin" or n.startswith("motzkin.")]:
            del sys.modules[name]
        sys.modules.update(saved)
