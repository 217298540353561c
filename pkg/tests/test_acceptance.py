"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
go by; without -s they still show up for any failing criterion.
"""

import time

from motzkin import oracle, pair_arith, sequences, weights
from motzkin.errors import DomainViolationError
from motzkin.word_model import Word, parse

from arith_enumeration import defined_applications
from reference_table import ROWS

UNIQUE = [1, 1, 2, 5, 12, 30, 76, 196, 512, 1353, 3610, 9713, 26324, 71799]
DELTA = [0, 1, 3, 8, 21, 55, 145, 385, 1030, 2775, 7525, 20526, 56288]
DELTA_PRIME = [0, 1, 4, 13, 39, 113, 322, 910, 2562, 7203, 20251, 56980, 160524]

LISTING = ["0", "()", "(0)", "()0", "(00)", "(0)0", "(())", "()00", "()()",
           "(000)", "(00)0", "(0())", "(0)00"]


def _report(label, failures, detail, started):
    elapsed = time.perf_counter() - started
    status = "FAIL" if failures else "PASS"
    print(f"{label}: {status} ({detail}; {elapsed:.2f}s)")
    assert not failures, f"{label}: {failures[:3]}"


def test_criterion_1_sequence_fidelity():
    started = time.perf_counter()
    failures = []
    if [sequences.unique_count(n) for n in range(1, 15)] != UNIQUE:
        failures.append("unique_count(1..14) mismatch")
    if [sequences.delta(k) for k in range(1, 14)] != DELTA:
        failures.append("delta(1..13) mismatch")
    if [sequences.delta_prime(k) for k in range(2, 15)] != DELTA_PRIME:
        failures.append("delta_prime(2..14) mismatch")
    _report("criterion-1 sequence-fidelity", failures, "40 published values", started)


def test_criterion_2_nest_weight_table_reproduction():
    started = time.perf_counter()
    failures = []
    cells_checked = 0
    for no, n, k, word, m_k, cells in ROWS:
        if sequences.motzkin_number(k) != m_k:
            failures.append(f"row {no}: M_k")
        for s, expected in enumerate(cells):
            cells_checked += 1
            if expected is None:
                try:
                    weights.pair_nest_weight(n, k, s)
                    failures.append(f"row {no}: order {s} should be undefined")
                except DomainViolationError:
                    pass
            elif weights.pair_nest_weight(n, k, s) != expected:
                failures.append(f"row {no}: order {s}")
    _report("criterion-2 nest-weight-table", failures,
            f"46 rows, {cells_checked} cells", started)


def test_criterion_3_worked_examples():
    started = time.perf_counter()
    failures = []
    for text, expected in [("(0())0", 28), ("()0(0())0", 736), ("((00)0(0()))", 9763)]:
        got = weights.rank(parse(text))
        if got != expected:
            failures.append(f"rank({text}) = {got}, expected {expected}")
    for position, text in enumerate(LISTING):
        if weights.rank(parse(text)) != position:
            failures.append(f"rank({text}) != {position}")
        if weights.unrank(position) != Word(text):
            failures.append(f"unrank({position}) != {text}")
    _report("criterion-3 worked-examples", failures,
            "3 large examples + listing positions 0..12", started)


def test_criterion_4_oracle_equivalence(words_through):
    started = time.perf_counter()
    failures = []
    words = words_through(12)
    if len(words) != sequences.motzkin_number(12):
        failures.append(f"population is {len(words)}, expected M_12")
    if sequences.motzkin_number(12) != 15511 or sequences.motzkin_number(11) != 5798:
        failures.append("M_11/M_12 do not match their published values")
    for position, w in enumerate(words):
        if not weights.rank(w) == oracle.rank_by_counting(w) == position:
            failures.append(f"{w} at position {position}")
    _report("criterion-4 oracle-equivalence", failures,
            f"{len(words)} words, formula == counting == position", started)


def test_criterion_5_bijection(words_through):
    started = time.perf_counter()
    failures = []
    words = words_through(12)
    for w in words:
        if weights.unrank(weights.rank(w)) != w:
            failures.append(f"unrank(rank({w})) != {w}")
    for i in range(sequences.motzkin_number(12)):
        if weights.rank(weights.unrank(i)) != i:
            failures.append(f"rank(unrank({i})) != {i}")
    _report("criterion-5 bijection", failures,
            f"{len(words)} words and {sequences.motzkin_number(12)} indices", started)


def test_criterion_6_partial_arithmetic_laws(words_through):
    started = time.perf_counter()
    failures = []
    zero = Word("0")
    applications = 0
    for x in words_through(10):
        if pair_arith.padd(x, zero) != x or pair_arith.psub(x, zero) != x:
            failures.append(f"identity laws fail for {x}")
        if pair_arith.psub(x, x) != zero:
            failures.append(f"{x} minus itself is not 0")
    for z in words_through(10):
        rank_z = oracle.rank_by_counting(z)
        for x, y in defined_applications(z):
            applications += 1
            if pair_arith.padd(x, y) != z or pair_arith.padd(y, x) != z:
                failures.append(f"padd does not rebuild {z}")
                continue
            if oracle.rank_by_counting(x) + oracle.rank_by_counting(y) != rank_z:
                failures.append(f"rank additivity fails for {x} + {y}")
            if pair_arith.psub(z, x) != y or pair_arith.psub(z, y) != x:
                failures.append(f"subtraction does not invert {x} + {y}")
    _report("criterion-6 partial-arithmetic-laws", failures,
            f"{applications} defined applications, result length <= 10", started)


def test_criterion_7_derivative_identities():
    started = time.perf_counter()
    failures = []
    for n in range(3, 21):
        if weights.pair_nest_weight(n, n - 1, n - 2) != n - 1:
            failures.append(f"deepest order of ({n}, {n - 1})")
        if weights.pair_nest_weight(n, 2, 1) != sequences.unique_count(n):
            failures.append(f"first derivative of ({n}, 2)")
    residuals = 0
    for n in range(2, 13):
        for k in range(1, n):
            if k >= 2:
                residuals += 1
                lhs = (weights.pair_nest_weight(n, k, 1) + weights.pair_nest_weight(n, k, 0)
                       + sequences.motzkin_number(k))
                if lhs != weights.pair_nest_weight(n + 1, k + 1, 0):
                    failures.append(f"first-order recurrence at ({n}, {k})")
            for s in range(1, k - 1):
                residuals += 1
                lhs = (weights.pair_nest_weight(n, k, s + 1) + weights.pair_nest_weight(n, k, s)
                       + weights.pair_nest_weight(n, k, s - 1))
                if lhs != weights.pair_nest_weight(n + 1, k + 1, s):
                    failures.append(f"order-{s + 1} recurrence at ({n}, {k})")
    _report("criterion-7 derivative-identities", failures,
            f"36 closed forms + {residuals} recurrence residuals", started)


def test_criterion_8_range_extrema():
    started = time.perf_counter()
    failures = []
    for n in range(2, 15):
        extrema = weights.range_extrema(n)
        if weights.rank(extrema.min_word) != sequences.motzkin_number(n - 1):
            failures.append(f"min of length {n}")
        if weights.rank(extrema.max_word) != sequences.motzkin_number(n) - 1:
            failures.append(f"max of length {n}")
    if weights.range_extrema(9).max_weight != 834:
        failures.append("max weight of length 9 is not 834")
    _report("criterion-8 range-extrema", failures, "lengths 2..14", started)
