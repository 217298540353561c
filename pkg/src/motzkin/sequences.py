"""Exact integer sequences behind the weight formulas.

Values are plain Python ints (arbitrary precision) memoized in module
tables that grow on demand.  Safe for concurrent readers once warmed up.
"""

from .errors import DomainViolationError

_motzkin = [1, 1]


def motzkin_number(n: int) -> int:
    """Motzkin number M_n, by the convolution recurrence.

    M_0 = M_1 = 1 and M_n = M_{n-1} + sum(M_i * M_{n-2-i} for i in 0..n-2);
    division-free, so the values stay exact at any size.
    """
    if n < 0:
        raise DomainViolationError(f"motzkin_number requires n >= 0, got {n}")
    while len(_motzkin) <= n:
        m = len(_motzkin)
        conv = sum(_motzkin[i] * _motzkin[m - 2 - i] for i in range(m - 1))
        _motzkin.append(_motzkin[m - 1] + conv)
    return _motzkin[n]


def unique_count(n: int) -> int:
    """Number of canonical words of length n (the size of the n-range).

    U_1 = 1 (the single word "0"); U_n = M_n - M_{n-1} for n >= 2, which
    removes the words inherited from length n-1 by a leading zero.
    """
    if n < 1:
        raise DomainViolationError(f"unique_count requires n >= 1, got {n}")
    if n == 1:
        return 1
    return motzkin_number(n) - motzkin_number(n - 1)


def delta(k: int) -> int:
    """Offset added to M_{n-1} in the plain pair weight: U_{k+1} - M_{k-1}."""
    if k < 1:
        raise DomainViolationError(f"delta requires k >= 1, got {k}")
    return unique_count(k + 1) - motzkin_number(k - 1)


def delta_prime(k: int) -> int:
    """Offset added to U_n in first-order nest-weights: M_{k+2} - 2M_{k+1} - U_k."""
    if k < 2:
        raise DomainViolationError(f"delta_prime requires k >= 2, got {k}")
    return motzkin_number(k + 2) - 2 * motzkin_number(k + 1) - unique_count(k)
