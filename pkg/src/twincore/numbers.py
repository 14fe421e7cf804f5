"""Exact integer combinatorics: binomials, Catalan and Fibonacci numbers.

All values come from integer recurrences (Pascal's rule, the Catalan
convolution c_{n+1} = sum c_i c_{n-i}) and every table entry is checked
against the signed 64-bit ceiling.  No floats, and no divisions except the
rational Catalan count, whose exact divisibility is asserted.
"""

from __future__ import annotations

from .errors import Int64OverflowError

INT64_MAX = 2**63 - 1

_pascal: list[list[int]] = [[1]]
_catalan: list[int] = [1]
_fibonacci: list[int] = [0, 1, 1]


def _checked(value: int, what: str) -> int:
    if abs(value) > INT64_MAX:
        raise Int64OverflowError(f"{what} = {value} exceeds the signed 64-bit range")
    return value


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    while len(_pascal) <= n:
        prev = _pascal[-1]
        row = [1]
        row.extend(_checked(prev[i - 1] + prev[i], "binomial") for i in range(1, len(prev)))
        row.append(1)
        _pascal.append(row)
    return _pascal[n][k]


def catalan(n: int) -> int:
    """Catalan number c_n, built by the convolution recurrence."""
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    while len(_catalan) <= n:
        m = len(_catalan)
        value = sum(_catalan[i] * _catalan[m - 1 - i] for i in range(m))
        _catalan.append(_checked(value, "catalan"))
    return _catalan[n]


def fibonacci(n: int) -> int:
    """Fibonacci number with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"fibonacci needs n >= 1, got {n}")
    while len(_fibonacci) <= n:
        _fibonacci.append(_checked(_fibonacci[-1] + _fibonacci[-2], "fibonacci"))
    return _fibonacci[n]


def rational_catalan(s: int, t: int) -> int:
    """C(s+t, s) / (s+t), the number of order ideals of the gap poset.

    Exact for coprime s, t; the divisibility is asserted rather than rounded.
    """
    total = binomial(s + t, s)
    if total % (s + t) != 0:
        raise ArithmeticError(f"C({s+t},{s}) is not divisible by {s+t}; need coprime s, t")
    return total // (s + t)


def checked_power(base: int, exponent: int) -> int:
    """base ** exponent with the 64-bit ceiling enforced."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    value = 1
    for _ in range(exponent):
        value = _checked(value * base, "power")
    return value


def exact_div(numerator: int, divisor: int, what: str) -> int:
    """Integer division that insists on divisibility."""
    if numerator % divisor != 0:
        raise ArithmeticError(f"{what}: {numerator} is not divisible by {divisor}")
    return numerator // divisor
