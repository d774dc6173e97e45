"""Invariant factors of finite direct sums of cyclic groups."""

from collections import defaultdict
from itertools import zip_longest
from math import prod
from typing import Iterable

from sympy import factorint


def elementary_divisors(divisors: Iterable[int]) -> dict[int, list[int]]:
    """Split each ``Z/d`` into prime-power summands.

    Returns:
        Map prime -> exponents in decreasing order. Units and zeros are dropped.
    """
    exponents: dict[int, list[int]] = defaultdict(list)
    for d in divisors:
        d = abs(int(d))
        if d <= 1:
            continue
        for p, e in factorint(d).items():
            exponents[int(p)].append(int(e))
    return {p: sorted(es, reverse=True) for p, es in sorted(exponents.items())}


def invariant_factors_from_exponents(exponents: dict[int, list[int]]) -> list[int]:
    """Recombine prime-power exponents into factors d1 | d2 | ... (ascending)."""
    columns = zip_longest(
        *[[p**e for e in es] for p, es in exponents.items()],
        fillvalue=1,
    )
    factors = [prod(column) for column in columns]
    return sorted(f for f in factors if f > 1)


def canonical_invariant_factors(divisors: Iterable[int]) -> list[int]:
    """Invariant factors of ``⊕ Z/d`` for the given d (zeros and units ignored).

    >>> canonical_invariant_factors([2, 3])
    [6]
    >>> canonical_invariant_factors([4, 2, 1, 6])
    [2, 2, 12]
    """
    return invariant_factors_from_exponents(elementary_divisors(divisors))
