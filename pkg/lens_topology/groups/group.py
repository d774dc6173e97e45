"""Finite groups given by multiplication tables."""

from dataclasses import dataclass
import json
from pathlib import Path
import re
from typing import Any

import numpy as np
from sympy import factorint

from lens_topology.core.abelian import invariant_factors_from_exponents
from lens_topology.core.dset import ValidationReport
from lens_topology.core.io import read_json, require_ints
from lens_topology.errors import PreconditionError, SpaceFileError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group with elements ``0..order-1``; 0 is the identity.

    ``mult[g, h]`` is the index of ``g·h``.
    """
    mult: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        table = np.array(self.mult, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise PreconditionError(f"Multiplication table must be square and non-empty, got {table.shape}")
        table.flags.writeable = False
        object.__setattr__(self, "mult", table)

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    @property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.mult == 0, axis=1)

    def inverse(self, g: int) -> int:
        return int(self.inverses[g])

    def element_order(self, g: int) -> int:
        x, k = g, 1
        while x != 0:
            x = int(self.mult[x, g])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def same_as(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and bool(np.array_equal(self.mult, other.mult))

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"


def validate_group(G: FiniteGroup) -> ValidationReport:
    """Exhaustive check of closure, identity, inverses and associativity.

    Violations are reported as ``(0, element, description)``.
    """
    n = G.order
    mult = G.mult
    violations = []
    if mult.min() < 0 or mult.max() >= n:
        return ValidationReport([(0, -1, "products in range")])
    idx = np.arange(n)
    for g in np.nonzero((mult[0] != idx) | (mult[:, 0] != idx))[0]:
        violations.append((0, int(g), "0 is a two-sided identity"))
    for g in range(n):
        row_ok = np.array_equal(np.sort(mult[g]), idx)
        col_ok = np.array_equal(np.sort(mult[:, g]), idx)
        if not (row_ok and col_ok):
            violations.append((0, g, "two-sided inverse"))
    left = mult[mult]
    right = mult[idx[:, None, None], mult[None, :, :]]
    for a in np.unique(np.nonzero(left != right)[0]):
        violations.append((0, int(a), "associativity"))
    return ValidationReport(violations)


def cyclic(m: int) -> FiniteGroup:
    if m < 1:
        raise PreconditionError(f"cyclic() needs m >= 1, got {m}", m=m)
    idx = np.arange(m)
    return FiniteGroup((idx[:, None] + idx[None, :]) % m, name=f"Z:{m}")


def dihedral(m: int) -> FiniteGroup:
    """The dihedral group of order 2m.

    Element ``a + m*b`` stands for ``r^a s^b``; products follow from
    ``s r = r^{-1} s``, i.e. ``(r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}``.
    """
    if m < 1:
        raise PreconditionError(f"dihedral() needs m >= 1, got {m}", m=m)
    n = 2 * m
    g = np.arange(n)
    a, b = g % m, g // m
    sign = np.where(b == 1, -1, 1)
    rot = (a[:, None] + sign[:, None] * a[None, :]) % m
    refl = (b[:, None] + b[None, :]) % 2
    return FiniteGroup(rot + m * refl, name=f"D:{m}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G × H`` with ``(g, h)`` stored at index ``g * |H| + h``."""
    n_h = H.order
    g = np.arange(G.order * n_h)
    gi, hi = g // n_h, g % n_h
    mult = G.mult[gi[:, None], gi[None, :]] * n_h + H.mult[hi[:, None], hi[None, :]]
    name = f"{G.name} x {H.name}" if G.name and H.name else ""
    return FiniteGroup(mult, name=name)


def _generated_subgroup(G: FiniteGroup, generators: set[int]) -> set[int]:
    subgroup = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in generators:
                y = int(G.mult[x, s])
                if y not in subgroup:
                    subgroup.add(y)
                    nxt.append(y)
        frontier = nxt
    return subgroup


def commutator_subgroup(G: FiniteGroup) -> set[int]:
    mult, inv = G.mult, G.inverses
    # x y x^-1 y^-1
    commutators = mult[mult[mult, inv[:, None]], inv[None, :]]
    return _generated_subgroup(G, set(int(c) for c in np.unique(commutators)))


def abelianization(G: FiniteGroup) -> list[int]:
    """Invariant factors of ``G/[G,G]``, ascending, each dividing the next."""
    normal = np.array(sorted(commutator_subgroup(G)))
    # coset label = smallest element of gN
    labels = G.mult[:, normal].min(axis=1)
    reps, coset_of = np.unique(labels, return_inverse=True)
    q = len(reps)
    if q == 1:
        return []
    q_mult = coset_of[G.mult[reps[:, None], reps[None, :]]]

    orders = []
    for x in range(q):
        y, k = x, 1
        while y != 0:
            y = int(q_mult[y, x])
            k += 1
        orders.append(k)

    exponents: dict[int, list[int]] = {}
    for p, top in factorint(q).items():
        p, top = int(p), int(top)
        sizes = [0]
        for k in range(1, top + 1):
            count = sum(1 for o in orders if (p**k) % o == 0)
            s = 0
            while count > 1:
                count //= p
                s += 1
            sizes.append(s)
        at_least = [sizes[k] - sizes[k - 1] for k in range(1, top + 1)] + [0]
        exps = []
        for k in range(1, top + 1):
            exps.extend([k] * (at_least[k - 1] - at_least[k]))
        exponents[p] = sorted(exps, reverse=True)
    return invariant_factors_from_exponents(exponents)


_FACTOR = re.compile(r"\s*([ZD])\s*:\s*(\d+)\s*$")


def parse_group(text: str) -> FiniteGroup:
    """Build a group from ``"Z:m"``, ``"D:m"`` or products like ``"Z:2 x Z:2"``."""
    factors = []
    for part in re.split(r"\bx\b", text):
        match = _FACTOR.match(part)
        if not match:
            raise PreconditionError(f"Unknown group factor {part.strip()!r}", text=text)
        kind, m = match.group(1), int(match.group(2))
        factors.append(cyclic(m) if kind == "Z" else dihedral(m))
    group = factors[0]
    for factor in factors[1:]:
        group = direct_product(group, factor)
    return group


def group_to_json(G: FiniteGroup) -> dict[str, Any]:
    return {"order": G.order, "mult": G.mult.tolist()}


def group_from_json(data: Any) -> FiniteGroup:
    if not isinstance(data, dict) or "order" not in data or "mult" not in data:
        raise SpaceFileError("Group JSON needs 'order' and 'mult'")
    require_ints(data["order"], "order")
    require_ints(data["mult"], "mult")
    try:
        G = FiniteGroup(np.array(data["mult"], dtype=np.int64))
    except (TypeError, ValueError) as e:
        raise SpaceFileError(f"Malformed group JSON: {e}") from e
    if G.order != data["order"]:
        raise SpaceFileError(f"Declared order {data['order']} but table has {G.order} rows")
    report = validate_group(G)
    if not report.ok:
        raise SpaceFileError(f"Group table fails {report.violations[0][2]}")
    return G


def load_group(path: str | Path) -> FiniteGroup:
    return group_from_json(read_json(path, "Group"))


def save_group(G: FiniteGroup, path: str | Path) -> None:
    Path(path).write_text(json.dumps(group_to_json(G)) + "\n")
