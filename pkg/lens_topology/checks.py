"""Named reproducibility checks for the lens-space and delooping results.

Each check returns a CheckResult; ``run_checks`` runs a selection on a
thread pool and hands results back in registry order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
import logging
import math
import time
from typing import Callable, Optional, Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DM

from lens_topology.config import current_settings, override_settings, resolve_n_workers
from lens_topology.core.dset import (
    DeltaSet,
    euler_characteristic,
    from_simplicial_complex,
    join,
    polygon_circle,
    sphere,
)
from lens_topology.groups.action import GroupAction, quotient, rotation_action
from lens_topology.groups.group import abelianization, cyclic, dihedral
from lens_topology.homology.homology import (
    HomologyGroup,
    Z,
    ZERO,
    all_homology,
    all_homology_of_complex,
    homological_connectivity,
    homology,
    torsion_group,
)
from lens_topology.homology.matrix import IntMatrix
from lens_topology.homology.snf import smith_normal_form
from lens_topology.spaces.lens import LensParams, cyclic_cellular_chain, lens_action, lens_minimal_chain, lens_space
from lens_topology.spaces.milnor import milnor_base, milnor_total, real_projective, stability_check
from lens_topology.spaces.torus import circle_rotation, mapping_torus, two_triangle_torus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOptions:
    """Overrides from the command line; None means the configured grid."""
    m: Optional[int] = None
    n: Optional[int] = None
    seed: int = 0


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    failures: list[str] = field(default_factory=list)
    cases: int = 0
    seconds: float = 0.0

    def expect(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.passed = False
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.cases} cases, {self.seconds:.2f}s)"


CheckFn = Callable[[CheckOptions, CheckResult], None]
CHECKS: dict[str, tuple[CheckFn, str]] = {}


def register(name: str, description: str) -> Callable[[CheckFn], CheckFn]:
    def decorator(fn: CheckFn) -> CheckFn:
        CHECKS[name] = (fn, description)
        return fn
    return decorator


def _fmt(groups: Sequence[HomologyGroup]) -> str:
    return "(" + ", ".join(str(h) for h in groups) + ")"


def _reduced_sphere_homology(degree: int, top: int) -> list[HomologyGroup]:
    return [Z if k == degree else ZERO for k in range(top + 1)]


@register("sphere-join", "S^m ⋈ S^n has the reduced homology of S^{m+n+1}")
def check_sphere_join(options: CheckOptions, result: CheckResult) -> None:
    for a in range(0, 6):
        for b in range(0, 6 - a):
            J = join(sphere(a), sphere(b))
            got = all_homology(J, reduced=True)
            want = _reduced_sphere_homology(a + b + 1, J.dimension)
            result.expect(got == want, f"S^{a} ⋈ S^{b}: {_fmt(got)}")


def _lens_grid(options: CheckOptions) -> list[tuple[int, int]]:
    settings = current_settings()
    ms = (options.m,) if options.m is not None else settings.lens_grid_m
    ns = (options.n,) if options.n is not None else settings.lens_grid_n
    return [(m, n) for m in ms for n in ns]


@register("lens-vs-minimal", "lens space homology equals the one-cell-per-degree complex")
def check_lens_vs_minimal(options: CheckOptions, result: CheckResult) -> None:
    for m, n in _lens_grid(options):
        L, _ = lens_space(LensParams(m, (1,) * n))
        got = all_homology(L)
        want = all_homology_of_complex(lens_minimal_chain(m, n))
        result.expect(got == want, f"L({m}; 1^{n}): {_fmt(got)} != {_fmt(want)}")


@register("parameter-independence", "lens homology does not depend on the unit parameters")
def check_parameter_independence(options: CheckOptions, result: CheckResult) -> None:
    m = options.m if options.m is not None else 5
    units = [l for l in range(1, m) if math.gcd(l, m) == 1]
    tuples = [(1, 1)] + [t for t in combinations(units, 2)][:4]
    reference = all_homology(lens_space(LensParams(m, tuples[0]))[0])
    for ls in tuples[1:]:
        got = all_homology(lens_space(LensParams(m, ls))[0])
        result.expect(got == reference, f"L({m}; {list(ls)}): {_fmt(got)} != {_fmt(reference)}")


@register("zm-group-homology", "H_k(B_5 Z_m) = Z, Z_m, 0, Z_m, 0 for k < 5")
def check_zm_group_homology(options: CheckOptions, result: CheckResult) -> None:
    ms = (options.m,) if options.m is not None else (2, 3, 4, 5)
    for m in ms:
        B, _ = milnor_base(cyclic(m), 5)
        got = all_homology(B, up_to=4)
        want = [Z, torsion_group(m), ZERO, torsion_group(m), ZERO]
        result.expect(got == want, f"B_5(Z_{m}): {_fmt(got)}")


@register("wedge-lemma", "Z_m^{⋈(n+1)} is a wedge of (m-1)^{n+1} n-spheres homologically")
def check_wedge_lemma(options: CheckOptions, result: CheckResult) -> None:
    ms = (options.m,) if options.m is not None else (2, 3, 4)
    ns = (options.n,) if options.n is not None else range(0, 5)
    for m in ms:
        for n in ns:
            E = milnor_total(cyclic(m), n).space
            got = all_homology(E, reduced=True)
            want = [HomologyGroup((m - 1) ** (n + 1)) if k == n else ZERO for k in range(n + 1)]
            result.expect(got == want, f"E_{n}(Z_{m}): {_fmt(got)}")


@register("rp-tower", "B_n Z_2 matches the classical 0/2 chain complex of RP^n")
def check_rp_tower(options: CheckOptions, result: CheckResult) -> None:
    top = options.n if options.n is not None else 5
    for n in range(top + 1):
        got = all_homology(real_projective(n)[0])
        want = all_homology_of_complex(cyclic_cellular_chain(2, n))
        result.expect(got == want, f"RP^{n}: {_fmt(got)} != {_fmt(want)}")


@register("r-is-torus", "the mapping torus of a rotated m-gon is a torus")
def check_r_is_torus(options: CheckOptions, result: CheckResult) -> None:
    ms = (options.m,) if options.m is not None else range(3, 8)
    reference = all_homology(two_triangle_torus())
    result.expect(reference == [Z, HomologyGroup(2), Z], f"two-triangle torus: {_fmt(reference)}")
    for m in ms:
        circle = polygon_circle(m)
        got = all_homology(mapping_torus(circle, circle_rotation(m, 1)))
        result.expect(got == reference, f"rotation by 1 on C_{m}: {_fmt(got)}")


@register("dihedral-h1", "H_1(B_3 D_m) is the abelianization of D_m")
def check_dihedral_h1(options: CheckOptions, result: CheckResult) -> None:
    ms = (options.m,) if options.m is not None else (3, 4, 5, 6)
    for m in ms:
        G = dihedral(m)
        B, _ = milnor_base(G, 3)
        h1 = homology(B, 1)
        ab = abelianization(G)
        want = [2] if m % 2 else [2, 2]
        result.expect(ab == want, f"abelianization of D_{m}: {ab}")
        result.expect(h1 == torsion_group(*ab), f"H_1(B_3 D_{m}) = {h1}, abelianization {ab}")


def _covering_cases() -> list[tuple[str, GroupAction]]:
    cases = [(f"Z_{m} on C_{m}", rotation_action(m, 1)) for m in (2, 3, 5)]
    cases += [(f"L({m}; 1,{l})", lens_action(LensParams(m, (1, l)))) for m, l in ((5, 2), (4, 3), (6, 5))]
    cases += [(f"E_2(Z_{m})", milnor_total(cyclic(m), 2)) for m in (2, 3, 4)]
    cases += [("E_2(D_3)", milnor_total(dihedral(3), 2))]
    return cases


@register("covering-invariants", "free quotients divide simplex counts and χ by |G|")
def check_covering_invariants(options: CheckOptions, result: CheckResult) -> None:
    for label, action in _covering_cases():
        order = action.group.order
        Q, projection = quotient(action)
        E = action.space
        counts_ok = list(E.counts) == [order * c for c in Q.counts]
        result.expect(counts_ok, f"{label}: counts {list(E.counts)} vs {order} x {list(Q.counts)}")
        result.expect(
            euler_characteristic(E) == order * euler_characteristic(Q),
            f"{label}: χ(E) = {euler_characteristic(E)}, χ(E/G) = {euler_characteristic(Q)}",
        )
        fibres_ok = all(
            np.array_equal(np.bincount(p, minlength=Q.count(k)), np.full(Q.count(k), order))
            for k, p in enumerate(projection.comp)
        )
        result.expect(fibres_ok, f"{label}: every fibre has {order} simplices")


def random_delta_set(rng: np.random.Generator, max_vertices: int = 6) -> DeltaSet:
    """A small random ordered simplicial complex, viewed as a Δ-set."""
    n_vertices = int(rng.integers(1, max_vertices + 1))
    n_facets = int(rng.integers(1, 5))
    facets = []
    for _ in range(n_facets):
        size = int(rng.integers(1, min(4, n_vertices) + 1))
        facets.append(rng.choice(n_vertices, size=size, replace=False).tolist())
    return from_simplicial_complex(facets)


@register("connectivity-growth", "conn(A ⋈ B) >= conn(A) + conn(B) + 2")
def check_connectivity_growth(options: CheckOptions, result: CheckResult) -> None:
    rng = np.random.default_rng(seed=options.seed)
    for trial in range(40):
        A = random_delta_set(rng)
        B = random_delta_set(rng)
        ca, cb = homological_connectivity(A), homological_connectivity(B)
        cj = homological_connectivity(join(A, B))
        result.expect(cj >= ca + cb + 2, f"trial {trial}: conn {cj} < {ca} + {cb} + 2")


def _minor(values: Sequence[Sequence[int]], r: tuple[int, ...], c: tuple[int, ...]) -> int:
    if len(r) == 1:
        return values[r[0]][c[0]]
    if len(r) == 2:
        (i, k), (j, l) = r, c
        return values[i][j] * values[k][l] - values[i][l] * values[k][j]
    return int(DM([[values[i][j] for j in c] for i in r], ZZ).det())


def minor_gcd_factors(values: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors from gcds of k×k minors: ``s_k = g_k / g_{k-1}``."""
    rows = len(values)
    cols = len(values[0]) if rows else 0
    factors = []
    previous = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = math.gcd(g, _minor(values, r, c))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return factors


SNF_PATHS = {
    "lists": {"dense_threshold": 64},
    "array": {"dense_threshold": 0},
    "sparse": {"dense_threshold": 0, "array_cells": 0},
}


def _snf_agrees(values: list[list[int]], result: CheckResult, paths: Sequence[str]) -> None:
    want = minor_gcd_factors(values)
    M = IntMatrix.from_dense(values, cols=len(values[0]))
    for path in paths:
        got = smith_normal_form(M, **SNF_PATHS[path])
        result.expect(list(got.diagonal) == want, f"{values} ({path}): {list(got.diagonal)} != {want}")


@register("snf-oracle", "Smith normal form agrees with the minor-gcd oracle")
def check_snf_oracle(options: CheckOptions, result: CheckResult) -> None:
    entries = range(-3, 4)
    shapes = ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (4, 1), (2, 2), (2, 3), (3, 2))
    for rows, cols in shapes:
        for flat in product(entries, repeat=rows * cols):
            values = [list(flat[r * cols:(r + 1) * cols]) for r in range(rows)]
            _snf_agrees(values, result, ("lists", "sparse"))
    rng = np.random.default_rng(seed=options.seed)
    for _ in range(500):
        rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
        values = rng.integers(-3, 4, size=(rows, cols)).tolist()
        _snf_agrees(values, result, tuple(SNF_PATHS))


@register("stability", "H_k(B_n G) stabilises for k < n")
def check_stability(options: CheckOptions, result: CheckResult) -> None:
    cases = [(cyclic(3), 1, 2, 4), (cyclic(2), 0, 1, 3), (dihedral(3), 1, 2, 3), (cyclic(4), 2, 3, 4)]
    for G, k, n1, n2 in cases:
        result.expect(stability_check(G, k, n1, n2), f"{G!r}: H_{k}(B_{n1}) != H_{k}(B_{n2})")


def _run_one(name: str, options: CheckOptions) -> CheckResult:
    fn, _ = CHECKS[name]
    result = CheckResult(name)
    start = time.perf_counter()
    try:
        fn(options, result)
    except Exception as e:
        logger.exception("check %s raised", name)
        result.passed = False
        result.failures.append(f"{type(e).__name__}: {e}")
    result.seconds = time.perf_counter() - start
    logger.info("%s", result.summary())
    return result


def run_checks(names: Optional[Sequence[str]] = None, options: CheckOptions = CheckOptions()) -> list[CheckResult]:
    """Run the named checks (all when None) and return results in registry order.

    Raises:
        KeyError: If a name is not registered
    """
    selected = list(CHECKS) if not names else list(names)
    unknown = [n for n in selected if n not in CHECKS]
    if unknown:
        raise KeyError(f"Unknown checks: {', '.join(unknown)}")
    selected = [n for n in CHECKS if n in selected]
    # every construction in the battery is validated
    with override_settings(eager_validation=True):
        with ThreadPoolExecutor(max_workers=max(1, resolve_n_workers())) as pool:
            futures = [pool.submit(_run_one, name, options) for name in selected]
            return [f.result() for f in futures]
