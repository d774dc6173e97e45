"""Integral homology, cohomology and homological connectivity."""

from dataclasses import dataclass
import math
from typing import Any, Optional

from lens_topology.core.dset import DeltaSet, connected_components
from lens_topology.errors import PreconditionError
from lens_topology.homology.chain import ChainComplex, chain_complex


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_r`` with ``t_1 | t_2 | ...``."""
    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        torsion = tuple(int(t) for t in self.torsion)
        if self.betti < 0:
            raise PreconditionError(f"Negative Betti number {self.betti}")
        if any(t <= 1 for t in torsion):
            raise PreconditionError(f"Torsion coefficients must exceed 1, got {list(torsion)}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise PreconditionError(f"Torsion must form a divisibility chain, got {list(torsion)}")
        object.__setattr__(self, "torsion", torsion)

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self, dim: int) -> dict[str, Any]:
        return {"dim": dim, "betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO = HomologyGroup(0)
Z = HomologyGroup(1)


def torsion_group(*factors: int) -> HomologyGroup:
    return HomologyGroup(0, tuple(factors))


def homology_of_complex(C: ChainComplex, k: int, reduced: bool = False) -> HomologyGroup:
    """``H_k = ker ∂_k / im ∂_{k+1}``.

    Reduced homology augments degree 0 by ``C_0 → Z``, which lowers the
    Betti number by one when ``C_0`` is non-zero.
    """
    if k < 0 or k > C.top_degree:
        return ZERO
    image = C.smith(k + 1)
    betti = C.rank(k) - C.smith(k).rank - image.rank
    if reduced and k == 0 and C.rank(0) > 0:
        betti -= 1
    return HomologyGroup(betti, image.torsion)


def all_homology_of_complex(C: ChainComplex, up_to: Optional[int] = None, reduced: bool = False) -> list[HomologyGroup]:
    top = C.top_degree if up_to is None else up_to
    return [homology_of_complex(C, k, reduced) for k in range(top + 1)]


def homology(D: DeltaSet, k: int, reduced: bool = False) -> HomologyGroup:
    return homology_of_complex(chain_complex(D), k, reduced)


def reduced_homology(D: DeltaSet, k: int) -> HomologyGroup:
    return homology(D, k, reduced=True)


def all_homology(D: DeltaSet, up_to: Optional[int] = None, reduced: bool = False) -> list[HomologyGroup]:
    """Homology in degrees ``0..up_to`` (default: the dimension of D)."""
    return all_homology_of_complex(chain_complex(D), up_to, reduced)


def cohomology_of_complex(C: ChainComplex, k: int) -> HomologyGroup:
    """Universal coefficients: ``H^k = Z^{b_k} ⊕ torsion(H_{k-1})``."""
    free = homology_of_complex(C, k).betti
    below = homology_of_complex(C, k - 1).torsion if k > 0 else ()
    return HomologyGroup(free, below)


def cohomology(D: DeltaSet, k: int) -> HomologyGroup:
    return cohomology_of_complex(chain_complex(D), k)


def homological_connectivity(D: DeltaSet) -> int | float:
    """Largest c with D non-empty, connected and reduced ``H_1..H_c`` zero.

    Returns -2 for the empty Δ-set, -1 for a disconnected one, and
    ``math.inf`` when all reduced homology vanishes.
    """
    if D.is_empty:
        return -2
    if connected_components(D) > 1:
        return -1
    C = chain_complex(D)
    for k in range(1, D.dimension + 1):
        if not homology_of_complex(C, k).is_trivial:
            return k - 1
    return math.inf
