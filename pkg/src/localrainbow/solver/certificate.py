"""Results of the exact solver."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from localrainbow.colorings import ColoringFamily
from localrainbow.core import UniformHypergraph


class SolveVerdict(str, Enum):
    """Outcome of a decision call."""

    SAT = "SAT"
    UNSAT = "UNSAT"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def exit_code(self) -> int:
        """Process exit status, 0, 1 and 2 in declaration order."""
        return list(SolveVerdict).index(self)


@dataclass(frozen=True)
class SolveCertificate:
    """Decision of whether a local coloring with `k` colors exists."""

    verdict: SolveVerdict
    """SAT, UNSAT or INCONCLUSIVE."""

    n: int
    """Number of host vertices."""

    r: int
    """Edge size."""

    k: int
    """Number of colors."""

    pattern: UniformHypergraph
    """The pattern H."""

    family: Optional[ColoringFamily] = field(default=None, repr=False)
    """A verified local family when SAT."""

    nodes: int = 0
    """Search effort, SAT conflicts summed over the branches."""

    reductions: tuple[str, ...] = ()
    """Reductions applied, such as ``pigeonhole`` or ``value-symmetry``."""

    complete: bool = True
    """Whether the search finished; False exactly for INCONCLUSIVE."""

    def to_dict(self, family_path: Optional[str] = None) -> dict[str, Any]:
        """Certificate JSON, pointing to the family file when one was written."""
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "pattern": self.pattern.to_dict(),
            "family": family_path,
            "nodes": self.nodes,
            "reductions": list(self.reductions),
            "complete": self.complete,
        }


@dataclass(frozen=True)
class ColorBracket:
    """Bounds `lo <= C_r(n, H) <= hi` established by `min_colors`."""

    lo: int
    """Every color count below `lo` admits no local family."""

    hi: int
    """Smallest color count with a known local family."""

    family: Optional[ColoringFamily] = field(default=None, repr=False)
    """A local family with `hi` colors."""

    @property
    def exact(self) -> bool:
        """Whether the value is determined."""
        return self.lo == self.hi

    def to_dict(self) -> dict[str, Any]:
        """Bracket JSON."""
        return {"lo": self.lo, "hi": self.hi, "exact": self.exact}
