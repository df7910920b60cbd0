from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


class SpectrumMode(str, Enum):
    """
    How a level energy is obtained.

    PAPER_VERBATIM evaluates the printed closed-form spectrum, SELF_CONSISTENT
    root-finds the quantization condition and ORACLE solves the radial equation
    numerically.
    """

    PAPER_VERBATIM = "paper"
    SELF_CONSISTENT = "self-consistent"
    ORACLE = "oracle"


class LevelFlag(str, Enum):
    BOUND = "bound"
    UNBOUND = "unbound"
    COMPLEX_EXPONENT = "complex-exponent"


@dataclass(frozen=True)
class SpectrumRow:
    """
    One level of a spectrum table.

    Attributes:
        n (int): Radial quantum number.
        ell (int): Orbital quantum number.
        mu (float): Dunkl parameter.
        mode (SpectrumMode): Mode that produced the energy.
        eps (float): Dimensionless energy, nan when no level was found.
        energy (float): Energy in hartree, nan when no level was found.
        flag (LevelFlag): Bound-window classification.
        diagnostics (Dict[str, Any]): Mode-specific details, not part of row equality.
    """

    n: int
    ell: int
    mu: float
    mode: SpectrumMode
    eps: float
    energy: float
    flag: LevelFlag
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)

    def sort_key(self) -> tuple:
        return (self.ell, self.n, self.mu, MODE_ORDER.index(self.mode))

    def as_record(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "ell": self.ell,
            "mu": self.mu,
            "mode": self.mode.value,
            "eps": self.eps,
            "E": self.energy,
            "flag": self.flag.value,
        }


MODE_ORDER = [
    SpectrumMode.PAPER_VERBATIM,
    SpectrumMode.SELF_CONSISTENT,
    SpectrumMode.ORACLE,
]


@dataclass
class SpectrumTable:
    """
    Rows sorted by (ell, n, mu, mode); the ordering never depends on evaluation order.
    """

    rows: List[SpectrumRow] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.rows = sorted(self.rows, key=SpectrumRow.sort_key)

    def records(self) -> List[Dict[str, Any]]:
        return [row.as_record() for row in self.rows]

    def select(self, **criteria: Any) -> List[SpectrumRow]:
        return [
            row
            for row in self.rows
            if all(getattr(row, key) == value for key, value in criteria.items())
        ]
