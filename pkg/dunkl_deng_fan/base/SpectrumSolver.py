import math
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.model.potentials import eps_to_energy
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.table import LevelFlag, SpectrumMode, SpectrumRow
from dunkl_deng_fan.pekeris.mapping import (
    CoefficientSet,
    PekerisCoefficients,
    pekeris_coefficients,
)


class SpectrumSolver(ABC):
    """
    An abstract base class for the ways of obtaining a level energy.

    Subclasses name their mode and compute the dimensionless energy of one
    level; this class turns that into a flagged table row.

    Attributes:
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters; ell is overridden per level.
        C (PekerisCoefficients): Pekeris coefficients.
        coefficient_set (CoefficientSet): Source of the drift constants.
        alpha9_source (Alpha9Source): alpha9 used by the quantization condition.
        mode (SpectrumMode): The mode served by the subclass.
    """

    def __init__(
        self,
        p: MolecularParams,
        d: DunklParams,
        C: Optional[PekerisCoefficients] = None,
        coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
        alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
    ) -> None:
        self.p = p
        self.d = d
        self.C = C if C is not None else pekeris_coefficients()
        self.coefficient_set = coefficient_set
        self.alpha9_source = alpha9_source
        self.mode = self.get_mode()

    @abstractmethod
    def get_mode(self) -> SpectrumMode:
        """
        Returns:
            SpectrumMode: The mode this solver implements.
        """
        raise NotImplementedError("Subclasses must implement this method.")

    @abstractmethod
    def solve_level(self, q: QuantumNumbers) -> Tuple[float, Dict[str, Any]]:
        """
        Compute the dimensionless energy of one level.

        Args:
            q (QuantumNumbers): Level to solve for.

        Returns:
            Tuple[float, Dict[str, Any]]: eps and mode-specific diagnostics. A
            diagnostics entry "unbound": True forces the unbound flag.

        Raises:
            NoBoundStateError: If the level does not exist in this mode.
            DomainError: If the level has a complex exponent.
        """
        raise NotImplementedError("Subclasses must implement this method.")

    def dunkl_for(self, ell: int) -> DunklParams:
        return self.d.model_copy(update={"ell": ell})

    def in_bound_window(self, energy: float) -> bool:
        """
        Bound states lie in [V_min, V(inf)) = [0, D_e).
        """
        return 0.0 <= energy < self.p.D_e

    def level(self, q: QuantumNumbers) -> SpectrumRow:
        """
        Solve one level and classify it; never raises for a missing level.

        Args:
            q (QuantumNumbers): Level to solve for.

        Returns:
            SpectrumRow: The flagged row, with nan energies when no level exists.
        """
        try:
            eps, diagnostics = self.solve_level(q)
        except DomainError as error:
            return self._missing_row(q, LevelFlag.COMPLEX_EXPONENT, str(error))
        except NoBoundStateError as error:
            return self._missing_row(q, LevelFlag.UNBOUND, str(error))

        energy = float(eps_to_energy(eps, self.p))
        if diagnostics.get("unbound") or not self.in_bound_window(energy):
            flag = LevelFlag.UNBOUND
        else:
            flag = LevelFlag.BOUND
        return SpectrumRow(
            n=q.n,
            ell=q.ell,
            mu=self.d.mu,
            mode=self.mode,
            eps=eps,
            energy=energy,
            flag=flag,
            diagnostics=diagnostics,
        )

    def _missing_row(self, q: QuantumNumbers, flag: LevelFlag, reason: str) -> SpectrumRow:
        return SpectrumRow(
            n=q.n,
            ell=q.ell,
            mu=self.d.mu,
            mode=self.mode,
            eps=math.nan,
            energy=math.nan,
            flag=flag,
            diagnostics={"reason": reason},
        )
