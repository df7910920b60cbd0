from typing import Any, Dict, List, Optional


class DunklDengFanError(Exception):
    """
    Base class for every error raised by the dunkl_deng_fan package.
    """


class DomainError(DunklDengFanError, ValueError):
    """
    An argument lies outside the mathematical domain of an operation.

    Attributes:
        value (Any): The offending value (a radius, a Jacobi parameter, a
            negative alpha8 under a square root, ...).
    """

    def __init__(self, message: str, value: Any = None) -> None:
        super().__init__(message)
        self.value = value


class NoBoundStateError(DunklDengFanError):
    """
    No bound state exists for the requested quantum numbers.

    Attributes:
        n (int): Radial quantum number.
        ell (int): Orbital quantum number.
        mu (float): Dunkl parameter.
    """

    def __init__(self, n: int, ell: int, mu: float, reason: str = "") -> None:
        message = f"No bound state for (n={n}, ell={ell}, mu={mu:g})"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message)
        self.n = n
        self.ell = ell
        self.mu = mu
        self.reason = reason


# name used throughout the module specification
NoBoundState = NoBoundStateError


class AccuracyError(DunklDengFanError):
    """
    The finite-difference oracle did not show its expected convergence order.

    Attributes:
        orders (List[float]): Empirical convergence order per level.
        diagnostics (Dict[str, Any]): Grid spacings and per-grid eigenvalues.
    """

    def __init__(
        self,
        message: str,
        orders: List[float],
        diagnostics: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.orders = orders
        self.diagnostics = diagnostics or {}


class ConfigurationError(DunklDengFanError):
    """
    Invalid command-line or config-file input.
    """
