from enum import Enum
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate as sp_integrate
from scipy.special import roots_legendre

from dunkl_deng_fan.model.config import QUADRATURE_NODES, QUADRATURE_PANEL_ORDER


class QuadratureScheme(str, Enum):
    """
    COMPOSITE_GAUSS_LEGENDRE uses fixed 16-node Gauss-Legendre panels;
    ADAPTIVE is QUADPACK adaptive Gauss-Kronrod.
    """

    COMPOSITE_GAUSS_LEGENDRE = "gauss-legendre"
    ADAPTIVE = "adaptive"


class QuadratureSpec(BaseModel):
    """
    Attributes:
        r_max (Optional[float]): Upper radius (bohr); None selects r_e + 40/lambda,
            extended until the integrand tail is negligible.
        node_count (int): Total nodes, >= 64.
        scheme (QuadratureScheme): Integration scheme.
    """

    model_config = ConfigDict(frozen=True)

    r_max: Optional[float] = Field(None, gt=0, allow_inf_nan=False)
    node_count: int = Field(QUADRATURE_NODES, ge=64)
    scheme: QuadratureScheme = QuadratureScheme.COMPOSITE_GAUSS_LEGENDRE


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    lower: float,
    upper: float,
    spec: QuadratureSpec,
) -> float:
    """
    Integrate a vectorized function over [lower, upper].

    Args:
        f (Callable): Integrand accepting arrays.
        lower (float): Lower limit.
        upper (float): Upper limit.
        spec (QuadratureSpec): Scheme and node budget.

    Returns:
        float: The integral.
    """
    if spec.scheme == QuadratureScheme.ADAPTIVE:
        value, _ = sp_integrate.quad(
            f,
            lower,
            upper,
            epsabs=0.0,
            epsrel=1e-12,
            limit=max(50, spec.node_count // QUADRATURE_PANEL_ORDER),
        )
        return float(value)

    panels = max(1, spec.node_count // QUADRATURE_PANEL_ORDER)
    t, w = roots_legendre(QUADRATURE_PANEL_ORDER)
    edges = np.linspace(lower, upper, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = mid[:, None] + half[:, None] * t[None, :]
    values = f(x.ravel()).reshape(x.shape)
    return float(np.sum(values * w[None, :] * half[:, None]))
