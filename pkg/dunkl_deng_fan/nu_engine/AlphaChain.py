"""
Auxiliary constants of the parametric Nikiforov-Uvarov method and the
polynomial-termination (quantization) condition.
"""

import math
from dataclasses import dataclass
from enum import Enum

from dunkl_deng_fan.errors import DomainError
from dunkl_deng_fan.pekeris.mapping import MappedCoefficients


class Alpha9Source(str, Enum):
    """
    Which alpha9 enters the square roots of the quantization condition.

    CHAIN is c3 alpha7 + c3^2 alpha8 + alpha6 as the chain defines it.
    CLOSED_FORM is the constant 1/4 + beta asserted by the energy derivation.
    """

    CHAIN = "chain"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class AlphaChain:
    """
    alpha4 ... alpha9 at one trial energy.

    alpha9 never depends on the trial energy: the eps slopes (-1, -2, -1) of
    the xi coefficients cancel in alpha6 + c3 alpha7 + c3^2 alpha8 when c3 = 1.
    """

    alpha4: float
    alpha5: float
    alpha6: float
    alpha7: float
    alpha8: float
    alpha9: float


def alpha_chain(mc: MappedCoefficients, eps: float) -> AlphaChain:
    """
    Evaluate the alpha chain at the dimensionless trial energy eps.

    With the section III.A constants alpha4 = mu and alpha5 = -(mu + 1/2).

    Args:
        mc (MappedCoefficients): Master-form constants (they carry mu).
        eps (float): Dimensionless trial energy.

    Returns:
        AlphaChain: The six auxiliary constants.
    """
    alpha4 = 0.5 * (1.0 - mc.c1)
    alpha5 = 0.5 * (mc.c2 - 2.0 * mc.c3)
    alpha6 = alpha5**2 + mc.xi1(eps)
    alpha7 = 2.0 * alpha4 * alpha5 - mc.xi2(eps)
    alpha8 = alpha4**2 + mc.xi3(eps)
    alpha9 = mc.c3 * alpha7 + mc.c3**2 * alpha8 + alpha6
    return AlphaChain(alpha4, alpha5, alpha6, alpha7, alpha8, alpha9)


def closed_form_alpha9(beta: float) -> float:
    """
    The energy-independent alpha9 asserted by the derivation, 1/4 + beta.
    """
    return 0.25 + beta


def chain_alpha9(mc: MappedCoefficients) -> float:
    """
    alpha9 of the chain written without the trial energy.

    Equals (alpha4 + alpha5)^2 + xi1_const - xi2_const + xi3_const for c3 = 1,
    i.e. 1/4 - beta + gamma (C2 - C0) for the section III.A constants.
    """
    chain = alpha_chain(mc, 0.0)
    return chain.alpha9


def alpha9_value(
    mc: MappedCoefficients, eps: float, source: Alpha9Source
) -> float:
    if source == Alpha9Source.CLOSED_FORM:
        return closed_form_alpha9(mc.beta)
    return alpha_chain(mc, eps).alpha9


def quantization_residual(
    n: int,
    eps: float,
    mc: MappedCoefficients,
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
) -> float:
    """
    Left side of the termination condition of the hypergeometric series

        c2 n - (2n+1) alpha5 + (2n+1)(sqrt(alpha9) - c3 sqrt(alpha8))
            + n(n-1) c3 + alpha7 + 2 c3 alpha8 + 2 sqrt(alpha8 alpha9)

    which vanishes at an eigenvalue.

    Args:
        n (int): Polynomial degree.
        eps (float): Dimensionless trial energy.
        mc (MappedCoefficients): Master-form constants.
        alpha9_source (Alpha9Source): Which alpha9 to take the root of.

    Returns:
        float: The residual.

    Raises:
        DomainError: If alpha8 or alpha9 is negative (complex square root);
            the error carries the offending value.
    """
    chain = alpha_chain(mc, eps)
    alpha9 = alpha9_value(mc, eps, alpha9_source)
    if chain.alpha8 < 0:
        raise DomainError(
            f"alpha8 = {chain.alpha8:.6g} < 0 gives a complex exponent",
            value=chain.alpha8,
        )
    if alpha9 < 0:
        raise DomainError(
            f"alpha9 = {alpha9:.6g} < 0 gives a complex exponent", value=alpha9
        )
    root8 = math.sqrt(chain.alpha8)
    root9 = math.sqrt(alpha9)
    c2, c3 = mc.c2, mc.c3
    return (
        c2 * n
        - (2 * n + 1) * chain.alpha5
        + (2 * n + 1) * (root9 - c3 * root8)
        + n * (n - 1) * c3
        + chain.alpha7
        + 2.0 * c3 * chain.alpha8
        + 2.0 * root8 * root9
    )
