"""
Jacobi polynomials P_n^(a,b)(x) by forward three-term recurrence, with a
Gauss-Jacobi orthogonality check and root isolation in s = (1 - x)/2.
"""

from typing import List, Union

import numpy as np
from scipy import optimize
from scipy.special import roots_jacobi

from dunkl_deng_fan.errors import DomainError

ArrayLike = Union[float, np.ndarray]


def _check_domain(n: int, a: float, b: float) -> None:
    if n < 0:
        raise DomainError(f"Jacobi degree must be >= 0, got {n}", value=n)
    if not (a > -1 and b > -1):
        raise DomainError(
            f"Jacobi parameters must exceed -1, got a={a}, b={b}", value=(a, b)
        )


def jacobi(n: int, a: float, b: float, x: ArrayLike) -> ArrayLike:
    """
    Evaluate P_n^(a,b)(x).

    Recurrence coefficients as in Karniadakis and Sherwin, appendix B;
    stable in double precision for the low degrees used here.

    Args:
        n (int): Degree, >= 0.
        a (float): First parameter, > -1.
        b (float): Second parameter, > -1.
        x (ArrayLike): Point or array of points.

    Returns:
        ArrayLike: Polynomial values, a float for scalar x.

    Raises:
        DomainError: If n < 0 or a, b <= -1.
    """
    _check_domain(n, a, b)
    x_arr = np.asarray(x, dtype=float)
    pn2 = np.ones_like(x_arr)
    if n == 0:
        return float(pn2) if pn2.ndim == 0 else pn2
    apb = a + b
    pn1 = 0.5 * (a - b + (apb + 2.0) * x_arr)
    for k in range(2, n + 1):
        a1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0)
        a2 = (2.0 * k + apb - 1.0) * (a * a - b * b) / a1
        a3 = (2.0 * k + apb - 2.0) * (2.0 * k + apb - 1.0) * (2.0 * k + apb) / a1
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb) / a1
        pn2, pn1 = pn1, (a2 + a3 * x_arr) * pn1 - a4 * pn2
    return float(pn1) if pn1.ndim == 0 else pn1


def jacobi_orthogonality_residual(
    m: int, n: int, a: float, b: float, nodes: int = 256
) -> float:
    """
    Normalized inner product <P_m, P_n> under the weight (1-x)^a (1+x)^b.

    Gauss-Jacobi quadrature with `nodes` points is exact for m + n < 2 nodes.

    Returns:
        float: |I_mn| / sqrt(I_mm I_nn); zero up to rounding for m != n.
    """
    _check_domain(max(m, n), a, b)
    x, w = roots_jacobi(nodes, a, b)
    pm = jacobi(m, a, b, x)
    pn = jacobi(n, a, b, x)
    cross = np.sum(w * pm * pn)
    return float(abs(cross) / np.sqrt(np.sum(w * pm**2) * np.sum(w * pn**2)))


def jacobi_roots_in_s(n: int, a: float, b: float, samples: int = 8192) -> List[float]:
    """
    Roots of P_n^(a,b)(1 - 2s) inside (0, 1), isolated by bisection.

    Args:
        n (int): Degree.
        a (float): First parameter, > -1.
        b (float): Second parameter, > -1.
        samples (int): Points of the sign-change scan.

    Returns:
        List[float]: Roots in increasing s.
    """
    _check_domain(n, a, b)
    if n == 0:
        return []

    def f(s: float) -> float:
        return jacobi(n, a, b, 1.0 - 2.0 * s)

    # Chebyshev-spaced scan resolves roots crowding towards either end
    theta = np.linspace(0.0, np.pi, samples + 2)[1:-1]
    s = np.sort(0.5 * (1.0 - np.cos(theta)))
    values = jacobi(n, a, b, 1.0 - 2.0 * s)
    roots = []
    for k in np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0):
        roots.append(optimize.bisect(f, s[k], s[k + 1], xtol=1e-15))
    roots.extend(float(value) for value in s[values == 0.0])
    return sorted(roots)
