"""
Run configuration of the command-line front end.

Values come from three layers: command-line flags override entries of the
config file, which override the built-in defaults. The config file holds
flat `key = value` lines with `#` comments and is read with python-dotenv
without touching the process environment.
"""

from typing import Any, Dict, List, Literal, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from dunkl_deng_fan.errors import ConfigurationError
from dunkl_deng_fan.model.config import (
    DEFAULT_D_E,
    DEFAULT_LAMBDA,
    DEFAULT_MASS,
    DEFAULT_MU_MAX,
    DEFAULT_MU_MIN,
    DEFAULT_MU_STEP,
    DEFAULT_R_E,
    ORACLE_POINTS,
    PEKERIS_C0,
    PEKERIS_C1,
    PEKERIS_C2,
    QUADRATURE_NODES,
)
from dunkl_deng_fan.model.params import CentrifugalConvention, DunklParams, MolecularParams
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.pekeris.mapping import CoefficientSet, PekerisCoefficients
from dunkl_deng_fan.wavefunction.quadrature import QuadratureScheme

CONFIG_KEYS = (
    "de", "lambda", "re", "mass", "mu", "ell", "n", "n_max", "ell_max", "mode",
    "convention", "weighted", "coefficient_set", "alpha9_source", "c0", "c1",
    "c2", "points", "r_min", "r_max", "divisions", "node_count", "scheme",
    "mu_min", "mu_max", "mu_step", "mus", "morse_a", "out",
)

ALL_MODES = "all"


class RunConfig(BaseModel):
    """
    Validated settings of one CLI invocation.

    Every field is checked, and the molecular and Dunkl parameters are
    built once, before any computation starts.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    de: float = DEFAULT_D_E
    lambda_: float = Field(DEFAULT_LAMBDA, alias="lambda")
    re: float = DEFAULT_R_E
    mass: float = DEFAULT_MASS
    mu: float = 0.0
    ell: int = 0
    n: int = Field(0, ge=0)
    n_max: int = Field(2, ge=0)
    ell_max: int = Field(0, ge=0)
    mode: Literal["paper", "self-consistent", "oracle", "all"] = "paper"
    convention: CentrifugalConvention = CentrifugalConvention.RADIAL_EQUATION
    weighted: bool = True
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM
    c0: float = PEKERIS_C0
    c1: float = PEKERIS_C1
    c2: float = PEKERIS_C2
    points: int = Field(ORACLE_POINTS, ge=8)
    r_min: Optional[float] = Field(None, gt=0)
    r_max: Optional[float] = Field(None, gt=0)
    divisions: int = Field(100, ge=1)
    node_count: int = Field(QUADRATURE_NODES, ge=64)
    scheme: QuadratureScheme = QuadratureScheme.COMPOSITE_GAUSS_LEGENDRE
    mu_min: float = DEFAULT_MU_MIN
    mu_max: float = DEFAULT_MU_MAX
    mu_step: float = Field(DEFAULT_MU_STEP, gt=0)
    mus: Optional[List[float]] = None
    morse_a: Optional[float] = Field(None, gt=0)
    out: Optional[str] = None

    @field_validator("mus", mode="before")
    @classmethod
    def split_mus(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @model_validator(mode="after")
    def check_consistency(self) -> "RunConfig":
        self.molecular()
        self.dunkl()
        self.pekeris()
        if self.mu_max < self.mu_min:
            raise ValueError("mu_max must not be below mu_min")
        if self.r_min is not None and self.r_max is not None and self.r_max <= self.r_min:
            raise ValueError("r_max must exceed r_min")
        return self

    def molecular(self) -> MolecularParams:
        return MolecularParams(
            D_e=self.de, lambda_=self.lambda_, r_e=self.re, mass=self.mass
        )

    def dunkl(self) -> DunklParams:
        return DunklParams(mu=self.mu, ell=self.ell, centrifugal_convention=self.convention)

    def pekeris(self) -> PekerisCoefficients:
        return PekerisCoefficients(C0=self.c0, C1=self.c1, C2=self.c2)

    def modes(self) -> List[SpectrumMode]:
        if self.mode == ALL_MODES:
            return list(SpectrumMode)
        return [SpectrumMode(self.mode)]


def load_config(path: str) -> Dict[str, str]:
    """
    Read a `key = value` config file.

    Keys are the long flag names; `-` and `_` are interchangeable.

    Args:
        path (str): Path of the config file.

    Returns:
        Dict[str, str]: Raw values keyed by RunConfig field alias.

    Raises:
        ConfigurationError: On unknown keys or keys without a value.
        OSError: If the file cannot be read.
    """
    with open(path, encoding="utf-8") as stream:
        raw = dotenv_values(stream=stream)
    values = {}
    for key, value in raw.items():
        name = key.strip().lower().replace("-", "_")
        if name not in CONFIG_KEYS:
            raise ConfigurationError(f"Unknown config key '{key}' in {path}")
        if value is None:
            raise ConfigurationError(f"Config key '{key}' in {path} has no value")
        values[name] = value
    return values


def build_run_config(
    flags: Dict[str, Any], config_path: Optional[str] = None
) -> RunConfig:
    """
    Merge flags over config-file entries over defaults.

    Args:
        flags (Dict[str, Any]): Command-line values; None means "not given".
        config_path (Optional[str]): Config file, if any.

    Returns:
        RunConfig: The validated configuration.

    Raises:
        ConfigurationError: On config-file problems.
        pydantic.ValidationError: On invalid values.
    """
    merged: Dict[str, Any] = load_config(config_path) if config_path else {}
    for key, value in flags.items():
        if value is not None:
            merged["lambda" if key == "lambda_" else key] = value
    return RunConfig(**merged)
