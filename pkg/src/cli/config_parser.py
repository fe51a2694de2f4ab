"""Configuration parser for CLI that merges file, environment and command-line options."""

import copy
import logging
from typing import Any, Dict, Optional

from core.exact_core import parse_rational
from core.models import Probability
from core.newton_argument import BIT_GENERATORS
from utils.config_parser import AppConfig, load_config
from utils.exceptions import (
    ConfigError,
    DomainError,
    InvalidProbabilityError,
    UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

# CLI argument name -> (section, key)
CLI_OVERRIDES = {
    "enum_cap": ("compute", "enum_cap"),
    "workers": ("compute", "workers"),
    "trials": ("simulation", "trials"),
    "seed": ("simulation", "seed"),
    "generator_id": ("simulation", "generator_id"),
}


def load_and_merge_config(
    config_path: Optional[str] = None, cli_args: Optional[Dict[str, Any]] = None
) -> AppConfig:
    """Load configuration and merge CLI arguments.

    Precedence: CLI flags, then environment variables, then the file, then defaults.
    """
    config = load_config(config_path)
    if cli_args:
        config = merge_cli_args(config, cli_args)
    validate_config(config)
    return config


def merge_cli_args(config: AppConfig, cli_args: Dict[str, Any]) -> AppConfig:
    """Return a copy of ``config`` with every non-None CLI argument applied."""
    merged = copy.deepcopy(config)
    for name, (section, key) in CLI_OVERRIDES.items():
        value = cli_args.get(name)
        if value is not None:
            setattr(getattr(merged, section), key, value)
            logger.debug(f"Overriding {section}.{key} with CLI value: {value}")
    return merged


def validate_config(config: AppConfig) -> None:
    """Raise ConfigError when a setting is out of range."""
    compute, simulation = config.compute, config.simulation
    if not isinstance(compute.enum_cap, int) or compute.enum_cap < 1:
        raise ConfigError("enum_cap must be a positive integer")
    if not isinstance(compute.digits, int) or compute.digits < 1:
        raise ConfigError("digits must be a positive integer")
    try:
        Probability(compute.default_prob)
    except InvalidProbabilityError as e:
        raise ConfigError(f"default_prob is not a probability: {e}")
    try:
        tol = parse_rational(compute.tol)
    except DomainError as e:
        raise ConfigError(f"tol is not a rational number: {e}")
    if tol <= 0:
        raise ConfigError("tol must be positive")
    if not isinstance(compute.unit, int) or compute.unit < 1:
        raise ConfigError("unit must be a positive integer")
    if compute.workers is not None and (
        not isinstance(compute.workers, int) or compute.workers < 1
    ):
        raise ConfigError("workers must be a positive integer")
    if not isinstance(simulation.trials, int) or simulation.trials < 1:
        raise ConfigError("trials must be a positive integer")
    if not isinstance(simulation.seed, int) or not 0 <= simulation.seed < 2**64:
        raise ConfigError("seed must be a 64-bit unsigned integer")
    if simulation.generator_id not in BIT_GENERATORS:
        raise UnknownGeneratorError(
            f"Unknown generator_id {simulation.generator_id!r}; "
            f"choose one of {sorted(BIT_GENERATORS)}"
        )
    logger.debug("Configuration validation passed")
