import json
import logging
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/config.json"

ENV_OVERRIDES = {
    "PEPYS_ENUM_CAP": ("compute", "enum_cap"),
    "PEPYS_WORKERS": ("compute", "workers"),
    "PEPYS_SEED": ("simulation", "seed"),
}


@dataclass
class ComputeConfig:
    enum_cap: int = 10**7
    digits: int = 3
    default_prob: str = "1/6"
    unit: int = 6
    tol: str = "1e-9"
    workers: Optional[int] = None


@dataclass
class SimulationConfig:
    trials: int = 10**6
    seed: int = 20061693
    generator_id: str = "pcg64"


@dataclass
class AppConfig:
    compute: ComputeConfig = field(default_factory=ComputeConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _apply_env(config: AppConfig, environ: Dict[str, str]) -> None:
    for var, (section, key) in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw == "":
            continue
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"{var} must be an integer, got {raw!r}")
        setattr(getattr(config, section), key, value)
        logger.debug(f"Overriding {section}.{key} from {var}: {value}")


def load_config(
    config_path: Optional[str] = None, environ: Optional[Dict[str, str]] = None
) -> AppConfig:
    """Load configuration from an optional JSON file, then apply environment overrides.

    A missing file at the default location yields defaults; a missing file
    that was asked for explicitly is an error.
    """
    environ = os.environ if environ is None else environ
    path = Path(config_path or DEFAULT_CONFIG_PATH)
    data: Dict[str, Any] = {}
    if path.exists():
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError:
            raise ConfigError(f"Invalid JSON in configuration file: {path}")
        logger.debug(f"Loaded configuration from {path}")
    elif config_path is not None:
        raise ConfigError(f"Configuration file not found at: {path}")

    try:
        config = AppConfig(
            compute=ComputeConfig(**data.get("compute", {})),
            simulation=SimulationConfig(**data.get("simulation", {})),
        )
    except TypeError as e:
        raise ConfigError(f"Configuration validation error: {e}")

    _apply_env(config, environ)
    return config
