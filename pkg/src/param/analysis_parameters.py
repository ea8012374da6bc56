#!/usr/bin/python
import json
from abc import ABC
from dataclasses import dataclass, replace

from util.errors import ConfigError
from util.helpers import Helpers as h

DEFAULT_CONFIG = {
    "analysis": {
        "restarts": 8,
        "max_iter": 10000,
        "stable_window": 5,
        "tie_tolerance": 1e-9,
        "tie_cap": 4096,
        "eigen_tolerance": 1e-11,
        "seed": 0,
    },
    "entropy": {"iters": 200},
    "output": {"type": "stdout"},
}


@dataclass(frozen=True)
class AnalysisParameters:
    restarts: int = 8
    max_iter: int = 10000
    stable_window: int = 5
    tie_tolerance: float = 1e-9
    tie_cap: int = 4096
    eigen_tolerance: float = 1e-11
    seed: int = 0

    def __post_init__(self):
        for name in ("restarts", "max_iter", "stable_window", "tie_cap"):
            if getattr(self, name) < 1:
                raise ConfigError("analysis/" + name + " must be >= 1, got " + str(getattr(self, name)))
        if self.tie_tolerance < 0:
            raise ConfigError("analysis/tie_tolerance must be >= 0, got " + str(self.tie_tolerance))
        if self.eigen_tolerance <= 0:
            raise ConfigError("analysis/eigen_tolerance must be > 0, got " + str(self.eigen_tolerance))

    def with_overrides(self, **overrides) -> "AnalysisParameters":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


class AnalysisParameterBuilder(ABC):
    @staticmethod
    def load_config(config_path: str | None) -> dict:
        if not config_path:
            return dict(DEFAULT_CONFIG)
        try:
            with open(config_path, "r") as f:
                user_config = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError("Could not read config '" + config_path + "': " + str(e))
        if not isinstance(user_config, dict):
            raise ConfigError("Config '" + config_path + "' must be a JSON object")
        return h.merge(DEFAULT_CONFIG, user_config)

    @staticmethod
    def build(config: dict) -> AnalysisParameters:
        return AnalysisParameters(
            restarts=h.require(config, "analysis/restarts", int),
            max_iter=h.require(config, "analysis/max_iter", int),
            stable_window=h.require(config, "analysis/stable_window", int),
            tie_tolerance=h.require(config, "analysis/tie_tolerance", float),
            tie_cap=h.require(config, "analysis/tie_cap", int),
            eigen_tolerance=h.require(config, "analysis/eigen_tolerance", float),
            seed=h.require(config, "analysis/seed", int),
        )
