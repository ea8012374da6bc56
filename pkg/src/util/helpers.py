#!/usr/bin/python
from abc import ABC
from typing import Any, Optional

from util.errors import ConfigError


class Helpers(ABC):
    """Lookups into nested JSON config by "section/key" paths."""

    @staticmethod
    def require(config: dict, key: str | list[str], kind: Optional[type] = None) -> Any:
        path = Helpers._path(key)
        v = Helpers._lookup(config, path)
        if v is None:
            raise ConfigError("Missing config value " + "/".join(path))
        return Helpers._typed(v, path, kind)

    @staticmethod
    def dont_require(
        config: dict, key: str | list[str], kind: Optional[type] = None, default: Any = None
    ) -> Any:
        path = Helpers._path(key)
        v = Helpers._lookup(config, path)
        if v is None:
            return default
        return Helpers._typed(v, path, kind)

    @staticmethod
    def merge(base: dict, override: dict) -> dict:
        # nested dict union, override wins
        merged = dict(base)
        for k, v in override.items():
            if isinstance(v, dict) and isinstance(merged.get(k), dict):
                merged[k] = Helpers.merge(merged[k], v)
            else:
                merged[k] = v
        return merged

    @staticmethod
    def _path(key: str | list[str]) -> list[str]:
        return key if isinstance(key, list) else key.split("/")

    @staticmethod
    def _lookup(config: dict, path: list[str]) -> Any:
        v = config
        for depth, k in enumerate(path):
            if not isinstance(v, dict):
                raise ConfigError(
                    "Config value " + "/".join(path[:depth]) + " is not a section, cannot read " + "/".join(path)
                )
            v = v.get(k)
            if v is None:
                return None
        return v

    @staticmethod
    def _typed(v: Any, path: list[str], kind: Optional[type]) -> Any:
        if kind is None:
            return v
        # bool is an int subclass but never a number here
        if isinstance(v, bool) and kind is not bool:
            ok = False
        elif kind is float:
            ok = isinstance(v, (int, float))
        else:
            ok = isinstance(v, kind)
        if not ok:
            raise ConfigError(
                "Config value " + "/".join(path) + " must be " + kind.__name__ + ", got " + repr(v)
            )
        return float(v) if kind is float else v
