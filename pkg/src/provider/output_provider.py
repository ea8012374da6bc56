#!/usr/bin/python
import csv
import json
import os
import sys
from abc import ABC, abstractmethod
from typing import ClassVar, Iterable, Sequence

from param.config_enums import OutputProviderType
from util.errors import ConfigError
from util.helpers import Helpers as h


def dump_json(j: dict) -> str:
    return json.dumps(j, indent=4)


class OutputProvider(ABC):
    TYPE: ClassVar[OutputProviderType]

    @abstractmethod
    def save_json(self, j: dict, name: str) -> str:
        pass

    @abstractmethod
    def save_text(self, text: str, name: str) -> str:
        pass

    @abstractmethod
    def save_csv(self, header: Sequence[str], rows: Iterable[Sequence], name: str) -> str:
        pass


class OutputProviderFactory(ABC):
    _DEFAULT = OutputProviderType.STDOUT

    @staticmethod
    def build(config: dict) -> OutputProvider:
        t = h.dont_require(config, "output/type", str, OutputProviderFactory._DEFAULT)

        if t == OutputProviderType.STDOUT:
            return StdoutOutputProvider(config)
        elif t == OutputProviderType.LOCAL:
            return LocalOutputProvider(config)
        else:
            raise ConfigError("Unsupported output provider '" + str(t) + "'")


class StdoutOutputProvider(OutputProvider):
    TYPE = OutputProviderType.STDOUT

    def __init__(self, config: dict, stream=None):
        self._stream = stream

    @property
    def stream(self):
        # resolved late so redirected/captured stdout is honoured
        return self._stream or sys.stdout

    def save_json(self, j: dict, name: str) -> str:
        self.stream.write(dump_json(j) + "\n")
        return "<stdout>"

    def save_text(self, text: str, name: str) -> str:
        self.stream.write(text if text.endswith("\n") else text + "\n")
        return "<stdout>"

    def save_csv(self, header: Sequence[str], rows: Iterable[Sequence], name: str) -> str:
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return "<stdout>"


class LocalOutputProvider(OutputProvider):
    TYPE = OutputProviderType.LOCAL

    def __init__(self, config: dict):
        self._folder = h.require(config, "output/folder", str)
        if not os.path.exists(self._folder):
            os.makedirs(self._folder)

    def save_json(self, j: dict, name: str) -> str:
        out_file = os.path.join(self._folder, name)
        with open(out_file, "w") as f:
            f.write(dump_json(j) + "\n")
        return out_file

    def save_text(self, text: str, name: str) -> str:
        out_file = os.path.join(self._folder, name)
        with open(out_file, "w") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        return out_file

    def save_csv(self, header: Sequence[str], rows: Iterable[Sequence], name: str) -> str:
        out_file = os.path.join(self._folder, name)
        with open(out_file, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        return out_file
