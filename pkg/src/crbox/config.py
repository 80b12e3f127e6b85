"""Run configuration: JSON documents validated against a schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import jsonschema

EXPERIMENTS = ("cr-evolve", "nls-compare")

SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["experiment"],
    "additionalProperties": False,
    "properties": {
        "experiment": {"enum": list(EXPERIMENTS)},
        "seed": {"type": "integer", "minimum": 0},
        "output_dir": {"type": "string"},
        "params": {"type": "object"},
    },
    "allOf": [
        {"if": {"properties": {"experiment": {"const": "cr-evolve"}}},
         "then": {"properties": {"params": {
             "type": "object",
             "additionalProperties": False,
             "properties": {
                 "profile": {"enum": ["gaussian", "hermite_e4", "hermite_e6_radial", "random"]},
                 "n": {"type": "integer", "minimum": 8, "multipleOf": 2},
                 "t_final": {"type": "number", "exclusiveMinimum": 0},
                 "dt": {"type": "number", "exclusiveMinimum": 0},
                 "ledger_every": {"type": "integer", "minimum": 1},
                 "snapshot_every": {"type": "integer", "minimum": 1},
                 "hermite_degree": {"type": "integer", "minimum": 4},
                 "halving": {"type": "boolean"},
             }}}}},
        {"if": {"properties": {"experiment": {"const": "nls-compare"}}},
         "then": {"properties": {"params": {
             "type": "object",
             "additionalProperties": False,
             "properties": {
                 "L_list": {"type": "array", "minItems": 1,
                            "items": {"type": "integer", "minimum": 2}},
                 "eps": {"type": "number", "exclusiveMinimum": 0},
                 "sign": {"enum": [-1, 1]},
                 "M": {"type": "number", "exclusiveMinimum": 0},
                 "gamma": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
                 "sigma": {"type": "number"},
                 "cutoff": {"type": "number", "exclusiveMinimum": 0},
                 "taus": {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0}},
                 "h_max": {"type": "number", "exclusiveMinimum": 0},
             }}}}},
    ],
}

DEFAULT_PARAMS: dict[str, dict[str, Any]] = {
    "cr-evolve": {"profile": "gaussian", "n": 64, "t_final": 1.0, "dt": 0.02,
                  "ledger_every": 5, "snapshot_every": 25, "hermite_degree": 24,
                  "halving": False},
    "nls-compare": {"L_list": [8, 16, 32], "eps": 1e-3, "sign": 1, "M": 0.5, "gamma": 0.5,
                    "sigma": 2.0, "cutoff": 4.0, "taus": [0.25, 0.5], "h_max": 0.25},
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    experiment: str
    seed: int = 0
    output_dir: str | None = None
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "RunConfig":
        try:
            jsonschema.validate(doc, SCHEMA)
        except jsonschema.ValidationError as exc:
            raise ConfigError(exc.message) from exc
        params = {**DEFAULT_PARAMS[doc["experiment"]], **doc.get("params", {})}
        return cls(doc["experiment"], doc.get("seed", 0), doc.get("output_dir"), params)

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        try:
            doc = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return cls.from_dict(doc)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"experiment": self.experiment, "seed": self.seed,
                               "params": self.params}
        if self.output_dir is not None:
            out["output_dir"] = self.output_dir
        return out

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
