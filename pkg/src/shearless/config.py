"""Experiment configuration: INI-like text, strictly validated.

The format is flat ``key = value`` lines for the model and initial packet,
plus one optional ``[section]`` per experiment.  Unknown sections or keys
are rejected (naming the line), as are values of the wrong type (naming
the key).  ``#`` or ``;`` lines are comments.  An empty config resolves to
the reference defaults.
"""

import copy
from dataclasses import dataclass

from .errors import ConfigSyntaxError, InvalidValue, UnknownKey
from .model import PacketSpec, SimParams


def _cast_int(key: str, raw: str) -> int:
    try:
        return int(raw, 10)
    except ValueError:
        raise InvalidValue(f"key '{key}': expected an integer, got {raw!r}") from None


def _cast_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise InvalidValue(f"key '{key}': expected a number, got {raw!r}") from None


def _cast_str(key: str, raw: str) -> str:
    return raw


def _cast_pairs(key: str, raw: str):
    pairs = []
    for chunk in raw.split(","):
        left, sep, right = chunk.partition(":")
        if not sep:
            raise InvalidValue(
                f"key '{key}': expected 'i:j[,i:j...]' site pairs, got {raw!r}"
            )
        pairs.append((_cast_int(key, left.strip()), _cast_int(key, right.strip())))
    return pairs


def format_pairs(pairs) -> str:
    return ",".join(f"{i}:{j}" for i, j in pairs)


# section -> key -> (caster, default); None is the top-level section.
_SCHEMA = {
    None: {
        "j": (_cast_float, -1.0),
        "b0": (_cast_float, 2.0),
        "n": (_cast_int, 100),
        "omega": (_cast_float, 0.12),
        "drive": (_cast_str, "sinusoidal"),
        "quantum_substeps": (_cast_int, 16000),
        "classical_substeps": (_cast_int, 20000),
        "j0": (_cast_int, 25),
        "k0": (_cast_float, 0.0),
        "delta_j": (_cast_float, 5.0),
        "out_dir": (_cast_str, "results"),
    },
    "sos": {
        "x_seeds": (_cast_int, 20),
        "p_seeds": (_cast_int, 20),
        "periods": (_cast_int, 500),
        "substeps": (_cast_int, 2000),
    },
    "evolve": {
        "periods": (_cast_int, 20),
        "stride": (_cast_int, 1),
        "substeps": (_cast_int, None),
    },
    "floquet": {
        "sigma": (_cast_float, 0.10),
        "prominence": (_cast_float, 0.10),
        "grid_size": (_cast_int, 4096),
        "weight_floor": (_cast_float, 1e-3),
        "substeps": (_cast_int, None),
    },
    "concurrence": {
        "pairs": (_cast_pairs, None),
        "periods": (_cast_int, 20),
        "stride": (_cast_int, 20),
        "substeps": (_cast_int, None),
    },
    "rotation": {
        "x0": (_cast_float, None),
        "p_min": (_cast_float, 0.02),
        "p_max": (_cast_float, 3.12),
        "resolution": (_cast_int, 400),
        "iterations": (_cast_int, 256),
        "substeps": (_cast_int, 2000),
    },
    "ensemble": {
        "samples": (_cast_int, 1000),
        "periods": (_cast_int, 20),
        "rng_seed": (_cast_int, 1234),
        "substeps": (_cast_int, 2000),
    },
}

# keys that must be strictly positive integers when given
_POSITIVE = {
    ("sos", "x_seeds"),
    ("sos", "p_seeds"),
    ("sos", "periods"),
    ("sos", "substeps"),
    ("evolve", "periods"),
    ("evolve", "stride"),
    ("evolve", "substeps"),
    ("floquet", "grid_size"),
    ("floquet", "substeps"),
    ("concurrence", "periods"),
    ("concurrence", "stride"),
    ("concurrence", "substeps"),
    ("rotation", "resolution"),
    ("rotation", "iterations"),
    ("rotation", "substeps"),
    ("ensemble", "samples"),
    ("ensemble", "periods"),
    ("ensemble", "substeps"),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved configuration: model, packet, and per-experiment knobs."""

    values: dict

    @property
    def params(self) -> SimParams:
        top = self.values[None]
        return SimParams(
            J=top["j"],
            B0=top["b0"],
            N=top["n"],
            omega=top["omega"],
            drive=top["drive"],
            quantum_substeps=top["quantum_substeps"],
            classical_substeps=top["classical_substeps"],
        )

    @property
    def packet(self) -> PacketSpec:
        top = self.values[None]
        return PacketSpec(j0=top["j0"], k0=top["k0"], delta_j=top["delta_j"])

    @property
    def out_dir(self) -> str:
        return self.values[None]["out_dir"]

    def section(self, name: str) -> dict:
        return self.values[name]

    def resolved(self) -> dict:
        """Flat key -> value map with every default filled in.

        Quantum-section substeps left unset resolve to the model-level
        count; the concurrence pair list resolves to the quarter-point
        pairs for the configured ring size.
        """
        from .entanglement import standard_pairs

        flat = dict(self.values[None])
        for section, keys in _SCHEMA.items():
            if section is None:
                continue
            for key in keys:
                value = self.values[section][key]
                if key == "substeps" and value is None:
                    if section in ("sos", "rotation", "ensemble"):
                        value = self.values[None]["classical_substeps"]
                    else:
                        value = self.values[None]["quantum_substeps"]
                if section == "concurrence" and key == "pairs":
                    pairs = value if value is not None else standard_pairs(self.params)
                    value = format_pairs(pairs)
                if section == "rotation" and key == "x0" and value is None:
                    value = float(self.values[None]["j0"])
                flat[f"{section}.{key}"] = value
        return flat

    def validate(self) -> "ExperimentConfig":
        """Force construction of the typed views so bad values surface."""
        self.params
        self.packet
        return self


def default_config() -> ExperimentConfig:
    values = {
        section: {key: default for key, (_, default) in keys.items()}
        for section, keys in _SCHEMA.items()
    }
    return ExperimentConfig(values=values)


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate config text; see the module docstring for syntax."""
    config = default_config()
    values = copy.deepcopy(config.values)
    section = None
    for ln, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigSyntaxError(f"line {ln}: unterminated section header")
            section = line[1:-1].strip().lower()
            if section not in _SCHEMA:
                known = ", ".join(sorted(k for k in _SCHEMA if k))
                raise UnknownKey(
                    f"line {ln}: unknown section [{section}]; known sections: {known}"
                )
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigSyntaxError(f"line {ln}: expected 'key = value', got {raw_line!r}")
        key = key.strip().lower()
        value = value.strip()
        if key not in _SCHEMA[section]:
            where = f"section [{section}]" if section else "the top level"
            raise UnknownKey(f"line {ln}: unknown key '{key}' in {where}")
        caster, _ = _SCHEMA[section][key]
        parsed = caster(key, value)
        if (section, key) in _POSITIVE and parsed < 1:
            raise InvalidValue(f"key '{section}.{key}': must be >= 1, got {parsed}")
        values[section][key] = parsed
    return ExperimentConfig(values=values).validate()


def load_config(path) -> ExperimentConfig:
    with open(path) as fh:
        return parse_config(fh.read())


def apply_overrides(config: ExperimentConfig, overrides: dict) -> ExperimentConfig:
    """Overlay 'key' / 'section.key' -> value pairs onto a parsed config."""
    values = copy.deepcopy(config.values)
    for dotted, value in overrides.items():
        section, _, key = dotted.rpartition(".")
        section = section or None
        if section not in _SCHEMA or key not in _SCHEMA[section]:
            raise UnknownKey(f"unknown configuration key '{dotted}'")
        if isinstance(value, str):
            value = _SCHEMA[section][key][0](key, value)
        if (section, key) in _POSITIVE and value < 1:
            raise InvalidValue(f"key '{dotted}': must be >= 1, got {value}")
        values[section][key] = value
    return ExperimentConfig(values=values).validate()
