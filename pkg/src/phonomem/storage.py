"""Versioned JSON persistence for trained models.

Tensors are stored row-major with an explicit shape, as decimal floats at
full round-trip precision, so a saved model reloads bit-exactly and stays
human-diffable.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .alphabet import Alphabet
from .errors import ModelFormatError
from .model import InteractionModel

FORMAT_VERSION = 1


def model_to_dict(m: InteractionModel) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "alphabet": list(m.alphabet.symbols),
        "digraphs": [list(kv) for kv in m.alphabet.digraphs],
        "r_max": m.r_max,
        "g0": m.g0,
        "g": {"shape": list(m.g.shape), "data": [float(x) for x in m.g.reshape(-1)]},
        "meta": m.meta,
    }


def model_from_dict(payload: dict) -> InteractionModel:
    if not isinstance(payload, dict) or "format_version" not in payload:
        raise ModelFormatError("not a model file: missing format_version")
    version = payload["format_version"]
    if version != FORMAT_VERSION:
        raise ModelFormatError(
            f"unsupported model format version {version}; "
            f"this build reads version {FORMAT_VERSION}"
        )
    try:
        alphabet = Alphabet(
            tuple(payload["alphabet"]),
            tuple((k, v) for k, v in payload.get("digraphs", [])),
        )
        shape = tuple(payload["g"]["shape"])
        tensors = np.array(payload["g"]["data"], dtype=np.float64).reshape(shape)
        return InteractionModel(
            alphabet,
            int(payload["r_max"]),
            float(payload["g0"]),
            tensors,
            dict(payload.get("meta", {})),
        )
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"malformed model file: {exc}") from exc


def save_model(m: InteractionModel, path) -> None:
    text = json.dumps(model_to_dict(m), ensure_ascii=False, indent=1)
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_model(path) -> InteractionModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{path}: not valid JSON: {exc}") from exc
    return model_from_dict(payload)
