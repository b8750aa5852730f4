import json
import math
from enum import Enum
from pathlib import Path
from typing import Any, Union

import numpy as np


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars/arrays and non-finite floats into plain JSON values."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if hasattr(value, "to_json_dict"):
        return to_jsonable(value.to_json_dict())
    return value


def canonical_json(value: Any) -> str:
    """Newline-terminated JSON with sorted keys; byte-stable for equal inputs."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, allow_nan=False) + "\n"


def load_json(path: Union[str, Path]) -> Any:
    with Path(path).open("r", encoding="utf-8") as handle:
        return json.load(handle)


def write_json(path: Union[str, Path], value: Any) -> None:
    with Path(path).open("w", encoding="utf-8") as handle:
        handle.write(canonical_json(value))
