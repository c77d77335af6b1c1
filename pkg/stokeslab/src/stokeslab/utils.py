import json
import logging
import os
import sys
from fractions import Fraction

import numpy as np


LEVEL_COLORS = {
    "DEBUG": "\033[36m",
    "INFO": "\033[32m",
    "WARNING": "\033[33m",
    "ERROR": "\033[31m",
    "CRITICAL": "\033[41m",
}
RESET = "\033[0m"


def use_color(stream=None) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    stream = stream if stream is not None else sys.stderr
    return hasattr(stream, "isatty") and stream.isatty()


class TagFormatter(logging.Formatter):
    """
        Renders records as "[LEVEL] name: message", tags colored unless NO_COLOR is set
    """
    def __init__(self, color: bool = False):
        super().__init__()
        self.color = color

    def format(self, record):
        tag = f"[{record.levelname}]"
        if self.color:
            tag = f"{LEVEL_COLORS.get(record.levelname, '')}{tag}{RESET}"
        return f"{tag} {record.name}: {record.getMessage()}"


def setup_logging(verbose: bool = False):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(TagFormatter(color=use_color(sys.stderr)))
    root = logging.getLogger()
    for h in list(root.handlers):
        root.removeHandler(h)
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def make_rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def rand_int(rng: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer in the closed range [lo, hi], as a python int."""
    return int(rng.integers(lo, hi + 1))


def rand_fraction(rng: np.random.Generator, height: int = 5) -> Fraction:
    num = rand_int(rng, -height, height)
    den = rand_int(rng, 1, height)
    return Fraction(num, den)


def to_jsonable(obj):
    # Fractions render as "p/q" strings, integral ones collapse to int
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    return str(obj)


def dump_json(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def parse_scalar(value):
    """Accepts ints, Fractions and "p/q" strings."""
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, str):
        q = Fraction(value.strip())
        return int(q) if q.denominator == 1 else q
    raise ValueError(f"not an exact number: {value!r}")
