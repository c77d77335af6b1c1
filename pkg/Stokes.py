import argparse
import inspect
import json
import logging
import os
import sys
from typing import List, Optional

from omegaconf import OmegaConf

from stokeslab.src.stokeslab import StokesLab
from stokeslab.src.stokeslab.errors import BudgetExceededError, MalformedInputError, StokesLabError
from stokeslab.src.stokeslab.utils import dump_json, setup_logging


logger = logging.getLogger("stokeslab")


def default_settings():
    return {
        "seed": 0,
        "workers": 1,
        # expanded elements per BFS (orbit merging, mutation search) and |G|^r for finite models
        "budget": 200_000,
        "progress": False,
        "verbose": False,
        "depth": 6,
        "slack": 2,
        "samples": 200,
    }


def load_settings(path: Optional[str] = None, overrides: Optional[List[str]] = None):
    """Defaults, then a YAML/JSON file, then key=value overrides."""
    settings = OmegaConf.create(default_settings())
    try:
        if path:
            if not os.path.exists(path):
                raise MalformedInputError(f"settings file {path} does not exist")
            settings = OmegaConf.merge(settings, OmegaConf.load(path))
        if overrides:
            settings = OmegaConf.merge(settings, OmegaConf.from_dotlist(list(overrides)))
    except MalformedInputError:
        raise
    except Exception as e:
        raise MalformedInputError(f"bad settings: {e}") from e
    return settings


# subcommand -> (StokesLab method, [(flag, argparse kwargs)])
COMMANDS = {
    "invariant": ("invariant", [
        ("--r", {"type": int}),
        ("--matrix", {}),
    ]),
    "act": ("act", [
        ("--matrix", {}),
        ("--word", {}),
        ("--inverse", {"action": "store_true", "default": None}),
    ]),
    "reduce": ("reduce", [
        ("--triple", {}),
        ("--matrix", {}),
    ]),
    "enumerate-r3": ("enumerate_r3", [
        ("--k", {"type": int}),
        ("--height", {"type": int}),
        ("--slice", {"type": int, "help": "enumerate the slice x=2 or x=-2 instead"}),
    ]),
    "enumerate-r4": ("enumerate_r4", [
        ("--e1", {"type": int}),
        ("--e2", {"type": int}),
        ("--height", {"type": int}),
        ("--signed", {"action": "store_true", "default": None}),
        ("--slack", {"type": int}),
        ("--from-height", {"type": int, "help": "also scan every height from here up and report the count trend"}),
    ]),
    "bridge": ("bridge", [
        ("--rep", {}),
        ("--word", {}),
        ("--direction", {"help": "phi or psi: transport a point instead"}),
        ("--point", {}),
    ]),
    "boundary": ("boundary", [
        ("--rep", {}),
        ("--t", {"type": int}),
        ("--e1", {"type": int}),
        ("--e2", {"type": int}),
    ]),
    "poisson-check": ("poisson_check", [
        ("--r", {"type": int}),
        ("--mode", {"choices": ["symbolic", "sampled"]}),
        ("--samples", {"type": int}),
    ]),
    "mutate": ("mutate", [
        ("--matrix", {}),
        ("--word", {}),
        ("--direction", {"choices": ["L", "R"]}),
        ("--i", {"type": int}),
    ]),
    "equivalent": ("equivalent", [
        ("--matrix", {}),
        ("--other", {}),
        ("--depth", {"type": int}),
        ("--signed", {"action": "store_true", "default": None}),
    ]),
    "verify-suite": ("verify_suite", [
        ("--quick", {"action": "store_true", "default": None}),
        ("--only", {"help": "comma-separated check names"}),
    ]),
    "finite-model": ("finite_model", [
        ("--p", {"type": int}),
        ("--r", {"type": int}),
    ]),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="Stokes.py", description="Braid group actions on Stokes matrices.")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--budget", type=int)
    parser.add_argument("--settings", help="YAML or JSON settings file")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("--progress", action="store_true", default=None)
    parser.add_argument("--verbose", action="store_true", default=None)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, flags) in COMMANDS.items():
        cmd = sub.add_parser(name)
        cmd.add_argument("--in", dest="in_path", metavar="PATH", help="JSON object with the inputs")
        for flag, kwargs in flags:
            cmd.add_argument(flag, dest=flag.lstrip("-").replace("-", "_"), **kwargs)
    return parser


def read_payload(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedInputError(f"cannot read {path}: {e}") from e
    if not isinstance(data, dict):
        raise MalformedInputError(f"{path} must hold a JSON object")
    return data


def command_kwargs(method, args, settings) -> dict:
    """Payload keys, then explicit flags; settings fill the tuning knobs nobody set."""
    params = inspect.signature(method).parameters
    kwargs = {k: v for k, v in read_payload(args.in_path).items() if k in params}
    for name in params:
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    for knob in ("depth", "slack", "samples"):
        if knob in params and knob not in kwargs:
            kwargs[knob] = settings[knob]
    if isinstance(kwargs.get("only"), str):
        kwargs["only"] = [n.strip() for n in kwargs["only"].split(",") if n.strip()]
    return kwargs


def exit_status(result: dict) -> int:
    if result.get("truncated"):
        return BudgetExceededError.exit_code
    if result.get("ok") is False:
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        settings = load_settings(args.settings, args.set)
        for key in ("seed", "workers", "budget", "progress", "verbose"):
            if getattr(args, key) is not None:
                settings[key] = getattr(args, key)
        setup_logging(bool(settings.verbose))
        lab = StokesLab.from_settings(settings)
        method = getattr(lab, COMMANDS[args.command][0])
        result = method(**command_kwargs(method, args, settings))
    except BudgetExceededError as e:
        logger.error(str(e))
        sys.stdout.write(dump_json({"error": str(e), "truncated": True}))
        return e.exit_code
    except StokesLabError as e:
        logger.error(str(e))
        return e.exit_code
    sys.stdout.write(dump_json(result))
    return exit_status(result)


if __name__ == "__main__":
    sys.exit(main())
