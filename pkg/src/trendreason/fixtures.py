"""The two GASI case-study models shipped with the package."""

from __future__ import annotations

from importlib import resources

from .model import TrendModel, parse_model

NAMES = ("gasi_model1", "gasi_model2", "gasi_model1_ini", "gasi_model2_ini")


def fixture_text(name: str) -> str:
    return resources.files("trendreason").joinpath("data", f"{name}.qtm").read_text(encoding="utf-8")


def fixture_path(name: str):
    return resources.files("trendreason").joinpath("data", f"{name}.qtm")


def load_fixture(name: str) -> TrendModel:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return parse_model(fixture_text(name), name=name)
