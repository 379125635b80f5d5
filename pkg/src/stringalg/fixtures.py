"""Bundled example presentations used by tests and the documentation."""
from __future__ import annotations

from importlib import resources

from .algebra import StringAlgebra
from .presentation import parse_presentation

FIXTURES = (
    "lambda2",
    "gp23",
    "nontf",
    "ex333",
    "fig2_omega",
    "fig2_omega_plus_one",
    "fig2_omega_plus_two",
    "single_arrow",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return resources.files(__package__).joinpath(f"fixtures/{name}.sqa").read_text()


def load_fixture(name: str) -> StringAlgebra:
    return StringAlgebra.from_presentation(parse_presentation(fixture_text(name)))
