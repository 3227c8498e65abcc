"""Problem files: JSON serialization of nodes plus derivative data.

Schema::

    {"nodes": [f64...], "m": uint, "derivatives": [[f64...]...], "label": string?}

``derivatives`` holds one row per node with ``m+1`` entries
``y_i, y_i', ..., y_i^(m)``.  Numbers are emitted with Python's shortest
round-trip representation, so ``load(save(p))`` reproduces ``p`` exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import (
    Interpolant,
    build_data,
    build_interpolant,
    build_nodeset,
)
from .errors import (
    DuplicateNodeError,
    NonFiniteInputError,
    ParseError,
    SchemaError,
    ValidationError,
)


@dataclass(frozen=True)
class ProblemFile:
    """Validated in-memory form of a problem file."""

    nodes: tuple[float, ...]
    m: int
    derivatives: tuple[tuple[float, ...], ...]
    label: str | None = None


def _as_float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where} must be a number, got {value!r}")
    return float(value)


def load_problem(path) -> ProblemFile:
    """Read and fully validate a problem file.

    Raises :class:`ParseError` for invalid JSON, :class:`SchemaError` for a
    missing field, wrong type or ragged matrix, and :class:`ValidationError`
    for data that is structurally fine but invalid (duplicate nodes,
    non-finite values).
    """
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from None

    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: top level must be an object")
    for key in ("nodes", "m", "derivatives"):
        if key not in raw:
            raise SchemaError(f"{path}: missing required field {key!r}")

    if not isinstance(raw["nodes"], list) or not raw["nodes"]:
        raise SchemaError(f"{path}: 'nodes' must be a non-empty array")
    nodes = tuple(_as_float(v, f"{path}: nodes[{i}]") for i, v in enumerate(raw["nodes"]))

    m = raw["m"]
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise SchemaError(f"{path}: 'm' must be a non-negative integer, got {m!r}")

    rows = raw["derivatives"]
    if not isinstance(rows, list) or len(rows) != len(nodes):
        raise SchemaError(
            f"{path}: 'derivatives' must be an array with one row per node "
            f"({len(nodes)} expected)"
        )
    derivatives = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != m + 1:
            raise SchemaError(
                f"{path}: derivatives[{i}] must be an array of length m+1={m + 1}"
            )
        derivatives.append(
            tuple(_as_float(v, f"{path}: derivatives[{i}][{j}]") for j, v in enumerate(row))
        )

    label = raw.get("label")
    if label is not None and not isinstance(label, str):
        raise SchemaError(f"{path}: 'label' must be a string")

    try:
        build_nodeset(nodes)
        build_data(derivatives)
    except (DuplicateNodeError, NonFiniteInputError) as exc:
        raise ValidationError(f"{path}: {exc}") from None
    return ProblemFile(nodes=nodes, m=m, derivatives=tuple(derivatives), label=label)


def save_problem(problem: ProblemFile, path) -> None:
    """Write a problem file; inverse of :func:`load_problem`."""
    payload: dict = {
        "nodes": list(problem.nodes),
        "m": problem.m,
        "derivatives": [list(row) for row in problem.derivatives],
    }
    if problem.label is not None:
        payload["label"] = problem.label
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")


def problem_to_interpolant(problem: ProblemFile) -> Interpolant:
    """Build the interpolant described by a problem file."""
    return build_interpolant(build_nodeset(problem.nodes), build_data(problem.derivatives))


def random_problem(rng: np.random.Generator, n: int, m: int, label: str | None = None) -> ProblemFile:
    """Deterministic random problem from a seeded generator.

    Nodes are drawn uniformly in [-2, 2] and redrawn until the minimum gap
    reaches 0.1 (keeps conditioning inside the reference-solver tolerance);
    data is uniform in [-10, 10].
    """
    while True:
        nodes = rng.uniform(-2.0, 2.0, n + 1)
        if n == 0 or np.diff(np.sort(nodes)).min() >= 0.1:
            break
    data = rng.uniform(-10.0, 10.0, (n + 1, m + 1))
    return ProblemFile(
        nodes=tuple(float(v) for v in nodes),
        m=m,
        derivatives=tuple(tuple(float(v) for v in row) for row in data),
        label=label,
    )
