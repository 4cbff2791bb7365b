"""Run configuration of the command line."""

import argparse
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from typing_extensions import Self

THREADS_VARIABLE = "RAINBOW_THREADS"
"""Environment variable overriding the worker count."""

SCHEMA_VERSION = 1
"""Version of the JSON artifacts."""

_NOT_PARAMS = ("command", "seed", "threads", "output", "verbose", "quiet")


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, recorded in each artifact it writes."""

    command: str
    """Subcommand name."""

    params: dict[str, Any] = field(default_factory=dict)
    """Subcommand parameters, JSON-serializable."""

    seed: int = 0
    """Seed of every randomized step, 0 <= seed < 2^64."""

    threads: int = 1
    """Worker processes."""

    output: Optional[Path] = None
    """Artifact path, None to only print the summary."""

    def __post_init__(self) -> None:
        """Validate the seed and the worker count.

        Raises
        ------
        ValueError
            If the seed is not a 64-bit unsigned integer or `threads < 1`.
        """
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"Seed must lie in [0, 2^64), got {self.seed}.")
        if self.threads < 1:
            raise ValueError(f"Worker count must be positive, got {self.threads}.")

    @classmethod
    def from_namespace(
        cls, namespace: argparse.Namespace, environ: Optional[Mapping[str, str]] = None
    ) -> Self:
        """Build the configuration from parsed arguments.

        Parameters
        ----------
        namespace : argparse.Namespace
            Parsed command line.
        environ : mapping of str to str or None, optional
            Environment, `os.environ` by default. `RAINBOW_THREADS` overrides the
            worker count.

        Returns
        -------
        RunConfig
            The configuration.

        Raises
        ------
        ValueError
            If `RAINBOW_THREADS` is not an integer.
        """
        environ = os.environ if environ is None else environ
        values = vars(namespace)
        threads = values.get("threads", 1)
        if environ.get(THREADS_VARIABLE):
            try:
                threads = int(environ[THREADS_VARIABLE])
            except ValueError as err:
                raise ValueError(
                    f"{THREADS_VARIABLE} must be an integer, got "
                    f"'{environ[THREADS_VARIABLE]}'."
                ) from err

        params = {
            key: str(value) if isinstance(value, Path) else value
            for key, value in values.items()
            if key not in _NOT_PARAMS
        }
        output = values.get("output")
        return cls(
            command=values["command"],
            params=params,
            seed=values.get("seed", 0),
            threads=threads,
            output=Path(output) if output is not None else None,
        )

    def to_dict(self) -> dict[str, Any]:
        """Configuration JSON."""
        return {
            "command": self.command,
            "params": dict(sorted(self.params.items())),
            "seed": self.seed,
            "threads": self.threads,
            "output": str(self.output) if self.output is not None else None,
        }
