"""Command line, run configuration and reproducible claims."""

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimResult",
    "RunConfig",
    "build_parser",
    "main",
    "run",
    "run_claim",
]

from .claims import CLAIMS, Claim, ClaimResult, run_claim
from .config import RunConfig
from .main import build_parser, main, run
