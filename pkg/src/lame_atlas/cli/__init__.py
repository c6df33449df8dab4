"""Batch driver exposing every verification as a subcommand."""

from .main import COMMANDS, RunConfig, main, parse_args, run
from .report import ANCHORS, SCHEMA_VERSION, STATUSES, CheckRecord, VerificationReport

__all__ = ["ANCHORS", "COMMANDS", "SCHEMA_VERSION", "STATUSES", "CheckRecord", "RunConfig",
           "VerificationReport", "main", "parse_args", "run"]
