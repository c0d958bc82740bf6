"""Python access to the subshift workbench: specs, complexity counts and the CLI."""

import json
import sys

from ._core import (
    Subshift,
    SubshiftError,
    complexity_table,
    example_names,
    export_example,
    run_cli,
)

__all__ = [
    "Subshift",
    "SubshiftError",
    "complexity_table",
    "example_names",
    "export_example",
    "run",
    "run_cli",
]


def run(*args):
    """Run a CLI command and return (exit code, parsed JSON report)."""
    code, out, err = run_cli(list(args))
    if code == 2:
        raise SubshiftError(err.strip())
    return code, json.loads(out)


def main():
    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
