import argparse
import sys

from app.commands import COMMAND_GROUPS
from app.core.enums import ExitCode
from app.core.exceptions import (
    CapExceededException,
    ConfigurationException,
    ValidationException,
    VerificationFailedException,
)
from app.modules.logger import set_log_level
from settings import get_settings

settings = get_settings()


class RigArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as validation failures instead of exiting."""

    def error(self, message: str):
        raise ValidationException(message)


def build_parser() -> RigArgumentParser:
    parser = RigArgumentParser(prog=settings.PROJECT_NAME, description="Random intersection graph laboratory")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Overrides LOG_LEVEL for this run"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv (list[str] | None): Arguments without the program name, sys.argv[1:] by default

    Returns:
        int: Exit code, 0 success, 1 validation, 2 cap exceeded, 3 verification failed
    """
    try:
        args = build_parser().parse_args(argv)
        if args.log_level:
            set_log_level(args.log_level)
        return int(args.handler(args))
    except (ValidationException, ConfigurationException, IndexError) as e:
        code = ExitCode.VALIDATION
        message = str(e)
    except CapExceededException as e:
        code = ExitCode.CAP_EXCEEDED
        message = str(e)
    except VerificationFailedException as e:
        code = ExitCode.VERIFICATION_FAILED
        message = str(e)
    sys.stderr.write(f"error: {message}\n")
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
