import argparse
import logging
import sys
from typing import List, Optional, Sequence

from mim import config
from mim.errors import MimError

from .models import ExitStatus
from .router import CommandRouter

logger = logging.getLogger("mim")


class UsageError(MimError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


_handler: Optional[logging.Handler] = None


def configure_logging(level: Optional[str] = None) -> None:
    """One stderr handler on the package logger; stdout stays for artifacts."""
    global _handler
    root = logging.getLogger("mim")
    if _handler is not None:
        root.removeHandler(_handler)
    # bound to the current stream so capsys and redirected runs both see it
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(_handler)
    root.setLevel((level or config.LOG_LEVEL).upper())


class App:
    def __init__(self, prog: str, description: str = ""):
        self.prog = prog
        self.description = description
        self.routers: List[CommandRouter] = []

    def include_router(self, router: CommandRouter) -> None:
        self.routers.append(router)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog=self.prog, description=self.description)
        sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
        sub.required = True
        for router in self.routers:
            for command in router.commands:
                cmd_parser = sub.add_parser(command.name, help=command.help, description=command.help)
                for argument in command.arguments:
                    cmd_parser.add_argument(*argument.flags, **argument.options)
                cmd_parser.set_defaults(handler=command.handler)
        return parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        configure_logging()
        try:
            args = self.build_parser().parse_args(argv)
            status = args.handler(args)
        except SystemExit as exc:
            # --help
            return int(exc.code or 0)
        except MimError as exc:
            logger.debug("%s failed with exit %d", type(exc).__name__, exc.exit_code)
            print(f"error: {exc.detail}", file=sys.stderr)
            return int(exc.exit_code)
        return int(status if status is not None else ExitStatus.OK)
