from typing import Any, Callable, Dict, List, NamedTuple, Sequence, Tuple


class Argument(NamedTuple):
    flags: Tuple[str, ...]
    options: Dict[str, Any]


def arg(*flags: str, **options: Any) -> Argument:
    """Declare one argparse argument for a command."""
    return Argument(flags, options)


class Command(NamedTuple):
    name: str
    help: str
    arguments: Tuple[Argument, ...]
    handler: Callable


class CommandRouter:
    """Groups the subcommands of one feature package.

    Handlers take the parsed ``argparse.Namespace`` and return an exit status;
    the app includes every router into one parser.
    """

    def __init__(self):
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: Sequence[Argument] = ()):
        def register(handler: Callable) -> Callable:
            self.commands.append(Command(name, help, tuple(arguments), handler))
            return handler

        return register
