import argparse

from mim.cli import CommandRouter, ExitStatus, arg

from .harness import format_table, run_bench

router = CommandRouter()


def size_list(text: str):
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"expected an integer >= {minimum}, got {value}")
        return value

    return parse


# bench [--sizes 1000,10000,100000] [--seed S] [--repeats R]
@router.command(
    "bench",
    help="time decomposition and solving on generated instances",
    arguments=[
        arg("--sizes", type=size_list, default=[1000, 10000, 100000], help="comma-separated vertex budgets"),
        arg("--seed", type=at_least(0), default=0, help="generator seed"),
        arg("--repeats", type=at_least(1), default=3, help="report the best of R runs"),
    ],
)
def cmd_bench(args) -> int:
    print(format_table(run_bench(args.sizes, args.seed, args.repeats)), end="")
    return ExitStatus.OK
