import sys

from mim.bench import router as bench_router
from mim.cli.app import App
from mim.decomposition import router as decomposition_router
from mim.generator import router as generator_router
from mim.oracle import router as oracle_router
from mim.solver import router as solver_router

app = App(
    prog="mim",
    description=(
        "Maximum induced matching of bipartite Star123-free graphs through their "
        "canonical decomposition tree. Exit status: 0 ok, 1 usage/IO/format error, "
        "2 graph is not Star123-free, 3 verification failed."
    ),
)

app.include_router(decomposition_router)
app.include_router(solver_router)
app.include_router(oracle_router)
app.include_router(generator_router)
app.include_router(bench_router)


def main() -> None:
    sys.exit(app.run())


if __name__ == "__main__":
    main()
