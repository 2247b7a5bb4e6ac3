import numpy as np
from pydantic import ValidationError

from mim.cli import CommandRouter, ExitStatus, arg
from mim.decomposition.models import PrimeForm
from mim.errors import GeneratorError
from mim.graph.io import format_graph

from .models import GenConfig
from .sampler import gen_graph
from .shapes import gen_shape

router = CommandRouter()


# gen --seed S --n N [--shape ep|ec|epbip|ecbip --k K --class-max C]
@router.command(
    "gen",
    help="write a random Star123-free bipartite graph in the text format",
    arguments=[
        arg("--seed", type=int, default=0, help="PRNG seed"),
        arg("--n", type=int, help="vertex budget of a sampled decomposition tree"),
        arg("--shape", choices=[form.value.lower() for form in PrimeForm], help="emit a single prime shape instead"),
        arg("--k", type=int, default=7, help="number of classes of --shape"),
        arg("--class-max", type=int, default=1, help="class sizes of --shape are drawn from 1..C"),
    ],
)
def cmd_gen(args) -> int:
    if args.seed < 0:
        raise GeneratorError(f"--seed must be non-negative, got {args.seed}")
    if args.shape:
        if args.class_max < 1:
            raise GeneratorError(f"--class-max must be at least 1, got {args.class_max}")
        rng = np.random.default_rng(args.seed)
        sizes = [int(x) for x in rng.integers(1, args.class_max + 1, size=max(args.k, 0))]
        g = gen_shape(args.shape.upper(), args.k, sizes)
        header = [f"gen shape={args.shape} k={args.k} class_sizes={sizes} seed={args.seed}"]
    else:
        if args.n is None:
            raise GeneratorError("gen needs --n, or --shape with --k")
        try:
            cfg = GenConfig(seed=args.seed, target_n=args.n)
        except ValidationError as exc:
            raise GeneratorError(f"invalid generator config: {exc.errors()[0]['msg']}") from None
        g = gen_graph(cfg)
        header = [f"gen {cfg.model_dump_json()}"]
    print(format_graph(g, header=header), end="")
    return ExitStatus.OK
