"""
raag build|homology|classify|growth

Every command starts from one complex, given as a named fixture or a
facet-list JSON file, and then applies transforms left to right in the
order they appear on the command line:

    raag build --fixture rp2_6 --sd --cone --output cone_sd_rp2.json
    raag build --join a.json b.json
    raag homology --fixture moore --q 3 --primes 3
    raag classify --input join_example.json
    raag growth --fixture discrete --n 2 --prime 2 --moduli 2,3,4,5

Exit codes: 0 done, 3 undetermined verdict, 10 and up for errors.
"""

import argparse
import io
import json
import sys

from raag.classifier.classify import classify, render_report, report
from raag.classifier.witness import EmbeddingWitness
from raag.complexes.constructions import (
    barycentric_subdivision,
    cone,
    flag_completion,
    is_flag,
    join,
    join_f_vector,
    simplicial_quotient,
)
from raag.complexes.fixtures import FIXTURE_NAMES, fixture, param_count
from raag.complexes.io import (
    dumps_complex,
    read_complex,
    read_json,
    read_vertex_map,
    write_text_atomic,
)
from raag.config import default_primes, kunneth_cell_limit, restart_budget
from raag.errors import (
    CorruptComplexError,
    MalformedInputError,
    PreconditionError,
    RaagError,
)
from raag.homology.chain_complex import simplicial_chain_complex
from raag.homology.homology import homology_Z, join_homology_kunneth
from raag.homology.primes import require_prime
from raag.logging_setup import get_logger
from raag.models.cube_complex import FiniteQuotientSpec
from raag.models.growth import growth_experiment


class _Parser(argparse.ArgumentParser):
    # Usage errors exit through main with a raag exit code, not argparse's 2.
    def error(self, message):
        raise MalformedInputError(f"{self.prog}: {message}")


class _Transform(argparse.Action):
    # All transforms share one ordered list so they replay in command-line order.
    def __call__(self, parser, namespace, values, option_string=None):
        transforms = list(getattr(namespace, "transforms", None) or [])
        transforms.append((self.dest, values))
        namespace.transforms = transforms


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}"
        )


def _source_options():
    parser = _Parser(add_help=False)
    source = parser.add_mutually_exclusive_group()
    source.add_argument(
        "--fixture", help=f"a named complex, one of {', '.join(FIXTURE_NAMES)}"
    )
    source.add_argument("--input", help="a facet-list JSON file")
    parser.add_argument("--n", type=int, help="size parameter for the fixture")
    parser.add_argument("--q", type=int, help="torsion order for moore fixtures")
    parser.add_argument(
        "--sd", nargs=0, action=_Transform, help="barycentric subdivision"
    )
    parser.add_argument(
        "--cone", nargs=0, action=_Transform, help="cone on the complex"
    )
    parser.add_argument(
        "--join",
        nargs="+",
        metavar="PATH",
        action=_Transform,
        help="join with each complex in turn",
    )
    parser.add_argument(
        "--quotient",
        metavar="MAP",
        action=_Transform,
        help="identify vertices by a vertex map JSON file",
    )
    parser.add_argument(
        "--flag-complete",
        dest="flag_complete",
        nargs=0,
        action=_Transform,
        help="replace the complex by the clique complex of its 1-skeleton",
    )
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.set_defaults(transforms=[])
    return parser


def _start(args):
    transforms = list(args.transforms)
    if args.fixture is not None:
        n_params = param_count(args.fixture)
        params = ()
        if n_params:
            value = args.q if args.fixture.startswith("moore") else args.n
            if value is None:
                flag = "--q" if args.fixture.startswith("moore") else "--n"
                raise PreconditionError(f"Fixture {args.fixture!r} needs {flag}.")
            params = (value,)
        return fixture(args.fixture, *params), transforms
    if args.input is not None:
        return read_complex(args.input), transforms
    if transforms and transforms[0][0] == "join" and len(transforms[0][1]) >= 2:
        first, *rest = transforms[0][1]
        return read_complex(first), [("join", rest)] + transforms[1:]
    raise MalformedInputError("Give one of --fixture or --input, or --join A B.")


def load_complex(args):
    logger = get_logger("cli")
    complex_, transforms = _start(args)
    for name, value in transforms:
        if name == "sd":
            complex_ = barycentric_subdivision(complex_)
        elif name == "cone":
            complex_ = cone(complex_)
        elif name == "join":
            for path in value:
                complex_ = join(complex_, read_complex(path))
        elif name == "quotient":
            complex_ = simplicial_quotient(
                complex_, read_vertex_map(value, complex_.vertex_count)
            )
        elif name == "flag_complete":
            print(
                "NOTICE: replacing the complex by the flag completion of its "
                "1-skeleton. This changes the group being classified.",
                file=sys.stderr,
            )
            complex_ = flag_completion(complex_.skeleton(1))
        logger.info(f"Applied {name}: {complex_!r}")
    return complex_


def _emit(args, text):
    if args.output:
        write_text_atomic(args.output, text)
    else:
        sys.stdout.write(text)


def cmd_build(args):
    complex_ = load_complex(args)
    flag, witness = is_flag(complex_)
    status = "flag" if flag else f"not flag, missing simplex {list(witness)}"
    info = f"f-vector {list(complex_.f_vector())}, {status}"
    _emit(args, dumps_complex(complex_))
    print(info, file=sys.stdout if args.output else sys.stderr)
    return 0


def _join_summary(complex_, args):
    factors = complex_.join_factors
    if factors is None:
        return None
    n_cells = sum(join_f_vector(*factors))
    if n_cells <= kunneth_cell_limit:
        return None
    get_logger("cli").info(
        f"Kunneth path for {complex_.name}, {n_cells} cells in the join"
    )
    summary = join_homology_kunneth(*factors, primes=args.primes)
    return summary if args.reduced else summary.unreduced()


def cmd_homology(args):
    complex_ = load_complex(args)
    for p in args.primes:
        require_prime(p)
    summary = _join_summary(complex_, args)
    chain_complex = None
    if summary is None:
        chain_complex = simplicial_chain_complex(complex_, augmented=args.reduced)
        summary = homology_Z(chain_complex, args.primes)

    if args.dump_matrices and chain_complex is None:
        raise PreconditionError(
            "This join is only handled through the Kunneth formula, "
            "so there are no boundary matrices to dump."
        )
    if args.dump_matrices:
        stream = io.StringIO()
        chain_complex.dump(stream)
        write_text_atomic(args.dump_matrices, stream.getvalue())

    mismatches = summary.uct_mismatches()
    if complex_.join_factors is not None:
        f_vector = join_f_vector(*complex_.join_factors)
    else:
        f_vector = complex_.f_vector()
    lines = [f"{complex_.name or 'complex'}, f-vector {list(f_vector)}"]
    lines.append(summary.render())
    if mismatches:
        lines.append(f"UCT check: MISMATCH at (degree, prime) {mismatches}")
    else:
        lines.append("UCT check: consistent")
    text = "\n".join(lines) + "\n"

    if args.output:
        write_text_atomic(args.output, json.dumps(summary.to_dict(), indent=2) + "\n")
        print(text, end="")
    else:
        sys.stdout.write(text)
    if mismatches:
        get_logger("cli").warning(
            f"UCT mismatches for {complex_.name}: {mismatches}"
        )
        return CorruptComplexError.exit_code
    return 0


def cmd_classify(args):
    complex_ = load_complex(args)
    witness = None
    if args.witness:
        witness = EmbeddingWitness.from_dict(read_json(args.witness))
    verdict = classify(complex_, witness=witness, budget=args.budget)
    rep = report(complex_, verdict)
    if args.output:
        write_text_atomic(args.output, json.dumps(rep, indent=2) + "\n")
    print(render_report(rep))
    return verdict.exit_code


def _growth_chain(args, complex_):
    if args.specs:
        obj = read_json(args.specs)
        if not isinstance(obj, list):
            raise MalformedInputError("A quotient spec file must hold a JSON list.")
        return [FiniteQuotientSpec.from_json_obj(item) for item in obj]
    moduli = args.moduli
    if any(k < 1 for k in moduli):
        raise PreconditionError(f"Moduli must be at least 1, got {moduli}.")
    if moduli != sorted(moduli):
        raise PreconditionError(f"Moduli must be ascending, got {moduli}.")
    return [FiniteQuotientSpec.congruence(complex_, k) for k in moduli]


def cmd_growth(args):
    complex_ = load_complex(args)
    p = 0 if args.field == "Q" else args.prime
    series = growth_experiment(
        complex_, p, _growth_chain(args, complex_), log_db=args.log_db
    )
    stream = io.StringIO()
    series.to_csv(stream)
    _emit(args, stream.getvalue())
    if args.dump_covers:
        text = json.dumps(series.cover_summaries(), indent=2) + "\n"
        write_text_atomic(args.dump_covers, text)
    print(series.render(), file=sys.stdout if args.output else sys.stderr)
    return 0


def build_parser():
    parser = _Parser(
        prog="raag",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)
    source = _source_options()

    build = commands.add_parser("build", parents=[source], help="build a complex")
    build.set_defaults(func=cmd_build)

    homology = commands.add_parser(
        "homology", parents=[source], help="integral and mod p homology"
    )
    homology.add_argument(
        "--primes", type=_int_list, default=list(default_primes), help="e.g. 2,3"
    )
    homology.add_argument(
        "--reduced", action="store_true", help="reduced homology, with degree -1"
    )
    homology.add_argument(
        "--dump-matrices", dest="dump_matrices", metavar="PATH",
        help="write the boundary matrices here",
    )
    homology.set_defaults(func=cmd_homology)

    classify_ = commands.add_parser(
        "classify", parents=[source], help="zero or positive minimal volume entropy"
    )
    classify_.add_argument("--witness", metavar="PATH", help="embedding witness JSON")
    classify_.add_argument(
        "--budget",
        type=int,
        default=restart_budget,
        help="randomized collapse restarts",
    )
    classify_.set_defaults(func=cmd_classify)

    growth = commands.add_parser(
        "growth", parents=[source], help="homology growth over abelian covers"
    )
    growth.add_argument("--prime", type=int, default=2)
    growth.add_argument("--field", choices=["Fp", "Q"], default="Fp")
    growth.add_argument(
        "--moduli", type=_int_list, default=[2, 3], help="congruence levels, e.g. 2,3,4"
    )
    growth.add_argument(
        "--specs",
        metavar="PATH",
        help="JSON list of quotient specs, instead of --moduli",
    )
    growth.add_argument(
        "--log-db",
        dest="log_db",
        metavar="NAME",
        help="also record rows in a run database",
    )
    growth.add_argument(
        "--dump-covers",
        dest="dump_covers",
        metavar="PATH",
        help="write the cell counts of every cover here as JSON",
    )
    growth.set_defaults(func=cmd_growth)
    return parser


def main(argv=None):
    logger = get_logger("cli")
    logger.info(f"raag {argv if argv is not None else sys.argv[1:]}")
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except RaagError as err:
        logger.warning(f"{type(err).__name__}: {err}")
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code


def cli():
    sys.exit(main())


if __name__ == "__main__":
    cli()
