import argparse
import logging
import sys
from typing import List, Optional

from mlcheck.commands import COEFF_GRID, COMMANDS
from mlcheck.config import Config
from mlcheck.errors import MLCheckError, UsageError
from mlcheck.messages import Messages
from mlcheck.models import Command, Identity, RunConfig
from mlcheck.services.run_logger import RunLogger
from mlcheck.store import ReportStore

# Configure logging
logging.basicConfig(
    level=Config.log_level(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DOMAIN = 3

DEFAULT_ALPHAS = {
    Command.FIGURE1: [0.9, 0.75, 0.5, 0.25],
    Command.COEFF_CHECK: COEFF_GRID,
}
FALLBACK_ALPHAS = [0.5]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return value


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='mlcheck',
        description='Mittag-Leffler identities and the fractional logistic equation: numerical checks',
    )
    parser.add_argument('command', choices=[c.value for c in Command], help='Check to run')
    parser.add_argument('--alpha', type=float, action='append', dest='alphas',
                        help='Fractional order; repeat for several values')
    parser.add_argument('--k', type=float, default=1.0, help='Rate constant (default: 1)')
    parser.add_argument('--u0', type=float, default=0.8, help='Initial fraction N(0)/N_max (default: 0.8)')
    parser.add_argument('--t-max', type=_positive_float, default=5.0, help='End of the time grid (default: 5)')
    parser.add_argument('--steps', type=_positive_int, default=500, help='Grid steps, points = steps + 1 (default: 500)')
    parser.add_argument('--out', default=None, help='Output directory (default: MLCHECK_OUTPUT_DIR)')
    parser.add_argument('--svg', action='store_true', help='Also write SVG plots')
    parser.add_argument('--beta', type=float, default=1.0, help='Second Mittag-Leffler parameter for ml-eval')
    parser.add_argument('--identity', choices=[i.value for i in Identity], default=Identity.REMARK.value,
                        help='Identity scanned by identity-check (default: remark)')
    parser.add_argument('--n-max', type=int, default=4, help='Largest n for lemma-check and coeff-check')
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    alphas = args.alphas or DEFAULT_ALPHAS.get(command, FALLBACK_ALPHAS)
    return RunConfig(
        command=command,
        alphas=list(alphas),
        k=args.k,
        u0=args.u0,
        t_max=args.t_max,
        steps=args.steps,
        output_path=args.out or Config.OUTPUT_DIR,
        emit_svg=args.svg,
        beta=args.beta,
        identity=Identity(args.identity),
        n_max=args.n_max,
    )


def run(argv: Optional[List[str]] = None, run_logger: Optional[RunLogger] = None) -> int:
    """Run one command and return its exit code"""
    run_logger = run_logger or RunLogger()

    try:
        Config.validate()
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # --help
        return int(e.code or EXIT_OK)
    except (UsageError, ValueError) as e:
        print(Messages.ERRORS["usage"](e), file=sys.stderr)
        return EXIT_USAGE

    files = []
    clock = {'latency_ms': None}
    try:
        with run_logger.timed() as clock:
            cfg = config_from_args(args)
            store = ReportStore(cfg.output_path, Config.SVG_SALT)
            files = COMMANDS[cfg.command](cfg, store)
    except UsageError as e:
        code, message, error = EXIT_USAGE, Messages.ERRORS["usage"](e), str(e)
    except OSError as e:
        code, message, error = EXIT_IO, Messages.ERRORS["io"](e), str(e)
    except (MLCheckError, ValueError) as e:
        code, message, error = EXIT_DOMAIN, Messages.ERRORS["domain"](e), str(e)
    else:
        run_logger.log_run(args.command, vars(args), [str(f) for f in files], clock['latency_ms'])
        return EXIT_OK

    print(message, file=sys.stderr)
    run_logger.log_run(args.command, vars(args), [str(f) for f in files], clock['latency_ms'],
                       success=False, error_message=error)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
