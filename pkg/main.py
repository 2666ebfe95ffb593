"""
Lamplighter toolkit: word lengths, dead-end depth, Hamiltonian differences
and quasi-Hamiltonian certificates from the command line.

    python main.py wordlen --group lamplighter.json --element g.json
    python main.py hamdiff --group cyclic8.json
    python main.py verdict --H z8.json --K z2.json
    python main.py depth-profile --group lamplighter.json --radius 6 --kmax 8
    python main.py qh --group plane.json --nmax 2 --M 2
    python main.py export-graph --cycle 8

Exit codes: 0 success, 2 usage error, 3 resource cap, 4 verification failure.
"""
import argparse
import sys
from warnings import filterwarnings

from cli.commands import cmd_depth_profile, cmd_export_graph, cmd_hamdiff, cmd_qh, cmd_verdict, cmd_wordlen
from cli.output import FORMATS
from errors import LamplighterError
from logger_config import log_error, setup_logger
import settings as st

filterwarnings("ignore")

logger = setup_logger()


COMMANDS = {
    'wordlen': (cmd_wordlen, "word length of a lamplighter element, with its TS walk"),
    'hamdiff': (cmd_hamdiff, "Hamiltonian difference table of finite groups"),
    'verdict': (cmd_verdict, "bounded or unbounded depth of A wr (H * K)"),
    'depth-profile': (cmd_depth_profile, "depth of every element up to a word length"),
    'qh': (cmd_qh, "quasi-Hamiltonian certificate or excess table"),
    'export-graph': (cmd_export_graph, "DOT export of a Cayley ball, a cube or a cycle"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lamplighter', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest='command', required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument('--group', help="JSON group spec file (lamplighter spec for wordlen/depth-profile)")
        p.add_argument('--format', choices=FORMATS, default=None, help="output format")
        p.add_argument('--out', default=None, help="output path (default: stdout)")
        p.add_argument('--verify', action='store_true', help="replay every emitted walk before exiting")
        p.add_argument('--seed', type=int, default=0)

    wordlen = sub.choices['wordlen']
    wordlen.add_argument('--element', help="JSON element file: {\"lamps\": [...], \"position\": ...}")
    wordlen.add_argument('--backend', choices=st.BACKENDS, default='auto')

    verdict = sub.choices['verdict']
    verdict.add_argument('--H', dest='H', help="JSON spec of the first finite factor")
    verdict.add_argument('--K', dest='K', help="JSON spec of the second finite factor")

    profile = sub.choices['depth-profile']
    profile.add_argument('--radius', type=int)
    profile.add_argument('--kmax', type=int)
    profile.add_argument('--backend', choices=st.BACKENDS, default='auto')
    profile.add_argument('--sample', type=int, default=None, help="elements per shell, drawn with --seed")

    qh = sub.choices['qh']
    qh.add_argument('--nmax', type=int)
    qh.add_argument('--M', dest='M', type=int, default=None)
    qh.add_argument('--strategy', default=None, help=f"one of {', '.join(st.QH_STRATEGIES)}")

    export = sub.choices['export-graph']
    export.add_argument('--radius', type=int, default=None)
    export.add_argument('--cube', default=None, help="comma-separated sides, e.g. 4,3")
    export.add_argument('--cycle', type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return st.EXIT_USAGE if e.code else st.EXIT_OK
    try:
        return args.func(args)
    except LamplighterError as e:
        log_error(logger, args.command, e)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
