import os

from dotenv import load_dotenv


load_dotenv()


# ####### CAPS ########
#      ############
#         #####

DEFAULT_CAP = 200_000  # vertices of a ball / elements of a search frontier

MAX_REQUIRED = 22           # bitmask DP over required vertices
HAMILTONIAN_DP_LIMIT = 24   # subset DP for Hamiltonian paths
BACKTRACK_LIMIT = 40        # pruned backtracking beyond the DP limit
EXACT_SPANNING_LIMIT = 16   # grids/cubes solved exactly by the TSP solver

ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 20_000

NASH_WILLIAMS_BOX_LIMIT = 250_000  # points enumerated by the uniqueness check


def _int_env(name, default):
    value = os.getenv(name)
    if value is None or value.strip() == '':
        return default
    return int(value)


def vertex_cap() -> int:
    return _int_env('LAMPLIGHTER_CAP', DEFAULT_CAP)


def frontier_cap() -> int:
    return _int_env('LAMPLIGHTER_CAP', DEFAULT_CAP)


def backtrack_budget() -> int:
    return _int_env('LAMPLIGHTER_BACKTRACK_BUDGET', 5_000_000)


# ####### LOGGING ########
#      ############
#         #####

LOG_FILE = os.getenv('LAMPLIGHTER_LOG_FILE', 'lamplighter.log')
LOG_LEVEL = os.getenv('LAMPLIGHTER_LOG_LEVEL', 'WARNING')


# ####### CLI ########
#      ############
#         #####

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_VERIFY = 4

BACKENDS = ('auto', 'tree', 'petal', 'box', 'finite', 'generic')
QH_STRATEGIES = ('abelian', 'generic', 'refutation')
DEFAULT_GENERIC_SLACK = 2


if __name__ == '__main__':
    print(vertex_cap(), frontier_cap(), LOG_FILE)
