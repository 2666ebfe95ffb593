from tsp.exact import solve_exact
from tsp.instance import TspInstance, TspSolution, validate_walk
from tsp.oracle import brute_force_oracle
from tsp.petals import PetalDecomposition, petal_decomposition, ts_free_product, ts_free_product_walk
from tsp.tree import ts_on_tree_graph, ts_tree, ts_tree_walk
