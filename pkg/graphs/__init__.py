from graphs.cayley import CayleyBall, cayley_ball, finite_cayley_graph
from graphs.constructions import (complete_graph, cube_graph, cycle_graph, grid_graph, path_graph,
                                  power_graph, product_graph)
from graphs.graph import FiniteGraph
