from groups.abelian import AbelianModel, make_abelian
from groups.finite import FiniteGroupTable, FiniteModel, make_cyclic, make_finite
from groups.free import FreeModel, make_free
from groups.free_product import FreeProductModel, make_free_product
from groups.models import GeneratingSet, GroupElement, GroupModel, invert, multiply, word_length_in_group
