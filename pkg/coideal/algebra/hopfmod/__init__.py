'''
This package provides modules, comodules and relative Hopf modules, their
tensor and cotensor products, the functor pairs of the correspondence and the
canonical isomorphisms between them.
@author: coideal developers
'''

# coideal Imports
from coideal.algebra.hopfmod.structures import (Carrier, Category, ComoduleStr, HopfModule, ModuleStr, coidealCategoryMismatch,
                                                coidealStructureError, generated_subobject, is_morphism, morphism_space, morphisms,
                                                permutation_matrix, subalgebra_structure)
from coideal.algebra.hopfmod.products import (CotensorOverCoalgebra, TensorKind, TensorOverAlgebra, act_by, cotensor_over_C,
                                              decorate_tensor, tensor_over_A)
from coideal.algebra.hopfmod.functors import (AdjunctionMap, Pair, TakeuchiContext, adjunction_maps, fundamental_theorem, takeuchi_phi,
                                              takeuchi_phi_map, takeuchi_psi, takeuchi_psi_map)
from coideal.algebra.hopfmod.isomorphisms import CanonicalIso, IsoResult, canonical_iso
