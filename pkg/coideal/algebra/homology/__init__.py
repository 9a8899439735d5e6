'''
This package decides projectivity, injectivity and the (co)generator
properties by linear systems, computes total integrals and the splittings
they induce, and derives Tor, Ext and Cotor from free resolutions.
@author: coideal developers
'''

# coideal Imports
from coideal.algebra.homology.modules import (TraceIdeal, comodule_as_module, cover_splits, faithfully_coflat, faithfully_flat, free_cover, is_cogenerator,
                                              is_generator, is_injective_comodule, is_projective, is_semisimple, is_split_epimorphism)
from coideal.algebra.homology.integrals import (DoiSplittings, coidealNotTotalIntegral, cofrobenius_check, doi_splittings, frobenius_pencil, is_frobenius,
                                              total_integral)
from coideal.algebra.homology.resolutions import (Resolution, ResolutionStep, coidealDegreeError, cotor, cotor_series, dual_comodule_module,
                                                  ext, ext_series, free_resolution, tor, tor_series, truncation_degree)
from coideal.algebra.homology.hopf import (CONDITIONS, HomComodule, HopfModuleSampler, conditions_0x, generator_criterion, hom_adjunction,
                                           hom_comodule, nonvanishing_check, regular_hopf_module, semisimple_conditions,
                                           subalgebra_hopf_module, transfer_implications)
