'''
Exact finite-dimensional Hopf algebra machinery: linear algebra substrate,
structure constants, catalog algebras, the coideal subalgebra / factor
coalgebra correspondence, relative Hopf modules and their homology.
@author: coideal developers
'''
