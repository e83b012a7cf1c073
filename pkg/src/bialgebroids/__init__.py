"""Exact-arithmetic engine for generalized bialgebra structures.

Constructs bialgebroids over noncommutative base algebras (smash products
of braided commutative Yetter-Drinfeld algebras, FRT quantum groupoids at
graded truncation), converts between the three equivalent axiom systems
(counit form, anchor form, internal-tensor form), and machine-verifies
every axiom with exact scalars over Q or GF(p).  The weak-Hopf side builds
bicoalgebroids, the formal arrow-reversal of a bialgebroid.
"""

from .exactlin import (Field, FieldError, GF, QQ, Matrix, QuotSpace,
                       kernel_basis, quotient_space, solve_linear, rank,
                       invert, span_rref, same_span)
from .algebra import (AlgebraError, FinDimAlgebra, FinDimCoalgebra,
                      GradedAlgebra, LinMap, ResourceLimit,
                      TruncationOverflow, check_algebra, check_coalgebra,
                      check_map, dual_algebra, dual_coalgebra, end_algebra,
                      enveloping, graded_algebra, opposite, tensor_algebra)
from .hopf import (BialgebraData, ComoduleStruct, ModuleStruct, YDModule,
                   YDModuleAlgebra, action_from_cqt, braided_symmetric,
                   braiding, check_bialgebra, check_braided_commutative,
                   check_comodule_algebra_op, check_module_algebra,
                   check_yetter_drinfeld, coaction_from_qt)
from .bimodtensor import (AeBimodule, AeRing, GammaSpace, TensorOverA,
                          ae_ring, cotensor, end_bimodule, takeuchi_product,
                          tensor_over_A, theta, theta_prime, times_A)
from .bialgebroid import (BialgebroidData, check_antipode, check_coring,
                          check_lu, check_module_tensor_action, check_takeuchi,
                          check_xu, eps_from_mu, find_antipode_section,
                          mu_from_eps)
from .constructions import (RMatrix, SmashAlgebra, braided_plane, check_qybe,
                            frt_bialgebra, frt_bialgebroid, smash_product,
                            standard_q_rmatrix, yd_antipode, yd_bialgebroid)
from .weakhopf import (BicoalgebroidData, WeakHopfData,
                       bicoalgebroid_from_weak_hopf, check_bicoalgebroid,
                       check_weak_bialgebra, check_weak_hopf, eps_t,
                       groupoid_algebra, target_coalgebra)
from .reports import CheckItem, Report

__version__ = "0.1.0"
