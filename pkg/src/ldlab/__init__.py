"""Executable workbench for linearly distributive and star-autonomous
structure over finite, exactly checkable backends.
"""

from .backends import (MatrixBackend, MissingWitness, Mor, Scope,
                       ScopeTooLarge, TableBackend, ThinBackend, seq)
from .comonads import (check_comonad, check_L1, check_L2,
                       check_monoidal_comonad, check_nu, comonad_from_bialgebra,
                       hopf_comonad, identity_comonad, lift_negation,
                       nu_from_lift)
from .em import (build_em_table, check_em_compat, checker_equivalence_suite,
                 em_lindist_instance, em_tensor, em_unit, enumerate_coalgebras,
                 is_coalgebra, is_coalgebra_morphism, scoped_coalgebras)
from .instances import (LiveInstance, enumerate_interior_comonads,
                        gen_group_hopf, gen_lukasiewicz, gen_matrix_compact,
                        interior_comonad)
from .kernel_checks import (check_category_laws, check_monoidal_laws,
                            check_symmetry_laws)
from .lindist import (check_lindist, check_negation_functoriality,
                      check_star_hom_bijection, check_star_structure,
                      check_triangle_identities, lindist_from_star,
                      star_from_lindist)
from .report import AXIOM_CATALOGUE, AxiomResult, CheckReport, canonical_json
from .schema import (SchemaError, load_instance, realize, save_instance,
                     serialize_table_instance, validate_instance)
from .starcomonad import check_star_comonad, compact_hopf_check, notions_coincide
from .structures import (Coalgebra, Comonad, HopfAlgebra, Lindist, Monoidal,
                         Negation, NegLift, PreconditionFailure,
                         StarAutonomous, StructureMissing, Symmetry)
from .suite import parse_axioms, run_suite

__version__ = "0.1.0"
