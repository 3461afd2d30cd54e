"""Class-2 nilpotent quotient oracle for finite presentations."""

from surfbraid.oracle.class2 import Class2Elt, beta, collect_class2
from surfbraid.oracle.lattice import IntLattice, format_invariants, smith_invariants
from surfbraid.oracle.quotient import (
    Class2Quotient,
    abelian_invariants,
    class2_quotient_lattice,
    gamma2_mod_gamma3_invariants,
    is_trivial_class2,
)

__all__ = [
    "Class2Elt",
    "Class2Quotient",
    "IntLattice",
    "abelian_invariants",
    "beta",
    "class2_quotient_lattice",
    "collect_class2",
    "format_invariants",
    "gamma2_mod_gamma3_invariants",
    "is_trivial_class2",
    "smith_invariants",
]
