"""Exact constructions for weakly root-graded Lie algebras.

Thin convenience layer over the compiled extension: rational arguments may
be given as int, Fraction, or "p/q" strings.
"""

from fractions import Fraction

from ._rootgrade import (
    GModule,
    GradedLieAlgebra,
    ParabolicSubalgebra,
    PModule,
    SectionModule,
    abelian_extension,
    chevalley,
    frobenius,
    gl,
    minimal_submodule,
    module,
    realize,
    restrict_to_p,
    run_job,
    sections,
    tensor,
    trivial_module,
    validate,
)
from ._rootgrade import character_module as _character_module
from ._rootgrade import highest_weight_module as _highest_weight_module
from ._rootgrade import parabolic as _parabolic

__all__ = [
    "GModule",
    "GradedLieAlgebra",
    "ParabolicSubalgebra",
    "PModule",
    "SectionModule",
    "abelian_extension",
    "character_module",
    "chevalley",
    "frobenius",
    "gl",
    "highest_weight_module",
    "minimal_submodule",
    "module",
    "parabolic",
    "realize",
    "restrict_to_p",
    "run_job",
    "sections",
    "tensor",
    "trivial_module",
    "validate",
]


def _coords(xs):
    return [str(Fraction(x)) for x in xs]


def parabolic(g, x):
    """Parabolic decomposition of g at the coroot-coordinate vector x."""
    return _parabolic(g, _coords(x))


def character_module(g, par, lam):
    """One-dimensional p-module with lambda given on the simple coroots."""
    return _character_module(g, par, _coords(lam))


def highest_weight_module(g, lam):
    """Irreducible module of the given dominant integral highest weight."""
    return _highest_weight_module(g, _coords(lam))
