"""Clean dessins d'enfants, their Brauer graph algebra invariants, and Kauer
mutations.

The heavy lifting happens in the compiled extension; this package re-exports
it and adds a small dict-returning convenience wrapper.
"""

import json as _json

try:
    from ._dessinlab import (
        Dessin,
        FormulaNotApplicable,
        ParseError,
        ResourceLimitError,
        ValidationError,
        clean_cover,
        conjugator,
        derived_equivalent,
        enumerate_dessins,
        is_isomorphic,
        mutation_class_size,
        random_dessin,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _dessinlab import (
        Dessin,
        FormulaNotApplicable,
        ParseError,
        ResourceLimitError,
        ValidationError,
        clean_cover,
        conjugator,
        derived_equivalent,
        enumerate_dessins,
        is_isomorphic,
        mutation_class_size,
        random_dessin,
    )

__version__ = "0.1.0"


def report(dessin, verify=False):
    """Invariant report as a dict (see Dessin.report for the JSON form)."""
    return _json.loads(dessin.report(verify))


__all__ = [
    "Dessin",
    "FormulaNotApplicable",
    "ParseError",
    "ResourceLimitError",
    "ValidationError",
    "clean_cover",
    "conjugator",
    "derived_equivalent",
    "enumerate_dessins",
    "is_isomorphic",
    "mutation_class_size",
    "random_dessin",
    "report",
]
