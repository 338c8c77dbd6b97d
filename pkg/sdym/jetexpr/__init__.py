from .atoms import AtomKind, Coordinate, InvFactor, JetAtom, Monomial, TraceAtom, NO_JET, unit_jet
from .expr import Atom, Comm, Coord, Deriv, Expr, Identity, InvDzbar, Prod, ScalarMul, Sum, Trace, Zero
from .context import (
    NonlocalDefinition, NonlocalRegistry, RewriteContext, context_variant, current_context,
    default_context, fresh_context, using_context,
)
from .polynomial import Polynomial, add_all, commutator, multiply, product
from .calculus import apply_derivatives, reduce_atom, total_derivative, trace_poly, trace_word
from .antiderivative import exact_antiderivative, inv_dzbar
from .normalize import as_poly, equals_mod_ideal, normalize, trace_expr
from .parser import parse, tokenize
from .printer import to_latex, to_text
from .corpus import random_corpus, random_expr

__all__ = [
    "AtomKind", "Coordinate", "InvFactor", "JetAtom", "Monomial", "TraceAtom", "NO_JET", "unit_jet",
    "Atom", "Comm", "Coord", "Deriv", "Expr", "Identity", "InvDzbar", "Prod", "ScalarMul", "Sum",
    "Trace", "Zero",
    "NonlocalDefinition", "NonlocalRegistry", "RewriteContext", "context_variant", "current_context",
    "default_context", "fresh_context", "using_context",
    "Polynomial", "add_all", "commutator", "multiply", "product",
    "apply_derivatives", "reduce_atom", "total_derivative", "trace_poly", "trace_word",
    "exact_antiderivative", "inv_dzbar",
    "as_poly", "equals_mod_ideal", "normalize", "trace_expr",
    "parse", "tokenize", "to_latex", "to_text",
    "random_corpus", "random_expr",
]
