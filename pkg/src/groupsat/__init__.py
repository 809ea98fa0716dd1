"""Satisfiability and tautology checking for Boolean expressions.

Three routes to the same answer:

* :mod:`groupsat.oracle` evaluates the full truth table;
* :mod:`groupsat.dsat` decides normal forms by complementary-pair search;
* :mod:`groupsat.network` precomputes a status cell for every expression up
  to a length bound and answers queries by walking one trie edge per symbol.
"""

from .dsat import (
    ComparisonStats,
    clause_satisfiable,
    cnf_satisfiable_via_dnf,
    dnf_satisfiable,
    find_equal,
)
from .expr import (
    And,
    Expr,
    LengthMeasure,
    Not,
    Or,
    ParseError,
    Var,
    decompose,
    enumerate_expressions,
    evaluate,
    length,
    parse,
    render,
    variables,
)
from .network import Network, build, compose_status, load, query, save
from .normal_forms import (
    CnfExpr,
    ConjClause,
    DisjClause,
    DnfExpr,
    Literal,
    embed,
    normalize_clause,
    to_cnf,
    to_dnf,
)
from .oracle import Status, classify, count_satisfying, find_witness

__version__ = "0.1.0"
