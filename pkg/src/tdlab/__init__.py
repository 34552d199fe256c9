"""Workbench for logics on structures of bounded tree-depth.

Finite relational structures, a shared FO / FO+MOD / MSO formula AST with
brute-force semantics, canonical q-orders and q-types, the three
formula-emission pipelines (order-invariant FO to FO, MSO to FO,
order-invariant MSO to FO+MOD), tree encodings of large numbers, an
FO-definable tree-decomposition, and a counter-machine reduction.  All
emitted formulas can be checked against brute-force evaluation on small
structures.
"""

__version__ = "0.1.0"
