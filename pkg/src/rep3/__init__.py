"""Toolkit for driving a graph's repeated-degree count to three.

The central quantity is the repetition number of a graph: the largest
number of vertices sharing one degree value.  This package provides the
graph plumbing, the triple classification that predicts when few
deletions suffice, an exact minimum-deletion solver with independently
checkable certificates, a small-graph enumerator, and an exhaustive
verification harness, all behind the `rep3` command line tool.
"""

__version__ = "0.1.0"
