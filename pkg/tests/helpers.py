"""Small named graphs shared across test modules.

Each constructor returns a fresh Graph value; vertex labels follow the
edge lists written out here so tests can assert exact indices.
"""

from rep3.graphcore import from_edge_list


def k1():
    return from_edge_list(1, [])


def k2():
    return from_edge_list(2, [(0, 1)])


def k3():
    return from_edge_list(3, [(0, 1), (0, 2), (1, 2)])


def k4():
    return from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def k5():
    return from_edge_list(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])


def p3():
    return from_edge_list(3, [(0, 1), (1, 2)])


def p4():
    # path 0-1-2-3, degrees (1,2,2,1)
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


def c4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def c5():
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def star(leaves):
    """K_{1,leaves} with the hub at index 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def paw():
    # triangle 0,1,2 plus pendant 3 attached to 0
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def antiregular5():
    # degrees (4,3,2,2,1): vertex 0 dominates, vertex 4 is the leaf
    return from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)])


def empty(n):
    return from_edge_list(n, [])
