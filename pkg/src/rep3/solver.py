"""Minimum-deletion search for three equal degrees.

min_deletion_for_rep3 is the ground-truth oracle: plain brute force over
deletion sets by increasing size with lexicographic tie-break.  solve3
answers the same question for the fixed allowance min(3, n-3) but walks
singleton candidates in a guided order (vertices whose removal closes a
near-tied degree pair come first); since the walk is stratified by size
it returns a set of exactly the oracle's minimum size.  Certificates
carry original vertex indices and can be re-checked from scratch by
check_certificate, which shares no code with either search.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceedsOrder, OrderTooSmall, TheoremViolation
from .graphcore import Graph, delete_vertices
from .repetition import has_three_equal


@dataclass(frozen=True)
class DeletionCertificate:
    original_order: int
    deleted: tuple
    witness: tuple
    witness_degree: int

    def to_dict(self):
        return {
            "n": self.original_order,
            "deleted": list(self.deleted),
            "witness": list(self.witness),
            "degree": self.witness_degree,
        }


def _certificate_for(g: Graph, combo) -> DeletionCertificate | None:
    """Build a certificate if deleting combo leaves three equal degrees."""
    h, remap = delete_vertices(g, combo)
    w = has_three_equal(h)
    if w is None:
        return None
    back = {new: old for old, new in remap.items()}
    witness = tuple(back[v] for v in w)
    return DeletionCertificate(g.n, tuple(combo), witness, h.degree(w[0]))


def _rep3_after(g: Graph, mask: int) -> bool:
    # cheap filter: reduced degrees from bit masks, no graph built
    counts = {}
    rows = g.rows
    degrees = g.degrees
    for v in range(g.n):
        if (mask >> v) & 1:
            continue
        d = degrees[v] - (rows[v] & mask).bit_count()
        c = counts.get(d, 0) + 1
        if c == 3:
            return True
        counts[d] = c
    return False


def min_deletion_for_rep3(g: Graph, max_k: int):
    """Smallest deletion set (size <= max_k) leaving three equal degrees.

    Sizes are tried in increasing order, sets of one size in
    lexicographic order; the first hit is returned as a certificate.
    None when the budget does not suffice.
    """
    if not 0 <= max_k <= g.n - 3:
        raise BudgetExceedsOrder(
            f"max_k {max_k} outside [0, {g.n - 3}] for order {g.n}"
        )
    for k in range(max_k + 1):
        for combo in combinations(range(g.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _rep3_after(g, mask):
                return _certificate_for(g, combo)
    return None


def _guided_vertex_order(g: Graph):
    """Vertices likely to finish the job first: those adjacent to exactly
    one member of a degree pair differing by at most one.  Deleting such
    a vertex levels that pair, growing a degree plateau."""
    degs = g.degrees
    pool = []
    seen = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if abs(degs[u] - degs[v]) > 1:
                continue
            split = g.rows[u] ^ g.rows[v]
            m = split & ~((1 << u) | (1 << v))
            while m:
                low = m & -m
                w = low.bit_length() - 1
                if w not in seen:
                    seen.add(w)
                    pool.append(w)
                m ^= low
    rest = [v for v in range(g.n) if v not in seen]
    return pool + rest


def solve3(g: Graph) -> DeletionCertificate:
    """Certificate with at most min(3, n-3) deletions.

    Every graph of order at least five admits one; a miss therefore
    signals a bug and raises TheoremViolation instead of returning.
    """
    if g.n < 5:
        raise OrderTooSmall(f"need at least 5 vertices, got {g.n}")
    allowance = min(3, g.n - 3)
    order = _guided_vertex_order(g)
    for k in range(allowance + 1):
        for combo in combinations(order, k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _rep3_after(g, mask):
                return _certificate_for(g, tuple(sorted(combo)))
    raise TheoremViolation(
        f"no deletion set of size <= {allowance} found for {g!r}"
    )


def check_certificate(g: Graph, c: DeletionCertificate) -> bool:
    """Re-derive every certificate claim from the graph alone."""
    deleted = tuple(c.deleted)
    witness = tuple(c.witness)
    if c.original_order != g.n:
        return False
    if len(witness) != 3 or len(set(witness)) != 3:
        return False
    if len(set(deleted)) != len(deleted):
        return False
    if set(deleted) & set(witness):
        return False
    if any(not (0 <= v < g.n) for v in deleted + witness):
        return False
    h, remap = delete_vertices(g, deleted)
    return all(h.degree(remap[v]) == c.witness_degree for v in witness)
