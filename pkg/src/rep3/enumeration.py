"""Non-isomorphic small-graph generation and canonical forms.

canonical_form returns the graph6 record of a canonical relabeling: the
lexicographically least upper-triangle bit string over all vertex
orderings sorted by ascending degree.  Restricting to degree-sorted
orderings is safe (the degree multiset is preserved by isomorphism, so
the restricted ordering class is mapped onto itself) and prunes most of
the n! space; the remaining ties are resolved by depth-first search
with three cuts:

  * at each position only candidates whose adjacency bits to the placed
    prefix are minimal can start a minimal completion, because those
    bits occupy the same positions of the final string;
  * candidates that agree on their whole neighborhood outside the pair
    (interchangeable twins) yield identical subtrees, so only the first
    is expanded;
  * a prefix that compares worse than the best full string found so far
    is abandoned.

enumerate_graphs grows the catalogue level by level on edge count:
every (m+1)-edge class is reachable by adding one edge to some m-edge
class representative, and canonical forms weed out duplicates.  The
stream is deterministic: levels ascend, first discovery wins within a
level.
"""

from itertools import combinations

from .errors import MalformedRecord, OrderTooLarge
from .graphcore import Graph, parse_graph6

MAX_CANON = 10
MAX_ENUM = 9


def canonical_form(g: Graph) -> bytes:
    if g.n > MAX_CANON:
        raise OrderTooLarge(f"canonical form capped at order {MAX_CANON}")
    n = g.n
    rows = g.rows
    degs = g.degrees
    position_degree = sorted(degs)
    pool = {}
    for v in range(n):
        pool.setdefault(degs[v], []).append(v)

    poolmask = {}
    for v, d in enumerate(degs):
        poolmask[d] = poolmask.get(d, 0) | (1 << v)

    full = (1 << n) - 1
    acc = [0] * n  # adjacency bits of each vertex toward the placed prefix
    cur = [0] * n
    best = [None, None]  # [prefix-per-level list, chunk list]

    def record():
        pref = [0] * (n + 1)
        code = 0
        for lvl in range(n):
            code = (code << lvl) | cur[lvl]
            pref[lvl + 1] = code
        best[0] = pref
        best[1] = cur[:]

    def descend(level, child, v, used):
        rest = full & ~used & ~(1 << v)
        rv = rows[v]
        t = rest
        while t:
            low = t & -t
            w = low.bit_length() - 1
            acc[w] = (acc[w] << 1) | ((rv >> w) & 1)
            t ^= low
        dfs(level + 1, child, used | (1 << v))
        t = rest
        while t:
            low = t & -t
            acc[low.bit_length() - 1] >>= 1
            t ^= low

    def dfs(level, code, used):
        if level == n:
            if best[0] is None or code < best[0][n]:
                record()
            return
        cm = poolmask[position_degree[level]] & ~used
        bp = best[0]
        if cm & (cm - 1) == 0:
            v = cm.bit_length() - 1
            m = acc[v]
            child = (code << level) | m
            if bp is not None and child > bp[level + 1]:
                return
            cur[level] = m
            descend(level, child, v, used)
            return
        m = -1
        t = cm
        while t:
            low = t & -t
            a = acc[low.bit_length() - 1]
            if m < 0 or a < m:
                m = a
            t ^= low
        child = (code << level) | m
        if bp is not None and child > bp[level + 1]:
            return
        cur[level] = m
        kept = []
        t = cm
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            if acc[v] != m:
                continue
            merged = rows[v] | low
            twin = False
            for u in kept:
                bu = 1 << u
                if (rows[u] | bu | low) == (merged | bu):
                    twin = True
                    break
            if not twin:
                kept.append(v)
        for v in kept:
            descend(level, child, v, used)

    dfs(0, 0, 0)

    out = bytearray([63 + n])
    group = 0
    nbits = 0
    chunks = best[1]
    for lvl in range(1, n):
        chunk = chunks[lvl]
        for k in range(lvl - 1, -1, -1):
            group = (group << 1) | ((chunk >> k) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + group)
                group = 0
                nbits = 0
    if nbits:
        out.append(63 + (group << (6 - nbits)))
    return bytes(out)


_catalogue = {}  # n -> list of canonical graph6 records in stream order


def _generate(n):
    levels = [parse_graph6(canonical_form(Graph(n, (0,) * n)))]
    stream = [canonical_form(levels[0])]
    current = levels
    while True:
        seen = set()
        nxt = []
        for g in current:
            rws = g.rows
            for u, v in combinations(range(n), 2):
                if (rws[u] >> v) & 1:
                    continue
                child_rows = list(rws)
                child_rows[u] |= 1 << v
                child_rows[v] |= 1 << u
                form = canonical_form(Graph(n, tuple(child_rows)))
                if form not in seen:
                    seen.add(form)
                    nxt.append(form)
        if not nxt:
            break
        stream.extend(nxt)
        current = [parse_graph6(f) for f in nxt]
    return stream


def enumerate_graphs(n: int):
    """One representative per isomorphism class of order n, 1 <= n <= 9.

    Yields canonically labeled graphs; the sequence is identical across
    calls (results are memoised as graph6 records).
    """
    if not 1 <= n <= MAX_ENUM:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ENUM}, got {n}")
    if n not in _catalogue:
        _catalogue[n] = _generate(n)
    for form in _catalogue[n]:
        yield parse_graph6(form)


def _byte_lines(source):
    if isinstance(source, bytes):
        yield from source.splitlines()
        return
    if isinstance(source, str):
        yield from source.encode("ascii").splitlines()
        return
    for line in source:
        if isinstance(line, str):
            line = line.encode("ascii")
        yield line.rstrip(b"\r\n")


def read_graph6_stream(source):
    """Graphs from newline-separated graph6 records, in file order.

    source may be bytes, str, or any iterable of lines (an open binary
    file works).  Blank lines and a leading ">>graph6<<" header are
    tolerated; anything else malformed is reported with its 1-based
    line number.
    """
    for lineno, raw in enumerate(_byte_lines(source), start=1):
        line = raw.strip()
        if line.startswith(b">>graph6<<"):
            line = line[len(b">>graph6<<"):]
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except MalformedRecord as exc:
            raise MalformedRecord(str(exc), line=lineno) from None
