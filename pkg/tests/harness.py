"""Shared builders for randomized lemma-verification instances."""

from cyclemod import OrientedCycle, PathWitness, make_graph


def fan_instance(p_len, q_lens):
    """x=0, y=1, four internally disjoint paths of the given lengths."""
    edges = []
    paths = []
    nxt = 2
    for length in [p_len] + list(q_lens):
        if length == 1:
            edges.append((0, 1))
            paths.append(PathWitness((0, 1)))
            continue
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
        paths.append(PathWitness(tuple(chain)))
    g = make_graph(nxt, edges)
    return g, paths


def clashing_instance(len1, a1, len2, a2, p1_len, p2_len):
    """Two disjoint cycles joined by two disjoint paths.

    Attachment arcs a1 on the first cycle and a2 on the second must make
    both endpoint pairs mod-non-diagonal for the verifier to accept.
    """
    edges = [(i, (i + 1) % len1) for i in range(len1)]
    edges += [(len1 + i, len1 + (i + 1) % len2) for i in range(len2)]
    x1, x2 = 0, a1
    y1, y2 = len1, len1 + a2
    nxt = len1 + len2
    paths = []
    for (a, b, length) in ((x1, y1, p1_len), (x2, y2, p2_len)):
        chain = [a] + list(range(nxt, nxt + length - 1)) + [b]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
        paths.append(PathWitness(tuple(chain)))
    g = make_graph(nxt, edges)
    c1 = OrientedCycle(g, tuple(range(len1)))
    c2 = OrientedCycle(g, tuple(range(len1, len1 + len2)))
    return g, c1, c2, paths[0], paths[1]
