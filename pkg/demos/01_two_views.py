#!/usr/bin/env python3
"""One incidence structure, two views.

A placement of replicated packets on storage nodes can be read as a
hypergraph: nodes become vertices, and the holder set of each packet becomes
a hyperedge.  This script walks a 5-node heterogeneous placement through the
conversion, the structural classification, and the incidence transpose.
"""

import frhyper as fh

# Five nodes storing six packets; capacities (4,3,2,2,2), packet 6 on 3 nodes.
code = fh.validate_fr(
    [{1, 2, 3, 4}, {1, 5, 6}, {2, 5}, {3, 6}, {4, 6}],
    theta=6,
)

print("node contents:")
for i, content in enumerate(code.sorted_nodes(), 1):
    print(f"  U{i} = {set(content)}")
print(f"storage vector alpha = {code.alpha_vec}  (max alpha = {code.alpha})")
print(f"replication vector rho = {code.rho_vec}  (max rho = {code.rho})")

# The hypergraph view: vertex i <-> node i, hyperedge j <-> packet j.
h = fh.fr_to_hypergraph(code)
print(f"\nhypergraph view: {h.num_vertices} vertices, {h.num_edges} hyperedges")
for j, edge in enumerate(h.sorted_edges(), 1):
    print(f"  E{j} = {set(edge)}   (packet {j} lives on these nodes)")
print("vertex degrees equal alpha:", h.degrees == code.alpha_vec)
print("edge sizes equal rho:      ",
      tuple(len(e) for e in h.edges) == code.rho_vec)

# Round trip is exact.
print("round trip is the identity:", fh.hypergraph_to_fr(h) == code)

flags = fh.classify(h)
print(f"\nclassification: uniform={flags.uniform} regular={flags.regular} "
      f"linear={flags.linear} intersecting={flags.intersecting} "
      f"connected={flags.connected}")
print("universally good (any two nodes share <= 1 packet):",
      fh.is_universally_good(code))

# The dual exchanges the roles of vertices and edges.  Applying it twice
# returns the original hypergraph bit for bit.
d, mapping = fh.dual(h)
print(f"\ndual: {d.num_vertices} vertices, {d.num_edges} hyperedges "
      f"(edge -> dual-vertex map {mapping.forward})")
dd, _ = fh.dual(d)
print("dual of dual equals the original:", dd == h)

# Linearity is self-dual: shared-vertex limits on edges become
# co-occurrence limits on vertex pairs.
print("linear:", fh.classify(h).linear, "-> dual linear:", fh.classify(d).linear)
