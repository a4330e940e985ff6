#!/usr/bin/env python3
"""Exact storage metrics by enumeration.

M(k) answers: how many distinct packets is a reader guaranteed, no matter
WHICH k nodes it contacts?  Repair degree: how many helpers must a failed
node contact?  Minimum distance: how many simultaneous failures make the
stored file unrecoverable?  All three are minima over explicitly enumerated
subsets, so the numbers below are exact, not bounds.
"""

import frhyper as fh

code = fh.validate_fr(
    [{1, 2, 3, 4}, {1, 5, 6}, {2, 5}, {3, 6}, {4, 6}],
    theta=6,
)

print("guaranteed file size M(k) for every k:")
table = fh.file_size_table(code)
for k, mk in table.items():
    print(f"  M({k}) = {mk}")

# A 5-packet file is guaranteed by any 3 nodes but not by any 2.
m = 5
k = fh.reconstruction_degree(code, m)
print(f"\nreconstruction degree for a {m}-packet file: k = {k}")

print("\nrepair degrees (minimum helper sets, found by exact set cover):")
for i in range(1, code.n + 1):
    d, witness = fh.repair_degree(code, i)
    print(f"  node {i}: d = {d}, helpers = {sorted(witness)}")
report = fh.analyze(code, k=3)
print(f"max repair degree d = {report.max_repair_degree}")

# Losing any 2 nodes still leaves 5 packets; some 3 losses drop below 5.
print(f"\nminimum distance at file size {m}: {fh.min_distance(code, m)}")

# Adaptation: shed node 5 and packets 4 and 6, renumber densely.
spec = fh.AdaptationSpec(removed_nodes=frozenset({5}),
                         removed_packets=frozenset({4, 6}))
shrunk = fh.adapt(code, spec)
print("\nafter dropping node 5 and packets {4, 6}:")
for i, content in enumerate(shrunk.sorted_nodes(), 1):
    print(f"  U{i} = {set(content)}")
ok, witness_spec = fh.is_adaptation_of(shrunk, code)
print("search confirms the shrunk code adapts the original:", ok)
print("witness removal:", sorted(witness_spec.removed_nodes),
      sorted(witness_spec.removed_packets))
