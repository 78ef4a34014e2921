"""Inner twists: components as cosets of a commutator subgroup.

Twisting a group G by conjugation with a fixed h gives a quandle whose
forward orbits are cosets of N = <[h, g] : g in G>, all pairwise
isomorphic as graphs via right translation.  Two worked cases: S4 with
h = (12), and the dihedral family where the picture degenerates into
directed cycles.
"""
from quandle_cayley import (
    build_cayley_graph,
    commutator_subgroup_with,
    component_diameter,
    degrees,
    fixed_point_subgroup,
    forward_orbit,
    generalized_alexander_quandle,
    inner_automorphism,
    make_dihedral,
    make_symmetric,
    strongly_connected_components,
)

s4 = make_symmetric(4)
h = s4.index_of("(12)")
phi = inner_automorphism(s4, h)
q = generalized_alexander_quandle(s4, phi)
graph = build_cayley_graph(q)

fixed = fixed_point_subgroup(s4, phi)
print("S4 twisted by conjugation with (12):")
print(f"  fixed-point subgroup: {sorted(s4.name(x) for x in fixed.members)}")
print(f"  so every degree is [G:H] = {fixed.index()}: "
      f"{sorted(set(degrees(graph)))}")

n_sub = commutator_subgroup_with(s4, h)
comps = strongly_connected_components(graph)
print(f"  N = <[(12), g]> has order {n_sub.order}")
print(f"  components: {comps.count} of sizes {comps.sizes()}")
ident = comps.component_of(s4.identity)
print(f"  identity component = N: {set(ident) == set(n_sub.members)}")
print(f"  forward_orbit(id) gives the same set: "
      f"{forward_orbit(q, s4.identity) == tuple(n_sub.members)}")

print("\nDihedral groups twisted by conjugation with r:")
print("every vertex has one non-loop edge, two rotation steps ahead, so")
print("components are directed cycles:")
for m in (3, 4, 5, 6, 8):
    d = make_dihedral(m)
    dq = generalized_alexander_quandle(d, inner_automorphism(d, d.index_of("r")))
    dg = build_cayley_graph(dq)
    dc = strongly_connected_components(dg)
    diam = component_diameter(dg, dc.components[0])
    print(f"  m={m}: {dc.count} cycles of length {dc.sizes()[0]}, diameter {diam}")
