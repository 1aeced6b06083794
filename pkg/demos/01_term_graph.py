"""Walk the bundled medical term graph: lookup, matching, neighborhoods.

Run: python3 demos/01_term_graph.py
"""

from carebridge.knowledge import Relation, explain_term, find_terms, fixture_graph, neighborhood

graph = fixture_graph()
print(f"graph: {len(graph.nodes)} terms, {len(graph.edges)} relations, version {graph.version}")

sentence = "The doctor said my 空腹血糖 is high, so I should keep taking Metformin and walk after dinner."
print(f"\nsentence: {sentence}")
for match in find_terms(sentence, graph):
    node = graph.nodes[match.node_id]
    print(f"  [{match.start:>3}:{match.end:<3}] {sentence[match.start:match.end]!r:<22} -> {node.canonical_name}")

print("\nexplanation for the first match:")
record = explain_term("c-metformin", graph)
print(f"  {record.canonical_name}: {record.lay_explanation}")
for relation, other in record.related[:5]:
    print(f"    {relation.value} -> {graph.nodes[other].canonical_name}")

print("\ndepth-2 treatment neighborhood of type 2 diabetes (treats edges only):")
sub = neighborhood("c-type-2-diabetes-mellitus", {Relation.TREATS}, depth=2, graph=graph)
print(f"  {len(sub.nodes)} nodes, e.g. " + ", ".join(sorted(n.canonical_name for n in sub.nodes.values())[:8]))
