"""Hybrid retrieval and the grounded Q&A pipeline.

Run: python3 demos/02_retrieval_and_qa.py
"""

from carebridge.dialogue import GlucoseSummary, PatientContext, answer_question, rewrite_question
from carebridge.knowledge import VectorIndex, fixture_graph, hybrid_retrieve, threshold_filter

graph = fixture_graph()
index = VectorIndex.from_graph(graph)

question = "Can I eat fruit when I take diabetes medication?"
context = PatientContext(
    patient_id="demo",
    medications=("metformin",),
    recent_glucose=GlucoseSummary(mean=7.8, latest=8.4),
)

rewritten = rewrite_question(question, context)
print(f"question : {question}")
print(f"rewritten: {rewritten}")

print("\ntop fused retrieval results:")
results = threshold_filter(hybrid_retrieve(rewritten, graph, index, k=5), min_score=0.01)
for r in results:
    print(f"  {r.score:.6f}  {graph.nodes[r.doc_id].canonical_name}")

print("\nanswer:")
response = answer_question(question, context, graph, index)
print(f"  kind={response.kind.value}")
print(f"  text={response.text[:160]}...")
print(f"  citations={[graph.nodes[c].canonical_name for c in response.citations if c in graph.nodes]}")

print("\nthe same question without recent readings triggers a clarification:")
sparse = PatientContext(patient_id="demo", medications=("metformin",))
followup = answer_question("When should I follow up?", sparse, graph, index)
print(f"  kind={followup.kind.value}")
print(f"  text={followup.text}")
