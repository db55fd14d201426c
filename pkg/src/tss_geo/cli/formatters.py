"""One-line human summaries printed next to JSON outputs."""

from tss_geo.embed.embedding import RectilinearEmbedding, embedding_area
from tss_geo.reduce.artifact import ReductionArtifact
from tss_geo.tsscore.instance import ActivationTrace


def format_optimum(k_min: int | None, witness: list[int], method: str) -> str:
    if k_min is None:
        return f"no target set within the size bound ({method})"
    return f"k_min={k_min} witness={witness} ({method})"


def format_trace(trace: ActivationTrace, n: int) -> str:
    infected = len(trace.final)
    status = "complete" if infected == n else "stalled"
    return f"{status}: {infected}/{n} active after {trace.num_rounds} rounds"


def format_artifact(art: ReductionArtifact) -> str:
    counters = ", ".join(f"{k}={v}" for k, v in sorted(art.counters.items()))
    terms = " + ".join(f"{name}={value}" for name, value in art.budget.terms)
    return (
        f"{art.reduction}: {art.graph.n} vertices, {art.graph.num_edges} edges, "
        f"{art.budget.formula} ({terms}) = {art.k}; {counters}"
    )


def format_embedding(emb: RectilinearEmbedding) -> str:
    interior = sum(len(line) - 2 for line in emb.epath.values())
    return (
        f"{len(emb.vpoint)} vertices, {len(emb.epath)} polylines, "
        f"{interior} interior points, area {embedding_area(emb)}"
    )
