from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError


@dataclass(frozen=True)
class TopicSummary:
    topic_id: int
    top_terms: tuple  # of (term, weight), heaviest first
    label: str | None = None

    @property
    def terms(self) -> list[str]:
        return [t for t, _ in self.top_terms]

    def to_dict(self) -> dict:
        return {
            "topic_id": self.topic_id,
            "label": self.label,
            "top_terms": [[t, w] for t, w in self.top_terms],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TopicSummary":
        return cls(d["topic_id"], tuple((t, w) for t, w in d["top_terms"]), d.get("label"))


def rank_terms(terms, weights, k_top: int) -> tuple:
    """Top `k_top` (term, weight) pairs; equal weights fall back to term order."""
    order = sorted(range(len(terms)), key=lambda i: (-weights[i], terms[i]))
    return tuple((terms[i], float(weights[i])) for i in order[:k_top])


def top_terms(model, topic_id: int, k_top: int = 20) -> TopicSummary:
    """Highest-weight terms of one topic of an NMF or LDA model."""
    if not 0 <= topic_id < model.k:
        raise ValidationError(f"topic_id {topic_id} out of range [0, {model.k})")
    weights = model.topic_term_weights(topic_id).tolist()
    return TopicSummary(topic_id, rank_terms(model.terms, weights, k_top))


def all_top_terms(model, k_top: int = 20) -> list[TopicSummary]:
    return [top_terms(model, j, k_top) for j in range(model.k)]
