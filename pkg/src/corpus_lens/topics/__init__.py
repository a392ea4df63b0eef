"""Topic models over document-term matrices: NMF, LDA, top terms, coherence."""

from .coherence import mean_coherence, umass_coherence
from .lda import LdaModel, lda_fit
from .nmf import NmfModel, factorize, nmf_fit, nndsvd
from .summary import TopicSummary, all_top_terms, top_terms
from .scan import coherence_vs_k

__all__ = [
    "LdaModel",
    "NmfModel",
    "TopicSummary",
    "all_top_terms",
    "coherence_vs_k",
    "factorize",
    "lda_fit",
    "mean_coherence",
    "nmf_fit",
    "nndsvd",
    "top_terms",
    "umass_coherence",
]
