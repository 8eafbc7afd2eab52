"""Unsupervised aspect extraction from product reviews.

Three extractors over one annotated-corpus data model:

* ``fba`` -- frequent-itemset mining over noun transactions with
  compactness/redundancy pruning and infrequent-feature recovery;
* ``dba`` -- dependency-rule double propagation from an opinion seed
  lexicon with clause/dealer/frequency pruning;
* ``tba`` -- constrained monolingual IBM 1/2 alignment, harmonic-mean
  associations and random-walk confidence ranking.

``evaluation`` scores extractions against gold aspects; ``harness`` runs
parameter-grid sweeps and renders comparison reports; the ``aspectmine``
CLI fronts all of it.
"""

from .corpus import (
    AnnotatedSentence,
    ClauseSpan,
    Corpus,
    GoldAnnotation,
    GoldAspect,
    Token,
    load_annotated,
    noun_phrases,
    parse_crd,
    save_annotated,
)
from .dba import DbaConfig, propagate, run_dba
from .errors import AspectMineError, ConfigError, DataError, SchemaError
from .evaluation import EvalConfig, EvalReport, aggregate, evaluate
from .fba import FbaConfig, build_transactions, run_fba
from .itemsets import MiningParams, Transaction, apriori, bruteforce_itemsets
from .results import AspectCandidate, ExtractionResult, OpinionWord
from .tba import (
    AssociationGraph,
    DfTable,
    GroupingConfig,
    TbaConfig,
    associations,
    cvalue_rank,
    extract_tba,
    fit_tba,
    group_terms,
    random_walk,
    relevance,
    train_ibm1,
    train_ibm2,
)
from .textnorm import FuzzyParams, StemIndex, cluster_terms, levenshtein_ratio, stem
from .porter import porter_stem

__version__ = "0.1.0"
