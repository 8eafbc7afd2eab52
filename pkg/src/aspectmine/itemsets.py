"""Frequent itemset mining over sentence transactions.

``apriori`` is the production miner; ``bruteforce_itemsets`` enumerates the
same result on small instances and exists purely as a test oracle.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ConfigError, DataError

BRUTEFORCE_MAX_ITEMS = 20


@dataclass(frozen=True)
class Transaction:
    sentence_id: str
    items: frozenset


@dataclass(frozen=True)
class MiningParams:
    min_sup: float = 0.01
    max_size: int = 3
    strict_gt: bool = False

    def __post_init__(self):
        if not 0.0 < self.min_sup <= 1.0:
            raise ConfigError("min_sup must be in (0, 1], got %r" % (self.min_sup,))
        if self.max_size < 1:
            raise ConfigError("max_size must be >= 1, got %r" % (self.max_size,))


def support_threshold(params, n_transactions):
    """Minimum absolute support count for a fractional min_sup.

    Default reading: count >= ceil(min_sup * N).  With ``strict_gt`` the
    alternative reading count > floor(min_sup * N).  The 1e-9 slack keeps
    thresholds stable against float artifacts (0.01 * 300 != 3.0 exactly).
    """
    raw = params.min_sup * n_transactions
    if params.strict_gt:
        thr = math.floor(raw + 1e-9) + 1
    else:
        thr = math.ceil(raw - 1e-9)
    return max(1, thr)


def apriori(transactions, params):
    """All itemsets of size <= max_size with support count >= threshold,
    as a map frozenset -> count."""
    if not transactions:
        raise DataError("apriori requires a nonempty transaction list")
    thr = support_threshold(params, len(transactions))

    tidsets = {}
    for tid, tx in enumerate(transactions):
        for item in tx.items:
            tidsets.setdefault(item, set()).add(tid)

    result = {}
    level = {}
    for item in sorted(tidsets):
        tids = tidsets[item]
        if len(tids) >= thr:
            key = (item,)
            level[key] = tids
            result[frozenset(key)] = len(tids)

    size = 1
    while level and size < params.max_size:
        keys = sorted(level)
        nxt = {}
        for a_pos in range(len(keys)):
            a = keys[a_pos]
            for b_pos in range(a_pos + 1, len(keys)):
                b = keys[b_pos]
                if a[:-1] != b[:-1]:
                    break  # sorted keys: shared prefixes are contiguous
                cand = a + (b[-1],)
                # downward closure: every (size)-subset must be frequent
                if any(cand[:i] + cand[i + 1:] not in level for i in range(len(cand) - 1)):
                    continue
                tids = level[a] & level[b]
                if len(tids) >= thr:
                    nxt[cand] = tids
                    result[frozenset(cand)] = len(tids)
        level = nxt
        size += 1
    return result


def bruteforce_itemsets(transactions, params, max_items=BRUTEFORCE_MAX_ITEMS):
    """Exhaustive reference implementation of the apriori contract."""
    if not transactions:
        raise DataError("bruteforce_itemsets requires a nonempty transaction list")
    universe = sorted(set().union(*(tx.items for tx in transactions)) if transactions else ())
    if len(universe) > max_items:
        raise DataError(
            "bruteforce_itemsets refuses %d distinct items (limit %d)" % (len(universe), max_items)
        )
    thr = support_threshold(params, len(transactions))
    result = {}
    for size in range(1, params.max_size + 1):
        for combo in combinations(universe, size):
            itemset = frozenset(combo)
            count = sum(1 for tx in transactions if itemset <= tx.items)
            if count >= thr:
                result[itemset] = count
    return result
