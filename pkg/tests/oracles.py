"""Independent reference implementations used only by the tests."""

import random
import sys
from functools import lru_cache

sys.setrecursionlimit(10_000)


def dp_table(a, b):
    """Levenshtein cost of every prefix pair, by memoized recursion."""
    a, b = tuple(a), tuple(b)

    @lru_cache(maxsize=None)
    def d(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            d(i - 1, j - 1) + (0 if a[i - 1] == b[j - 1] else 1),
            d(i - 1, j) + 1,
            d(i, j - 1) + 1,
        )

    return d


def dp_distance(a, b):
    return dp_table(a, b)(len(a), len(b))


def dp_counts(hyp, ref):
    """(S, D, I) from a backtrace preferring match, sub, delete, insert."""
    d = dp_table(hyp, ref)
    i, j = len(hyp), len(ref)
    s = dl = ins = 0
    while (i, j) != (0, 0):
        here = d(i, j)
        moves = []
        if i and j:
            same = hyp[i - 1] == ref[j - 1]
            moves.append(("M", i - 1, j - 1, 0) if same else ("S", i - 1, j - 1, 1))
        if i:
            moves.append(("D", i - 1, j, 1))
        if j:
            moves.append(("I", i, j - 1, 1))
        for name, pi, pj, cost in moves:
            if d(pi, pj) + cost == here:
                break
        s += name == "S"
        dl += name == "D"
        ins += name == "I"
        i, j = pi, pj
    return s, dl, ins


VOCAB = ["a", "b", "c", "the", "cat", "sat", "mat", "on", "it's", "back\\slash"]


def random_tokens(rng, max_len=40, vocab=VOCAB):
    return [rng.choice(vocab) for _ in range(rng.randint(0, max_len))]


def random_pairs(seed, count, max_len=40, vocab=VOCAB):
    """Hypothesis/reference pairs: independent draws, mutated copies, and empties."""
    rng = random.Random(seed)
    for k in range(count):
        style = k % 4
        ref = random_tokens(rng, max_len, vocab)
        if style == 0:
            hyp = random_tokens(rng, max_len, vocab)
        elif style == 3 and k % 8 == 3:
            hyp, ref = ([], ref) if rng.random() < 0.5 else (ref, [])
        else:
            hyp = []
            for w in ref:
                u = rng.random()
                if u < 0.15:
                    hyp.append(rng.choice(vocab))
                elif u < 0.25:
                    continue
                elif u < 0.35:
                    hyp.extend((w, rng.choice(vocab)))
                else:
                    hyp.append(w)
            hyp = hyp[:max_len]
        yield hyp, ref
