"""Shared fixtures: the algebra list and a from-scratch path enumerator.

The enumerator below rebuilds the quiver with relations directly from the
(n, m) parameters - vertex range, one arrow into each vertex, forbidden
cycle pairs - without touching the package's path machinery, so the two
routes stay independent.
"""

from __future__ import annotations

import pytest

from kbproj.algebra import AlgebraSpec

ALGEBRA_PARAMS = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 2)]


@pytest.fixture(params=ALGEBRA_PARAMS, ids=lambda p: f"L({p[0]},{p[1]})")
def spec(request) -> AlgebraSpec:
    n, m = request.param
    return AlgebraSpec(n, m)


def brute_arrow_words(n: int, m: int, u: int, v: int) -> list[tuple[int, ...]]:
    """Arrow words of the nonzero paths from u to v, rebuilt from scratch.

    The quiver has vertices -m..n-1, one arrow w into each vertex w whose
    source is w+1 (or 0 for the closing arrow n-1), and a word vanishes
    as soon as it contains two consecutive cycle arrows (a, b) with
    b = a+1 mod n.  Words are listed in algebra order: the first arrow is
    applied last.
    """

    def source(w: int) -> int:
        return 0 if w == n - 1 else w + 1

    words: list[tuple[int, ...]] = []
    frontier: list[tuple[int, tuple[int, ...]]] = [(u, ())]
    while frontier:
        at, word = frontier.pop()
        if at == v:
            words.append(word)
        for w in range(-m, n):
            if source(w) != at:
                continue
            if word and word[0] >= 0 and w >= 0 and word[0] == (w + 1) % n:
                continue
            frontier.append((w, (w,) + word))
    words.sort(key=lambda word: (len(word), word))
    return words
