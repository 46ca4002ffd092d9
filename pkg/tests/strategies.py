from hypothesis import strategies as st

from petrial.bouquet import Bouquet
from petrial.graph import Graft, SimpleGraph


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(range(n), [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def grafts(draw, max_n=8, min_n=0):
    g = draw(graphs(max_n=max_n, min_n=min_n))
    marks = draw(st.sets(st.sampled_from(g.vertices))) if len(g) else set()
    return Graft(g, frozenset(marks))


@st.composite
def bouquets(draw, max_n=6, twisted=True):
    n = draw(st.integers(0, max_n))
    word = draw(st.permutations([i for i in range(n) for _ in range(2)]))
    # relabel by first occurrence
    order = {}
    for x in word:
        order.setdefault(x, len(order))
    word = tuple(order[x] for x in word)
    twist = draw(st.sets(st.integers(0, n - 1))) if twisted and n else set()
    return Bouquet(word, frozenset(twist))
