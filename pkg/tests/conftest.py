import itertools

from hypothesis import strategies as st

from kzigzag import Permutation


def all_perms(n):
    """Every element of S_n as a Permutation."""
    return [Permutation(vals) for vals in itertools.permutations(range(1, n + 1))]


@st.composite
def perm_and_k(draw, min_n=2, max_n=10, k_past_n=0):
    """A random permutation with a gap parameter in 1..n-1+k_past_n."""
    n = draw(st.integers(min_n, max_n))
    values = tuple(draw(st.permutations(list(range(1, n + 1)))))
    k = draw(st.integers(1, max(1, n - 1 + k_past_n)))
    return Permutation(values), k
