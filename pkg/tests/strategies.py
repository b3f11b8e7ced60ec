from hypothesis import strategies as st

from braidkit.core import BraidWord


@st.composite
def words(draw, min_n=2, max_n=5, max_len=10, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, min_n=2, max_n=5, max_len=10):
    n = draw(st.integers(min_n, max_n))
    return draw(words(n=n, max_len=max_len)), draw(words(n=n, max_len=max_len))


@st.composite
def positive_words(draw, min_n=2, max_n=5, max_len=10, min_len=0):
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.integers(1, n - 1), min_size=min_len, max_size=max_len))
    return BraidWord(n, tuple(letters))
