from hypothesis import strategies as st

from braidet.braid import BraidWord
from braidet.laurent import LaurentPoly

coeffs = st.integers(min_value=-50, max_value=50)

laurent_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6), coeffs, max_size=6
).map(LaurentPoly)

nonzero_polys = laurent_polys.filter(lambda p: not p.is_zero())

letters = st.tuples(
    st.sampled_from([1, 2]),
    st.integers(min_value=-4, max_value=4).filter(lambda k: k != 0),
)

braid_words = st.lists(letters, max_size=12).map(BraidWord)
