"""The compiled kernels and the pure-Python kernels must agree exactly."""

import pytest
from hypothesis import given, strategies as st

from nsymm import _core_py

_core = pytest.importorskip("nsymm._core", reason="compiled extension not built")

pairs = st.tuples(st.integers(-50, 50), st.integers(1, 30)).map(
    lambda nd: _core_py.rat_norm(nd[0], nd[1])
)
words = st.lists(st.integers(1, 4), max_size=3).map(tuple)
term_maps = st.dictionaries(words, pairs, max_size=5).map(
    lambda d: {k: v for k, v in d.items() if v[0] != 0}
)
tensor_keys = st.tuples(words, words)
tensor_maps = st.dictionaries(tensor_keys, pairs, max_size=5).map(
    lambda d: {k: v for k, v in d.items() if v[0] != 0}
)


@given(pairs, pairs)
def test_rat_ops_parity(a, b):
    assert _core.rat_add(a, b) == _core_py.rat_add(a, b)
    assert _core.rat_mul(a, b) == _core_py.rat_mul(a, b)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_rat_norm_parity_bignum(n, d):
    if d == 0:
        with pytest.raises(ZeroDivisionError):
            _core.rat_norm(n, d)
        with pytest.raises(ZeroDivisionError):
            _core_py.rat_norm(n, d)
    else:
        assert _core.rat_norm(n, d) == _core_py.rat_norm(n, d)


@given(term_maps, term_maps)
def test_term_ops_parity(a, b):
    assert _core.add_terms(a, b) == _core_py.add_terms(a, b)
    assert _core.sub_terms(a, b) == _core_py.sub_terms(a, b)
    assert _core.neg_terms(a) == _core_py.neg_terms(a)
    assert _core.mul_word_terms(a, b) == _core_py.mul_word_terms(a, b)


@given(term_maps, pairs)
def test_scale_parity(a, c):
    assert _core.scale_terms(a, c) == _core_py.scale_terms(a, c)


@given(term_maps, term_maps, pairs)
def test_add_scaled_into_parity(acc, terms, c):
    left, right = dict(acc), dict(acc)
    _core.add_scaled_into(left, terms, c)
    _core_py.add_scaled_into(right, terms, c)
    assert left == right


@given(tensor_maps, tensor_maps)
def test_tensor_mul_parity(a, b):
    assert _core.mul_tensor_terms(a, b) == _core_py.mul_tensor_terms(a, b)


@given(st.lists(st.integers(1, 3), max_size=4).map(tuple),
       st.lists(st.integers(1, 3), max_size=4).map(tuple))
def test_quasi_shuffle_parity(u, v):
    assert _core.quasi_shuffle_words(u, v) == _core_py.quasi_shuffle_words(u, v)


def test_backend_selection_env(monkeypatch):
    import importlib
    import nsymm._backend as backend

    monkeypatch.setenv("NSYMM_BACKEND", "python")
    reloaded = importlib.reload(backend)
    assert reloaded.BACKEND == "python"
    assert reloaded.kernels is _core_py
    monkeypatch.setenv("NSYMM_BACKEND", "nonsense")
    with pytest.raises(ImportError):
        importlib.reload(backend)
    # restore the default selection for the rest of the suite
    monkeypatch.delenv("NSYMM_BACKEND")
    restored = importlib.reload(backend)
    assert restored.BACKEND in ("compiled", "python")
