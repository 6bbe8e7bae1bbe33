import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from hfplus import _kernels, _tau_py
from hfplus.seifert import brieskorn_seifert
from hfplus.tau import truncation_bound

from conftest import CORPUS

compiled = _kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled tau kernel not built")


def _args(triple):
    S = brieskorn_seifert(*triple)
    return S.e0, [a for a, _ in S.arms], [b for _, b in S.arms], truncation_bound(S)


@needs_compiled
@pytest.mark.parametrize("triple", CORPUS)
def test_tau_parity_on_corpus(triple):
    args = _args(triple)
    values = _tau_py.tau_values(*args)
    assert compiled.tau_values(*args) == values
    assert compiled.extrema(values) == _tau_py.extrema(values)


@needs_compiled
@given(st.lists(st.integers(-20, 20), max_size=60))
def test_extrema_parity_random(values):
    assert compiled.extrema(values) == _tau_py.extrema(values)


@needs_compiled
def test_compiled_selected_by_default():
    if os.environ.get("HFPLUS_PURE_PYTHON"):
        pytest.skip("pure Python forced by environment")
    assert _kernels.BACKEND == "cython"


def test_env_var_forces_python():
    env = dict(os.environ, HFPLUS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hfplus; print(hfplus.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_overflow_guard_falls_back(monkeypatch):
    calls = []
    real = _tau_py.tau_values

    def spy(*args):
        calls.append(args)
        return real(*args)

    monkeypatch.setattr(_kernels.python_backend, "tau_values", spy)
    monkeypatch.setattr(_kernels, "INT64_LIMIT", 10)
    args = _args((2, 3, 5))
    assert not _kernels.fits_int64(*args)
    assert _kernels.tau_values(*args) == real(*args)
    assert calls


def test_guard_accepts_corpus_scale():
    assert all(_kernels.fits_int64(*_args(t)) for t in CORPUS)
