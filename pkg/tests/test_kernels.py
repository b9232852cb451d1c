import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compideal import _pykernels, kernels


needs_compiled = pytest.mark.skipif(kernels.BACKEND != "cython",
                                    reason="compiled kernels not in use")


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_environment_forces_pure_python():
    code = "from compideal import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, COMPIDEAL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.staircase_count([(1, 0)], (1, 1), backend="fortran")


def test_python_staircase_by_hand():
    # (x^2, xy, y^3): standard monomials 1, x, y, y^2
    assert _pykernels.staircase_count([(2, 0), (1, 1), (0, 3)], (2, 3)) == 4


gens_st = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)),
                   min_size=1, max_size=6)
bounds_st = st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
facets_st = st.lists(st.tuples(st.tuples(st.integers(0, 5), st.integers(0, 5),
                                         st.integers(0, 5)), st.integers(0, 20)),
                     min_size=1, max_size=5)


@needs_compiled
@given(gens_st, bounds_st)
@settings(max_examples=100, deadline=None)
def test_staircase_backends_agree(gens, bounds):
    assert (kernels.staircase_count(gens, bounds, backend="cython")
            == kernels.staircase_count(gens, bounds, backend="python"))


@needs_compiled
@given(facets_st, bounds_st)
@settings(max_examples=100, deadline=None)
def test_polyhedron_kernels_agree(facets, bounds):
    normals = [list(a) for a, _ in facets]
    rhs = [b for _, b in facets]
    for fn in ("np_count_outside", "np_minimal_points"):
        a = getattr(kernels, fn)(normals, rhs, bounds, backend="cython")
        b = getattr(kernels, fn)(normals, rhs, bounds, backend="python")
        assert a == b


@needs_compiled
def test_huge_entries_fall_back_to_python():
    big = 1 << 61
    assert kernels.np_count_outside([[big, 1]], [big], (3, 3)) == \
        _pykernels.np_count_outside([[big, 1]], [big], (3, 3))
