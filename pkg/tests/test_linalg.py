import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kext.errors import MixedFields
from kext.exactnum import _kernels_py, kernels
from kext.exactnum import linalg as L
from kext.exactnum import poly as P
from kext.exactnum.fields import GF, QQ, named_field

NAMES = ["Q", "GF2", "GF3", "GF4", "GF16", "QW", "GF2T"]


def rand_mat(K, n, m, rng, density=0.7):
    return L.Mat(K, [[K.random(rng, 3) if rng.random() < density else K.zero for _ in range(m)]
                     for _ in range(n)], m)


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(NAMES), seed=st.integers(0, 10 ** 6),
       n=st.integers(1, 6), m=st.integers(1, 6))
def test_rank_nullity(name, seed, n, m):
    K = named_field(name)
    A = rand_mat(K, n, m, random.Random(seed))
    Z = L.kernel(A)
    assert L.rank(A) + Z.nrows == m
    for z in Z.rows:
        Az = L.matmul_rows(A.rows, [[c] for c in z], K, 1)
        assert all(r[0] == K.zero for r in Az)


@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(NAMES), seed=st.integers(0, 10 ** 6))
def test_rref_is_canonical(name, seed):
    K = named_field(name)
    rng = random.Random(seed)
    A = rand_mat(K, 4, 5, rng)
    R, piv = L.rref(A)
    assert L.rref(R) == (R, piv)
    # row operations do not change the RREF
    U = rand_mat(K, 4, 4, rng)
    if L.is_invertible(U):
        assert L.rref(U @ A) == (R, piv)


def test_kernel_known_value():
    Q = QQ()
    A = L.Mat.parse(Q, [[1, 1], [2, 2]])
    # canonical RREF basis of the null space
    assert L.kernel(A).rows == [[Q.one, Q.from_int(-1)]]


def test_inverse_and_det():
    K = GF(5)
    A = L.Mat.parse(K, [[1, 2], [3, 4]])
    assert A @ L.inverse(A) == L.identity(K, 2)
    assert L.det(A) == K.from_int(-2)


@settings(max_examples=25, deadline=None)
@given(name=st.sampled_from(NAMES), seed=st.integers(0, 10 ** 6), n=st.integers(1, 5))
def test_cayley_hamilton(name, seed, n):
    K = named_field(name)
    A = rand_mat(K, n, n, random.Random(seed))
    chi = L.charpoly(A)
    assert len(chi) == n + 1 and chi[-1] == K.one
    assert all(x == K.zero for r in P.eval_matrix(chi, A.rows, K) for x in r)
    mu = L.minpoly(A)
    assert all(x == K.zero for r in P.eval_matrix(mu, A.rows, K) for x in r)
    assert P.rem(chi, mu, K) == []


def test_mixed_fields_rejected():
    A = L.identity(GF(2), 2)
    B = L.identity(GF(3), 2)
    with pytest.raises(MixedFields):
        A @ B


def test_spin_and_solve_left():
    K = QQ()
    A = L.Mat.parse(K, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    basis, piv = L.spin_rows([[K.one, K.zero, K.zero]], [A.rows], K, 3)
    assert len(basis) == 3
    x = L.solve_left(A.rows, [K.zero, K.one, K.from_int(2)], K, 3)
    assert x is not None
    assert L.vecmat(x, A) == [K.zero, K.one, K.from_int(2)]


# --- compiled and reference kernels agree ----------------------------------

@settings(max_examples=40, deadline=None)
@given(name=st.sampled_from(["GF2", "GF4", "GF9", "GF16"]), seed=st.integers(0, 10 ** 6),
       n=st.integers(1, 12), m=st.integers(1, 12))
def test_table_kernels_agree(name, seed, n, m):
    K = named_field(name)
    rng = np.random.default_rng(seed)
    A = rng.integers(0, K.q, size=(n, m)).astype(np.int64)
    B = rng.integers(0, K.q, size=(m, n)).astype(np.int64)
    tabs = K.np_tables
    A1, A2 = A.copy(), A.copy()
    assert list(kernels.rref_tables(A1, *tabs)) == list(_kernels_py.rref_tables(A2, *tabs))
    assert np.array_equal(A1, A2)
    add, mul = tabs[0], tabs[1]
    assert np.array_equal(kernels.matmul_tables(A, B, add, mul),
                          _kernels_py.matmul_tables(A, B, add, mul))


@settings(max_examples=40, deadline=None)
@given(p=st.sampled_from([2, 3, 7, 251, 65521]), seed=st.integers(0, 10 ** 6),
       n=st.integers(1, 12), m=st.integers(1, 12))
def test_modp_kernels_agree(p, seed, n, m):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(n, m)).astype(np.int64)
    B = rng.integers(0, p, size=(m, n)).astype(np.int64)
    A1, A2 = A.copy(), A.copy()
    assert list(kernels.rref_modp(A1, p)) == list(_kernels_py.rref_modp(A2, p))
    assert np.array_equal(A1, A2)
    assert np.array_equal(kernels.matmul_modp(A, B, p), _kernels_py.matmul_modp(A, B, p))
    # the product against a plain Python triple loop
    ref = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(m)) % p for j in range(n)]
           for i in range(n)]
    assert kernels.matmul_modp(A, B, p).tolist() == ref


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_python_fallback_is_selected_by_env(tmp_path):
    import os
    import subprocess
    import sys
    code = ("from kext.exactnum import kernels, linalg as L; from kext.exactnum.fields import GF;"
            "K = GF(7); A = L.Mat.parse(K, [[1, 2, 3], [2, 4, 6], [1, 0, 1]]);"
            "print(kernels.BACKEND, L.rank(A))")
    env = dict(os.environ, KEXT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["python", "2"]
