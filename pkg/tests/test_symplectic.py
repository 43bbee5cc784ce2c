import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_pairs, structure_constants
from sp4squeeze import kernels
from sp4squeeze import _fallback
from sp4squeeze.errors import NotSymplecticError, NotUnitaryError
from sp4squeeze.symplectic import (
    GENERATOR_NAMES,
    algebra_element,
    beta_form,
    embed_u2,
    expm,
    extract_u2,
    generator_matrix,
    is_symplectic,
    is_u2_block,
    omega_matrix,
    polar_decompose,
    quadratic_form_of_generator,
    random_symplectic,
    random_unitary,
    symplectic_residual,
)

coef = st.floats(-1.5, 1.5, allow_nan=False)
coefs10 = st.lists(coef, min_size=10, max_size=10)


def element(c):
    return algebra_element(c[0], c[1:4], c[4:7], c[7:10])


def comm(x, y):
    return x @ y - y @ x


# --- forms and generators ---------------------------------------------------


def test_omega_is_unitary_and_maps_quadratures():
    om = omega_matrix()
    assert np.allclose(om @ om.conj().T, np.eye(4), atol=1e-15)
    # a1 = (q1 + i p1)/sqrt2
    assert np.allclose(om[0], np.array([1, 0, 1j, 0]) / np.sqrt(2))


def test_generators_match_fock_operators(fock):
    """X = 1/2 xi^T G xi + const on a truncated Fock space."""
    ops = fock.generators()
    xi = fock.quadratures()
    one = np.eye(xi[0].shape[0])
    for name in GENERATOR_NAMES:
        g = quadratic_form_of_generator(name)
        quad = sum(0.5 * g[i, j] * xi[i] @ xi[j] for i in range(4) for j in range(4))
        diff = fock.restrict(ops[name] - quad)
        const = np.trace(diff) / diff.shape[0]
        assert np.max(np.abs(diff - const * np.eye(diff.shape[0]))) < 1e-12, name
    assert one.shape == ops["Q"].shape


def test_fock_commutators_follow_structure_table(fock):
    ops = fock.generators()
    for x, y in all_pairs():
        lhs = ops[x] @ ops[y] - ops[y] @ ops[x]
        rhs = sum(c * ops[z] for z, c in structure_constants(x, y).items())
        assert np.max(np.abs(fock.restrict(lhs - rhs))) < 1e-11, (x, y)


@pytest.mark.parametrize("x,y", all_pairs())
def test_matrix_commutators(x, y):
    lhs = comm(generator_matrix(x), generator_matrix(y))
    # [X, Y] = sum c Z  maps to  [g_X, g_Y] = sum i c g_Z
    rhs = sum((1j * c).real * generator_matrix(z) for z, c in structure_constants(x, y).items())
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_generators_are_hamiltonian():
    b = beta_form()
    for name in GENERATOR_NAMES:
        g = generator_matrix(name)
        assert np.allclose(g @ b + b @ g.T, 0, atol=1e-15)


def test_generator_forms_known_entries():
    assert np.allclose(quadratic_form_of_generator("Q"), 0.5 * np.eye(4))
    g = quadratic_form_of_generator("K2")
    assert g[0, 2] == pytest.approx(-0.5) and g[1, 3] == pytest.approx(-0.5)
    g = quadratic_form_of_generator("L1")
    assert g[0, 2] == pytest.approx(0.5) and g[1, 3] == pytest.approx(-0.5)


def test_unknown_generator():
    with pytest.raises(KeyError):
        generator_matrix("K4")


def test_caves_schumaker_generator_form():
    """z a1^dag a2^dag - z* a1 a2 expressed through K and L."""
    rng = np.random.default_rng(3)
    om = omega_matrix()
    for _ in range(10):
        z = complex(*rng.normal(size=2))
        c = np.zeros((4, 4), dtype=complex)
        c[2, 3] = z
        c[0, 1] = -np.conj(z)
        # exp(z a1^dag a2^dag - h.c.) = exp(i H) with H = -i(z a1^dag a2^dag - h.c.)
        g = (om.T @ (-1j * (c + c.T)) @ om).real
        k = (0.0, 0.0, -2.0 * z.imag)
        l = (0.0, 0.0, 2.0 * z.real)
        expect = sum(k[r] * quadratic_form_of_generator(f"K{r + 1}") for r in range(3))
        expect = expect + sum(l[r] * quadratic_form_of_generator(f"L{r + 1}") for r in range(3))
        assert np.allclose(g, expect, atol=1e-14)


def test_commuting_pairs_for_boundary_lines():
    assert np.allclose(comm(generator_matrix("J2"), generator_matrix("K2")), 0, atol=1e-15)
    lhs = generator_matrix("Q") + generator_matrix("J3")
    rhs = generator_matrix("K2") + generator_matrix("L1")
    assert np.allclose(comm(lhs, rhs), 0, atol=1e-15)


def test_diagonal_representative():
    a, b = 1.3, 0.4
    s = expm(a * generator_matrix("K2") + b * generator_matrix("L1"))
    d = np.exp([(a - b) / 2, (a + b) / 2, -(a - b) / 2, -(a + b) / 2])
    assert np.allclose(s, np.diag(d), atol=1e-14)


def test_q_generates_u1_phase():
    th = 0.7
    u = extract_u2(expm(th * generator_matrix("Q")))
    assert np.allclose(u, np.exp(0.5j * th) * np.eye(2), atol=1e-14)


# --- U(2) embedding ---------------------------------------------------------


def test_embedding_homomorphism(rng):
    for _ in range(50):
        u, w = random_unitary(rng), random_unitary(rng)
        assert np.allclose(embed_u2(u) @ embed_u2(w), embed_u2(u @ w), atol=1e-13)
        assert is_symplectic(embed_u2(u))
        assert np.allclose(extract_u2(embed_u2(u)), u, atol=1e-14)


def test_embed_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        embed_u2(np.array([[1, 1], [0, 1]]))


def test_is_u2_block_false_for_squeeze():
    assert not is_u2_block(np.diag([2, 2, 0.5, 0.5]))


# --- expm ---------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(coefs10)
def test_expm_algebra_is_symplectic(c):
    s = expm(element(c))
    assert symplectic_residual(s) < 1e-10 * max(1.0, np.max(np.abs(s)) ** 2)


@settings(max_examples=60, deadline=None)
@given(coefs10)
def test_expm_matches_scipy(c):
    m = element(c)
    ref = scipy.linalg.expm(m)
    assert np.allclose(expm(m), ref, rtol=1e-12, atol=1e-12 * np.max(np.abs(ref)))


def test_expm_routes_agree_with_scipy(rng):
    sym = rng.normal(size=(4, 4))
    sym = sym + sym.T
    anti = rng.normal(size=(4, 4))
    anti = anti - anti.T
    gen = rng.normal(size=(4, 4))
    big = rng.normal(size=(6, 6))
    for m in (sym, anti, gen, big, np.zeros((4, 4))):
        ref = scipy.linalg.expm(m)
        assert np.allclose(expm(m), ref, rtol=1e-12, atol=1e-13 * np.max(np.abs(ref)))


def test_expm_nilpotent_closed_form():
    n = np.zeros((4, 4))
    n[0, 1], n[1, 2], n[2, 3] = 2.0, 3.0, 5.0
    ref = np.eye(4) + n + n @ n / 2 + n @ n @ n / 6
    assert np.allclose(expm(n), ref, atol=1e-13)


def test_expm_overflow_and_nan():
    with pytest.raises(OverflowError):
        expm(np.diag([800.0, 0, 0, 0]) + np.eye(4, k=1))
    with pytest.raises(ValueError):
        expm(np.full((4, 4), np.nan))


def test_compiled_and_fallback_agree(rng):
    stack = rng.normal(scale=3.0, size=(40, 4, 4))
    a = kernels.expm_pade_many(stack)
    b = _fallback.expm_pade_many(stack)
    ref = np.array([scipy.linalg.expm(m) for m in stack])
    assert np.allclose(a, ref, rtol=1e-11, atol=0)
    assert np.allclose(b, ref, rtol=1e-11, atol=0)
    for m in stack[:5]:
        assert np.allclose(kernels.expm_pade(m), _fallback.expm_pade(m), rtol=1e-13)


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


# --- polar decomposition --------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(coefs10)
def test_polar_decomposition(c):
    s = expm(element(c))
    p, k = polar_decompose(s)
    assert np.allclose(p, p.T, atol=1e-12 * np.max(np.abs(p)))
    assert np.min(np.linalg.eigvalsh(p)) > 0
    assert is_symplectic(p, tol=1e-9 * max(1.0, np.max(np.abs(p)) ** 2))
    assert is_u2_block(k, tol=1e-9)
    assert np.max(np.abs(p @ k - s)) < 1e-9 * max(1.0, np.max(np.abs(s)))


def test_polar_rejects_non_symplectic():
    with pytest.raises(NotSymplecticError) as info:
        polar_decompose(np.diag([1.0, 1.0, 2.0, 1.0]))
    assert info.value.residual == pytest.approx(1.0)


def test_polar_of_passive_and_positive(rng):
    u = random_unitary(rng)
    p, k = polar_decompose(embed_u2(u))
    assert np.allclose(p, np.eye(4), atol=1e-13)
    d = np.diag([2.0, 3.0, 0.5, 1 / 3])
    p, k = polar_decompose(d)
    assert np.allclose(p, d) and np.allclose(k, np.eye(4))


def test_random_symplectic_helper(rng):
    for _ in range(20):
        s = random_symplectic(rng)
        assert symplectic_residual(s) < 1e-9 * max(1.0, np.max(np.abs(s)) ** 2)
