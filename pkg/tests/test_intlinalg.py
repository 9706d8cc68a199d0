import math
import random
from functools import reduce
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cosmetic.intlinalg import (
    AbelianGroup,
    det,
    matmul,
    signature,
    smith_diagonal,
    smith_normal_form,
    transpose,
)


# -- independent oracles ----------------------------------------------------

def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * math.prod(M[i][perm[i]] for i in range(n))
    return total


def determinantal_divisor_snf(M):
    """Invariant factors as ratios of gcds of k x k minors."""
    n = len(M)
    divisors = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                g = math.gcd(g, leibniz_det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
    free = n - (len(divisors) - 1)
    return AbelianGroup(tuple(f for f in factors if f > 1), free)


def descartes_signature(M):
    """Signature from sign changes of the characteristic polynomial.

    All roots of a symmetric matrix's characteristic polynomial are real, so
    Descartes' rule counts positive and negative eigenvalues exactly.
    """
    x = sympy.Symbol("x")
    p = sympy.Matrix(M).charpoly(x)
    coeffs = [c for c in p.all_coeffs()]

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    n = len(coeffs) - 1
    neg_coeffs = [c * (-1) ** (n - i) for i, c in enumerate(coeffs)]
    return changes(coeffs) - changes(neg_coeffs)


def random_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def random_unimodular(rng, n, steps=6):
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        for row in P:
            row[j] += k * row[i]
    if rng.random() < 0.5:
        for row in P:
            row[0] = -row[0]
    return P


# -- det ----------------------------------------------------------------------

def test_det_examples():
    assert det([[1, 1], [0, 1]]) == 1
    assert det([[6, 3], [3, 0]]) == -9
    assert det([[-2, 3], [3, 0]]) == -9
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[0, 0], [0, 5]]) == 0
    assert det([[7]]) == 7


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


def test_det_against_leibniz():
    rng = random.Random(1)
    for n in range(1, 6):
        for _ in range(60):
            M = random_matrix(rng, n)
            if rng.random() < 0.3:
                M[rng.randrange(n)] = [0] * n if rng.random() < 0.3 else list(M[0])
            assert det(M) == leibniz_det(M)


# -- Smith normal form ---------------------------------------------------------

def test_snf_examples():
    assert smith_normal_form([[6, 3], [3, 0]]) == AbelianGroup((3, 3))
    assert smith_normal_form([[-2, 3], [3, 0]]) == AbelianGroup((9,))
    assert smith_normal_form([[1, 0], [0, 1]]) == AbelianGroup()
    assert smith_normal_form([[0, 0], [0, 0]]) == AbelianGroup((), 2)
    assert smith_normal_form([[2, 4], [4, 8]]) == AbelianGroup((2,), 1)


def test_snf_2x2_gcd_oracle():
    # d1 = gcd of entries, d2 = |det| / d1
    rng = random.Random(2)
    for _ in range(2000):
        M = random_matrix(rng, 2, -30, 30)
        D = leibniz_det(M)
        if D == 0:
            continue
        d1 = reduce(math.gcd, [x for row in M for x in row])
        expected = AbelianGroup.from_diagonal([d1, abs(D) // d1])
        assert smith_normal_form(M) == expected, M


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_snf_determinantal_divisors(n):
    rng = random.Random(10 + n)
    for _ in range(150 if n < 4 else 40):
        M = random_matrix(rng, n, -9, 9)
        if rng.random() < 0.25:
            # force a rank drop
            M[-1] = [a + b for a, b in zip(M[0], M[1 % n])] if n > 1 else [0]
        assert smith_normal_form(M) == determinantal_divisor_snf(M), M


def test_snf_divisibility_chain_and_order():
    rng = random.Random(3)
    for n in (2, 3, 4):
        for _ in range(100):
            M = random_matrix(rng, n)
            diag = smith_diagonal(M)
            nonzero = [d for d in diag if d]
            assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
            assert diag == sorted(nonzero) + [0] * (len(diag) - len(nonzero))
            G = smith_normal_form(M)
            if G.free_rank == 0:
                assert G.order == abs(det(M))


def test_snf_non_square_cokernel():
    # Z^3 / image of a 3x2 matrix: one free generator survives
    assert smith_normal_form([[2, 0], [0, 3], [0, 0]]) == AbelianGroup((6,), 1)
    assert smith_normal_form([[2, 4, 6]]) == AbelianGroup((2,))


@pytest.mark.parametrize("x", range(-20, 21, 5))
@pytest.mark.parametrize("y", [-4, -1, 0, 3, 7])
def test_snf_lemma_closed_form_spot(x, y):
    k = 2 * y + 1
    G = smith_normal_form([[2 * x, k], [k, 0]])
    if y in (0, -1):
        assert G.is_trivial()
    else:
        d = math.gcd(2 * x, k)
        assert G == AbelianGroup.from_diagonal([d, k * k // d])


# -- AbelianGroup ---------------------------------------------------------------

def test_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup((1, 3))
    with pytest.raises(ValueError):
        AbelianGroup((2, 3))
    assert AbelianGroup.from_diagonal([1, -3, 0]) == AbelianGroup((3,), 1)


def test_group_rendering_golden(golden):
    groups = [
        AbelianGroup(),
        AbelianGroup((9,)),
        AbelianGroup((3, 3)),
        AbelianGroup((), 1),
        AbelianGroup((2, 4), 2),
        AbelianGroup((5, 25, 75)),
    ]
    got = "".join(f"{g.invariant_factors} free={g.free_rank} -> {g}\n" for g in groups)
    assert got == golden("group_render.txt")
    for g in groups:
        assert AbelianGroup.parse(str(g)) == g


def test_group_cyclicity_and_order():
    assert AbelianGroup((9,)).is_cyclic()
    assert not AbelianGroup((3, 3)).is_cyclic()
    assert AbelianGroup((3, 3)).order == 9
    assert AbelianGroup((), 1).order is None


# -- signature -------------------------------------------------------------------

def test_signature_examples():
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[-2, -1], [-1, -8]]) == -2
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[0, 0], [0, 0]]) == 0
    assert signature([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) == 0


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        signature([[1, 2], [3, 4]])


def test_signature_against_descartes():
    rng = random.Random(4)
    for n in (1, 2, 3, 4):
        for _ in range(60):
            A = random_matrix(rng, n, -4, 4)
            S = [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]
            if rng.random() < 0.3:
                for i in range(n):
                    S[i][i] = 0
            assert signature(S) == descartes_signature(S), S


def test_signature_congruence_invariance():
    rng = random.Random(5)
    for n in (2, 3, 4):
        for _ in range(80):
            A = random_matrix(rng, n, -5, 5)
            S = [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]
            P = random_unimodular(rng, n)
            assert abs(det(P)) == 1
            congruent = matmul(transpose(P), matmul(S, P))
            assert signature(congruent) == signature(S)


@settings(max_examples=200)
@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_signature_3x3_hypothesis(vals):
    a, b, c, d, e, f = vals
    S = [[a, b, c], [b, d, e], [c, e, f]]
    sig = signature(S)
    assert sig == descartes_signature(S)
    assert abs(sig) <= 3
