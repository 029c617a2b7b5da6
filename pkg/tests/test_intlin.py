from hypothesis import given, strategies as st

from tamegal import intlin

small = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_is_a_factorization(r, c, data):
    A = data.draw(matrices(r, c))
    U, D, V = intlin.smith_normal_form(A)
    assert intlin.matmul(intlin.matmul(U, A), V) == D
    d = intlin.diagonal(D)
    for i in range(len(d) - 1):
        if d[i + 1]:
            assert d[i] and d[i + 1] % d[i] == 0
    for i in range(r):
        for j in range(c):
            if i != j:
                assert D[i][j] == 0


def test_snf_known_values():
    # invariant factors of diag(2, 3) are 1, 6; of [[2, 4], [6, 8]] are 2, 4
    assert intlin.diagonal(intlin.smith_normal_form([[2, 0], [0, 3]])[1]) == [1, 6]
    assert intlin.diagonal(intlin.smith_normal_form([[2, 4], [6, 8]])[1]) == [2, 4]


@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_integer_kernel(r, c, data):
    A = data.draw(matrices(r, c))
    for v in intlin.integer_kernel(A, c):
        assert intlin.matvec(A, v) == [0] * r


def test_kernel_mod_index():
    # x + y = 0 mod 2 in Z^2 has index 2
    rows = intlin.kernel_mod([[1, 1]], [2], 2)
    assert abs(intlin.det_int(rows)) == 2


@given(st.integers(1, 4), st.data())
def test_solve_q_square(n, data):
    A = data.draw(matrices(n, n))
    if intlin.det_int(A) == 0:
        return
    b = data.draw(st.lists(small, min_size=n, max_size=n))
    x = intlin.solve_q(A, b)
    assert [sum(a * xi for a, xi in zip(row, x)) for row in A] == b
    assert intlin.solve_q_many(A, [b, b]) == [x, x]


def test_solve_mod_witness():
    # 2x = 1 mod 3 -> x = 2; 2x = 1 mod 4 has no solution
    x = intlin.solve_mod([[2]], [1], [3], 1)
    assert x is not None and (2 * x[0] - 1) % 3 == 0
    assert intlin.solve_mod([[2]], [1], [4], 1) is None
