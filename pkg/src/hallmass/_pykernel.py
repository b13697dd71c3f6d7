"""Pure-Python series kernels.

All functions work on plain lists of Python ints (numerators over a shared
denominator handled by the caller) and never mutate their inputs.
"""


def conv(a, b, n):
    """Coefficients 0..n of the product of two integer series."""
    out = [0] * (n + 1)
    lb = min(len(b), n + 1)
    for i in range(min(len(a), n + 1)):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(lb, n + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inverse(a, n):
    """Reciprocal of an integer series with nonzero constant term.

    Returns ``(nums, den)`` such that the reciprocal's coefficient k is
    ``nums[k] / den``.  With ``c = a[0]`` the scaled values
    ``B_k = c**(k+1) * b_k`` obey the integer recurrence
    ``B_k = -sum_{j=1..k} a_j * B_{k-j} * c**(j-1)``; for ``c = +-1`` this is
    the textbook recurrence ``b_k = -(1/a_0) sum a_j b_{k-j}``.
    """
    c = a[0]
    if c == 0:
        raise ZeroDivisionError("non-unit series")
    la = len(a)
    if c == 1 or c == -1:
        b = [0] * (n + 1)
        b[0] = c
        for k in range(1, n + 1):
            s = 0
            for j in range(1, min(k, la - 1) + 1):
                aj = a[j]
                if aj:
                    s += aj * b[k - j]
            b[k] = -c * s
        return b, 1
    cpow = [1] * (n + 1)
    for j in range(1, n + 1):
        cpow[j] = cpow[j - 1] * c
    big = [0] * (n + 1)
    big[0] = 1
    for k in range(1, n + 1):
        s = 0
        for j in range(1, min(k, la - 1) + 1):
            aj = a[j]
            if aj:
                s += aj * big[k - j] * cpow[j - 1]
        big[k] = -s
    # b_k = big_k / c**(k+1); put everything over c**(n+1)
    nums = [big[k] * cpow[n - k] for k in range(n + 1)]
    den = cpow[n] * c
    if den < 0:
        nums = [-v for v in nums]
        den = -den
    return nums, den


def divide_binomial(a, j, n):
    """Coefficients 0..n of ``a / (1 - x**j)`` for j >= 1."""
    out = list(a[: n + 1]) + [0] * (n + 1 - len(a))
    for k in range(j, n + 1):
        out[k] += out[k - j]
    return out
