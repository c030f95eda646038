"""Pure-Python GF(p) kernels; reference semantics for ``_kernels.pyx``."""


def rank_mod_p(flat, rows, cols, p):
    """Rank of a row-major ``rows x cols`` integer matrix over GF(p)."""
    m = [[x % p for x in flat[i * cols:(i + 1) * cols]] for i in range(rows)]
    return _rank_rows(m, rows, cols, p)


def _rank_rows(m, rows, cols, p):
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = r
        while piv < rows and m[piv][c] == 0:
            piv += 1
        if piv == rows:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = pow(prow[c], -1, p)
        for i in range(r + 1, rows):
            row = m[i]
            if row[c]:
                f = row[c] * inv % p
                for k in range(c, cols):
                    row[k] = (row[k] - f * prow[k]) % p
        r += 1
    return r


def min_rank_assignments(flat, rows, cols, unknowns, p, floor=0):
    """Minimum rank over all ``p**len(unknowns)`` fillings of ``unknowns``.

    ``unknowns`` are row-major flat indices. Assignments are visited in
    lexicographic order (first unknown most significant); the first one
    reaching the minimum is returned. Enumeration stops early once a rank
    ``<= floor`` is seen.

    Returns ``(min_rank, assignment, visited)``.
    """
    base = [x % p for x in flat]
    u = len(unknowns)
    digits = [0] * u
    best = None
    best_assign = None
    visited = 0
    while True:
        work = list(base)
        for idx, d in zip(unknowns, digits):
            work[idx] = d
        m = [work[i * cols:(i + 1) * cols] for i in range(rows)]
        rk = _rank_rows(m, rows, cols, p)
        visited += 1
        if best is None or rk < best:
            best = rk
            best_assign = tuple(digits)
            if rk <= floor:
                break
        k = u - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < p:
                break
            digits[k] = 0
            k -= 1
        if k < 0:
            break
    return best, best_assign, visited
