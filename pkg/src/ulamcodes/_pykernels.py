"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""


def lcs_length(x, y):
    """Length of a longest common subsequence of two integer sequences."""
    x = [int(v) for v in x]
    y = [int(v) for v in y]
    if not x or not y:
        return 0
    row = [0] * (len(y) + 1)
    for xi in x:
        diag = 0
        for j, yj in enumerate(y):
            up = row[j + 1]
            if xi == yj:
                best = diag + 1
            else:
                best = up if up > row[j] else row[j]
            diag = up
            row[j + 1] = best
    return row[-1]


def _rows(book):
    return book.tolist() if hasattr(book, "tolist") else [list(r) for r in book]


def far_from_all(word, book, min_distance):
    """True when ``n - lcs(word, row) >= min_distance`` for every row of *book*."""
    word = [int(v) for v in word]
    limit = len(word) - min_distance
    return all(lcs_length(word, r) <= limit for r in _rows(book))


def nearest(word, book):
    """Return ``(index, distance, tied)`` of the closest row of *book* to *word*."""
    rows = _rows(book)
    if not rows:
        raise ValueError("empty codebook")
    word = [int(v) for v in word]
    n = len(word)
    best, best_k, tied = -1, 0, False
    for k, r in enumerate(rows):
        d = n - lcs_length(word, r)
        if best < 0 or d < best:
            best, best_k, tied = d, k, False
        elif d == best:
            tied = True
    return best_k, best, tied


def min_pairwise_distance(book):
    """Return ``(distance, i, j)`` for the closest pair of rows (first found)."""
    rows = _rows(book)
    if len(rows) < 2:
        return None
    n = len(rows[0])
    best, bi, bj = -1, 0, 1
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            d = n - lcs_length(rows[a], rows[b])
            if best < 0 or d < best:
                best, bi, bj = d, a, b
    return best, bi, bj
