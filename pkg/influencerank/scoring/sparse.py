from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.sparse import csr_matrix


def arc_matrix(rows, cols, data, n):
    """CSR matrix with canonical (sorted) column order inside each row."""
    matrix = csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.float64)
    matrix.sort_indices()
    return matrix


class RowBlockProduct:
    """Sparse matrix-vector product split into contiguous row blocks.

    Every row is reduced by the same sequential loop whichever block it lands
    in, so the result is bit-identical for any number of threads.
    """

    def __init__(self, matrix, threads=1):
        self.matrix = matrix
        self.threads = max(1, int(threads))
        n = matrix.shape[0]
        if self.threads == 1 or n < 2 * self.threads:
            self.blocks = [matrix]
        else:
            bounds = np.linspace(0, n, self.threads + 1).astype(np.int64)
            self.blocks = [matrix[start:stop] for start, stop in zip(bounds[:-1], bounds[1:])]

    def __call__(self, pool, x):
        if len(self.blocks) == 1:
            return self.matrix @ x
        parts = pool.map(lambda block: block @ x, self.blocks)
        return np.concatenate(list(parts))


def thread_pool(threads):
    return ThreadPoolExecutor(max_workers=max(1, int(threads)))
