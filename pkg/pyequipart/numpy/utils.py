import numpy as np

from pyequipart.numpy import default_dtype


class numpytools:
    arraysum = staticmethod(np.sum)
    abs = staticmethod(np.abs)
    where = staticmethod(np.where)

    @staticmethod
    def transpose(x):
        return x.T

    @staticmethod
    def numpy(x):
        return x

    @staticmethod
    def matmul(x, y):
        return x @ y

    @staticmethod
    def clip(x, lo, hi):
        return np.clip(x, lo, hi)

    @staticmethod
    def concat(arrays, axis=0):
        return np.concatenate(arrays, axis=axis)

    @staticmethod
    def nonnegative(x):
        return (x >= 0).astype(default_dtype)

    @staticmethod
    def view(x, s):
        return np.reshape(x, s)

    @staticmethod
    def zeros(shape, dtype=default_dtype):
        return np.zeros(shape).astype(dtype)

    @staticmethod
    def array(x, dtype=default_dtype, device=None):
        return np.asarray(x).astype(dtype)
