import fcntl
import functools
import json
import os
import warnings

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

import pyequipart.config


def log(message):
    if pyequipart.config.verbose:
        print("[pyequipart]: " + message)


def warn(message):
    warnings.warn("[pyequipart]: " + message)


def get_tools(lang):
    """
    get_tools is used to simulate template as in Cpp code. Depending on the backend
    it import the right classes.

    :param lang: a string with the backend ('torch'/'pytorch' or 'numpy')
    :return: a class tools
    """

    if lang == "numpy":
        from pyequipart.numpy.utils import numpytools

        tools = numpytools()
    elif lang == "torch" or lang == "pytorch":
        from pyequipart.torch.utils import torchtools

        tools = torchtools()
    else:
        raise ValueError("Unknown backend {}.".format(lang))

    return tools


def bits(beta, n):
    """Bits of the orthant index ``beta``, bit ``i`` being the side of hyperplane ``i``."""
    return tuple((beta >> i) & 1 for i in range(n))


def from_bits(b):
    return sum(int(v) << i for (i, v) in enumerate(b))


def bitstring(beta, n):
    """Bit string of ``beta`` written hyperplane 1 first, e.g. ``bitstring(1, 4) == "1000"``."""
    return "".join(str(v) for v in bits(beta, n))


def parse_bitstring(s):
    if not s or any(ch not in "01" for ch in s):
        raise ValueError("Invalid bit string {!r}.".format(s))
    return from_bits(int(ch) for ch in s)


def unit(v, name="vector"):
    v = np.asarray(v, dtype="float64")
    nrm = np.linalg.norm(v)
    if not nrm > 0:
        raise ValueError("The {} must be non zero.".format(name))
    return v / nrm


def complete_basis(vectors, dim):
    r"""Orthonormal completion of a family of vectors by Gram-Schmidt on the canonical basis.

    Args:
        vectors ((K,D) array): Orthonormal rows to complete.
        dim (int): Ambient dimension :math:`D`.

    Returns:
        (D-K,D) array: rows spanning the orthogonal complement, taken from
        :math:`e_1, e_2, \ldots` in this order whenever possible.
    """
    basis = [np.asarray(v, dtype="float64") for v in vectors]
    out = []
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = 1.0
        for b in basis + out:
            e = e - (e @ b) * b
        nrm = np.linalg.norm(e)
        if nrm > 1e-8:
            out.append(e / nrm)
        if len(basis) + len(out) == dim:
            break
    return np.array(out).reshape(-1, dim)


def halton_directions(count, dim):
    """
    Deterministic directions on the unit sphere :math:`S^{dim-1}`, obtained from the
    (unscrambled) Halton sequence mapped through the inverse normal cdf.
    """
    sampler = qmc.Halton(d=dim, scramble=False)
    sampler.fast_forward(1)  # the first Halton point is the origin
    pts = ndtri(sampler.random(count))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def check_dimension(dim):
    if dim not in (2, 3, 4):
        raise ValueError("Dimension should be 2, 3 or 4, got {}.".format(dim))
    return dim


def lifted_rows(config):
    """Lifted hyperplanes of a configuration-like object as a (k, D+1) float array."""
    U = getattr(config, "u", config)
    U = np.atleast_2d(np.asarray(U, dtype="float64"))
    return U


def affine_lifted_image(U, M, q):
    r"""Lifted hyperplanes mapped by the affine map :math:`x \mapsto Mx + q`.

    A hyperplane :math:`a\cdot x + u_{D+1} \geq 0` is sent to
    :math:`(M^{-T}a)\cdot y + u_{D+1} - (M^{-T}a)\cdot q \geq 0`; rows are renormalized.
    """
    U = lifted_rows(U)
    D = U.shape[1] - 1
    A = np.linalg.solve(np.asarray(M, dtype="float64").T, U[:, :D].T).T
    last = U[:, D] - A @ np.asarray(q, dtype="float64")
    out = np.concatenate((A, last[:, None]), axis=1)
    return out / np.linalg.norm(out, axis=1, keepdims=True)


class FileLock:
    def __init__(self, fd, op=fcntl.LOCK_EX):
        self.fd = fd
        self.op = op

    def __enter__(self):
        fcntl.flock(self.fd, self.op)
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        fcntl.flock(self.fd, fcntl.LOCK_UN)


def cached_json(name):
    """
    Store the (JSON serializable) result of ``func(*args)`` in the cache folder, in a
    file named after ``name`` and the arguments. A lock file prevents two processes
    from computing the same entry at the same time.
    """

    def wrapper(func):
        @functools.wraps(func)
        def wrapper_filelock(*args):
            if not pyequipart.config.use_cache:
                return func(*args)
            from pyequipart.common.set_path import set_cache_folder

            if not pyequipart.config.cache_folder:
                set_cache_folder()
            path = os.path.join(
                pyequipart.config.cache_folder,
                "{}-{}.json".format(name, "-".join(str(a) for a in args)),
            )
            with open(os.path.join(pyequipart.config.cache_folder, "pyequipart.lock"), "w") as f:
                with FileLock(f):
                    if os.path.isfile(path):
                        with open(path) as g:
                            return json.load(g)
                    res = func(*args)
                    with open(path, "w") as g:
                        json.dump(res, g)
            log("cached {} in {}".format(name, path))
            return res

        return wrapper_filelock

    return wrapper
