import itertools

import numpy as np

from pyequipart.arrangement.hyperplane import Configuration
from pyequipart.common.utils import lifted_rows
from pyequipart.measures.base import MassVector


class GroupElement:
    r"""Element :math:`(\varepsilon, \pi)` of :math:`W_n = (\mathbb{Z}/2)^n \rtimes S_n`.

    Hyperplane ``j`` is flipped when ``signs[j] == 1`` and then moved to position
    ``perm[j]`` (0-based): position ``i`` of ``g.H`` holds
    :math:`(-1)^{\varepsilon_{\pi^{-1}(i)}} u_{\pi^{-1}(i)}`.
    """

    def __init__(self, signs, perm):
        self.signs = tuple(int(s) & 1 for s in signs)
        self.perm = tuple(int(p) for p in perm)
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("Invalid group element ({}, {}).".format(self.signs, self.perm))
        self.n = n

    @classmethod
    def identity(cls, n):
        return cls((0,) * n, range(n))

    @classmethod
    def flip(cls, n, j):
        return cls(tuple(int(i == j) for i in range(n)), range(n))

    @classmethod
    def transposition(cls, n, i, j):
        perm = list(range(n))
        perm[i], perm[j] = j, i
        return cls((0,) * n, perm)

    def is_identity(self):
        return not any(self.signs) and self.perm == tuple(range(self.n))

    def __mul__(self, other):
        """``(g * h).H == g.(h.H)``."""
        signs = [0] * self.n
        perm = [0] * self.n
        for j in range(self.n):
            k = other.perm[j]
            signs[j] = other.signs[j] ^ self.signs[k]
            perm[j] = self.perm[k]
        return GroupElement(signs, perm)

    def inverse(self):
        signs = [0] * self.n
        perm = [0] * self.n
        for j in range(self.n):
            perm[self.perm[j]] = j
            signs[self.perm[j]] = self.signs[j]
        return GroupElement(signs, perm)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and (self.signs, self.perm) == (other.signs, other.perm)

    def __hash__(self):
        return hash((self.signs, self.perm))

    def __repr__(self):
        return "GroupElement(signs={}, perm={})".format(self.signs, self.perm)


def group_elements(n):
    """All :math:`2^n n!` elements of :math:`W_n`, permutations outermost in lexicographic order."""
    return [
        GroupElement(signs, perm)
        for perm in itertools.permutations(range(n))
        for signs in itertools.product((0, 1), repeat=n)
    ]


def act(g, config):
    U = lifted_rows(config)
    out = np.empty_like(U)
    for j in range(g.n):
        out[g.perm[j]] = -U[j] if g.signs[j] else U[j]
    return Configuration(out) if U.shape[0] + 1 == U.shape[1] else out


def act_index(g, beta):
    r"""Index action :math:`\beta'_{\pi(j)} = \beta_j \oplus \varepsilon_j` on little-endian integers."""
    out = 0
    for j in range(g.n):
        out |= (((beta >> j) & 1) ^ g.signs[j]) << g.perm[j]
    return out


def act_mass_vector(g, b):
    r"""Mass vector of :math:`g\cdot H` from the one of :math:`H`: entry :math:`g\cdot\beta` is :math:`b_\beta`."""
    values = np.asarray(b, dtype="float64")
    out = np.empty_like(values)
    for beta in range(len(values)):
        out[act_index(g, beta)] = values[beta]
    return MassVector(g.n, out) if isinstance(b, MassVector) else out
