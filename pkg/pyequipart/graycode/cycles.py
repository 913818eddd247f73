from concurrent.futures import ThreadPoolExecutor

import pyequipart.config
from pyequipart.common.errors import UnbalancedCycleError
from pyequipart.common.utils import bitstring, cached_json, log, parse_bitstring


class GrayCycle:
    r"""Cyclic Gray code: the :math:`2^n` codewords of :math:`\{0,1\}^n` in a Hamiltonian cycle of the cube.

    Codewords are little-endian integers (bit ``i`` is track ``i``).
    """

    def __init__(self, codewords, n):
        codewords = tuple(int(c) for c in codewords)
        N = 2 ** n
        if len(codewords) != N or set(codewords) != set(range(N)):
            raise ValueError("A Gray cycle on {} bits lists each of the {} codewords once.".format(n, N))
        for k in range(N):
            x = codewords[k] ^ codewords[(k + 1) % N]
            if x & (x - 1):
                raise ValueError(
                    "Codewords {} and {} differ in more than one bit.".format(
                        bitstring(codewords[k], n), bitstring(codewords[(k + 1) % N], n)
                    )
                )
        self.codewords = codewords
        self.n = n

    @classmethod
    def from_transitions(cls, transitions, n, start=0):
        codewords = [start]
        for t in transitions[:-1]:
            codewords.append(codewords[-1] ^ (1 << int(t)))
        cycle = cls(codewords, n)
        if list(cycle.transitions()) != [int(t) for t in transitions]:
            raise ValueError("The transition sequence does not close the cycle.")
        return cycle

    @classmethod
    def from_strings(cls, strings):
        return cls([parse_bitstring(s) for s in strings], len(strings[0]))

    def transitions(self):
        """Track flipped between codeword ``k`` and ``k+1`` (0-based), cyclically."""
        N = len(self.codewords)
        return tuple(
            (self.codewords[k] ^ self.codewords[(k + 1) % N]).bit_length() - 1 for k in range(N)
        )

    def track_counts(self):
        counts = [0] * self.n
        for t in self.transitions():
            counts[t] += 1
        return tuple(counts)

    def rotated(self, k):
        k %= len(self.codewords)
        return GrayCycle(self.codewords[k:] + self.codewords[:k], self.n)

    def reversed(self):
        """Same start, opposite direction."""
        return GrayCycle(self.codewords[:1] + self.codewords[:0:-1], self.n)

    def permuted(self, perm):
        """Track ``j`` moved to track ``perm[j]``."""
        return GrayCycle([_permute(c, perm) for c in self.codewords], self.n)

    def complemented(self, mask):
        return GrayCycle([c ^ mask for c in self.codewords], self.n)

    def strings(self):
        return [bitstring(c, self.n) for c in self.codewords]

    def to_dict(self):
        return {
            "n": self.n,
            "codewords": self.strings(),
            "transitions": [t + 1 for t in self.transitions()],
        }

    def __eq__(self, other):
        return isinstance(other, GrayCycle) and (self.n, self.codewords) == (other.n, other.codewords)

    def __hash__(self):
        return hash((self.n, self.codewords))

    def __lt__(self, other):
        return self.codewords < other.codewords

    def __repr__(self):
        return "GrayCycle({})".format(",".join(self.strings()))


def _permute(c, perm):
    out = 0
    for j, p in enumerate(perm):
        out |= ((c >> j) & 1) << p
    return out


def reflected_gray_code(n):
    """The standard reflected binary code :math:`k \\oplus (k \\gg 1)`."""
    return GrayCycle([k ^ (k >> 1) for k in range(2 ** n)], n)


def is_balanced(cycle):
    r"""Whether every track flips :math:`2^n/n` times.

    Returns:
        (bool, per-track transition counts)
    """
    counts = cycle.track_counts()
    N = 2 ** cycle.n
    return (N % cycle.n == 0 and all(c == N // cycle.n for c in counts)), counts


def check_balanced(cycle):
    balanced, counts = is_balanced(cycle)
    if not balanced:
        raise UnbalancedCycleError("The Gray cycle is not balanced: track counts {}.".format(counts))
    return cycle


def _branch(n, first, second):
    # Hamiltonian cycles through 0 -> 1<<first -> 1<<first ^ 1<<second
    N = 2 ** n
    path = [0, 1 << first, (1 << first) ^ (1 << second)]
    visited = (1 << path[0]) | (1 << path[1]) | (1 << path[2])
    out = []

    def dfs(c, visited):
        if len(path) == N:
            if bin(c).count("1") == 1:
                out.append(list(path))
            return
        for t in range(n):
            d = c ^ (1 << t)
            if not (visited >> d) & 1:
                path.append(d)
                dfs(d, visited | (1 << d))
                path.pop()

    dfs(path[-1], visited)
    return out


@cached_json("graycycles")
def _enumerate(n):
    branches = [(i, j) for i in range(n) for j in range(n) if i != j]
    with ThreadPoolExecutor(max_workers=max(1, pyequipart.config.n_jobs)) as pool:
        results = list(pool.map(lambda b: _branch(n, *b), branches))
    return sorted(c for res in results for c in res)


def enumerate_cycles(n):
    r"""All directed Gray cycles on :math:`n` bits starting at :math:`0^n`, sorted.

    Each undirected Hamiltonian cycle of the :math:`n`-cube appears twice, once per
    direction. Results are cached in :data:`pyequipart.config.cache_folder`.

    Example:
        >>> len(enumerate_cycles(4)) // 2
        1344
    """
    if n not in (2, 3, 4):
        raise ValueError("Gray cycles are enumerated for 2 <= n <= 4, got {}.".format(n))
    cycles = _enumerate(n)
    log("{} directed Gray cycles on {} bits".format(len(cycles), n))
    return [GrayCycle(c, n) for c in cycles]


def count_cycles(n):
    """(directed count with fixed start, undirected count)."""
    raw = len(enumerate_cycles(n))
    return raw, raw // 2
