import itertools
from collections import OrderedDict, namedtuple

from pyequipart.common.utils import log
from pyequipart.graycode.cycles import (
    GrayCycle,
    _permute,
    check_balanced,
    enumerate_cycles,
    is_balanced,
)


class SymmetryGroupSpec:
    """Which symmetries of Gray cycles are quotiented out by :func:`canonical_form`."""

    def __init__(self, rotation=False, reversal=False, permutation=False, complement=False):
        if not (rotation or reversal or permutation or complement):
            raise ValueError("Enable at least one symmetry.")
        self.rotation = rotation
        self.reversal = reversal
        self.permutation = permutation
        self.complement = complement

    @classmethod
    def full(cls):
        return cls(True, True, True, True)

    @property
    def name(self):
        parts = [
            label
            for (label, on) in (
                ("rotation", self.rotation),
                ("reversal", self.reversal),
                ("permutation", self.permutation),
                ("complement", self.complement),
            )
            if on
        ]
        return "+".join(parts)

    def __repr__(self):
        return "SymmetryGroupSpec({})".format(self.name)


SUBGROUPS = [
    SymmetryGroupSpec(permutation=True),
    SymmetryGroupSpec(permutation=True, complement=True),
    SymmetryGroupSpec(rotation=True, permutation=True),
    SymmetryGroupSpec(rotation=True, permutation=True, complement=True),
    SymmetryGroupSpec(rotation=True, reversal=True, permutation=True),
    SymmetryGroupSpec.full(),
]

_tables = {}


def _permutation_tables(n):
    # codeword lookup per track permutation
    if n not in _tables:
        _tables[n] = [
            [_permute(c, perm) for c in range(2 ** n)]
            for perm in itertools.permutations(range(n))
        ]
    return _tables[n]


def canonical_form(cycle, group):
    r"""Lexicographically least codeword list in the orbit of ``cycle`` under ``group``.

    With complements enabled, the least representative starts at :math:`0^n`, so for
    every rotation, direction and track permutation only the complement by the first
    codeword has to be tried.

    Example:
        >>> c = canonical_form(reflected_gray_code(3), SymmetryGroupSpec.full())
    """
    n = cycle.n
    tables = _permutation_tables(n) if group.permutation else [list(range(2 ** n))]
    words = [cycle.codewords]
    if group.reversal:
        words.append(cycle.reversed().codewords)
    N = len(cycle.codewords)
    best = None
    for table in tables:
        for w in words:
            seq = [table[c] for c in w]
            for r in range(N) if group.rotation else (0,):
                cand = seq[r:] + seq[:r]
                if group.complement:
                    cand = [c ^ cand[0] for c in cand]
                cand = tuple(cand)
                if best is None or cand < best:
                    best = cand
    return GrayCycle(best, n)


def equivalent(c1, c2, group):
    return canonical_form(c1, group) == canonical_form(c2, group)


def classify_balanced(n):
    """Balanced Gray cycles on ``n`` bits up to symmetry.

    Returns:
        dict with the raw and undirected cycle counts, the raw number of balanced
        cycles, the canonical representatives of the classes under the full group
        and the number of classes under each subgroup of :data:`SUBGROUPS`.
    """
    cycles = enumerate_cycles(n)
    balanced = [c for c in cycles if is_balanced(c)[0]]
    counts = OrderedDict()
    classes = []
    for group in SUBGROUPS:
        forms = sorted({canonical_form(c, group) for c in balanced})
        counts[group.name] = len(forms)
        if group.name == SymmetryGroupSpec.full().name:
            classes = forms
    log("{} balanced cycles on {} bits, {} classes".format(len(balanced), n, len(classes)))
    return {
        "n": n,
        "cycles": len(cycles),
        "undirected_cycles": len(cycles) // 2,
        "balanced": len(balanced),
        "classes": classes,
        "subgroup_classes": counts,
    }


def canonical_balanced_cycle(n=4):
    """Representative of the first class of balanced cycles under the full group."""
    classes = classify_balanced(n)["classes"]
    if not classes:
        raise ValueError("There is no balanced Gray cycle on {} bits.".format(n))
    return classes[0]


SwapCheck = namedtuple("SwapCheck", ["holds", "pairs", "shifts"])


def reversal_swap_check(cycle):
    r"""Whether reversing a balanced 4-bit cycle amounts to exchanging two tracks.

    The reversed cycle equals a track transposition of the original up to rotation
    and complements iff the reversed transition sequence is a rotation of the
    transposed one.

    Returns:
        SwapCheck(holds, pairs, shifts): every working transposition ``(i, j)``
        (0-based tracks) with the rotation realizing it.

    Raises:
        UnbalancedCycleError: for unbalanced cycles.
    """
    if cycle.n != 4:
        raise ValueError("The reversal check is stated for 4-bit cycles, got n={}.".format(cycle.n))
    check_balanced(cycle)
    T = list(cycle.transitions())
    R = T[::-1]
    N = len(T)
    pairs, shifts = [], []
    for i, j in itertools.combinations(range(cycle.n), 2):
        swap = {i: j, j: i}
        S = [swap.get(t, t) for t in T]
        for r in range(N):
            if S[r:] + S[:r] == R:
                pairs.append((i, j))
                shifts.append(r)
                break
    return SwapCheck(bool(pairs), pairs, shifts)
