import itertools


class F2Algebra:
    r"""Graded commutative algebra over :math:`\mathbb{Z}/2` truncated at ``top_degree``.

    Monomials are exponent tuples over ``generators``; a monomial with an exponent
    above ``max_exponent`` or a degree above ``top_degree`` vanishes. Every
    generator has degree 1.
    """

    def __init__(self, generators, max_exponent, top_degree, name=None):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("An algebra needs at least one generator.")
        self.max_exponent = int(max_exponent)
        self.top_degree = int(top_degree)
        self.name = name or "F2[{}]".format(",".join(self.generators))

    def monomials(self):
        """All nonvanishing monomials, by degree."""
        ranges = [range(self.max_exponent + 1)] * len(self.generators)
        out = [e for e in itertools.product(*ranges) if sum(e) <= self.top_degree]
        return sorted(out, key=self._order)

    @staticmethod
    def _order(e):
        return (sum(e), tuple(-v for v in e))

    def multiply_monomials(self, e, f):
        g = tuple(x + y for (x, y) in zip(e, f))
        if max(g) > self.max_exponent or sum(g) > self.top_degree:
            return None
        return g

    def one(self):
        return F2Class(self, [(0,) * len(self.generators)])

    def zero(self):
        return F2Class(self, [])

    def generator(self, name):
        if name not in self.generators:
            raise ValueError("Unknown generator {!r} of {}.".format(name, self.name))
        return F2Class(self, [tuple(int(g == name) for g in self.generators)])

    def top_monomial(self):
        """The monomial read by the fundamental class of a surface."""
        tops = [e for e in self.monomials() if sum(e) == self.top_degree]
        if len(tops) != 1:
            raise ValueError("{} has no single top monomial.".format(self.name))
        return tops[0]

    def elements(self):
        """Every class of the algebra."""
        mons = self.monomials()
        for mask in range(2 ** len(mons)):
            yield F2Class(self, [m for (k, m) in enumerate(mons) if (mask >> k) & 1])

    def monomial_string(self, e):
        if not any(e):
            return "1"
        parts = []
        for g, v in zip(self.generators, e):
            if v == 1:
                parts.append(g)
            elif v > 1:
                parts.append("{}^{}".format(g, v))
        return "".join(parts)

    def __eq__(self, other):
        return isinstance(other, F2Algebra) and (
            self.generators,
            self.max_exponent,
            self.top_degree,
        ) == (other.generators, other.max_exponent, other.top_degree)

    def __hash__(self):
        return hash((self.generators, self.max_exponent, self.top_degree))

    def __repr__(self):
        return "F2Algebra({})".format(self.name)


def truncated_polynomial(k, generator="t"):
    r""":math:`\mathbb{Z}/2[t]/(t^{k+1})`, the mod 2 cohomology of :math:`\mathbb{R}P^k`."""
    if k < 1:
        raise ValueError("Truncation degree should be positive, got {}.".format(k))
    return F2Algebra((generator,), k, k, "Z2[{0}]/({0}^{1})".format(generator, k + 1))


def exterior(generators=("a", "b")):
    r"""Exterior algebra, the mod 2 cohomology of a torus of dimension ``len(generators)``."""
    return F2Algebra(generators, 1, len(generators), "Lambda[{}]".format(",".join(generators)))


class F2Class:
    """Element of an :class:`F2Algebra`: the set of monomials with coefficient 1."""

    def __init__(self, algebra, monomials=()):
        self.algebra = algebra
        terms = set()
        n = len(algebra.generators)
        for e in monomials:
            e = tuple(int(v) for v in e)
            if len(e) != n or min(e) < 0:
                raise ValueError("Invalid monomial {} for {}.".format(e, algebra.name))
            if max(e) > algebra.max_exponent or sum(e) > algebra.top_degree:
                continue
            terms ^= {e}
        self.terms = frozenset(terms)

    def _check(self, other):
        if not isinstance(other, F2Class):
            raise TypeError("Expected an F2Class, got {}.".format(type(other)))
        if other.algebra != self.algebra:
            raise ValueError("Classes of {} and {} cannot be combined.".format(self.algebra.name, other.algebra.name))

    def __add__(self, other):
        self._check(other)
        return F2Class(self.algebra, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        out = set()
        for e in self.terms:
            for f in other.terms:
                g = self.algebra.multiply_monomials(e, f)
                if g is not None:
                    out ^= {g}
        return F2Class(self.algebra, out)

    def __pow__(self, k):
        out = self.algebra.one()
        for _ in range(int(k)):
            out = out * self
        return out

    @property
    def constant(self):
        return int((0,) * len(self.algebra.generators) in self.terms)

    def part(self, degree):
        """Homogeneous component of the given degree."""
        return F2Class(self.algebra, [e for e in self.terms if sum(e) == degree])

    def coefficient(self, monomial):
        return int(tuple(monomial) in self.terms)

    @property
    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def is_zero(self):
        return not self.terms

    def inverse(self):
        r"""Inverse of a class with constant term 1, as the truncated geometric series.

        Writing :math:`c = 1 + x` with :math:`x` nilpotent, :math:`c^{-1} = \sum_k x^k`
        (signs disappear in characteristic 2).
        """
        if not self.constant:
            raise ValueError("Only classes with constant term 1 are invertible, got {}.".format(self))
        x = self + self.algebra.one()
        out, power = self.algebra.one(), self.algebra.one()
        for _ in range(self.algebra.top_degree):
            power = power * x
            out = out + power
        return out

    def __eq__(self, other):
        return isinstance(other, F2Class) and self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.algebra.monomial_string(e) for e in sorted(self.terms, key=self.algebra._order))

    def __repr__(self):
        return "F2Class({}, {})".format(self.algebra.name, self)


def parse_class(algebra, text):
    """Inverse of ``str``: ``parse_class(exterior(), "1 + a + ab")``."""
    by_name = {algebra.monomial_string(e): e for e in algebra.monomials()}
    text = text.strip()
    if text == "0":
        return algebra.zero()
    terms = []
    for token in text.split("+"):
        token = token.strip()
        if token not in by_name:
            raise ValueError("Unknown monomial {!r} of {}.".format(token, algebra.name))
        terms.append(by_name[token])
    return F2Class(algebra, terms)


def binomial_mod2(m, k):
    """Parity of C(m, k): odd exactly when the bits of ``k`` are among those of ``m``."""
    if k < 0 or m < 0 or k > m:
        return 0
    return int(k & m == k)
