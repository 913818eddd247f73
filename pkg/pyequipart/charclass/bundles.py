from collections import OrderedDict

from pyequipart.charclass.algebra import F2Class, binomial_mod2, exterior, truncated_polynomial

SURFACES = OrderedDict(
    [
        ("torus", exterior(("a", "b"))),
        ("projective-plane", truncated_polynomial(2)),
    ]
)

# first Stiefel-Whitney class of every named line bundle, as monomial exponents
LINE_BUNDLES = {
    "torus": {"eps": [], "l00": [], "l01": [(0, 1)], "l10": [(1, 0)], "l11": [(1, 0), (0, 1)]},
    "projective-plane": {"eps": [], "gamma": [(1,)]},
}


class BundleSpec:
    """Formal sum of named line bundles over a surface, e.g. ``BundleSpec("torus", eps=3, l11=4)``.

    Torus bundles are ``eps``, ``l00``, ``l01``, ``l10``, ``l11`` with
    :math:`w_1(\\lambda_{ij}) = i a + j b`; projective plane bundles are ``eps`` and
    ``gamma`` with :math:`w_1(\\gamma) = t`.
    """

    def __init__(self, surface, multiplicities=None, **kwargs):
        if surface not in SURFACES:
            raise ValueError("Unknown surface {!r}, expected one of {}.".format(surface, list(SURFACES)))
        self.surface = surface
        mult = dict(multiplicities or {}, **kwargs)
        for name, m in mult.items():
            if name not in LINE_BUNDLES[surface]:
                raise ValueError("No line bundle {!r} over the {}.".format(name, surface))
            if int(m) != m or m < 0:
                raise ValueError("Multiplicities should be nonnegative integers, got {}={}.".format(name, m))
        self.multiplicities = {k: int(v) for (k, v) in mult.items() if v}

    @property
    def algebra(self):
        return SURFACES[self.surface]

    @property
    def rank(self):
        return sum(self.multiplicities.values())

    def __add__(self, other):
        if other.surface != self.surface:
            raise ValueError("Cannot add bundles over the {} and the {}.".format(self.surface, other.surface))
        mult = dict(self.multiplicities)
        for k, v in other.multiplicities.items():
            mult[k] = mult.get(k, 0) + v
        return BundleSpec(self.surface, mult)

    def __str__(self):
        if not self.multiplicities:
            return "0"
        return " + ".join(
            name if m == 1 else "{}^{}".format(name, m)
            for (name, m) in sorted(self.multiplicities.items())
        )

    def __repr__(self):
        return "BundleSpec({!r}, {})".format(self.surface, self.multiplicities)


def w1(spec, name):
    return F2Class(spec.algebra, LINE_BUNDLES[spec.surface][name])


def total_class(spec):
    """Whitney product of the classes :math:`1 + w_1` of the line bundles."""
    A = spec.algebra
    out = A.one()
    for name, m in sorted(spec.multiplicities.items()):
        out = out * (A.one() + w1(spec, name)) ** m
    return out


def _same_surface(plus, minus):
    if plus.surface != minus.surface:
        raise ValueError("Virtual bundle mixes the {} and the {}.".format(plus.surface, minus.surface))


def virtual_class(plus, minus):
    r"""Total class :math:`w(\phi^+)\,w(\phi^-)^{-1}` of the virtual bundle."""
    _same_surface(plus, minus)
    return total_class(plus) * total_class(minus).inverse()


def virtual_w2(plus, minus):
    r"""Degree 2 part of the class of :math:`\phi^+ - \phi^-`.

    Computed from the product with the inverse and from the expansion
    :math:`w_2^+ + w_1^+ w_1^- + (w_1^-)^2 + w_2^-`; both must agree.
    """
    _same_surface(plus, minus)
    product = virtual_class(plus, minus).part(2)
    p, m = total_class(plus), total_class(minus)
    expansion = p.part(2) + p.part(1) * m.part(1) + m.part(1) * m.part(1) + m.part(2)
    assert product == expansion, "w2 routes disagree: {} != {}".format(product, expansion)
    return product


def evaluate_fundamental(c2, surface):
    """Value of a degree 2 class on the fundamental class of the surface, 0 or 1."""
    A = SURFACES[surface]
    if c2.algebra != A:
        raise ValueError("Class of {} evaluated on the {}.".format(c2.algebra.name, surface))
    if any(d != 2 for d in c2.degrees):
        raise ValueError("Expected a homogeneous class of degree 2, got {}.".format(c2))
    return c2.coefficient(A.top_monomial())


def tangent_restriction_class(n, m):
    r"""The class :math:`(1+t)^{n+1}` of the tangent bundle of :math:`\mathbb{R}P^n` restricted to :math:`\mathbb{R}P^m`."""
    if not 1 <= m <= n:
        raise ValueError("Expected 1 <= m <= n, got n={}, m={}.".format(n, m))
    A = truncated_polynomial(m)
    return F2Class(A, [(k,) for k in range(m + 1) if binomial_mod2(n + 1, k)])


# splittings of the two bundles pulled back to each surface
DECOMPOSITIONS = OrderedDict(
    [
        (
            "torus",
            (
                BundleSpec("torus", eps=3, l01=4, l10=4, l11=4),
                BundleSpec("torus", eps=6, l01=5, l10=5),
            ),
        ),
        (
            "projective-plane",
            (
                BundleSpec("projective-plane", eps=7, gamma=8),
                BundleSpec("projective-plane", eps=11, gamma=5),
            ),
        ),
    ]
)

# the torus difference written as a single virtual bundle
TORUS_VIRTUAL = (
    BundleSpec("torus", l11=4),
    BundleSpec("torus", l01=1, l10=1, eps=3),
)


def obstruction_report(decompositions=None):
    """Intermediate classes of the obstruction computation, surface by surface.

    Returns:
        OrderedDict surface -> dict with the total classes of both bundles, the
        degree 2 class of their difference and its value on the fundamental class.
    """
    decompositions = DECOMPOSITIONS if decompositions is None else decompositions
    out = OrderedDict()
    for surface, (plus, minus) in decompositions.items():
        c2 = virtual_w2(plus, minus)
        out[surface] = {
            "plus": plus,
            "minus": minus,
            "w_plus": total_class(plus),
            "w_minus": total_class(minus),
            "w2": c2,
            "value": evaluate_fundamental(c2, surface),
        }
    if decompositions is DECOMPOSITIONS:
        other = virtual_w2(*TORUS_VIRTUAL)
        if other != out["torus"]["w2"]:
            raise AssertionError("Virtual torus difference gives {} instead of {}.".format(other, out["torus"]["w2"]))
        out["torus"]["w2_virtual"] = other
        gamma = total_class(BundleSpec("projective-plane", gamma=5))
        if gamma != tangent_restriction_class(4, 2):
            raise AssertionError("gamma^5 has class {}, expected {}.".format(gamma, tangent_restriction_class(4, 2)))
    return out


def reproduce_obstruction_inputs(decompositions=None):
    """Values of :math:`w_2` of both virtual bundles on the fundamental classes, ``(1, 1)``."""
    report = obstruction_report(decompositions)
    return tuple(r["value"] for r in report.values())


def format_report(report):
    """Fixed textual form of :func:`obstruction_report`, one fact per line."""
    lines = []
    for surface, r in report.items():
        lines.append("{} plus = {}".format(surface, r["plus"]))
        lines.append("{} minus = {}".format(surface, r["minus"]))
        lines.append("{} w(plus) = {}".format(surface, r["w_plus"]))
        lines.append("{} w(minus) = {}".format(surface, r["w_minus"]))
        lines.append("{} w2(plus - minus) = {}".format(surface, r["w2"]))
        if "w2_virtual" in r:
            lines.append(
                "{} w2({} - ({})) = {}".format(surface, TORUS_VIRTUAL[0], TORUS_VIRTUAL[1], r["w2_virtual"])
            )
        lines.append("{} <w2, [N]> = {}".format(surface, r["value"]))
    lines.append("result = ({})".format(", ".join(str(r["value"]) for r in report.values())))
    return "\n".join(lines) + "\n"
