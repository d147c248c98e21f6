"""Named degree-2 and degree-4 classes on CP2 x CP2 built from the factors."""

from gkmkirwan.catalog import builtin
from gkmkirwan.cohomology import kunneth, module_class, symplectic_class, unit


def named_classes(space=None):
    s = space or builtin("cp2xcp2-k3")
    cp2 = s.factors.left
    one, x = unit(cp2), symplectic_class(cp2)
    u1, u2 = module_class(s, 0), module_class(s, 1)
    x_1 = kunneth(x, one, s)  # x (x) 1
    one_x = kunneth(one, x, s)  # 1 (x) x
    return {
        "u1": u1,
        "u2": u2,
        "x(x)1": x_1,
        "1(x)x": one_x,
        "x(x)x": kunneth(x, x, s),
        "x^2(x)1": kunneth(x * x, one, s),
        "1(x)x^2": kunneth(one, x * x, s),
        # u_i (x) x and x (x) u_i: the module generator on one factor, x on the other
        "u1(x)x": u1 * one_x,
        "u2(x)x": u2 * one_x,
        "x(x)u1": x_1 * u1,
        "x(x)u2": x_1 * u2,
    }


def ten_basis_classes(space=None):
    c = named_classes(space)
    u1, u2 = c["u1"], c["u2"]
    return [u1 * u1, u2 * u2, u1 * u2, c["x(x)u1"], c["x(x)u2"], c["u1(x)x"], c["u2(x)x"],
            c["x(x)x"], c["1(x)x^2"], c["x^2(x)1"]]


def nine_kernel_classes(space=None):
    c = named_classes(space)
    u1, u2 = c["u1"], c["u2"]
    return {
        "x(x)x": c["x(x)x"],
        "u1u2+u1(x)x": u1 * u2 + c["u1(x)x"],
        "u1^2+u1(x)x": u1 * u1 + c["u1(x)x"],
        "u1^2-1(x)x^2": u1 * u1 - c["1(x)x^2"],
        "u2^2-1(x)x^2": u2 * u2 - c["1(x)x^2"],
        "u2^2-u2(x)x": u2 * u2 - c["u2(x)x"],
        "u1(x)x-x(x)u1+u2(x)x-x(x)u2+x^2(x)1-1(x)x^2":
            c["u1(x)x"] - c["x(x)u1"] + c["u2(x)x"] - c["x(x)u2"] + c["x^2(x)1"] - c["1(x)x^2"],
        "1(x)x^2+u1(x)x": c["1(x)x^2"] + c["u1(x)x"],
        "x(x)u2+x(x)u1+x^2(x)1+u1u2": c["x(x)u2"] + c["x(x)u1"] + c["x^2(x)1"] + u1 * u2,
    }
