"""Central finite-difference stencils used by the derivative identities.

All stencils are O(h^4); with h around 1e-3 truncation sits near 1e-12
but rounding noise in the function values limits practical accuracy to
about 1e-7 for first and second derivatives, 1e-10 for the third at its
larger default step.
"""

__all__ = ["deriv1", "deriv2", "deriv3", "inv_x_d_dx_n"]


def deriv1(f, x, h=1e-3):
    """First derivative, 5-point stencil."""
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def deriv2(f, x, h=1e-3):
    """Second derivative, 5-point stencil."""
    return (
        -f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)
    ) / (12 * h * h)


def deriv3(f, x, h=1e-2):
    """Third derivative, 7-point stencil."""
    return (
        f(x - 3 * h)
        - 8 * f(x - 2 * h)
        + 13 * f(x - h)
        - 13 * f(x + h)
        + 8 * f(x + 2 * h)
        - f(x + 3 * h)
    ) / (8 * h**3)


def inv_x_d_dx_n(f, x, n, h=1e-3):
    """Apply (x^{-1} d/dx) n times to f, by nested stencils."""
    if n == 0:
        return f(x)

    def step(g):
        return lambda t: deriv1(g, t, h) / t

    g = f
    for _ in range(n):
        g = step(g)
    return g(x)
