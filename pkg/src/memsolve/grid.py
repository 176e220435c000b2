"""Uniform grids, finite-difference stencils, and discrete norms.

The computational domain is the fixed rectangle (-1, 1) x (0, 1).  The x-grid
always carries an odd number of nodes so that x = 0 is a node; symmetry checks
compare values across that node exactly.  All derivative operators here are
second-order accurate on smooth data, including the one-sided closures at the
boundary.
"""

import numpy as np

from .errors import BadParameter, InsufficientData, NonPositiveData


class LineGrid:
    """Uniform grid on [-1, 1].

    Attributes:
        n_points: node count, odd and >= 5 so x = 0 is a node.
        h: spacing, 2 / (n_points - 1).
        x: node coordinates, x[0] = -1 and x[-1] = 1 exactly.
    """

    def __init__(self, n_points):
        n_points = int(n_points)
        if n_points < 5:
            raise BadParameter(f"n_points must be >= 5, got {n_points}")
        if n_points % 2 == 0:
            raise BadParameter(f"n_points must be odd so x = 0 is a node, got {n_points}")
        self.n_points = n_points
        self.h = 2.0 / (n_points - 1)
        x = -1.0 + self.h * np.arange(n_points)
        x[0], x[-1] = -1.0, 1.0
        x[(n_points - 1) // 2] = 0.0
        self.x = x

    def __eq__(self, other):
        return isinstance(other, LineGrid) and other.n_points == self.n_points

    def __repr__(self):
        return f"LineGrid(n_points={self.n_points})"


class RectGrid:
    """Tensor grid on [-1, 1] x [0, 1]: a LineGrid in x times a uniform eta-grid.

    Attributes:
        line: the x-direction LineGrid.
        n_eta: eta node count, >= 5.
        h_eta: spacing, 1 / (n_eta - 1).
        eta: eta coordinates, eta[0] = 0 and eta[-1] = 1 exactly.
    """

    def __init__(self, line, n_eta):
        if not isinstance(line, LineGrid):
            raise BadParameter("line must be a LineGrid")
        n_eta = int(n_eta)
        if n_eta < 5:
            raise BadParameter(f"n_eta must be >= 5, got {n_eta}")
        self.line = line
        self.n_eta = n_eta
        self.h_eta = 1.0 / (n_eta - 1)
        eta = self.h_eta * np.arange(n_eta)
        eta[0], eta[-1] = 0.0, 1.0
        self.eta = eta

    @property
    def n_x(self):
        return self.line.n_points

    @property
    def h_x(self):
        return self.line.h

    @property
    def x(self):
        return self.line.x

    def shape(self):
        return (self.n_x, self.n_eta)

    def __eq__(self, other):
        return (
            isinstance(other, RectGrid)
            and other.line == self.line
            and other.n_eta == self.n_eta
        )

    def __repr__(self):
        return f"RectGrid(n_x={self.n_x}, n_eta={self.n_eta})"


def _check_values(values, shape, label):
    values = np.asarray(values, dtype=float)
    if values.shape != shape:
        raise BadParameter(f"{label} has shape {values.shape}, expected {shape}")
    if not np.all(np.isfinite(values)):
        raise BadParameter(f"{label} contains non-finite entries")
    return values


class GridFunction1D:
    """Nodal values of a function on a LineGrid.  All values must be finite."""

    def __init__(self, grid, values):
        self.grid = grid
        self.values = _check_values(values, (grid.n_points,), "values")


class GridFunction2D:
    """Nodal values on a RectGrid, indexed values[i, j] = f(x_i, eta_j)."""

    def __init__(self, grid, values):
        self.grid = grid
        self.values = _check_values(values, grid.shape(), "values")


def d1_values(values, h, axis=0):
    """First derivative along an axis: central interior, one-sided 2nd-order ends."""
    values = np.asarray(values, dtype=float)
    v = np.moveaxis(values, axis, 0)
    out = np.empty_like(v)
    out[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
    out[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h)
    return np.moveaxis(out, 0, axis)


def d2_values(values, h, axis=0):
    """Second derivative along an axis: 3-point interior, endpoints copied
    from the nearest interior node (the solver never uses endpoint curvature
    directly; the copy keeps the output shape aligned with the grid)."""
    values = np.asarray(values, dtype=float)
    v = np.moveaxis(values, axis, 0)
    out = np.empty_like(v)
    out[1:-1] = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / (h * h)
    out[0] = out[1]
    out[-1] = out[-2]
    return np.moveaxis(out, 0, axis)


def d1(f):
    """First-derivative operator on a GridFunction1D; second-order accurate."""
    return GridFunction1D(f.grid, d1_values(f.values, f.grid.h))


def d2(f):
    """Second-derivative operator on a GridFunction1D; second-order accurate."""
    return GridFunction1D(f.grid, d2_values(f.values, f.grid.h))


def trace_d_eta_top(f):
    """One-sided eta-derivative of a GridFunction2D on the top edge eta = 1.

    Uses (3 f_N - 4 f_{N-1} + f_{N-2}) / (2 h_eta); exact for functions
    quadratic in eta, second-order accurate otherwise.  Returns a
    GridFunction1D on the x-grid.
    """
    v = f.values
    if f.grid.n_eta < 3:
        raise BadParameter("trace stencil needs at least 3 eta nodes")
    h = f.grid.h_eta
    tr = (3.0 * v[:, -1] - 4.0 * v[:, -2] + v[:, -3]) / (2.0 * h)
    return GridFunction1D(f.grid.line, tr)


def norm_inf(f):
    """Max-abs nodal norm of a GridFunction1D or GridFunction2D."""
    return float(np.max(np.abs(f.values)))


def norm_l2_1d(f):
    """Trapezoid L2 norm over (-1, 1)."""
    return float(np.sqrt(np.trapezoid(f.values**2, dx=f.grid.h)))


def norm_l2_2d(f):
    """Trapezoid L2 norm over (-1, 1) x (0, 1)."""
    inner = np.trapezoid(f.values**2, dx=f.grid.h_eta, axis=1)
    return float(np.sqrt(np.trapezoid(inner, dx=f.grid.h_x)))


def norm_w1inf(f):
    """W^{1,inf} norm of a GridFunction1D: max of the sup norms of f and d1(f)."""
    return max(norm_inf(f), norm_inf(d1(f)))


def fit_loglog_slope(abscissae, values):
    """Least-squares slope and prefactor of values ~ prefactor * abscissae^slope.

    Both inputs must be strictly positive; raises NonPositiveData otherwise
    and InsufficientData with fewer than two points.
    """
    a = np.asarray(abscissae, dtype=float)
    q = np.asarray(values, dtype=float)
    if a.shape != q.shape or a.ndim != 1:
        raise BadParameter("abscissae and values must be 1-D arrays of equal length")
    if a.size < 2:
        raise InsufficientData(f"need at least 2 points to fit a slope, got {a.size}")
    if np.any(a <= 0.0) or np.any(q <= 0.0):
        raise NonPositiveData("log-log fit requires strictly positive data")
    slope, log_prefactor = np.polyfit(np.log(a), np.log(q), 1)
    return float(slope), float(np.exp(log_prefactor))
