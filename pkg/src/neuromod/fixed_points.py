"""Period-1 fixed points: bracketing search, eigenvalues, classification.

Both systems reduce to a scalar root problem. For the two-neuron module
(under w22 = 0) the second component is explicit, y = b2 + w21*tanh(alpha*x),
so substituting it leaves F(x) = x - w11*t1 - w12*tanh(beta*y) - b1 whose
sign changes on a dense grid bracket every coexisting fixed point -- which
is the whole point, Newton from one seed would miss the bistable partners.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import ValidationError
from .maps import SingleNeuronParams, State2, step_single, step_two
from .transfer import sech2

DEFAULT_INTERVAL = (-50.0, 50.0)
DEFAULT_GRID = 2000
_RESIDUAL_TARGET = 1e-12
_TANGENCY_DIP = 1e-9

STABLE = "stable"
UNSTABLE = "unstable"
SADDLE = "saddle"
NONHYPERBOLIC = "nonhyperbolic"


@dataclass(frozen=True)
class FixedPoint:
    state: object  # float (single) or State2 (two-neuron)
    eigenvalues: tuple
    classification: str
    residual: float


def classify(eigenvalues, tol=1e-9):
    moduli = [abs(ev) for ev in eigenvalues]
    if any(1.0 - tol <= m <= 1.0 + tol for m in moduli):
        return NONHYPERBOLIC
    if all(m < 1.0 - tol for m in moduli):
        return STABLE
    if all(m > 1.0 + tol for m in moduli):
        return UNSTABLE
    return SADDLE


def _bisect(f, a, b, fa, fb):
    # refine a sign-change bracket until |f| < 1e-12 (or the interval
    # collapses to rounding, whichever comes first)
    mid = 0.5 * (a + b)
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if abs(fm) < _RESIDUAL_TARGET or mid == a or mid == b:
            return mid
        if (fm < 0.0) == (fa < 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return mid


def _scalar_roots(f, interval, grid):
    """All bracketed roots of f on the interval, plus best-effort tangency
    points where |f| dips below 1e-9 without changing sign."""
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise ValidationError("interval must satisfy lo < hi")
    if grid < 2:
        raise ValidationError("grid must be >= 2")
    h = (hi - lo) / (grid - 1)
    xs = [lo + i * h for i in range(grid)]
    fs = [f(x) for x in xs]

    roots = []
    tangent = []
    for i in range(grid - 1):
        if fs[i] == 0.0:
            roots.append(xs[i])
        elif (fs[i] < 0.0) != (fs[i + 1] < 0.0):
            roots.append(_bisect(f, xs[i], xs[i + 1], fs[i], fs[i + 1]))
    if fs[-1] == 0.0:
        roots.append(xs[-1])

    # grazing (fold-tangent) roots: local minimum of |f| below the dip
    # threshold with equal signs either side; approximate, by design
    for i in range(1, grid - 1):
        if abs(fs[i]) < _TANGENCY_DIP and fs[i] != 0.0:
            if (fs[i - 1] < 0.0) == (fs[i] < 0.0) == (fs[i + 1] < 0.0):
                if abs(fs[i]) <= abs(fs[i - 1]) and abs(fs[i]) <= abs(fs[i + 1]):
                    a, b = xs[i - 1], xs[i + 1]
                    for _ in range(100):
                        m1 = a + (b - a) / 3.0
                        m2 = b - (b - a) / 3.0
                        if abs(f(m1)) <= abs(f(m2)):
                            b = m2
                        else:
                            a = m1
                    tangent.append(0.5 * (a + b))

    merged = []
    for x in sorted(roots):
        if not merged or abs(x - merged[-1]) > 1e-9 * max(1.0, abs(x)):
            merged.append(x)
    near_root = lambda x: any(abs(x - r) <= 2.0 * h for r in merged)
    extra = [x for x in sorted(tangent) if not near_root(x)]
    return merged, extra


def find_fixed_single(p, interval=DEFAULT_INTERVAL, grid=DEFAULT_GRID):
    from .maps import jacobian_single

    g = lambda x: step_single(p, x) - x
    roots, tangent = _scalar_roots(g, interval, grid)
    out = []
    for x in roots:
        lam = jacobian_single(p, x)
        out.append(FixedPoint(x, (complex(lam, 0.0),), classify((lam,)), abs(g(x))))
    for x in tangent:
        lam = jacobian_single(p, x)
        out.append(FixedPoint(x, (complex(lam, 0.0),), NONHYPERBOLIC, abs(g(x))))
    out.sort(key=lambda fp: fp.state)
    return out


def find_fixed_two(p, x_interval=DEFAULT_INTERVAL, grid=DEFAULT_GRID):
    p.require_w22_zero()

    def y_of(x):
        return p.b2 + p.w21 * math.tanh(p.alpha * x)

    def F(x):
        t1 = math.tanh(p.alpha * x)
        y = p.b2 + p.w21 * t1
        t2 = math.tanh(p.beta * y)
        return x - p.w11 * t1 - p.w12 * t2 - p.b1

    roots, tangent = _scalar_roots(F, x_interval, grid)
    out = []
    for x, forced in [(r, False) for r in roots] + [(t, True) for t in tangent]:
        state = State2(x, y_of(x))
        eigs = eigenvalues_two(p, state)
        nxt = step_two(p, state)
        residual = max(abs(nxt.x - state.x), abs(nxt.y - state.y))
        label = NONHYPERBOLIC if forced else classify(eigs)
        out.append(FixedPoint(state, eigs, label, residual))
    out.sort(key=lambda fp: fp.state.x)
    return out


def eigenvalues_two(p, fp):
    """Roots of lambda^2 - tr*lambda - K, tr = alpha*w11*sech2(alpha*x),
    K = alpha*beta*w12*w21*sech2(alpha*x)*sech2(beta*y)."""
    s1 = sech2(p.alpha * fp.x)
    s2 = sech2(p.beta * fp.y)
    tr = p.alpha * p.w11 * s1
    K = p.alpha * p.beta * p.w12 * p.w21 * s1 * s2
    disc = tr * tr + 4.0 * K
    if disc >= 0.0:
        sq = math.sqrt(disc)
        return (complex((tr + sq) / 2.0, 0.0), complex((tr - sq) / 2.0, 0.0))
    sq = math.sqrt(-disc)
    return (complex(tr / 2.0, sq / 2.0), complex(tr / 2.0, -sq / 2.0))
