"""Independent reference implementations used by the tests.

Nothing here imports the package's operator code: the adjoint crystal is
re-typed from its defining formulas, tensor products use the literal
two-factor rule nested to the left, and the energy function is rebuilt from
its defining rules by propagation.
"""

from collections import deque


def adj(l):
    """Elements of the level-``l`` adjoint crystal as plain tuples."""
    return [(x, y) for x in range(l + 1) for y in range(l + 1 - x)]


def eps(i, b, l):
    x, y = b
    return y if i == 1 else l - 2 * y + abs(x - y)


def phi(i, b, l):
    x, y = b
    return x if i == 1 else l - 2 * x + abs(x - y)


def wt(b):
    x, y = b
    return (2 * (y - x), x - y)


def f(i, b, l):
    x, y = b
    if i == 1:
        t = (x - 1, y + 1)
    elif x >= y:
        t = (x + 1, y)
    else:
        t = (x, y - 1)
    if l is None:
        return t
    return t if min(t) >= 0 and sum(t) <= l else None


def e(i, b, l):
    x, y = b
    if i == 1:
        t = (x + 1, y - 1)
    elif x > y:
        t = (x - 1, y)
    else:
        t = (x, y + 1)
    if l is None:
        return t
    return t if min(t) >= 0 and sum(t) <= l else None


class Nested:
    """``left (x) right`` built from two crystals given as dicts of callables."""

    def __init__(self, left, right):
        self.left, self.right = left, right

    def eps(self, i, b):
        b1, b2 = b
        w1 = self.left.phi(i, b1) - self.left.eps(i, b1)
        return max(self.left.eps(i, b1), self.right.eps(i, b2) - w1)

    def phi(self, i, b):
        b1, b2 = b
        w2 = self.right.phi(i, b2) - self.right.eps(i, b2)
        return max(self.right.phi(i, b2), self.left.phi(i, b1) + w2)

    def f(self, i, b):
        b1, b2 = b
        if self.left.phi(i, b1) > self.right.eps(i, b2):
            t = self.left.f(i, b1)
            return None if t is None else (t, b2)
        t = self.right.f(i, b2)
        return None if t is None else (b1, t)

    def e(self, i, b):
        b1, b2 = b
        if self.left.phi(i, b1) >= self.right.eps(i, b2):
            t = self.left.e(i, b1)
            return None if t is None else (t, b2)
        t = self.right.e(i, b2)
        return None if t is None else (b1, t)


class Single:
    def __init__(self, l):
        self.l = l

    def eps(self, i, b):
        return eps(i, b, self.l)

    def phi(self, i, b):
        return phi(i, b, self.l)

    def f(self, i, b):
        return f(i, b, self.l)

    def e(self, i, b):
        return e(i, b, self.l)


def nest(elems):
    """Left-nested pair structure for ``b_1 (x) ... (x) b_n``."""
    acc = elems[0]
    for b in elems[1:]:
        acc = (acc, b)
    return acc


def flatten(nested, n):
    out = []
    for _ in range(n - 1):
        nested, last = nested
        out.append(last)
    out.append(nested)
    return tuple(reversed(out))


def nested_crystal(l, n):
    c = Single(l)
    for _ in range(n - 1):
        c = Nested(c, Single(l))
    return c


def tensor_f(i, elems, l):
    n = len(elems)
    t = nested_crystal(l, n).f(i, nest(list(elems)))
    return None if t is None else flatten(t, n)


def tensor_e(i, elems, l):
    n = len(elems)
    t = nested_crystal(l, n).e(i, nest(list(elems)))
    return None if t is None else flatten(t, n)


def energy_by_propagation(l):
    """The classical energy on ``B (x) B`` rebuilt from its defining rules.

    Start from ``h((0,0) (x) (0,0)) = 0`` and walk ``e_i`` edges of the
    two-fold tensor product: ``e_1`` keeps ``h``; ``e_0`` adds one when it
    acts on the left factor and subtracts one when it acts on the right.
    """
    c = Nested(Single(l), Single(l))
    start = ((0, 0), (0, 0))
    h = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in (0, 1):
            for op, sign in ((c.e, 1), (c.f, -1)):
                q = op(i, p)
                if q is None:
                    continue
                if i == 1:
                    dv = 0
                else:
                    src, dst = (p, q) if sign == 1 else (q, p)
                    left = c.left.phi(0, src[0]) >= c.right.eps(0, src[1])
                    dv = (1 if left else -1) * sign
                val = h[p] + dv
                if q in h:
                    if h[q] != val:
                        raise AssertionError(f"inconsistent energy at {q}")
                    continue
                h[q] = val
                queue.append(q)
    return h
