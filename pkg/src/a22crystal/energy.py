"""Classical and affine energy functions on the adjoint crystal."""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Callable

from . import kernels
from .adjoint import AdjointCrystal, AdjointElem, LimitElem
from .crystal import AffineCrystal, AffineElem, Report, TensorCrystal, tensor_e, tensor_f


def h_classical(b1: AdjointElem | LimitElem, b2: AdjointElem | LimitElem) -> int:
    """Classical energy of ``b1 (x) b2``; the same formula serves the limit crystal."""
    if isinstance(b1, AdjointElem) and isinstance(b2, AdjointElem) and b1.l != b2.l:
        raise ValueError(f"levels differ: {b1.l} vs {b2.l}")
    return kernels.energy_h(b1.x, b1.y, b2.x, b2.y)


def H_affine(a1: AffineElem, a2: AffineElem, h: Callable = h_classical) -> int:
    """``H(b1(m) (x) b2(n)) = m - n - h(b1 (x) b2)``."""
    return a1.m - a2.m - h(a1.b, a2.b)


def grade_gap(p_next: AdjointElem | LimitElem, p: AdjointElem | LimitElem) -> int:
    """The right-hand side of the zero-energy condition for consecutive path entries.

    ``p_next`` sits to the left of ``p``; with grades ``-m_next`` and ``-m`` the
    pair has zero affine energy iff ``m - m_next`` equals this value.
    """
    s_next = p_next.x + p_next.y
    s = p.x + p.y
    return max(s_next - s, s - s_next, s + (p_next.y - 3 * p_next.x), s_next + (p.x - 3 * p.y))


def verify_energy_axioms(l: int, h: Callable = h_classical) -> Report:
    """Check the defining rules of a classical energy over all of ``B (x) B``."""
    report = Report(f"energy axioms l={l}")
    B = AdjointCrystal(l)
    BB = TensorCrystal((B, B))
    for b1, b2 in product(B, B):
        s = (b1, b2)
        base = h(b1, b2)
        for i in (0, 1):
            t = BB.e(i, s)
            if t is None:
                continue
            report.checked += 1
            got = h(*t)
            if i != 0:
                want = base
            else:
                want = base + 1 if B.phi(0, b1) >= B.eps(0, b2) else base - 1
            if got != want:
                report.add(f"e_{i}({b1} (x) {b2}) = {t[0]} (x) {t[1]}: h = {got}, expected {want}")
    return report


def verify_h_invariance(l: int, i: int = 1) -> Report:
    """``h`` is unchanged by ``e_i`` and ``f_i`` for ``i != 0`` wherever defined."""
    report = Report(f"h invariance under index {i}, l={l}")
    B = AdjointCrystal(l)
    BB = TensorCrystal((B, B))
    for s in product(B, B):
        for t in (BB.e(i, s), BB.f(i, s)):
            if t is None:
                continue
            report.checked += 1
            if h_classical(*t) != h_classical(*s):
                report.add(f"{s[0]} (x) {s[1]} -> {t[0]} (x) {t[1]}")
    return report


def verify_H_constancy(l: int, m_window: int, depth: int, seeds=None) -> Report:
    """``H`` is constant along every Kashiwara edge of ``B^aff (x) B^aff``.

    Starting from ``seeds`` (default: every pair with both grades in
    ``[-m_window, m_window]``), walk ``depth`` steps with all ``e_i``/``f_i``
    and check every step that stays inside the window.
    """
    report = Report(f"H constancy l={l} window={m_window} depth={depth}")
    B = AdjointCrystal(l)
    A = AffineCrystal(B)
    grades = range(-m_window, m_window + 1)
    if seeds is None:
        affs = [AffineElem(b, m) for b in B for m in grades]
        seeds = [(u, v) for u in affs for v in affs]

    def inside(p):
        return abs(p[0].m) <= m_window and abs(p[1].m) <= m_window

    seen = set(seeds)
    frontier = deque((s, 0) for s in seeds)
    while frontier:
        s, d = frontier.popleft()
        if d >= depth:
            continue
        base = H_affine(*s)
        for i in (0, 1):
            for op in (tensor_e, tensor_f):
                t = op(i, s, A)
                if t is None or not inside(t):
                    continue
                report.checked += 1
                if H_affine(*t) != base:
                    report.add(f"{op.__name__}_{i}: H changes at {s[0]} (x) {s[1]}")
                if t not in seen:
                    seen.add(t)
                    frontier.append((t, d + 1))
    report.info["pairs_visited"] = len(seen)
    return report


def verify_zero_energy_condition(l: int, m_window: int) -> Report:
    """Zero affine energy between consecutive entries matches the grade-gap formula."""
    report = Report(f"zero-energy condition l={l} window={m_window}")
    B = AdjointCrystal(l)
    for p_next, p in product(B, B):
        gap = grade_gap(p_next, p)
        for m_next in range(0, m_window + 1):
            for m in range(0, m_window + 1):
                report.checked += 1
                zero = H_affine(AffineElem(p_next, -m_next), AffineElem(p, -m)) == 0
                if zero != (m - m_next == gap):
                    report.add(f"{p_next}(-{m_next}) (x) {p}(-{m})")
    return report
