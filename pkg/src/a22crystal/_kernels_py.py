"""Pure-Python kernels.  Same API as the compiled ``_kernels`` module.

Factor sequences are listed left to right; the tensor rule is the one where
``f_i(b1 (x) b2)`` acts on ``b1`` iff ``phi_i(b1) > eps_i(b2)``.
"""

from __future__ import annotations

from typing import Sequence


def energy_h(x1: int, y1: int, x2: int, y2: int) -> int:
    s1 = x1 + y1
    s2 = x2 + y2
    return max(s1 - s2, s2 - s1, s2 + y1 - 3 * x1, s1 + x2 - 3 * y2)


def _phi_prefix(eps: Sequence[int], phi: Sequence[int]) -> list[int]:
    out = []
    acc = 0
    for k, (e, p) in enumerate(zip(eps, phi)):
        acc = p if k == 0 else max(p, acc + p - e)
        out.append(acc)
    return out


def fold_stats(eps: Sequence[int], phi: Sequence[int]) -> tuple[int, int]:
    """(eps, phi) of the whole string by iterating the two-factor max rule."""
    n = len(eps)
    if n == 0:
        raise ValueError("empty tensor string")
    e_acc = eps[0]
    p_acc = phi[0]
    for k in range(1, n):
        wt_prev = p_acc - e_acc
        e_acc = max(e_acc, eps[k] - wt_prev)
        p_acc = max(phi[k], p_acc + phi[k] - eps[k])
    return e_acc, p_acc


def f_position(eps: Sequence[int], phi: Sequence[int]) -> int:
    n = len(eps)
    if n == 0:
        return -1
    pre = _phi_prefix(eps, phi)
    k = n - 1
    while k > 0 and pre[k - 1] > eps[k]:
        k -= 1
    return k


def e_position(eps: Sequence[int], phi: Sequence[int]) -> int:
    n = len(eps)
    if n == 0:
        return -1
    pre = _phi_prefix(eps, phi)
    k = n - 1
    while k > 0 and pre[k - 1] >= eps[k]:
        k -= 1
    return k


def cancel_counts(minus: Sequence[int], plus: Sequence[int]) -> tuple[int, int, int, int]:
    """Bracket-cancel the word ``-^minus[0] +^plus[0] -^minus[1] ...``.

    Returns ``(surviving -, surviving +, index of rightmost surviving -,
    index of leftmost surviving +)``; missing positions are ``-1``.
    """
    n_minus = 0
    e_pos = -1
    stack: list[list[int]] = []  # [factor index, unmatched + count]
    for k in range(len(minus)):
        m = minus[k]
        while m > 0 and stack:
            top = stack[-1]
            used = min(m, top[1])
            top[1] -= used
            m -= used
            if top[1] == 0:
                stack.pop()
        if m > 0:
            n_minus += m
            e_pos = k
        if plus[k] > 0:
            stack.append([k, plus[k]])
    n_plus = sum(c for _, c in stack)
    f_pos = stack[0][0] if stack else -1
    return n_minus, n_plus, e_pos, f_pos
