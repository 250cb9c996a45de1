"""The supergroup realized inside formal power series over the tensor space.

A basis label (A, j) with A a diagonal-free SuperMatrix and j an integer
vector stands for the series  sum_lam v^(lam * j) X^[A + diag(lam)].  The
span of these labels is stable under the generator actions, which are given
by explicit four-term formulas; the label O(0) generates everything, and
pulling the action back along u -> u.O(0) turns the labels into a basis of
the supergroup itself, with multiplication computed by expanding a label
into a generator word.

Truncating the series at a finite diagonal level gives an independent check:
the explicit action must match the tensor-space action monomial by monomial
on the window the truncation determines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linear import LinComb, accumulate
from .polyaction import act_tensor
from .qcoeff import VFunc, quantum_integer
from .superindex import (
    Profile,
    SuperMatrix,
    a_bar,
    f_stat,
    g_stat,
    preceq,
    s_sign,
    sigma,
    super_dot,
    zero_matrix,
)
from .words import E, F, K, GenLetter, Word, apply_word, word_text
from .words import e as e_letter
from .words import f as f_letter
from .words import k as k_letter


class SeriesBasis:
    """Label (A, j): a diagonal-free matrix and an integer twist vector."""

    __slots__ = ("mat", "j", "_hash")

    def __init__(self, mat: SuperMatrix, j):
        if not mat.is_offdiag():
            raise ValueError("series labels need a diagonal-free matrix")
        j = tuple(int(x) for x in j)
        if len(j) != mat.profile.size:
            raise ValueError(f"twist vector must have length {mat.profile.size}")
        self.mat = mat
        self.j = j
        self._hash = hash((mat, j))

    @classmethod
    def _make(cls, mat, j):
        b = object.__new__(cls)
        b.mat = mat
        b.j = j
        b._hash = hash((mat, j))
        return b

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, SeriesBasis)
            and self.mat == other.mat
            and self.j == other.j
        )

    def __repr__(self):
        body = ";".join(",".join(map(str, r)) for r in self.mat.rows)
        return f"({body})({','.join(map(str, self.j))})"


def one_label(p: Profile) -> SeriesBasis:
    """The identity label O(0)."""
    return SeriesBasis._make(zero_matrix(p), (0,) * p.size)


def unit(mat: SuperMatrix, j) -> LinComb:
    return LinComb.single(SeriesBasis(mat, j))


def _shift_j(j: tuple, i: int, d: int) -> tuple:
    return j[: i - 1] + (j[i - 1] + d,) + j[i:]


def _vh_gap(h: int, m: int) -> VFunc:
    """v_h - v_h^{-1}."""
    if h <= m:
        return VFunc.v_power(1) - VFunc.v_power(-1)
    return VFunc.v_power(-1) - VFunc.v_power(1)


def act_k(i: int, sign: int, b: SeriesBasis) -> LinComb:
    """K_i^(+-1): scale by v_i^(+-row_i sum) and shift the twist by +-e_i."""
    p = b.mat.profile
    if not 1 <= i <= p.size:
        raise IndexError(f"K index {i} out of range 1..{p.size}")
    ei = sign * b.mat.row_sum(i)
    coeff = VFunc.v_power(ei if i <= p.m else -ei)
    return LinComb._raw({SeriesBasis._make(b.mat, _shift_j(b.j, i, sign)): coeff})


def _sign_exp(h: int, i: int, a: SuperMatrix, signed: bool) -> int:
    if signed:
        return s_sign(h, i, a)
    return sigma(i, a) if h == a.profile.m else 0


def act_e(h: int, b: SeriesBasis, signed: bool = False) -> LinComb:
    """Raising action on a label, in four parts: plain moves in columns right
    of h+1, twist-shifted moves in columns left of h, a difference quotient
    when the (h+1, h) slot can be emptied, and the unconditional move into
    the (h, h+1) slot.  Moves that would push an off-diagonal-block entry
    past 1 produce the zero series and are dropped.

    With signed=True the sign prefactor uses the signed-basis statistic
    instead of sigma; everything else is identical.
    """
    a = b.mat
    p = a.profile
    m, size = p.m, p.size
    if not 1 <= h < size:
        raise IndexError(f"generator index {h} out of range 1..{size - 1}")
    j = b.j
    row_src = a.rows[h]  # row h+1
    row_dst = a.rows[h - 1]  # row h
    out: dict = {}
    for i in range(1, size + 1):
        if i in (h, h + 1) or row_src[i - 1] < 1:
            continue
        target = a.shift(((h, i, 1), (h + 1, i, -1)))
        if target is None:
            continue  # odd entry would exceed 1: the series is zero
        exp = f_stat(h, i, a)
        c = VFunc.v_power(exp if h <= m else -exp) * quantum_integer(row_dst[i - 1] + 1)
        if _sign_exp(h, i, a, signed) & 1:
            c = -c
        jj = j if i > h + 1 else _shift_j(_shift_j(j, h, 1), h + 1, -1)
        accumulate(out, SeriesBasis._make(target, jj), c)
    if row_src[h - 1] >= 1:
        # Emptying the (h+1, h) slot turns the quantum bracket into a
        # difference of two twists divided by v_h - v_h^{-1}.
        target = a.shift(((h + 1, h, -1),))
        exp = f_stat(h, h, a) - j[h - 1]
        c = VFunc.v_power(exp if h <= m else -exp) / _vh_gap(h, m)
        if _sign_exp(h, h, a, signed) & 1:
            c = -c
        j_plus = _shift_j(_shift_j(j, h, 1), h + 1, -1)
        j_minus = _shift_j(_shift_j(j, h, -1), h + 1, -1)
        accumulate(out, SeriesBasis._make(target, j_plus), c)
        accumulate(out, SeriesBasis._make(target, j_minus), -c)
    target = a.shift(((h, h + 1, 1),))
    if target is not None:
        exp = f_stat(h, h + 1, a) + (-j[h] if h == m else j[h])
        c = VFunc.v_power(exp if h <= m else -exp) * quantum_integer(row_dst[h] + 1)
        if _sign_exp(h, h + 1, a, signed) & 1:
            c = -c
        accumulate(out, SeriesBasis._make(target, j), c)
    return LinComb._raw(out)


def act_f(h: int, b: SeriesBasis, signed: bool = False) -> LinComb:
    """Lowering action, mirroring act_e with the g statistic, v_{h+1} powers,
    and twist shifts by -alpha_h.

    With signed=True the sign prefactor is the signed-basis statistic taken
    on the term's target label.
    """
    a = b.mat
    p = a.profile
    m, size = p.m, p.size
    if not 1 <= h < size:
        raise IndexError(f"generator index {h} out of range 1..{size - 1}")
    j = b.j
    row_src = a.rows[h - 1]  # row h
    row_dst = a.rows[h]  # row h+1
    vpos = h + 1 <= m
    out: dict = {}
    for i in range(1, size + 1):
        if i in (h, h + 1) or row_src[i - 1] < 1:
            continue
        target = a.shift(((h, i, -1), (h + 1, i, 1)))
        if target is None:
            continue
        exp = g_stat(h, i, a)
        c = VFunc.v_power(exp if vpos else -exp) * quantum_integer(row_dst[i - 1] + 1)
        sign_mat = target if signed else a
        if _sign_exp(h, i, sign_mat, signed) & 1:
            c = -c
        jj = j if i < h else _shift_j(_shift_j(j, h, -1), h + 1, 1)
        accumulate(out, SeriesBasis._make(target, jj), c)
    target = a.shift(((h + 1, h, 1),))
    if target is not None:
        exp = g_stat(h, h, a) + (-j[h - 1] if h == m else j[h - 1])
        c = VFunc.v_power(exp if vpos else -exp) * quantum_integer(row_dst[h - 1] + 1)
        sign_mat = target if signed else a
        if _sign_exp(h, h, sign_mat, signed) & 1:
            c = -c
        accumulate(out, SeriesBasis._make(target, j), c)
    if row_src[h] >= 1:
        target = a.shift(((h, h + 1, -1),))
        exp = g_stat(h, h + 1, a) - j[h]
        c = VFunc.v_power(exp if vpos else -exp) / _vh_gap(h + 1, m)
        sign_mat = target if signed else a
        if _sign_exp(h, h + 1, sign_mat, signed) & 1:
            c = -c
        j_minus_a = _shift_j(_shift_j(j, h, -1), h + 1, 1)
        j_minus_b = _shift_j(_shift_j(j, h, -1), h + 1, -1)
        accumulate(out, SeriesBasis._make(target, j_minus_a), c)
        accumulate(out, SeriesBasis._make(target, j_minus_b), -c)
    return LinComb._raw(out)


def act_letter(letter: GenLetter, b: SeriesBasis) -> LinComb:
    if letter.kind == K:
        power = letter.power
        if power in (1, -1):
            return act_k(letter.index, power, b)
        ei = power * b.mat.row_sum(letter.index)
        coeff = VFunc.v_power(ei if letter.index <= b.mat.profile.m else -ei)
        return LinComb._raw(
            {SeriesBasis._make(b.mat, _shift_j(b.j, letter.index, power)): coeff}
        )
    if letter.kind == E:
        return act_e(letter.index, b)
    return act_f(letter.index, b)


def act_element(letter: GenLetter, x: LinComb) -> LinComb:
    return x.bind(lambda b: act_letter(letter, b))


def act_word(word: Word, x: LinComb) -> LinComb:
    return apply_word(word, x, act_letter)


@dataclass(frozen=True)
class TruncatedSeries:
    """Finite witness of a label: all monomials of diagonal level <= level."""

    element: LinComb
    level: int


def _diag_tuples(size: int, total: int):
    if size == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _diag_tuples(size - 1, total - first):
            yield (first,) + rest


def truncate(b: SeriesBasis, level: int) -> TruncatedSeries:
    """sum over |lam| <= level of v^(lam * j) X^[A + diag(lam)]."""
    if level < 0:
        raise ValueError("truncation level must be >= 0")
    p = b.mat.profile
    terms = {}
    for total in range(level + 1):
        for lam in _diag_tuples(p.size, total):
            terms[b.mat.add_diag(lam)] = VFunc.v_power(super_dot(lam, b.j, p))
    return TruncatedSeries(LinComb._raw(terms), level)


def truncate_element(x: LinComb, level: int) -> LinComb:
    out = LinComb.zero()
    for b, c in x:
        out = out + truncate(b, level).element.scale(c)
    return out


def compare_truncated(letter: GenLetter, b: SeriesBasis, level: int) -> bool:
    """Check the explicit action of one generator on one label against the
    tensor action of the truncated series.  One generator application moves
    the diagonal level by at most one, so the two sides are both complete on
    monomials of level <= level - 1; they must agree there exactly.
    """
    if level < 1:
        raise ValueError("comparison needs level >= 1")
    lhs = truncate(b, level).element.bind(lambda mat: act_tensor(letter, mat))
    rhs = truncate_element(act_letter(letter, b), level)
    window = level - 1
    lhs = lhs.filter_keys(lambda mat: mat.diag_total() <= window)
    rhs = rhs.filter_keys(lambda mat: mat.diag_total() <= window)
    return lhs == rhs


def monomial_word(mat: SuperMatrix, j) -> Word:
    """The generator word whose action on O(0) has leading label (A, j):
    lowering blocks column by column, the twist as K powers, then raising
    blocks from the last column down to the second.  Letters with zero
    divided power are omitted.
    """
    if not mat.is_offdiag():
        raise ValueError("monomial words are indexed by diagonal-free matrices")
    size = mat.profile.size
    j = tuple(int(x) for x in j)
    if len(j) != size:
        raise ValueError(f"twist vector must have length {size}")
    letters = []
    for col in range(1, size):
        for row in range(col + 1, size + 1):
            amount = mat.entry(row, col)
            if amount:
                letters.extend(
                    f_letter(idx, amount) for idx in range(row - 1, col - 1, -1)
                )
    for i in range(1, size + 1):
        if j[i - 1]:
            letters.append(k_letter(i, j[i - 1]))
    for col in range(size, 1, -1):
        for row in range(col - 1, 0, -1):
            amount = mat.entry(row, col)
            if amount:
                letters.extend(e_letter(idx, amount) for idx in range(row, col))
    return tuple(letters)


def leading_decompose(x: LinComb, mat: SuperMatrix):
    """Split off the part of x sitting at the matrix mat (all twists) from
    the strictly lower remainder; reject inputs with labels not below mat."""
    lead = {}
    rest = {}
    for b, c in x:
        if b.mat == mat:
            lead[b] = c
        elif preceq(b.mat, mat):
            rest[b] = c
        else:
            raise ValueError(f"label {b!r} is not dominated by the leading matrix")
    return LinComb._raw(lead), LinComb._raw(rest)


_EXPAND_CACHE: dict = {}


def expand_as_words(mat: SuperMatrix, j) -> tuple:
    """Write the label (A, j) as a combination of generator words applied to
    O(0): act with the label's own word, peel off the unit leading term, and
    eliminate the strictly lower remainder recursively.  Returns a tuple of
    (coefficient, word) pairs."""
    key = SeriesBasis(mat, j)
    hit = _EXPAND_CACHE.get(key)
    if hit is not None:
        return hit
    word = monomial_word(mat, j)
    x = act_word(word, LinComb.single(one_label(mat.profile)))
    lead, rest = leading_decompose(x, mat)
    assert len(lead) == 1, f"leading part of {key!r} is not a single label"
    (lead_key, u), = lead.terms.items()
    assert lead_key == key, f"leading twist mismatch: {lead_key!r} != {key!r}"
    assert u.as_unit_monomial() is not None, f"leading coefficient {u!r} is not +-v^c"
    u_inv = u.inv()
    out = {word: u_inv}
    remainder = sorted(
        rest.terms.items(),
        key=lambda kv: (-kv[0].mat.offdiag_total(), kv[0].mat.rows, kv[0].j),
    )
    for b2, c in remainder:
        scale = u_inv * c
        for c2, w2 in expand_as_words(b2.mat, b2.j):
            prev = out.get(w2)
            s = -scale * c2 if prev is None else prev - scale * c2
            if s.is_zero():
                out.pop(w2, None)
            else:
                out[w2] = s
    result = tuple(
        (c, w)
        for w, c in sorted(out.items(), key=lambda kv: (len(kv[0]), word_text(kv[0])))
    )
    _EXPAND_CACHE[key] = result
    return result


def multiply(x: LinComb, y: LinComb) -> LinComb:
    """Product in the supergroup: expand each left label into generator words
    and act with them on the right element."""
    out = LinComb.zero()
    for b, c in x:
        for cw, w in expand_as_words(b.mat, b.j):
            out = out + act_word(w, y).scale(c * cw)
    return out


def to_signed(x: LinComb) -> LinComb:
    """Rescale each label by (-1)^(a_bar of its matrix); an involution."""
    return LinComb._raw(
        {b: (-c if a_bar(b.mat) & 1 else c) for b, c in x.terms.items()}
    )


from_signed = to_signed


def series_element_to_json(x: LinComb) -> list:
    items = sorted(x.terms.items(), key=lambda kv: (kv[0].mat.rows, kv[0].j))
    return [
        {"coeff": c.to_json(), "A": b.mat.to_json(), "j": list(b.j)}
        for b, c in items
    ]


def series_element_from_json(obj) -> LinComb:
    terms = {}
    for t in obj:
        b = SeriesBasis(SuperMatrix.from_json(t["A"]), t["j"])
        terms[b] = VFunc.from_json(t["coeff"])
    return LinComb(terms)
