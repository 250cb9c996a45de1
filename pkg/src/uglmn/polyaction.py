"""Module actions on polynomial superalgebras.

Two factor superalgebras share one index set: in flavor "0|1" the first m
variables are even (symmetric) and the last n odd (exterior); flavor "1|0"
swaps the roles.  Monomials are divided powers X^(a) = prod X_i^{a_i}/[a_i]!,
so odd slots only carry exponents 0 or 1 and a monomial with an odd exponent
pushed to 2 is zero.

Generator actions on divided monomials:

    K_i . X^(a) = v_i^{a_i} X^(a)
    E_h . X^(a) = [a_h + 1] X^(a + alpha_h)   if a_{h+1} > 0, else 0
    F_h . X^(a) = [a_{h+1} + 1] X^(a - alpha_h) if a_h > 0, else 0

The mixed tensor space takes m factors of flavor "0|1" followed by n factors
of flavor "1|0"; its monomials X^[A] are indexed by SuperMatrix columns.  The
closed-form action uses the sigma/f/g statistics; an independent route
expands the iterated coproduct over the factors and inserts Koszul signs, and
the two must agree.
"""

from __future__ import annotations

from .linear import LinComb
from .qcoeff import ONE, VFunc, quantum_integer
from .superindex import Profile, SuperMatrix, f_stat, g_stat, sigma
from .words import E, F, K, GenLetter, Word, apply_word
from .words import f as f_letter

ZERO_ONE = "0|1"
ONE_ZERO = "1|0"


class DividedMonomial:
    """A divided-power monomial of one factor algebra."""

    __slots__ = ("profile", "flavor", "exps", "_hash")

    def __init__(self, profile: Profile, flavor: str, exps):
        if flavor not in (ZERO_ONE, ONE_ZERO):
            raise ValueError(f"unknown flavor {flavor!r}")
        exps = tuple(int(x) for x in exps)
        if len(exps) != profile.size:
            raise ValueError(f"exponent vector must have length {profile.size}")
        m = profile.m
        for i, x in enumerate(exps):
            if x < 0:
                raise ValueError("exponents must be nonnegative")
            odd_var = i >= m if flavor == ZERO_ONE else i < m
            if odd_var and x > 1:
                raise ValueError(f"odd slot {i + 1} carries exponent {x} > 1")
        self.profile = profile
        self.flavor = flavor
        self.exps = exps
        self._hash = hash((flavor, profile, exps))

    @classmethod
    def _make(cls, profile, flavor, exps):
        x = object.__new__(cls)
        x.profile = profile
        x.flavor = flavor
        x.exps = exps
        x._hash = hash((flavor, profile, exps))
        return x

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, DividedMonomial)
            and self.flavor == other.flavor
            and self.profile == other.profile
            and self.exps == other.exps
        )

    def odd_slot(self, i: int) -> bool:
        """True when the 1-based slot i is an odd variable."""
        return (i > self.profile.m) if self.flavor == ZERO_ONE else (i <= self.profile.m)

    def degree(self) -> int:
        return sum(self.exps)

    def parity(self) -> int:
        m = self.profile.m
        odd = self.exps[m:] if self.flavor == ZERO_ONE else self.exps[:m]
        return sum(odd) & 1

    def __repr__(self):
        return f"X^({','.join(map(str, self.exps))};{self.flavor})"


# Sign/exponent/bracket coefficient cache: (exponent, bracket, negate) -> VFunc.
_COEFF_CACHE: dict = {}


def _coeff(exp: int, bracket: int, neg: bool) -> VFunc:
    key = (exp, bracket, neg)
    c = _COEFF_CACHE.get(key)
    if c is None:
        c = VFunc.v_power(exp) * quantum_integer(bracket)
        if neg:
            c = -c
        _COEFF_CACHE[key] = c
    return c


_EMPTY = LinComb._raw({})


def _k_coeff(x: DividedMonomial, i: int, power: int) -> VFunc:
    """Scalar by which K_i^power acts on one divided monomial: v_i^(power a_i)."""
    size = x.profile.size
    if not 1 <= i <= size:
        raise IndexError(f"K index {i} out of range 1..{size}")
    ei = power * x.exps[i - 1]
    return VFunc.v_power(ei if i <= x.profile.m else -ei)


def _ef_factor(x: DividedMonomial, kind: str, h: int):
    """One E_h/F_h move on a divided monomial: (target, coefficient) or None."""
    a = x.exps
    size = x.profile.size
    if not 1 <= h < size:
        raise IndexError(f"generator index {h} out of range 1..{size - 1}")
    if kind == E:
        if a[h] == 0:
            return None
        if a[h - 1] == 1 and x.odd_slot(h):
            return None  # odd variable squares to zero
        exps = a[: h - 1] + (a[h - 1] + 1, a[h] - 1) + a[h + 1 :]
        coeff = quantum_integer(a[h - 1] + 1)
    else:
        if a[h - 1] == 0:
            return None
        if a[h] == 1 and x.odd_slot(h + 1):
            return None
        exps = a[: h - 1] + (a[h - 1] - 1, a[h] + 1) + a[h + 1 :]
        coeff = quantum_integer(a[h] + 1)
    return DividedMonomial._make(x.profile, x.flavor, exps), coeff


def act_factor(letter: GenLetter, x: DividedMonomial) -> LinComb:
    """Single-generator action on a divided monomial of one factor algebra."""
    if letter.kind == K:
        return LinComb._raw({x: _k_coeff(x, letter.index, letter.power)})
    res = _ef_factor(x, letter.kind, letter.index)
    if res is None:
        return _EMPTY
    return LinComb._raw({res[0]: res[1]})


def column_flavor(p: Profile, j: int) -> str:
    return ZERO_ONE if j <= p.m else ONE_ZERO


def column_monomials(a: SuperMatrix) -> list:
    p = a.profile
    return [
        DividedMonomial._make(p, column_flavor(p, j + 1), tuple(r[j] for r in a.rows))
        for j in range(p.size)
    ]


def tensor_parity(a: SuperMatrix) -> int:
    from .superindex import matrix_parity

    return matrix_parity(a)


def act_tensor(letter: GenLetter, a: SuperMatrix) -> LinComb:
    """Closed-form action on a tensor monomial X^[A].

    K_i multiplies by v_i^(row_i sum); E_h/F_h move one unit between rows h
    and h+1 inside each admissible column, weighted by the f/g statistics and
    the sign (-1)^sigma when h = m.
    """
    p = a.profile
    m, size = p.m, p.size
    if letter.kind == K:
        i = letter.index
        if not 1 <= i <= size:
            raise IndexError(f"K index {i} out of range 1..{size}")
        ei = letter.power * a.row_sum(i)
        return LinComb.single(a, VFunc.v_power(ei if i <= m else -ei))
    h = letter.index
    if not 1 <= h < size:
        raise IndexError(f"generator index {h} out of range 1..{size - 1}")
    odd = h == m
    out: dict = {}
    if letter.kind == E:
        row_src = a.rows[h]
        row_dst = a.rows[h - 1]
        for i in range(1, size + 1):
            if row_src[i - 1] < 1:
                continue
            target = a.shift(((h, i, 1), (h + 1, i, -1)))
            if target is None:
                continue
            exp = f_stat(h, i, a)
            neg = odd and (sigma(i, a) & 1 == 1)
            c = _coeff(exp if h <= m else -exp, row_dst[i - 1] + 1, neg)
            prev = out.get(target)
            out[target] = c if prev is None else prev + c
    else:
        row_src = a.rows[h - 1]
        row_dst = a.rows[h]
        for i in range(1, size + 1):
            if row_src[i - 1] < 1:
                continue
            target = a.shift(((h, i, -1), (h + 1, i, 1)))
            if target is None:
                continue
            exp = g_stat(h, i, a)
            neg = odd and (sigma(i, a) & 1 == 1)
            c = _coeff(exp if h + 1 <= m else -exp, row_dst[i - 1] + 1, neg)
            prev = out.get(target)
            out[target] = c if prev is None else prev + c
    return LinComb._raw({t: c for t, c in out.items() if not c.is_zero()})


def act_tensor_coproduct(letter: GenLetter, a: SuperMatrix, _cols=None) -> LinComb:
    """Tensor action computed structurally from the iterated coproduct.

    K goes to K x ... x K.  E_h spreads as 1 x .. x E_h x Ktilde_h x .. with
    Ktilde_h = K_h K_{h+1}^{-1}; F_h as Ktilde_h^{-1} x .. x F_h x 1 x ...
    Moving an odd generator past the first factors inserts the Koszul sign
    (-1)^(sum of the skipped column parities).
    """
    p = a.profile
    size = p.size
    cols = column_monomials(a) if _cols is None else _cols
    if letter.kind == K:
        coeff = ONE
        for col in cols:
            coeff = coeff * _k_coeff(col, letter.index, letter.power)
        return LinComb.single(a, coeff)

    h = letter.index
    if not 1 <= h < size:
        raise IndexError(f"generator index {h} out of range 1..{size - 1}")
    odd = h == p.m
    is_e = letter.kind == E

    def ktilde(col) -> VFunc:
        if is_e:
            return _k_coeff(col, h, 1) * _k_coeff(col, h + 1, -1)
        return _k_coeff(col, h, -1) * _k_coeff(col, h + 1, 1)

    if is_e:
        # Suffix products of the Ktilde coefficients right of each position.
        tail = [ONE] * (size + 1)
        for q in range(size - 1, -1, -1):
            tail[q] = ktilde(cols[q]) * tail[q + 1]
    else:
        # Prefix products of the inverse coefficients left of each position.
        tail = [ONE] * (size + 1)
        for q in range(size):
            tail[q + 1] = tail[q] * ktilde(cols[q])

    out: dict = {}
    par = 0  # parity of the columns already passed
    for pidx in range(size):
        col = cols[pidx]
        res = _ef_factor(col, letter.kind, h)
        if res is not None:
            mono, c = res
            coeff = c * (tail[pidx + 1] if is_e else tail[pidx])
            if odd and (par & 1):
                coeff = -coeff
            target = a.with_column(pidx + 1, mono.exps)
            prev = out.get(target)
            s = coeff if prev is None else prev + coeff
            if s.is_zero():
                out.pop(target, None)
            else:
                out[target] = s
        par += col.parity()
    return LinComb._raw(out)


def act_word_factor(word: Word, x: LinComb) -> LinComb:
    return apply_word(word, x, act_factor)


def act_word_tensor(word: Word, x: LinComb) -> LinComb:
    return apply_word(word, x, act_tensor)


def highest_weight_word(r: int, a, profile: Profile) -> Word:
    """The lowering word carrying X^(r e_1) to X^(a) with coefficient one.

    Built of blocks, one per slot k = 2..m+n: the block for slot k walks the
    packet a_k down the chain 1 -> 2 -> ... -> k (letters F_{k-1} ... F_1 in
    writing order, so F_1 acts first).  Blocks for larger k are written
    further right and act earlier.
    """
    a = tuple(int(x) for x in a)
    if len(a) != profile.size:
        raise ValueError(f"weight vector must have length {profile.size}")
    if sum(a) != r:
        raise ValueError(f"weight vector sums to {sum(a)}, expected {r}")
    DividedMonomial(profile, ZERO_ONE, a)  # validates odd slots
    letters = []
    for kslot in range(2, profile.size + 1):
        amount = a[kslot - 1]
        if amount == 0:
            continue
        letters.extend(f_letter(j, amount) for j in range(kslot - 1, 0, -1))
    return tuple(letters)


def reversed_e_word(word: Word) -> Word:
    """The raising companion of a lowering word: reverse and swap F -> E."""
    return tuple(GenLetter(E, l.index, l.power) for l in reversed(word))


def factor_element_to_json(x: LinComb) -> list:
    items = sorted(x.terms.items(), key=lambda kv: kv[0].exps)
    return [{"coeff": c.to_json(), "a": list(mono.exps)} for mono, c in items]


def factor_element_from_json(obj, profile: Profile, flavor: str) -> LinComb:
    terms = {}
    for t in obj:
        mono = DividedMonomial(profile, flavor, t["a"])
        terms[mono] = VFunc.from_json(t["coeff"])
    return LinComb(terms)


def tensor_element_to_json(x: LinComb) -> list:
    items = sorted(x.terms.items(), key=lambda kv: kv[0].rows)
    return [{"coeff": c.to_json(), "A": a.to_json()} for a, c in items]


def tensor_element_from_json(obj) -> LinComb:
    terms = {}
    for t in obj:
        terms[SuperMatrix.from_json(t["A"])] = VFunc.from_json(t["coeff"])
    return LinComb(terms)
