"""Bracketed words and exact Lie polynomial arithmetic.

Elements of the free Lie algebra are kept in coordinates over the
canonical basis of bracketed Lyndon-Shirshov words, with exact rational
coefficients (plain ints whenever possible).  Expansion into the free
associative algebra realizes the bracket as (ab) = ab - ba; the leading
associative word of a bracketed Lyndon-Shirshov word is the word itself
with coefficient 1, which is what makes the greedy triangular
decomposition below work.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import (
    GREATER,
    Word,
    compare_lex,
    deglex_key,
    is_alsw,
    standard_split,
)


class NotLieElementError(ValueError):
    """Raised when an associative polynomial has no bracketed-word coordinates."""


def _coeff(c):
    """Normalize an exact coefficient; integral rationals become int."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def coeff_str(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class LieTree:
    """A fully bracketed word: a leaf letter or an ordered pair of trees."""

    __slots__ = ("word", "left", "right", "_hash")

    def __init__(self, word, left, right):
        self.word = word
        self.left = left
        self.right = right
        if left is None:
            self._hash = hash(("leaf", word))
        else:
            self._hash = hash((left._hash, right._hash))

    @classmethod
    def leaf(cls, alphabet, symbol):
        return cls(alphabet.word_of([symbol]), None, None)

    @classmethod
    def pair(cls, left, right):
        return cls(left.word + right.word, left, right)

    @property
    def is_leaf(self):
        return self.left is None

    @property
    def letter(self):
        if self.left is not None:
            raise ValueError("not a leaf")
        return self.word[0]

    def degree(self):
        return len(self.word)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LieTree):
            return False
        if self.word != other.word:
            return False
        if self.left is None or other.left is None:
            return self.left is None and other.left is None
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self.left is None:
            return self.word[0]
        return f"({self.left} {self.right})"

    def __repr__(self):
        return f"LieTree({str(self)!r})"


@lru_cache(maxsize=None)
def bracket(u):
    """The canonical bracketing [u] of a Lyndon-Shirshov word, recursing on
    the standard split."""
    if len(u) == 0 or not is_alsw(u):
        raise ValueError(f"{u!r} is not a Lyndon-Shirshov word")
    if len(u) == 1:
        return LieTree(u, None, None)
    v, w = standard_split(u)
    return LieTree.pair(bracket(v), bracket(w))


def is_nlsw(t):
    """Whether a tree is the canonical bracketing of a Lyndon-Shirshov word:
    the underlying word is one, both children are canonical, and the right
    child of the left child does not exceed the right child."""
    if t.left is None:
        return True
    if not is_alsw(t.word):
        return False
    if not (is_nlsw(t.left) and is_nlsw(t.right)):
        return False
    l = t.left
    if l.left is not None and compare_lex(l.right.word, t.right.word) == GREATER:
        return False
    return True


class AssocPoly:
    """A polynomial in the free associative algebra: a finite mapping from
    words to exact rational coefficients, zero coefficients absent."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            if w.alphabet != alphabet:
                raise ValueError("mixed alphabets in polynomial")
            c = _coeff(c)
            if c:
                data[w] = c
        self.alphabet = alphabet
        self.terms = data

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def monomial(cls, word, c=1):
        return cls(word.alphabet, [(word, c)])

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items_deglex(self, reverse=True):
        """Terms sorted by deg-lex, leading term first by default."""
        return sorted(
            self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=reverse
        )

    def leading(self):
        """The deg-lex maximal word and its coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading word")
        w = max(self.terms, key=deglex_key)
        return w, self.terms[w]

    def degree(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(len(w) for w in self.terms)

    def __add__(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("mixed alphabets")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = _coeff(s)
            else:
                out.pop(w, None)
        p = AssocPoly.__new__(AssocPoly)
        p.alphabet = self.alphabet
        p.terms = out
        return p

    def __neg__(self):
        p = AssocPoly.__new__(AssocPoly)
        p.alphabet = self.alphabet
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        p = AssocPoly.__new__(AssocPoly)
        p.alphabet = self.alphabet
        p.terms = {} if not c else {w: _coeff(c * v) for w, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.alphabet != other.alphabet:
            raise ValueError("mixed alphabets")
        out = {}
        for w1, c1 in self.terms.items():
            r1 = w1.ranks
            for w2, c2 in other.terms.items():
                w = Word(self.alphabet, r1 + w2.ranks)
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    del out[w]
            # zero entries can only appear through cancellation above
        p = AssocPoly.__new__(AssocPoly)
        p.alphabet = self.alphabet
        p.terms = {w: _coeff(c) for w, c in out.items()}
        return p

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (
            isinstance(other, AssocPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items_deglex():
            mag = abs(c)
            body = str(w) if mag == 1 else f"{coeff_str(mag)} {w}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"AssocPoly({str(self)})"


def commutator(p, q):
    """pq - qp in the free associative algebra."""
    return p * q - q * p


@lru_cache(maxsize=None)
def expand(t):
    """Expansion of a tree into the free associative algebra via
    (ab) = ab - ba.  Coefficients of a tree expansion are integers."""
    if t.left is None:
        return AssocPoly.monomial(t.word)
    return commutator(expand(t.left), expand(t.right))


def leading_word(p):
    """Deg-lex maximal monomial of an associative polynomial."""
    return p.leading()


class LiePoly:
    """A Lie element in coordinates over the bracketed Lyndon-Shirshov
    basis: a finite mapping from Lyndon-Shirshov words to coefficients."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            if w.alphabet != alphabet:
                raise ValueError("mixed alphabets in polynomial")
            if not is_alsw(w):
                raise ValueError(f"{w!r} is not a Lyndon-Shirshov word")
            c = _coeff(c)
            if c:
                data[w] = c
        self.alphabet = alphabet
        self.terms = data

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def basis(cls, word):
        """The basis element [word]."""
        return cls(word.alphabet, [(word, 1)])

    @classmethod
    def letter(cls, alphabet, symbol):
        return cls.basis(alphabet.word_of([symbol]))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items_deglex(self, reverse=True):
        return sorted(
            self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=reverse
        )

    def leading(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading word")
        w = max(self.terms, key=deglex_key)
        return w, self.terms[w]

    def degree(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(len(w) for w in self.terms)

    def _make(self, terms):
        p = LiePoly.__new__(LiePoly)
        p.alphabet = self.alphabet
        p.terms = terms
        return p

    def __add__(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("mixed alphabets")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = _coeff(s)
            else:
                out.pop(w, None)
        return self._make(out)

    def __neg__(self):
        return self._make({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        if not c:
            return self._make({})
        return self._make({w: _coeff(c * v) for w, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def to_assoc(self):
        """Expand into the free associative algebra."""
        out = AssocPoly.zero(self.alphabet)
        for w, c in self.terms.items():
            out = out + expand(bracket(w)).scale(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LiePoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items_deglex():
            mag = abs(c)
            body = f"[{w}]" if mag == 1 else f"{coeff_str(mag)} [{w}]"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)

    def to_expr_text(self):
        """Render in the expression grammar (parseable round trip).

        The zero element has no bare literal in the grammar, so it is
        rendered as 0 times the smallest letter.
        """
        if not self.terms:
            return f"0*{self.alphabet.letters[0]}"
        parts = []
        for w, c in self.items_deglex():
            tree = str(bracket(w))
            mag = abs(c)
            body = tree if mag == 1 else f"{coeff_str(mag)}*{tree}"
            if not parts:
                parts.append(body if c > 0 else f"-1*{tree}" if mag == 1 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"LiePoly({str(self)})"


def nlsw_decompose(p):
    """Coordinates of an associative polynomial over the bracketed
    Lyndon-Shirshov basis, by greedy triangular extraction.

    Repeatedly strips the leading word u (which must be a Lyndon-Shirshov
    word), subtracting coefficient times the expansion of [u].  The
    remainder reaching zero is exactly membership in the Lie subalgebra;
    otherwise NotLieElementError is raised.
    """
    rem = dict(p.terms)
    out = {}
    while rem:
        w = max(rem, key=deglex_key)
        c = rem[w]
        if not is_alsw(w):
            raise NotLieElementError(
                f"leading word {w} is not a Lyndon-Shirshov word; "
                "input is not a Lie element"
            )
        out[w] = c
        for w2, c2 in expand(bracket(w)).terms.items():
            s = rem.get(w2, 0) - c * c2
            if s:
                rem[w2] = _coeff(s)
            else:
                rem.pop(w2, None)
    return LiePoly(p.alphabet, out)


def lie_bracket(p, q):
    """Lie bracket of two elements in basis coordinates."""
    if p.alphabet != q.alphabet:
        raise ValueError("mixed alphabets")
    return nlsw_decompose(commutator(p.to_assoc(), q.to_assoc()))


def left_pair_expansion(x, u):
    """Rewrite (x [u]), for a letter x dominating every letter of the
    Lyndon-Shirshov word u, as a signed sum of trees of the shape
    ((x y) ...): pairs of x with a single letter, multiplied on the right
    by canonical brackets.  Follows the standard-split recursion; every
    emitted tree has the same letter multiset as xu, and its expansion
    leads with its own leaf word."""
    alphabet = u.alphabet
    xr = alphabet.rank(x)
    if not is_alsw(u):
        raise ValueError(f"{u!r} is not a Lyndon-Shirshov word")
    if any(r >= xr for r in u.ranks):
        raise ValueError(f"{x!r} must dominate every letter of {u!r}")
    if len(u) == 1:
        leaf_x = LieTree.leaf(alphabet, x)
        return [(1, LieTree.pair(leaf_x, LieTree(u, None, None)))]
    v, w = standard_split(u)
    left = left_pair_expansion(x, v)
    right = left_pair_expansion(x, w)
    bw, bv = bracket(w), bracket(v)
    return [(c, LieTree.pair(t, bw)) for c, t in left] + [
        (-c, LieTree.pair(t, bv)) for c, t in right
    ]
