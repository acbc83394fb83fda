"""Compositions, reduction, and bounded Groebner-Shirshov verification.

Everything here is degree-bounded: ambiguities are enumerated up to a
maximum witness length, compositions are reduced with all rewrite steps
strictly below the witness, and a rule set passes when every composition
reduces to zero.  Completion adds monic irreducible remainders until the
bounded check closes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lie import LiePoly, _coeff
from .rules import Rule, normal_s_word
from .words import LESS, Word, compare_deglex, deglex_key, is_alsw


@dataclass(frozen=True)
class Ambiguity:
    """An overlap of two rule leading words.

    inclusion:    w = f.leading = a . g.leading . b
    intersection: w = f.leading . b = a . g.leading, with a proper overlap
    """

    kind: str
    f_index: int
    g_index: int
    f: Rule
    g: Rule
    w: Word
    a: Word
    b: Word


@dataclass(frozen=True)
class ReductionStep:
    rule_index: int
    rule: Rule
    a: Word
    b: Word
    coefficient: object

    @property
    def word(self):
        return self.a + self.rule.leading + self.b


@dataclass
class ReductionTrace:
    """Record of one reduction: input = sum of steps + remainder, with the
    step words strictly decreasing in deg-lex."""

    input: LiePoly
    steps: list
    remainder: LiePoly

    def check_identity(self):
        """Exact soundness: input minus all applied normal s-words equals
        the remainder."""
        acc = self.input
        for st in self.steps:
            acc = acc - normal_s_word(st.a, st.rule, st.b).scale(st.coefficient)
        return acc == self.remainder


def _occurrences(host_ranks, sub_ranks):
    n, k = len(host_ranks), len(sub_ranks)
    return [i for i in range(n - k + 1) if host_ranks[i : i + k] == sub_ranks]


def find_ambiguities(rules, max_deg):
    """All inclusion and intersection ambiguities with witness length at
    most max_deg, sorted by witness (deg-lex), then rule indices."""
    ambs = []
    for fi, f in enumerate(rules):
        fw = f.leading
        for gi, g in enumerate(rules):
            gw = g.leading
            # inclusion: g.leading inside f.leading
            if len(fw) <= max_deg and len(gw) <= len(fw):
                for pos in _occurrences(fw.ranks, gw.ranks):
                    if fi == gi and len(gw) == len(fw):
                        continue  # a rule inside itself at the same spot
                    a = fw[:pos]
                    b = fw[pos + len(gw) :]
                    ambs.append(
                        Ambiguity("inclusion", fi, gi, f, g, fw, a, b)
                    )
            # intersection: proper suffix of f.leading = proper prefix of
            # g.leading; the glued word must itself be Lyndon-Shirshov
            for t in range(1, min(len(fw), len(gw))):
                if fw.ranks[len(fw) - t :] != gw.ranks[:t]:
                    continue
                w = fw + gw[t:]
                if len(w) > max_deg or not is_alsw(w):
                    continue
                a = fw[: len(fw) - t]
                b = gw[t:]
                ambs.append(Ambiguity("intersection", fi, gi, f, g, w, a, b))
    ambs.sort(key=lambda m: (deglex_key(m.w), m.f_index, m.g_index, m.kind, len(m.a)))
    return ambs


def composition(amb):
    """The composition polynomial of an ambiguity; zero or strictly below
    the witness."""
    if amb.kind == "inclusion":
        result = amb.f.body - normal_s_word(amb.a, amb.g, amb.b)
    elif amb.kind == "intersection":
        empty = amb.w.alphabet.empty_word()
        result = normal_s_word(empty, amb.f, amb.b) - normal_s_word(
            amb.a, amb.g, empty
        )
    else:
        raise ValueError(f"malformed ambiguity kind {amb.kind!r}")
    if result:
        lead, _ = result.leading()
        assert compare_deglex(lead, amb.w) == LESS, (
            f"composition at {amb.w} does not drop below the witness"
        )
    return result


def reduce(h, rules, bound=None):
    """Rewrite h modulo the rules until no basis word of the remainder
    contains any rule's leading word.

    Always rewrites the deg-lex greatest reducible word; among matching
    rules the lowest index wins, then the leftmost occurrence.  Each step
    subtracts coefficient times a normal s-word and strictly decreases
    the word being rewritten, so the trace is finite.  With a bound given,
    a step at or above it is an error.
    """
    work = dict(h.terms)
    done = {}
    steps = []
    while work:
        w0 = max(work, key=deglex_key)
        c0 = work[w0]
        hit = None
        for ri, r in enumerate(rules):
            occ = _occurrences(w0.ranks, r.leading.ranks)
            if occ:
                hit = (ri, r, occ[0])
                break
        if hit is None:
            done[w0] = c0
            del work[w0]
            continue
        ri, r, pos = hit
        if bound is not None and compare_deglex(w0, bound) != LESS:
            raise ValueError(f"reduction step at {w0} is not below the bound {bound}")
        a = w0[:pos]
        b = w0[pos + len(r.leading) :]
        nsw = normal_s_word(a, r, b)
        steps.append(ReductionStep(ri, r, a, b, c0))
        for w2, c2 in nsw.terms.items():
            s = work.get(w2, 0) - c0 * c2
            if s:
                work[w2] = _coeff(s)
            else:
                work.pop(w2, None)
    return ReductionTrace(input=h, steps=steps, remainder=LiePoly(h.alphabet, done))


@dataclass
class GsbReport:
    """Outcome of a bounded composition check."""

    ok: bool
    max_deg: int
    ambiguities_checked: int
    failures: list = field(default_factory=list)  # (Ambiguity, remainder) pairs


def is_gsb(rules, max_deg):
    """Check every ambiguity with witness length <= max_deg: the rule set
    passes when all compositions reduce to zero below their witness."""
    failures = []
    ambs = find_ambiguities(rules, max_deg)
    for amb in ambs:
        rem = reduce(composition(amb), rules, bound=amb.w).remainder
        if not rem.is_zero():
            failures.append((amb, rem))
    return GsbReport(
        ok=not failures,
        max_deg=max_deg,
        ambiguities_checked=len(ambs),
        failures=failures,
    )


def complete(rules, max_deg):
    """Bounded completion: repeatedly add the monic remainder of the first
    (in ambiguity order) non-trivial composition until the bounded check
    passes.  Added leading words never contain existing ones, so the loop
    terminates within the finite set of bounded words."""
    current = list(rules)
    while True:
        new_rule = None
        for amb in find_ambiguities(current, max_deg):
            rem = reduce(composition(amb), current, bound=amb.w).remainder
            if not rem.is_zero():
                new_rule = Rule.monic(rem)
                break
        if new_rule is None:
            return current
        current.append(new_rule)
