"""Diamond-Lemma engine: rule orientation, overlap completion up to a degree
bound, normal-form enumeration, graded dimensions and PBW certification.

Rules are oriented by the alphabet's (weighted degree, leftmost-lex) order;
the right-hand side of every rule precedes its leading word, which also
covers inhomogeneous presentations whose relations mix degrees (liftings),
since the per-generator weights are chosen so every printed relation
orients with the printed PBW monomials as normal forms.

Completion processes every overlap ambiguity of total degree <= bound in a
fixed deterministic order; if no overlap exceeded the bound the system is
*saturated* and its normal forms are an exact linear basis.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .exact import Scalar, ONE
from .freealg import Alphabet, NcPoly


class UnitCollapse(Exception):
    """Completion derived 1 = 0: the presentation is inconsistent."""


class NotCompleted(Exception):
    """Operation requires a saturated completion."""


@dataclass(frozen=True)
class PbwPattern:
    """Ordered PBW generators with heights: monomials g1^{e1}...gk^{ek},
    0 <= ei < height_i, read as concatenated words."""

    factors: tuple  # of (word, height)

    def expand(self):
        """All pattern monomials as words, deterministic order."""
        ranges = [range(h) for _, h in self.factors]
        words = []
        for exps in itertools.product(*ranges):
            w = ()
            for (factor, _), e in zip(self.factors, exps):
                w = w + factor * e
            words.append(w)
        return words

    def count(self) -> int:
        n = 1
        for _, h in self.factors:
            n *= h
        return n

    def render(self, alphabet: Alphabet) -> str:
        parts = []
        for word, h in self.factors:
            body = "*".join(alphabet.names[g] for g in word)
            if len(word) > 1:
                body = f"({body})"
            parts.append(f"{body}:{h}")
        return " ".join(parts)

    @staticmethod
    def parse(alphabet: Alphabet, text: str) -> "PbwPattern":
        factors = []
        for chunk in text.split():
            body, _, height = chunk.rpartition(":")
            if not body:
                raise ValueError(f"bad pbw factor {chunk!r}")
            body = body.strip()
            if body.startswith("(") and body.endswith(")"):
                body = body[1:-1]
            word = tuple(alphabet.index(name) for name in body.split("*"))
            factors.append((word, int(height)))
        return PbwPattern(tuple(factors))


@dataclass
class Presentation:
    """Generators, relations and the declared monomial order of one algebra."""

    alphabet: Alphabet
    relations: list
    order: str = ""
    expected_dim: int | None = None
    expected_pbw: PbwPattern | None = None
    name: str = ""
    seeds: list = field(default_factory=list)

    def all_relations(self):
        return list(self.relations) + list(self.seeds)


class RewriteSystem:
    """A completed (up to a bound) rewriting system for one presentation."""

    def __init__(self, alphabet: Alphabet, degree_bound: int):
        self.alphabet = alphabet
        self.degree_bound = degree_bound
        self.rules = {}              # leading word -> NcPoly right-hand side
        self.saturated = False
        self.complete_up_to = 0
        self.overlaps_checked = []   # (lead1, lead2, shift, overlap word)
        self.overlaps_deferred = 0
        self._lengths = []
        self._nf_cache = {}
        self._norms_by_degree = None

    # -- reduction -----------------------------------------------------------

    def _rules_changed(self):
        self._lengths = sorted({len(w) for w in self.rules})
        self._nf_cache.clear()
        self._norms_by_degree = None

    def find_redex(self, word):
        """Leftmost, then shortest, occurrence of a rule's leading word."""
        n = len(word)
        for pos in range(n):
            for length in self._lengths:
                if pos + length > n:
                    break
                if word[pos:pos + length] in self.rules:
                    return pos, word[pos:pos + length]
        return None

    def reduce_terms(self, terms: dict) -> dict:
        """Fully reduce a coefficient dict; deterministic (largest word first)."""
        key = self.alphabet.key
        work = dict(terms)
        out = {}
        heap = [(-key(w)[0], tuple(-g for g in w), w) for w in work]
        heapq.heapify(heap)
        while heap:
            _, _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None or not c:
                continue
            hit = self.find_redex(w)
            if hit is None:
                acc = out.get(w)
                s = acc + c if acc is not None else c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
                continue
            pos, lead = hit
            prefix, suffix = w[:pos], w[pos + len(lead):]
            for w2, c2 in self.rules[lead].terms.items():
                nw = prefix + w2 + suffix
                add = c * c2
                acc = work.get(nw)
                s = acc + add if acc is not None else add
                if s:
                    if acc is None:
                        heapq.heappush(heap, (-key(nw)[0], tuple(-g for g in nw), nw))
                    work[nw] = s
                else:
                    work.pop(nw, None)
        return out

    def reduce(self, poly: NcPoly) -> NcPoly:
        out = NcPoly(self.alphabet)
        out.terms = self.reduce_terms(poly.terms)
        return out

    def reduce_word(self, word) -> dict:
        """Normal form of a single word, memoized (valid while rules are frozen)."""
        cached = self._nf_cache.get(word)
        if cached is None:
            cached = self.reduce_terms({word: ONE})
            self._nf_cache[word] = cached
        return cached

    # -- normal forms ----------------------------------------------------------

    def is_normal(self, word) -> bool:
        return self.find_redex(word) is None

    def normal_forms_by_degree(self):
        """Normal words per degree, built by right-extension of normal words."""
        if self._norms_by_degree is None:
            ab = self.alphabet
            norms = {0: [()]}
            lengths = self._lengths
            rules = self.rules
            for d in range(1, self.degree_bound + 1):
                found = []
                for g in range(len(ab)):
                    dg = ab.degrees[g]
                    if d - dg < 0:
                        continue
                    for w in norms.get(d - dg, ()):
                        nw = w + (g,)
                        n = len(nw)
                        reducible = False
                        for length in lengths:
                            if length > n:
                                break
                            if nw[n - length:] in rules:
                                reducible = True
                                break
                        if not reducible:
                            found.append(nw)
                found.sort()
                norms[d] = found
            self._norms_by_degree = norms
        return self._norms_by_degree

    def hilbert_series(self):
        """Normal-form counts per degree, 0..degree_bound."""
        if not self.saturated:
            raise NotCompleted("hilbert_series needs a saturated completion")
        norms = self.normal_forms_by_degree()
        return [len(norms[d]) for d in range(self.degree_bound + 1)]

    def dimension(self):
        """Total normal-form count, or ('at_least', n) if the bound was hit.

        Counts are exact because saturation is required; finiteness is
        certified by a window of max-generator-degree consecutive zero
        counts (the normal language is closed under prefixes, so no normal
        word can exist beyond such a window).
        """
        if not self.saturated:
            raise NotCompleted("dimension needs a saturated completion")
        counts = [len(ws) for ws in
                  (self.normal_forms_by_degree()[d] for d in range(self.degree_bound + 1))]
        window = max(self.alphabet.degrees)
        run = 0
        for d in range(1, len(counts)):
            run = run + 1 if counts[d] == 0 else 0
            if run >= window:
                return sum(counts[:d + 1])
        return ("at_least", sum(counts))

    def normal_words(self):
        dim = self.dimension()
        if not isinstance(dim, int):
            raise NotCompleted("normal form set is not certified finite")
        norms = self.normal_forms_by_degree()
        out = []
        for d in range(self.degree_bound + 1):
            out.extend(norms[d])
        return out

    def pbw_check(self, pattern: PbwPattern) -> bool:
        """True iff the normal-form set equals the pattern's monomials as word sets."""
        expected = pattern.expand()
        if len(set(expected)) != len(expected):
            return False
        return set(expected) == set(self.normal_words())

    # -- confluence -----------------------------------------------------------

    def check_confluence(self) -> bool:
        """Re-reduce every recorded overlap both ways and compare."""
        for lead1, lead2, shift, _word in self.overlaps_checked:
            if lead1 not in self.rules or lead2 not in self.rules:
                continue
            left = NcPoly(self.alphabet, dict(self.rules[lead1].terms)) * \
                NcPoly.word(self.alphabet, lead2[shift:])
            right = NcPoly.word(self.alphabet, lead1[:len(lead1) - shift]) * \
                NcPoly(self.alphabet, dict(self.rules[lead2].terms))
            if self.reduce(left) != self.reduce(right):
                return False
        return True

    def check_idempotent(self, words) -> bool:
        for w in words:
            once = self.reduce_terms({w: ONE})
            again = self.reduce_terms(once)
            if once != again:
                return False
        return True

    def canonical_rules(self):
        """Rules with right-hand sides fully reduced, for system comparison."""
        out = {}
        for lead in sorted(self.rules, key=self.alphabet.key):
            out[lead] = self.reduce(self.rules[lead])
        return out

    def render_rules(self):
        lines = []
        for lead in sorted(self.rules, key=self.alphabet.key):
            lines.append(f"{self.alphabet.render_word(lead)} -> "
                         f"{self.rules[lead].render()}")
        return lines


def _orient(rs: RewriteSystem, poly: NcPoly):
    """Reduce, then orient into (lead, rhs); None if redundant."""
    poly = rs.reduce(poly)
    if poly.is_zero():
        return None
    lead = poly.leading_word()
    if lead == ():
        raise UnitCollapse("presentation collapses: a relation reduces to a nonzero scalar")
    c = poly.terms[lead]
    rhs = NcPoly(rs.alphabet,
                 {w: -(v / c) for w, v in poly.terms.items() if w != lead})
    return lead, rhs


def complete(pres: Presentation, degree_bound: int) -> RewriteSystem:
    """Complete the presentation's rules up to the degree bound.

    Every overlap ambiguity of total degree <= bound is resolved; nonzero
    residuals become new oriented rules.  Deterministic: input relations in
    declared order, then overlaps by (degree, word).
    """
    ab = pres.alphabet
    relations = pres.all_relations()
    maxdeg = max((p.degree() or 0) for p in relations) if relations else 0
    if degree_bound < maxdeg:
        raise ValueError(f"degree bound {degree_bound} below max relation degree {maxdeg}")
    rs = RewriteSystem(ab, degree_bound)
    pending = [p for p in relations if not p.is_zero()]
    overlap_heap = []
    seen_overlaps = set()
    deferred = set()
    seq = itertools.count()

    def queue_overlaps(lead1, lead2):
        for shift in range(1, min(len(lead1), len(lead2))):
            if lead1[len(lead1) - shift:] == lead2[:shift]:
                word = lead1 + lead2[shift:]
                deg = ab.word_degree(word)
                item = (lead1, lead2, shift)
                if item in seen_overlaps:
                    continue
                seen_overlaps.add(item)
                if deg > degree_bound:
                    deferred.add(item)
                    continue
                heapq.heappush(overlap_heap, (deg, word, next(seq), item))

    def add_rule(lead, rhs):
        # evict any rule whose leading word contains the new lead; requeue it
        for other in [w for w in rs.rules if w != lead and _contains(w, lead)]:
            poly = NcPoly.word(ab, other) - rs.rules.pop(other)
            pending.append(poly)
        rs.rules[lead] = rhs
        rs._rules_changed()
        for other in list(rs.rules):
            queue_overlaps(lead, other)
            if other != lead:
                queue_overlaps(other, lead)

    while pending or overlap_heap:
        while pending:
            oriented = _orient(rs, pending.pop(0))
            if oriented:
                add_rule(*oriented)
        if not overlap_heap:
            break
        deg, word, _, (lead1, lead2, shift) = heapq.heappop(overlap_heap)
        if lead1 not in rs.rules or lead2 not in rs.rules:
            continue
        left = rs.rules[lead1] * NcPoly.word(ab, lead2[shift:])
        right = NcPoly.word(ab, lead1[:len(lead1) - shift]) * rs.rules[lead2]
        rs.overlaps_checked.append((lead1, lead2, shift, word))
        oriented = _orient(rs, left - right)
        if oriented:
            add_rule(*oriented)

    rs.overlaps_deferred = sum(1 for (l1, l2, _) in deferred
                               if l1 in rs.rules and l2 in rs.rules)
    rs.saturated = rs.overlaps_deferred == 0
    rs.complete_up_to = degree_bound
    rs._rules_changed()
    return rs


def _contains(word, sub) -> bool:
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))
