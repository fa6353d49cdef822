"""Quiver presentations and finite-dimensional quotient path algebras.

A presentation names vertices and arrows and lists relations as integer
combinations of composable arrow words (read left to right: in a product
p*q the path p is traversed first, so p*q is nonzero exactly when the
target of p equals the source of q). ``build_algebra`` turns a presentation
over a field into a concrete multiplication table on a normal-form basis.

Basis construction is truncated linear algebra rather than noncommutative
Groebner completion: span the path words up to a working length, row-reduce
the span of all shifts of the relations that fit, and read the normal words
off the complement of the leading terms. Words are ordered by length and
then lexicographically in arrow declaration order, so leading terms only
ever rewrite a word into strictly smaller ones. The working length grows
until the normal-form basis stops changing and is short enough that every
product of two basis words sits well inside the trusted range.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exact_linalg import Field, SpanTracker, row_reduce


class ParseError(ValueError):
    """Presentation text rejected; carries the 1-based source line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BuildError(ValueError):
    """Presentation parsed but no valid finite-dimensional table exists."""


_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_IDEMPOTENT_RE = re.compile(r"e\(([A-Za-z0-9_]+)\)\Z")
_INT_RE = re.compile(r"-?[0-9]+\Z")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """Finite quiver: vertex names plus named arrows between them."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex name")
        self.vertex_rank = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_by_name = {}
        for a in self.arrows:
            if a.name in self.arrow_by_name:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            if a.source not in self.vertex_rank or a.target not in self.vertex_rank:
                raise ValueError(f"arrow {a.name!r} references unknown vertex")
            self.arrow_by_name[a.name] = a
        self.arrow_rank = {a.name: i for i, a in enumerate(self.arrows)}
        self._arrows_from = {v: tuple(a for a in self.arrows if a.source == v)
                             for v in self.vertices}

    def arrows_from(self, vertex):
        return self._arrows_from[vertex]

    def word_target(self, key) -> str:
        source, word = key
        if not word:
            return source
        return self.arrow_by_name[word[-1]].target

    def word_key(self, key):
        """Sort key: length, then lex in arrow declaration order."""
        source, word = key
        return (len(word), tuple(self.arrow_rank[n] for n in word),
                self.vertex_rank[source])

    def format_word(self, key) -> str:
        """Render a path word, collapsing runs of one arrow with '^'."""
        source, word = key
        if not word:
            return f"e({source})"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
            i = j
        return "*".join(parts)


class FreeElement:
    """Integer combination of composable path words in the free path algebra.

    Terms map ``(source_vertex, word)`` to an integer coefficient; the word
    is a tuple of arrow names whose consecutive endpoints match. Coefficients
    stay in ZZ and are interpreted in a field only when a table needs them,
    so one element serves every characteristic.
    """

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: Quiver, terms=None):
        self.quiver = quiver
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, quiver: Quiver) -> "FreeElement":
        return cls(quiver)

    @classmethod
    def idempotent(cls, quiver: Quiver, vertex: str) -> "FreeElement":
        if vertex not in quiver.vertex_rank:
            raise ValueError(f"unknown vertex {vertex!r}")
        return cls(quiver, {(vertex, ()): 1})

    @classmethod
    def path(cls, quiver: Quiver, names, coeff: int = 1) -> "FreeElement":
        names = tuple(names)
        if not names:
            raise ValueError("empty path needs a vertex; use idempotent()")
        at = None
        for n in names:
            a = quiver.arrow_by_name.get(n)
            if a is None:
                raise ValueError(f"unknown arrow {n!r}")
            if at is not None and at != a.source:
                raise ValueError(f"arrows do not compose at {n!r}")
            at = a.target
        return cls(quiver, {(quiver.arrow_by_name[names[0]].source, names): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: int) -> "FreeElement":
        return FreeElement(self.quiver, {k: c * v for k, v in self.terms.items()})

    def __neg__(self) -> "FreeElement":
        return self.scale(-1)

    def __add__(self, other: "FreeElement") -> "FreeElement":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return FreeElement(self.quiver, terms)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        quiver = self.quiver
        terms: dict = {}
        for (s1, w1), c1 in self.terms.items():
            t1 = quiver.word_target((s1, w1))
            for (s2, w2), c2 in other.terms.items():
                if s2 != t1:
                    continue
                k = (s1, w1 + w2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return FreeElement(quiver, terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FreeElement) and other.quiver is self.quiver
                and other.terms == self.terms)

    def source_target(self):
        """(source, target) shared by all terms, or None when mixed or zero."""
        pair = None
        for key in self.terms:
            st = (key[0], self.quiver.word_target(key))
            if pair is None:
                pair = st
            elif pair != st:
                return None
        return pair

    def is_uniform(self) -> bool:
        return bool(self.terms) and self.source_target() is not None

    def uniform_components(self) -> list:
        """Split into pieces with a single (source, target) each."""
        groups: dict = {}
        for key, c in self.terms.items():
            st = (key[0], self.quiver.word_target(key))
            groups.setdefault(st, {})[key] = c
        rank = self.quiver.vertex_rank
        out = []
        for st in sorted(groups, key=lambda p: (rank[p[0]], rank[p[1]])):
            out.append(FreeElement(self.quiver, groups[st]))
        return out

    def max_term_length(self) -> int:
        return max((len(w) for (_, w) in self.terms), default=0)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=self.quiver.word_key)
        chunks = []
        for k in keys:
            c = self.terms[k]
            word = self.quiver.format_word(k)
            if c == 1:
                body = word
            elif c == -1:
                body = f"-{word}"
            else:
                body = f"{c}*{word}"
            chunks.append(body)
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"FreeElement({self.pretty()})"


@dataclass(frozen=True)
class QuiverPresentation:
    quiver: Quiver
    relations: tuple


def _split_terms(expr: str, line: int):
    """Break a relation expression into (sign, chunk) pieces."""
    expr = expr.replace("−", "-")
    pieces = []
    sign = 1
    buf = ""
    for ch in expr:
        if ch in "+-":
            if buf.strip():
                pieces.append((sign, buf))
                buf = ""
                sign = 1 if ch == "+" else -1
            elif ch == "-":
                sign = -sign
        else:
            buf += ch
    if buf.strip():
        pieces.append((sign, buf))
    if not pieces:
        raise ParseError("empty relation", line)
    return pieces


def _parse_term(quiver: Quiver, sign: int, chunk: str, line: int) -> FreeElement:
    factors = [f.strip() for f in chunk.split("*")]
    if any(not f for f in factors):
        raise ParseError(f"empty factor in term {chunk.strip()!r}", line)
    coeff = sign
    source = None
    word: list = []

    def at_vertex():
        return quiver.word_target((source, tuple(word)))

    for f in factors:
        if _INT_RE.match(f):
            coeff *= int(f)
            continue
        m = _IDEMPOTENT_RE.match(f)
        if m:
            v = m.group(1)
            if v not in quiver.vertex_rank:
                raise ParseError(f"unknown vertex {v!r}", line)
            if source is None:
                source = v
            elif at_vertex() != v:
                raise ParseError(
                    f"factors do not compose in term {chunk.strip()!r}", line)
            continue
        arrow = quiver.arrow_by_name.get(f)
        if arrow is None:
            raise ParseError(f"unknown arrow {f!r}", line)
        if source is None:
            source = arrow.source
        elif at_vertex() != arrow.source:
            raise ParseError(
                f"factors do not compose in term {chunk.strip()!r}", line)
        word.append(f)
    if source is None:
        raise ParseError(f"term {chunk.strip()!r} has no path factor", line)
    return FreeElement(quiver, {(source, tuple(word)): coeff})


def parse_presentation(text: str) -> QuiverPresentation:
    """Parse presentation source text.

    Format, one directive per line ('#' starts a comment):
        vertices: v1 v2 ...
        arrow: name: src -> tgt
        relation: c1*w1 + c2*w2 ...
    Words are '*'-joined arrow names read left to right; integer coefficients
    are optional '*'-factors; vertex idempotents are written e(v).

    Raises:
        ParseError: on unknown names, malformed directives, non-composable
            words, or relations that are zero or not uniform. The error
            carries the offending line number.
    """
    vertices: list[str] = []
    arrow_list: list[Arrow] = []
    relation_lines: list[tuple[int, str]] = []
    seen_vertices: set[str] = set()
    seen_arrows: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        head, _, rest = stripped.partition(":")
        head = head.strip()
        if head == "vertices":
            for v in rest.split():
                if not _NAME_RE.match(v):
                    raise ParseError(f"bad vertex name {v!r}", lineno)
                if v in seen_vertices:
                    raise ParseError(f"duplicate vertex {v!r}", lineno)
                seen_vertices.add(v)
                vertices.append(v)
        elif head == "arrow":
            name, _, ends = rest.strip().partition(":")
            name = name.strip()
            if not _NAME_RE.match(name):
                raise ParseError(f"bad arrow name {name!r}", lineno)
            if _INT_RE.match(name):
                raise ParseError(f"arrow name {name!r} looks like an integer",
                                 lineno)
            if name in seen_arrows:
                raise ParseError(f"duplicate arrow {name!r}", lineno)
            src, sep, tgt = ends.partition("->")
            src, tgt = src.strip(), tgt.strip()
            if not sep or not src or not tgt:
                raise ParseError("arrow needs 'src -> tgt'", lineno)
            for v in (src, tgt):
                if v not in seen_vertices:
                    raise ParseError(f"unknown vertex {v!r}", lineno)
            seen_arrows.add(name)
            arrow_list.append(Arrow(name, src, tgt))
        elif head == "relation":
            if not rest.strip():
                raise ParseError("empty relation", lineno)
            relation_lines.append((lineno, rest))
        else:
            raise ParseError(
                f"unknown directive {head!r} "
                "(expected 'vertices:', 'arrow:', or 'relation:')", lineno)

    if not vertices:
        raise ParseError("no vertices declared")
    quiver = Quiver(vertices, arrow_list)

    relations = []
    for lineno, expr in relation_lines:
        element = FreeElement.zero(quiver)
        for sign, chunk in _split_terms(expr, lineno):
            element = element + _parse_term(quiver, sign, chunk, lineno)
        if element.is_zero():
            raise ParseError("relation is identically zero", lineno)
        if not element.is_uniform():
            raise ParseError(
                "relation is not uniform (terms have mixed endpoints)", lineno)
        relations.append(element)
    return QuiverPresentation(quiver, tuple(relations))


PRESETS = {
    # Two vertices, a loop at the first, and a pair of opposite arrows.
    # The loop squares to the length-four cycle through both vertices.
    "hecke_s4_qm1": """\
vertices: 1 2
arrow: eps: 1 -> 1
arrow: alpha: 1 -> 2
arrow: beta: 2 -> 1
relation: eps*alpha
relation: beta*eps
relation: alpha*beta*alpha*beta - eps*eps
""",
}


def preset_presentation(name: str) -> QuiverPresentation:
    try:
        source = PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValueError(f"unknown preset {name!r} (available: {known})") from None
    return parse_presentation(source)


def _words_up_to(quiver: Quiver, length: int):
    words = [(v, ()) for v in quiver.vertices]
    frontier = list(words)
    for _ in range(length):
        nxt = []
        for source, word in frontier:
            at = quiver.word_target((source, word))
            for a in quiver.arrows_from(at):
                nxt.append((source, word + (a.name,)))
        if not nxt:
            break
        words.extend(nxt)
        frontier = nxt
    return words


def _truncated_normal_words(quiver, relations, field: Field, length: int):
    """Normal words and leading-term rows for the ideal, truncated at length.

    Returns (normal, pivots, col_to_key, key_to_col) where normal is in
    ascending canonical order and pivots maps a column index (descending
    word order, so pivots are maximal words) to its reduced row.
    """
    words = sorted(_words_up_to(quiver, length), key=quiver.word_key,
                   reverse=True)
    key_to_col = {k: i for i, k in enumerate(words)}

    by_target: dict = {}
    by_source: dict = {}
    for key in words:
        by_source.setdefault(key[0], []).append(key)
        by_target.setdefault(quiver.word_target(key), []).append(key)

    rows = []
    seen = set()
    for rel in relations:
        src, tgt = rel.source_target()
        widest = rel.max_term_length()
        for us, uw in by_target.get(src, ()):
            room = length - widest - len(uw)
            if room < 0:
                continue
            for vs, vw in by_source.get(tgt, ()):
                if len(vw) > room:
                    continue
                row: dict = {}
                for (_, rw), c in rel.terms.items():
                    col = key_to_col[(us, uw + rw + vw)]
                    nv = field.add(row.get(col, field.zero()), field.of(c))
                    if field.is_zero(nv):
                        row.pop(col, None)
                    else:
                        row[col] = nv
                if not row:
                    continue
                sig = tuple(sorted(row.items()))
                if sig not in seen:
                    seen.add(sig)
                    rows.append(row)
    rows.sort(key=len)  # single-term rows first: instant pivots
    pivots = row_reduce(rows, field, reduced=True)
    normal = [k for k in reversed(words) if key_to_col[k] not in pivots]
    return normal, pivots, words, key_to_col


def build_algebra(presentation: QuiverPresentation, field: Field) -> "AlgebraTable":
    """Construct the quotient algebra's basis and multiplication table.

    The ideal must be admissible (all relation terms at least two arrows
    long) and the quotient finite dimensional. Raises BuildError otherwise,
    the latter detected as the normal-form basis failing to stabilize below
    a length bound of 2 * (arrows + relations + 4).
    """
    quiver = presentation.quiver
    relations = presentation.relations
    for rel in relations:
        if any(len(w) < 2 for (_, w) in rel.terms):
            raise BuildError(
                f"ideal not admissible: relation {rel.pretty()} has a term "
                "shorter than two arrows")

    max_rel_len = max((rel.max_term_length() for rel in relations), default=2)
    cap = 2 * (len(quiver.arrows) + len(relations) + 4)
    length = max_rel_len + 2
    prev_basis = None
    while True:
        if length > cap:
            raise BuildError(
                f"normal-form basis failed to stabilize below length {cap}; "
                "the quotient is infinite dimensional or the ideal needs a "
                "longer completion than this construction supports")
        normal, pivots, words, key_to_col = _truncated_normal_words(
            quiver, relations, field, length)
        trusted = [k for k in normal if len(k[1]) <= length - max_rel_len]
        longest = max(len(w) for (_, w) in trusted)
        if prev_basis == trusted and 2 * longest + max_rel_len <= length:
            break
        prev_basis = trusted
        length += 1

    return AlgebraTable(quiver, relations, field, trusted, pivots, words,
                        key_to_col)


class AlgebraElement:
    """Element of a built algebra: sparse coefficients over the basis."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: "AlgebraTable", coeffs=None):
        self.table = table
        field = table.field
        self.coeffs = {i: field.of(c) for i, c in (coeffs or {}).items()
                       if not field.is_zero(field.of(c))}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        field = self.table.field
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = field.add(coeffs.get(i, field.zero()), c)
        return AlgebraElement(self.table, coeffs)

    def __neg__(self) -> "AlgebraElement":
        field = self.table.field
        return AlgebraElement(self.table,
                              {i: field.neg(c) for i, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self.table.multiply(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and other.table is self.table
                and other.coeffs == self.coeffs)

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            word = self.table.path_str(i)
            if c == 1:
                chunks.append(word)
            elif c == -1:
                chunks.append(f"-{word}")
            else:
                chunks.append(f"{c}*{word}")
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"AlgebraElement({self.pretty()})"


class AlgebraTable:
    """Immutable multiplication table of a finite-dimensional path algebra.

    basis: normal-form path words in canonical order (length, then lex in
    arrow declaration order). mult holds, for each ordered basis pair, the
    product expanded over the basis as a sparse dict. All queries are pure;
    nothing here mutates after construction.
    """

    def __init__(self, quiver, relations, field, basis, pivots, words,
                 key_to_col):
        self.quiver = quiver
        self.relations = relations
        self.field = field
        self.basis = list(basis)
        self.dim = len(basis)
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.idempotent_index = {}
        for v in quiver.vertices:
            idx = self.index.get((v, ()))
            if idx is None:
                raise BuildError(f"idempotent e({v}) not in normal form")
            self.idempotent_index[v] = idx
        self.arrow_index = {}
        for a in quiver.arrows:
            idx = self.index.get((a.source, (a.name,)))
            if idx is None:
                raise BuildError(
                    f"arrow {a.name} not in normal form; ideal not admissible")
            self.arrow_index[a.name] = idx

        self.mult = self._build_mult(pivots, words, key_to_col)
        self._check_associative()
        self._check_identity()
        self._check_relations_vanish()

        self.radical_indices = tuple(i for i, (_, w) in enumerate(self.basis)
                                     if len(w) >= 1)
        self.radical_power_dims = self._radical_power_dims()
        self.radical_degree = len(self.radical_power_dims) + 1

        self._slices = {}
        for i, (s, w) in enumerate(self.basis):
            t = quiver.word_target((s, w))
            self._slices.setdefault((s, t), []).append(i)
        self._center = None

    # -- construction ------------------------------------------------

    def _build_mult(self, pivots, words, key_to_col):
        field = self.field
        one = field.one()
        mult = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for i, (s1, w1) in enumerate(self.basis):
            t1 = self.quiver.word_target((s1, w1))
            for j, (s2, w2) in enumerate(self.basis):
                if s2 != t1:
                    continue
                key = (s1, w1 + w2)
                hit = self.index.get(key)
                if hit is not None:
                    mult[i][j] = {hit: one}
                    continue
                row = pivots.get(key_to_col[key])
                if row is None:
                    raise BuildError(
                        f"product word {self.quiver.format_word(key)} escaped "
                        "the reduction range")
                out = {}
                for col, c in row.items():
                    tail = words[col]
                    if tail == key:
                        continue
                    k = self.index.get(tail)
                    if k is None:
                        raise BuildError(
                            f"reduction of {self.quiver.format_word(key)} "
                            "left the basis range")
                    out[k] = field.neg(c)
                mult[i][j] = out
        return mult

    def _check_associative(self):
        field = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    left: dict = {}
                    for t, c in ij.items():
                        for r, d in self.mult[t][k].items():
                            nv = field.add(left.get(r, field.zero()),
                                           field.mul(c, d))
                            if field.is_zero(nv):
                                left.pop(r, None)
                            else:
                                left[r] = nv
                    right: dict = {}
                    for t, c in self.mult[j][k].items():
                        for r, d in self.mult[i][t].items():
                            nv = field.add(right.get(r, field.zero()),
                                           field.mul(c, d))
                            if field.is_zero(nv):
                                right.pop(r, None)
                            else:
                                right[r] = nv
                    if left != right:
                        raise BuildError(
                            f"multiplication not associative at basis triple "
                            f"({i}, {j}, {k})")

    def _check_identity(self):
        one = self.field.one()
        for b in range(self.dim):
            left: dict = {}
            right: dict = {}
            for v, e in self.idempotent_index.items():
                for r, c in self.mult[e][b].items():
                    left[r] = self.field.add(left.get(r, self.field.zero()), c)
                for r, c in self.mult[b][e].items():
                    right[r] = self.field.add(right.get(r, self.field.zero()), c)
            left = {r: c for r, c in left.items() if not self.field.is_zero(c)}
            right = {r: c for r, c in right.items() if not self.field.is_zero(c)}
            if left != {b: one} or right != {b: one}:
                raise BuildError("sum of idempotents is not the identity")

    def _check_relations_vanish(self):
        for rel in self.relations:
            if not self.reduce(rel).is_zero():
                raise BuildError(
                    f"relation {rel.pretty()} does not vanish in the quotient")

    def _radical_power_dims(self):
        dims = []
        current = [{i: self.field.one()} for i in self.radical_indices]
        while True:
            tracker = SpanTracker(self.field)
            for vec in current:
                tracker.add(vec)
            span = list(tracker.pivots.values())
            if not span:
                break
            dims.append(len(span))
            nxt = []
            for vec in span:
                for r in self.radical_indices:
                    prod: dict = {}
                    for i, c in vec.items():
                        for k, d in self.mult[i][r].items():
                            nv = self.field.add(prod.get(k, self.field.zero()),
                                                self.field.mul(c, d))
                            if self.field.is_zero(nv):
                                prod.pop(k, None)
                            else:
                                prod[k] = nv
                    if prod:
                        nxt.append(prod)
            current = nxt
        return dims

    # -- queries -----------------------------------------------------

    def source_of(self, i: int) -> str:
        return self.basis[i][0]

    def target_of(self, i: int) -> str:
        return self.quiver.word_target(self.basis[i])

    def path_str(self, i: int) -> str:
        return self.quiver.format_word(self.basis[i])

    def mult_index(self, i: int, j: int) -> dict:
        """Raw product of basis elements i and j as a sparse coeff dict."""
        return self.mult[i][j]

    def element(self, coeffs=None) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {i: self.field.one()})

    def idempotent(self, vertex: str) -> AlgebraElement:
        return self.basis_element(self.idempotent_index[vertex])

    def identity(self) -> AlgebraElement:
        one = self.field.one()
        return AlgebraElement(self, {i: one
                                     for i in self.idempotent_index.values()})

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.table is not self or y.table is not self:
            raise ValueError("elements belong to a different table")
        field = self.field
        out: dict = {}
        for i, c in x.coeffs.items():
            for j, d in y.coeffs.items():
                cd = field.mul(c, d)
                for k, e in self.mult[i][j].items():
                    nv = field.add(out.get(k, field.zero()), field.mul(cd, e))
                    if field.is_zero(nv):
                        out.pop(k, None)
                    else:
                        out[k] = nv
        return AlgebraElement(self, out)

    def reduce(self, x: FreeElement) -> AlgebraElement:
        """Image of a free-algebra element, by folding words left to right."""
        if x.quiver is not self.quiver:
            raise ValueError("element belongs to a different quiver")
        field = self.field
        total: dict = {}
        for (source, word), c in x.terms.items():
            cur = {self.idempotent_index[source]: field.one()}
            for name in word:
                a = self.arrow_index[name]
                nxt: dict = {}
                for i, ci in cur.items():
                    for k, d in self.mult[i][a].items():
                        nv = field.add(nxt.get(k, field.zero()),
                                       field.mul(ci, d))
                        if field.is_zero(nv):
                            nxt.pop(k, None)
                        else:
                            nxt[k] = nv
                cur = nxt
                if not cur:
                    break
            fc = field.of(c)
            for i, ci in cur.items():
                nv = field.add(total.get(i, field.zero()), field.mul(fc, ci))
                if field.is_zero(nv):
                    total.pop(i, None)
                else:
                    total[i] = nv
        return AlgebraElement(self, total)

    def slice_indices(self, src: str, tgt: str) -> tuple:
        """Basis indices of e_src A e_tgt (paths src -> tgt)."""
        return tuple(self._slices.get((src, tgt), ()))

    def slice_dims(self) -> list:
        vs = self.quiver.vertices
        return [[len(self.slice_indices(a, b)) for b in vs] for a in vs]

    def right_indices(self, vertex: str) -> tuple:
        """Basis indices of the right projective e_vertex A."""
        return tuple(i for i in range(self.dim) if self.source_of(i) == vertex)

    def left_indices(self, vertex: str) -> tuple:
        """Basis indices of the left projective A e_vertex."""
        return tuple(i for i in range(self.dim) if self.target_of(i) == vertex)

    def center(self) -> list:
        """Basis of {z : zb = bz for all b}, via the commutator kernel."""
        if self._center is None:
            from .exact_linalg import LinearMap

            n = self.dim
            commutator = LinearMap(self.field, n, n * n)
            for j in range(n):
                for b in range(n):
                    for r, c in self.mult[j][b].items():
                        commutator.add_entry(b * n + r, j, c)
                    for r, c in self.mult[b][j].items():
                        commutator.add_entry(b * n + r, j, self.field.neg(c))
            self._center = [AlgebraElement(self, vec)
                            for vec in commutator.kernel_basis()]
        return self._center

    def __repr__(self) -> str:
        return (f"AlgebraTable(dim={self.dim}, vertices={len(self.quiver.vertices)}, "
                f"field={self.field!r})")
