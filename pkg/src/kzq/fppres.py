"""Finite presentations, Todd-Coxeter enumeration, and the group catalog.

Presentations follow the grammar

    spec    := gens ";" relators
    gens    := name ("," name)*
    relators:= word ("," word)*
    word    := factor ("*" factor)*
    factor  := name ("^" signed-int)?

Coset enumeration is HLT style over the trivial subgroup: relators are
traced at every live coset, gaps are filled by defining cosets in order,
and coincidences are merged through a union-find, so the numbering is
deterministic. The result is the regular permutation representation.
"""

import os
import re
from collections import deque

from .errors import (EnumerationBudgetExceeded, ParseError, UnknownName)
from .perm import Perm, direct_product, group_from_generators

COSET_BUDGET = 100000

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?[0-9]+")


class Presentation:
    """Generator names plus relator words of (generator index, exponent).

    >>> p = parse_presentation("r,s;r^8,r^4*s^-2,s*r*s^-1*r^-7")
    >>> len(p.gens), len(p.relators)
    (2, 3)
    >>> parse_presentation(str(p)) == p
    True
    """

    __slots__ = ("gens", "relators")

    def __init__(self, gens, relators):
        assert len(set(gens)) == len(gens), "duplicate generator names"
        for w in relators:
            assert all(e != 0 for _, e in w)
        self.gens = list(gens)
        self.relators = [list(w) for w in relators]

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.gens == other.gens
                and self.relators == other.relators)

    def __str__(self):
        def word(w):
            parts = []
            for gi, e in w:
                parts.append(self.gens[gi] if e == 1
                             else "%s^%d" % (self.gens[gi], e))
            return "*".join(parts)
        return "%s;%s" % (",".join(self.gens),
                          ",".join(word(w) for w in self.relators))

    def __repr__(self):
        return "Presentation(%r)" % str(self)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        self.skip_ws()
        if self.peek() != ch:
            raise ParseError("unexpected input", position=self.pos,
                             expected=repr(ch))
        self.pos += 1

    def name(self):
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a generator name", position=self.pos,
                             expected="name")
        self.pos = m.end()
        return m.group()

    def integer(self):
        self.skip_ws()
        m = _INT_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", position=self.pos,
                             expected="signed integer")
        self.pos = m.end()
        return int(m.group())

    def done(self):
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_word(sc, gen_index):
    word = []
    while True:
        pos = sc.pos
        nm = sc.name()
        if nm not in gen_index:
            raise ParseError("unknown generator %r" % nm, position=pos,
                             expected="one of %s" % ",".join(sorted(gen_index)))
        e = 1
        if sc.peek() == "^":
            sc.take("^")
            epos = sc.pos
            e = sc.integer()
            if e == 0:
                raise ParseError("zero exponent", position=epos,
                                 expected="nonzero integer")
        word.append((gen_index[nm], e))
        if sc.peek() == "*":
            sc.take("*")
            continue
        return word


def parse_presentation(text):
    """Parse presentation text; ParseError carries position and expectation.

    >>> parse_presentation("a;a^3").relators
    [[(0, 3)]]
    >>> parse_presentation("x;;")
    Traceback (most recent call last):
        ...
    kzq.errors.ParseError: expected a generator name at position 2 (expected name)
    """
    sc = _Scanner(text)
    gens = [sc.name()]
    while sc.peek() == ",":
        sc.take(",")
        gens.append(sc.name())
    sc.take(";")
    gen_index = {nm: i for i, nm in enumerate(gens)}
    if len(gen_index) != len(gens):
        raise ParseError("duplicate generator name", position=0,
                         expected="distinct names")
    relators = []
    if not sc.done():
        relators.append(_parse_word(sc, gen_index))
        while sc.peek() == ",":
            sc.take(",")
            relators.append(_parse_word(sc, gen_index))
    if not sc.done():
        raise ParseError("trailing input", position=sc.pos, expected="end")
    return Presentation(gens, relators)


def parse_generator_map(text, source_names, target_names):
    """Parse "gen=word;gen=word" into {source index: word in target indices}.

    Every source generator must appear exactly once. An empty string is
    allowed only when there are no source generators.

    >>> parse_generator_map("r=a^2;s=a*b", ["r", "s"], ["a", "b"])
    {0: [(0, 2)], 1: [(0, 1), (1, 1)]}
    """
    tgt_index = {nm: i for i, nm in enumerate(target_names)}
    out = {}
    sc = _Scanner(text)
    if not sc.done():
        while True:
            pos = sc.pos
            nm = sc.name()
            if nm not in source_names:
                raise ParseError("unknown source generator %r" % nm,
                                 position=pos,
                                 expected="one of %s" % ",".join(source_names))
            si = source_names.index(nm)
            if si in out:
                raise ParseError("generator %r mapped twice" % nm,
                                 position=pos, expected="fresh name")
            sc.take("=")
            out[si] = _parse_word(sc, tgt_index)
            if sc.peek() == ";":
                sc.take(";")
                continue
            break
        if not sc.done():
            raise ParseError("trailing input", position=sc.pos,
                             expected="end")
    missing = [nm for i, nm in enumerate(source_names) if i not in out]
    if missing:
        raise ParseError("missing image for %s" % ",".join(missing),
                         position=len(text), expected="assignments")
    return out


def _word_to_letters(word):
    # letter 2*i is generator i, letter 2*i+1 its inverse
    letters = []
    for gi, e in word:
        letters.extend([2 * gi] * e if e > 0 else [2 * gi + 1] * (-e))
    # cyclic reduction
    changed = True
    while changed and letters:
        changed = False
        i = 0
        while i + 1 < len(letters):
            if letters[i] ^ 1 == letters[i + 1]:
                del letters[i:i + 2]
                changed = True
            else:
                i += 1
        if len(letters) >= 2 and letters[0] ^ 1 == letters[-1]:
            letters = letters[1:-1]
            changed = True
    return letters


def todd_coxeter(pres, budget=COSET_BUDGET):
    """Enumerate cosets of the trivial subgroup; return the regular rep.

    >>> todd_coxeter(parse_presentation("a;a^3")).order
    3
    >>> todd_coxeter(parse_presentation("r,s;r^8,r^4*s^-2,s*r*s^-1*r^-7")).order
    16
    """
    ngen = len(pres.gens)
    nletters = 2 * ngen
    rel_words = [w for w in (_word_to_letters(r) for r in pres.relators) if w]

    table = [[None] * nletters]
    parent = [0]
    queue = deque()

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def define(c, l):
        if len(table) >= budget:
            raise EnumerationBudgetExceeded(
                "more than %d cosets; group may be infinite" % budget)
        d = len(table)
        table.append([None] * nletters)
        parent.append(d)
        table[c][l] = d
        table[d][l ^ 1] = c
        return d

    def deduce(c, l, d):
        # learn table[c][l] == d, merging if it contradicts known entries
        c, d = find(c), find(d)
        e = table[c][l]
        if e is None:
            table[c][l] = d
            m = table[d][l ^ 1]
            if m is None:
                table[d][l ^ 1] = c
            elif find(m) != c:
                queue.append((find(m), c))
        elif find(e) != d:
            queue.append((find(e), d))

    def merge_all():
        while queue:
            a, b = queue.popleft()
            a, b = find(a), find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            row = table[b]
            for l in range(nletters):
                if row[l] is not None:
                    deduce(a, l, row[l])

    def scan(c, word):
        cur = find(c)
        for idx, l in enumerate(word[:-1]):
            nxt = table[cur][l]
            if nxt is None:
                nxt = define(cur, l)
            cur = find(nxt)
        deduce(cur, word[-1], find(c))
        merge_all()

    c = 0
    while c < len(table):
        if find(c) != c:
            c += 1
            continue
        for w in rel_words:
            scan(c, w)
            if find(c) != c:
                break
        if find(c) == c:
            for l in range(nletters):
                if table[c][l] is None:
                    define(c, l)
        c += 1

    live = [x for x in range(len(table)) if find(x) == x]
    renum = {x: i for i, x in enumerate(live)}
    perms = []
    for gi in range(ngen):
        img = []
        for x in live:
            y = table[x][2 * gi]
            assert y is not None, "incomplete table"
            img.append(renum[find(y)])
        perms.append(Perm(img))
    return group_from_generators(perms, order_bound=max(len(live), 1))


class CatalogGroup:
    """A catalog entry: the group plus its conventional generator names."""

    __slots__ = ("name", "group", "gen_names")

    def __init__(self, name, group, gen_names):
        assert len(gen_names) == len(group.gens)
        self.name = name
        self.group = group
        self.gen_names = list(gen_names)

    def __repr__(self):
        return "<CatalogGroup %s, order %d>" % (self.name, self.group.order)


def bundled_presentation(name):
    """Presentation text for catalog families that have one, else None.

    >>> bundled_presentation("Q16")
    'r,s;r^8,r^4*s^-2,s*r*s^-1*r^-7'
    >>> bundled_presentation("QD32")
    'a,b;a^16,b^2,b*a*b*a^-7'
    """
    m = re.fullmatch(r"C([0-9]+)", name)
    if m:
        return "a;a^%s" % m.group(1)
    m = re.fullmatch(r"D([0-9]+)", name)
    if m and int(m.group(1)) % 2 == 0 and int(m.group(1)) >= 4:
        n = int(m.group(1)) // 2
        return "r,s;r^%d,s^2,r*s*r*s" % n
    m = re.fullmatch(r"Q([0-9]+)", name)
    if m and int(m.group(1)) >= 8 and _is_pow2(int(m.group(1))):
        half = int(m.group(1)) // 2
        return "r,s;r^%d,r^%d*s^-2,s*r*s^-1*r^-%d" % (half, half // 2,
                                                      half - 1)
    m = re.fullmatch(r"QD([0-9]+)", name)
    if m and int(m.group(1)) >= 16 and _is_pow2(int(m.group(1))):
        half = int(m.group(1)) // 2
        return "a,b;a^%d,b^2,b*a*b*a^-%d" % (half, half // 2 - 1)
    if name == "S3":
        return "a,b;a^3,b^2,b*a*b*a"
    if name == "S4":
        return "a,b;a^4,b^2,a*b*a*b*a*b"
    if name == "SG(32,42)":
        return ("r,s,c;r^8,r^4*s^-2,s*r*s^-1*r,"
                "c^2*r^-4,c*r*c^-1*r^-1,c*s*c^-1*s^-1")
    if name == "SG(32,44)":
        return ("r,s,t;r^8,r^4*s^-2,s*r*s^-1*r,"
                "t^2,t*r*t^-1*r^-3,t*s*t^-1*s^-1")
    return None


def _is_pow2(n):
    return n > 0 and n & (n - 1) == 0


def data_dir():
    return os.environ.get("KZQ_DATA_DIR",
                          os.path.join(os.path.dirname(__file__), "data"))


def parse_cycles(text, degree):
    """Permutation from cycle notation like "(0,1,2)(3,4)"; "()" is identity.

    >>> parse_cycles("(0,1)(2,3)", 5).img
    (1, 0, 3, 2, 4)
    """
    cycles = []
    pos = 0
    text = text.strip()
    if text == "()":
        return Perm.identity(degree)
    while pos < len(text):
        if text[pos] != "(":
            raise ParseError("expected a cycle", position=pos, expected="(")
        end = text.find(")", pos)
        if end < 0:
            raise ParseError("unclosed cycle", position=pos, expected=")")
        body = text[pos + 1:end]
        points = tuple(int(p) for p in body.split(","))
        cycles.append(points)
        pos = end + 1
    return Perm.from_cycles(degree, cycles)


def format_cycles(perm):
    cycs = perm.cycles()
    if not cycs:
        return "()"
    return "".join("(%s)" % ",".join(str(p) for p in c) for c in cycs)


def load_catalog_file(path):
    """Parse `group <name> degree=<d> gens=<perm>;<perm>...` lines."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] != "group" or len(parts) != 4:
                raise ParseError("bad catalog line: %r" % line)
            name = parts[1]
            if not parts[2].startswith("degree="):
                raise ParseError("bad catalog line: %r" % line)
            degree = int(parts[2][len("degree="):])
            if not parts[3].startswith("gens="):
                raise ParseError("bad catalog line: %r" % line)
            perms = [parse_cycles(t, degree)
                     for t in parts[3][len("gens="):].split(";")]
            out[name] = perms
    return out


_DEFAULT_GEN_NAMES = ("a", "b", "c", "d", "e", "f")


def _atom(name):
    m = re.fullmatch(r"C([0-9]+)", name)
    if m:
        n = int(m.group(1))
        if n >= 1:
            return CatalogGroup(
                name,
                group_from_generators(
                    [Perm.from_cycles(max(n, 1), [tuple(range(n))]
                                      if n > 1 else [])]),
                ["a"])
    m = re.fullmatch(r"D([0-9]+)", name)
    if m and int(m.group(1)) % 2 == 0 and int(m.group(1)) >= 4:
        n = int(m.group(1)) // 2
        if n == 2:
            gens = [Perm.from_cycles(4, [(0, 1)]),
                    Perm.from_cycles(4, [(2, 3)])]
        else:
            gens = [Perm.from_cycles(n, [tuple(range(n))]),
                    Perm(tuple((n - i) % n for i in range(n)))]
        return CatalogGroup(name, group_from_generators(gens), ["r", "s"])
    if (re.fullmatch(r"Q[0-9]+", name)
            or re.fullmatch(r"QD[0-9]+", name)):
        text = bundled_presentation(name)
        if text is None:
            raise UnknownName("no catalog group named %r" % name)
        pres = parse_presentation(text)
        return CatalogGroup(name, todd_coxeter(pres), pres.gens)
    if name == "S3":
        gens = [Perm.from_cycles(3, [(0, 1, 2)]), Perm.from_cycles(3, [(0, 1)])]
        return CatalogGroup(name, group_from_generators(gens), ["a", "b"])
    if name == "S4":
        gens = [Perm.from_cycles(4, [(0, 1, 2, 3)]),
                Perm.from_cycles(4, [(0, 1)])]
        return CatalogGroup(name, group_from_generators(gens), ["a", "b"])
    if name.startswith("SG("):
        path = os.path.join(data_dir(), "catalog.txt")
        if not os.path.exists(path):
            raise UnknownName("catalog data file missing: %s" % path)
        stored = load_catalog_file(path)
        if name not in stored:
            raise UnknownName("no catalog group named %r" % name)
        perms = stored[name]
        pres_text = bundled_presentation(name)
        names = (parse_presentation(pres_text).gens if pres_text
                 else list(_DEFAULT_GEN_NAMES[:len(perms)]))
        return CatalogGroup(name, group_from_generators(perms), names)
    raise UnknownName("no catalog group named %r" % name)


def catalog(name):
    """Resolve a catalog name, including "x" direct products.

    >>> catalog("S3").group.order
    6
    >>> catalog("Q16xC2").group.order
    32
    >>> catalog("C2xC2").gen_names
    ['a1', 'a2']
    """
    name = name.strip()
    if "x" in name:
        parts = [p.strip() for p in name.split("x")]
        if any(not p for p in parts):
            raise UnknownName("bad product name %r" % name)
        entries = [_atom(p) for p in parts]
        grp = entries[0].group
        for e in entries[1:]:
            grp = direct_product(grp, e.group)
        names = []
        seen = set()
        collide = False
        for e in entries:
            for nm in e.gen_names:
                if nm in seen:
                    collide = True
                seen.add(nm)
        for i, e in enumerate(entries):
            for nm in e.gen_names:
                names.append("%s%d" % (nm, i + 1) if collide else nm)
        return CatalogGroup(name, grp, names)
    return _atom(name)


def resolve_group_spec(spec):
    """Resolve "name:<catalog>" or "pres:<presentation>" to a CatalogGroup.

    >>> resolve_group_spec("name:C4").group.order
    4
    >>> resolve_group_spec("pres:a;a^5").group.order
    5
    """
    if spec.startswith("name:"):
        return catalog(spec[len("name:"):])
    if spec.startswith("pres:"):
        pres = parse_presentation(spec[len("pres:"):])
        return CatalogGroup(spec, todd_coxeter(pres), pres.gens)
    raise ParseError("group spec must start with name: or pres:",
                     position=0, expected="name: or pres:")


def evaluate_word_map(gen_map, catgroup):
    """Generator images (as Perms in catgroup) from a parsed generator map."""
    out = []
    G = catgroup.group
    for si in range(len(gen_map)):
        p = Perm.identity(G.degree)
        for gi, e in gen_map[si]:
            g = G.gens[gi]
            step = g if e > 0 else g.inverse()
            for _ in range(abs(e)):
                p = p * step
        out.append(p)
    return out
