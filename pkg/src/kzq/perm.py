"""Permutation groups small enough to enumerate outright.

Products compose left to right: (a * b) means apply a, then b. Element
enumeration is breadth-first over the generators with each level sorted by
image tuple, so element indices are canonical for a fixed generator list.
Every element remembers one defining word in the generators, which is what
makes homomorphism verification cheap.
"""

from math import lcm

from .errors import DegreeMismatch, OrderBoundExceeded

ORDER_BOUND = 4096
ALL_PAIRS_CHECK_BOUND = 512


class Perm:
    """A permutation of {0, ..., n-1} stored as its image tuple.

    >>> a = Perm((1, 2, 0))
    >>> b = Perm((1, 0, 2))
    >>> (a * b).img      # apply a first, then b
    (0, 2, 1)
    >>> a.inverse() * a == Perm.identity(3)
    True
    >>> a.order()
    3
    """

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        assert sorted(img) == list(range(len(img))), "not a permutation"
        self.img = img

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        """Build from disjoint cycles of points.

        >>> Perm.from_cycles(4, [(0, 1, 2)]).img
        (1, 2, 0, 3)
        """
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                assert 0 <= x < n and x not in seen, "cycles overlap"
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    def cycles(self):
        """Nontrivial cycles, each starting at its least point.

        >>> Perm((1, 2, 0, 3, 5, 4)).cycles()
        [(0, 1, 2), (4, 5)]
        """
        seen = set()
        out = []
        for start in range(len(self.img)):
            if start in seen or self.img[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self.img[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.img[x]
            out.append(tuple(cyc))
        return out

    @property
    def degree(self):
        return len(self.img)

    def __mul__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch("degrees %d and %d" % (self.degree,
                                                        other.degree))
        return Perm(other.img[x] for x in self.img)

    def inverse(self):
        out = [0] * self.degree
        for i, x in enumerate(self.img):
            out[x] = i
        return Perm(out)

    def order(self):
        n = 1
        for cyc in self.cycles():
            n = lcm(n, len(cyc))
        return n

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.img))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return "Perm.identity(%d)" % self.degree
        return "Perm%r" % (self.img,)


class Group:
    """A fully enumerated permutation group.

    elements[0] is the identity; element_index maps image tuples back to
    indices; words[i] is one expression of elements[i] as a tuple of
    generator indices.

    >>> G = group_from_generators([Perm((1, 2, 0)), Perm((1, 0, 2))])
    >>> G.order
    6
    >>> G.exponent()
    6
    >>> G.mult(1, 1) == G.element_index[(G.elements[1] * G.elements[1]).img]
    True
    """

    __slots__ = ("gens", "elements", "element_index", "words", "order",
                 "_inverse", "_order_of")

    def __init__(self, gens, elements, words):
        self.gens = list(gens)
        self.elements = list(elements)
        self.words = list(words)
        self.order = len(elements)
        self.element_index = {p.img: i for i, p in enumerate(elements)}
        self._inverse = None
        self._order_of = None

    @property
    def degree(self):
        return self.elements[0].degree

    def mult(self, i, j):
        return self.element_index[(self.elements[i] * self.elements[j]).img]

    def inv(self, i):
        if self._inverse is None:
            self._inverse = [self.element_index[p.inverse().img]
                             for p in self.elements]
        return self._inverse[i]

    def order_of(self, i):
        if self._order_of is None:
            self._order_of = [p.order() for p in self.elements]
        return self._order_of[i]

    def exponent(self):
        e = 1
        for i in range(self.order):
            e = lcm(e, self.order_of(i))
        return e

    def power(self, i, k):
        n = self.order_of(i)
        k %= n
        acc = 0
        for _ in range(k):
            acc = self.mult(acc, i)
        return acc

    def evaluate_word(self, word):
        """Index of the product of generators given by index tuple."""
        p = Perm.identity(self.degree)
        for g in word:
            p = p * self.gens[g]
        return self.element_index[p.img]

    def __repr__(self):
        return "<Group of order %d, degree %d>" % (self.order, self.degree)


def group_from_generators(gens, order_bound=ORDER_BOUND):
    """Enumerate the group generated by permutations, breadth first.

    Levels are sorted by image tuple so the element order is canonical.
    Raises OrderBoundExceeded beyond order_bound elements.

    >>> G = group_from_generators([Perm((1, 0, 2)), Perm((0, 2, 1))])
    >>> G.order
    6
    >>> G.words[0]
    ()
    """
    gens = list(gens)
    assert gens, "need at least one generator"
    n = gens[0].degree
    assert all(g.degree == n for g in gens), "mixed degrees"
    ident = Perm.identity(n)
    elements = [ident]
    words = [()]
    index = {ident.img: 0}
    frontier = [0]
    while frontier:
        new = {}
        for ei in frontier:
            e = elements[ei]
            w = words[ei]
            for gi, g in enumerate(gens):
                p = e * g
                if p.img not in index and p.img not in new:
                    new[p.img] = w + (gi,)
        if len(elements) + len(new) > order_bound:
            raise OrderBoundExceeded("more than %d elements" % order_bound)
        frontier = []
        for img in sorted(new):
            index[img] = len(elements)
            frontier.append(len(elements))
            elements.append(Perm(img))
            words.append(new[img])
    return Group(gens, elements, words)


class ClassData:
    """Conjugacy classes in canonical order.

    Classes sort by (element order, class size, least element index).
    class_of maps element index to class index; power_class follows a class
    representative to the class of its k-th power.

    >>> G = group_from_generators([Perm((1, 2, 0)), Perm((1, 0, 2))])
    >>> cd = conjugacy_classes(G)
    >>> cd.n_classes
    3
    >>> [(cd.orders[c], cd.sizes[c]) for c in range(3)]
    [(1, 1), (2, 3), (3, 2)]
    >>> cd.power_class(2, 2)
    2
    >>> cd.inverse_class(1)
    1
    """

    __slots__ = ("group", "classes", "reps", "sizes", "orders", "class_of",
                 "n_classes")

    def __init__(self, group, classes):
        self.group = group
        self.classes = classes
        self.n_classes = len(classes)
        self.reps = [cls[0] for cls in classes]
        self.sizes = [len(cls) for cls in classes]
        self.orders = [group.order_of(cls[0]) for cls in classes]
        self.class_of = [None] * group.order
        for ci, cls in enumerate(classes):
            for e in cls:
                self.class_of[e] = ci

    def power_class(self, c, k):
        return self.class_of[self.group.power(self.reps[c], k)]

    def inverse_class(self, c):
        return self.class_of[self.group.inv(self.reps[c])]

    def singular_classes(self, p):
        """Indices of classes of elements of order divisible by p."""
        return [c for c in range(self.n_classes) if self.orders[c] % p == 0]

    def regular_classes(self, p):
        return [c for c in range(self.n_classes) if self.orders[c] % p != 0]


def conjugacy_classes(group):
    seen = [False] * group.order
    raw = []
    for start in range(group.order):
        if seen[start]:
            continue
        orbit = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for gi in range(len(group.gens)):
                g = group.element_index[group.gens[gi].img]
                y = group.mult(group.mult(group.inv(g), x), g)
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        orbit = sorted(orbit)
        for x in orbit:
            seen[x] = True
        raw.append(orbit)
    raw.sort(key=lambda cls: (group.order_of(cls[0]), len(cls), cls[0]))
    return ClassData(group, raw)


class GroupHom:
    """Homomorphism defined by generator images, verified on construction.

    Images of all elements come from their stored generator words; the
    check h(x*g) == h(x)*h(g) over every element x and generator g proves
    multiplicativity by induction on word length. Small groups get an
    all-pairs check on top.

    >>> G = group_from_generators([Perm((1, 2, 3, 0))])
    >>> H = group_from_generators([Perm((1, 0))])
    >>> h = GroupHom(G, H, [H.gens[0]])
    >>> h.is_injective()
    False
    >>> len(h.image_indices())
    2
    """

    __slots__ = ("source", "target", "gen_images", "images")

    def __init__(self, source, target, gen_images):
        assert len(gen_images) == len(source.gens)
        self.source = source
        self.target = target
        self.gen_images = [target.element_index[p.img] for p in gen_images]
        self.images = []
        for w in source.words:
            acc = 0
            for gi in w:
                acc = target.mult(acc, self.gen_images[gi])
            self.images.append(acc)
        for x in range(source.order):
            hx = self.images[x]
            for gi in range(len(source.gens)):
                g = source.element_index[source.gens[gi].img]
                lhs = self.images[source.mult(x, g)]
                rhs = target.mult(hx, self.gen_images[gi])
                assert lhs == rhs, "generator images do not define a hom"
        if source.order <= ALL_PAIRS_CHECK_BOUND:
            for x in range(source.order):
                for y in range(source.order):
                    assert (self.images[source.mult(x, y)]
                            == target.mult(self.images[x], self.images[y]))

    def __call__(self, i):
        return self.images[i]

    def is_injective(self):
        return len(set(self.images)) == self.source.order

    def image_indices(self):
        return sorted(set(self.images))


def direct_product(G, H):
    """Direct product acting on the disjoint union of the two point sets.

    >>> C2 = group_from_generators([Perm((1, 0))])
    >>> direct_product(C2, C2).order
    4
    """
    n, m = G.degree, H.degree
    gens = []
    for g in G.gens:
        gens.append(Perm(tuple(g.img) + tuple(range(n, n + m))))
    for h in H.gens:
        gens.append(Perm(tuple(range(n)) + tuple(n + x for x in h.img)))
    return group_from_generators(gens, order_bound=ORDER_BOUND)
