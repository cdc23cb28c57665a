"""Lower K-theory of finite group rings, assembled exactly.

Everything here is finitely generated abelian group arithmetic on top of
the rational structure: reduced K0 of the rational group algebra, the
singular character group SC (one block per prime dividing the order), the
restriction map between them, and the K-1 rank/torsion formula. K-1 is
always computed twice, once by the closed formula and once as the
cokernel of the restriction map, and the two must agree. The image of
K~0Z -> K~0Q over a one-skeleton of finite groups likewise runs two
routes, a kernel-cokernel one and a snake-lemma one, and cross-checks.
"""

from .chartab import CharacterTable, induce_class_function, \
    restrict_class_function
from .errors import (DataConflict, NonCommutingLadder,
                     NonIntegralCoefficient, NotAutomorphism, NotIndexTwo)
from .perm import GroupHom
from .ratrep import RationalStructure, primes_dividing
from .zlin import (AbMap, FgAbGroup, IntMat, ShortExactSeq, block_map,
                   cokernel, direct_sum, express_in_span, hnf_solve,
                   image_iso, is_injective, kernel, kernel_basis,
                   lattice_of_columns, snake)


class GroupContext:
    """Character table, rational structure and Schur data for one group."""

    __slots__ = ("catgroup", "name", "group", "table", "rs", "schur",
                 "primes")

    def __init__(self, catgroup, provider, seed=0):
        self.catgroup = catgroup
        self.name = catgroup.name
        self.group = catgroup.group
        self.table = CharacterTable(self.group, seed=seed)
        self.rs = RationalStructure(self.table)
        self.schur = provider.data_for(self.table, self.rs)
        self.primes = primes_dividing(self.group.order)


class ContextCache:
    """Caches GroupContext per catalog name so amalgam runs reuse tables."""

    def __init__(self, provider, seed=0):
        self.provider = provider
        self.seed = seed
        self._store = {}

    def get(self, catgroup):
        key = catgroup.name
        if key not in self._store:
            self._store[key] = GroupContext(catgroup, self.provider,
                                            seed=self.seed)
        return self._store[key]


class K0QBasis:
    """K0 of the rational group algebra on the rational irreducible basis.

    `lattice` is the free group on the r_Q rational irreducibles; `reduced`
    divides out the class of the regular module, whose coordinate at an
    irreducible is (constituent degree) / (global Schur index).
    """

    __slots__ = ("ctx", "rank", "lattice", "regular_vector", "reduced",
                 "reduce_map")

    def __init__(self, ctx):
        rs, schur = ctx.rs, ctx.schur
        self.ctx = ctx
        self.rank = rs.r_q
        self.lattice = FgAbGroup.free(rs.r_q)
        reg = []
        for oi in range(rs.r_q):
            d = rs.orbit_degree(oi)
            m = schur.global_index(oi)
            assert d % m == 0, "Schur index must divide the degree"
            reg.append(d // m)
        self.regular_vector = tuple(reg)
        self.reduced = FgAbGroup(
            rs.r_q, IntMat.from_cols([self.regular_vector], nrows=rs.r_q))
        assert self.reduced.free_rank == rs.r_q - 1
        assert not self.reduced.torsion
        self.reduce_map = AbMap(self.lattice, self.reduced,
                                IntMat.identity(rs.r_q))


def k0q(ctx):
    return K0QBasis(ctx)


def _flatten_restriction(ctx, values, singular):
    """Integer coordinates of a character restricted to singular classes."""
    e = ctx.rs.exponent
    out = []
    for c in singular:
        for coord in values[c].coords_in(e):
            if coord.denominator != 1:
                raise DataConflict(
                    "non-integral singular restriction coordinate %s" % coord)
            out.append(int(coord))
    return tuple(out)


class SCBlock:
    """SC_p: restrictions of Q_p-irreducible characters to p-singular
    classes, both as an ambient lattice and as a presented quotient."""

    __slots__ = ("p", "singular", "columns", "ambient_dim", "presented",
                 "r_qp", "r_fp")

    def __init__(self, ctx, p):
        qp = ctx.rs.qp(p)
        cd = ctx.table.classes
        self.p = p
        self.singular = cd.singular_classes(p)
        self.r_qp = qp.r_qp
        self.r_fp = qp.r_fp
        cols = []
        for si in range(qp.r_qp):
            m_p = ctx.schur.finite_index(qp.parent[si], p)
            vals = [m_p * v for v in ctx.rs.suborbit_sum(qp, si)]
            cols.append(_flatten_restriction(ctx, vals, self.singular))
        self.columns = cols
        self.ambient_dim = len(cols[0]) if cols else 0
        lat, basis = lattice_of_columns(cols, dim=self.ambient_dim)
        rel = kernel_basis(IntMat.from_cols(cols, nrows=self.ambient_dim))
        self.presented = FgAbGroup(qp.r_qp,
                                   IntMat.from_cols(rel, nrows=qp.r_qp))
        assert lat.free_rank == self.presented.free_rank, \
            "ambient and presented SC_p ranks disagree"
        assert not self.presented.torsion
        assert self.presented.free_rank == qp.r_qp - qp.r_fp, \
            "SC_p rank must be r_Qp - r_Fp"


class SCGroup:
    """SC(G) = direct sum of the SC_p blocks, with the restriction map
    from reduced K0Q and its cokernel (the via-SC K-1)."""

    __slots__ = ("ctx", "blocks", "group", "prime_spans", "rank", "res",
                 "k_minus_1", "proj", "row")

    def __init__(self, ctx, basis):
        self.ctx = ctx
        self.blocks = [SCBlock(ctx, p) for p in ctx.primes]
        parts = [b.presented for b in self.blocks]
        self.group, spans = direct_sum(parts)
        self.prime_spans = {b.p: spans[i] for i, b in enumerate(self.blocks)}
        self.rank = self.group.free_rank
        assert self.rank == sum(b.r_qp - b.r_fp for b in self.blocks)
        rows = []
        for b in self.blocks:
            loc = _localization_matrix(ctx, b.p)
            rows.extend(loc.rows)
        mat = IntMat(rows, ncols=ctx.rs.r_q)
        self.res = AbMap(basis.reduced, self.group, mat)
        assert is_injective(self.res), "restriction map must embed K~0Q"
        self.k_minus_1, self.proj = cokernel(self.res)
        self.row = ShortExactSeq(self.res, self.proj)


def _localization_matrix(ctx, p):
    """Z^{r_Q} -> Z^{r_Qp}: a rational irreducible maps to (m / m_p) times
    each of its Q_p-suborbits."""
    qp = ctx.rs.qp(p)
    rows = [[0] * ctx.rs.r_q for _ in range(qp.r_qp)]
    for si in range(qp.r_qp):
        oi = qp.parent[si]
        m = ctx.schur.global_index(oi)
        m_p = ctx.schur.finite_index(oi, p)
        assert m % m_p == 0, "local index must divide the global index"
        rows[si][oi] = m // m_p
    return IntMat(rows, ncols=ctx.rs.r_q)


def sc_group(ctx, basis=None):
    return SCGroup(ctx, basis if basis is not None else k0q(ctx))


class KTheoryReport:
    """All the headline invariants of one finite group."""

    __slots__ = ("name", "r_q", "r_qp", "r_fp", "carter_rank", "s",
                 "k_minus_1", "sc_rank", "image", "agreement")

    def __init__(self, name, r_q, r_qp, r_fp, carter_rank, s, k_minus_1,
                 sc_rank, image=None, agreement=True):
        self.name = name
        self.r_q = r_q
        self.r_qp = r_qp
        self.r_fp = r_fp
        self.carter_rank = carter_rank
        self.s = s
        self.k_minus_1 = k_minus_1
        self.sc_rank = sc_rank
        self.image = image
        self.agreement = agreement


def carter(ctx):
    """K-1 of the integral group ring by the closed rank/torsion formula.

    >>> from kzq.fppres import catalog
    >>> from kzq.ratrep import trivial_schur_provider
    >>> class _Blind:
    ...     def data_for(self, table, rs):
    ...         return trivial_schur_provider(table, rs)
    >>> carter(GroupContext(catalog("Q16"), _Blind())).k_minus_1.describe()
    'Z/2'
    >>> carter(GroupContext(catalog("C6"), _Blind())).k_minus_1.describe()
    'Z'
    """
    rs = ctx.rs
    r = 1 - rs.r_q
    r_qp = {}
    r_fp = {}
    for p in ctx.primes:
        qp = rs.qp(p)
        r_qp[p] = qp.r_qp
        r_fp[p] = qp.r_fp
        r += qp.r_qp - qp.r_fp
    assert r >= 0
    order = ctx.group.order
    if order > 1 and order & (order - 1) == 0:
        assert r == 0, "2-groups have free rank 0"
    s = ctx.schur.s_count()
    rels = [tuple(2 if i == r + j else 0 for i in range(r + s))
            for j in range(s)]
    k = FgAbGroup(r + s, IntMat.from_cols(rels, nrows=r + s))
    return KTheoryReport(ctx.name, rs.r_q, r_qp, r_fp, r, s, k, None)


def k_minus_1_via_sc(ctx):
    """K-1 as the cokernel of reduced K0Q -> SC; must match carter()."""
    return sc_group(ctx).k_minus_1


class GroupKTheory:
    """One group's K-theory row plus the cross-validated report."""

    __slots__ = ("ctx", "basis", "sc", "report")

    def __init__(self, ctx):
        self.ctx = ctx
        self.basis = k0q(ctx)
        self.sc = SCGroup(ctx, self.basis)
        rep = carter(ctx)
        rep.sc_rank = self.sc.rank
        assert rep.sc_rank == sum(rep.r_qp[p] - rep.r_fp[p]
                                  for p in ctx.primes)
        rep.agreement = self.sc.k_minus_1.same_iso(rep.k_minus_1)
        assert rep.agreement, \
            "formula and via-SC K-1 disagree for %s" % ctx.name
        self.report = rep


# ---- one-skeleton image computation ----


class OneSkeleton:
    """Finite-group vertices, edge groups, and two injective maps per edge.

    Each edge is (edge GroupContext, (vertex index, GroupHom) twice); the
    vertical maps downstream are F(first) - F(second) per edge.
    """

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        self.vertices = vertices
        self.edges = edges
        for ectx, (v1, h1), (v2, h2) in edges:
            for vi, hom in ((v1, h1), (v2, h2)):
                assert hom.source is ectx.group
                assert hom.target is vertices[vi].group
                assert hom.is_injective(), "edge maps must be injective"


def induction_on_k0q(hom, kt_h, kt_k):
    """Integer induction matrix on rational irreducible bases.

    Column I holds the multiplicities of each rational irreducible of the
    target in the induction of irreducible I of the source.
    """
    mat = _induction_matrix(hom, kt_h.ctx, kt_k.ctx, None)
    reg = mat.apply(kt_h.basis.regular_vector)
    assert list(reg) == list(kt_k.basis.regular_vector), \
        "induction must carry the regular class to the regular class"
    return AbMap(kt_h.basis.reduced, kt_k.basis.reduced, mat)


def _induction_matrix(hom, ctx_h, ctx_k, p):
    """Induction on rational (p None) or Q_p (p prime) irreducible lists."""
    h_cd, k_cd = ctx_h.table.classes, ctx_k.table.classes
    if p is None:
        h_orbits = ctx_h.rs.q_orbits
        k_orbits = ctx_k.rs.q_orbits
        m_h = [ctx_h.schur.global_index(i) for i in range(len(h_orbits))]
        m_k = [ctx_k.schur.global_index(j) for j in range(len(k_orbits))]
        h_sums = ctx_h.rs.orbit_sums
    else:
        qh, qk = ctx_h.rs.qp(p), ctx_k.rs.qp(p)
        h_orbits = qh.suborbits
        k_orbits = qk.suborbits
        m_h = [ctx_h.schur.finite_index(qh.parent[i], p)
               for i in range(len(h_orbits))]
        m_k = [ctx_k.schur.finite_index(qk.parent[j], p)
               for j in range(len(k_orbits))]
        h_sums = [ctx_h.rs.suborbit_sum(qh, i) for i in range(len(h_orbits))]
    cols = []
    for i, orbit in enumerate(h_orbits):
        vals = [m_h[i] * v for v in h_sums[i]]
        ind = induce_class_function(hom, h_cd, k_cd, vals)
        col = []
        for j, k_orbit in enumerate(k_orbits):
            rep_row = ctx_k.table.rows[k_orbit[0]]
            a = ctx_k.table.inner_product(ind, rep_row) / m_k[j]
            if a.denominator != 1 or a < 0:
                raise NonIntegralCoefficient(
                    "induction coefficient %s at irreducible %d" % (a, j))
            col.append(int(a))
        # degree bookkeeping: dimensions must match on both sides
        lhs = ind[0].as_fraction()
        rhs = sum(col[j] * m_k[j] * len(k_orbits[j])
                  * ctx_k.table.degrees[k_orbits[j][0]]
                  for j in range(len(k_orbits)))
        assert lhs == rhs, "induced degree bookkeeping failed"
        cols.append(col)
    return IntMat.from_cols(cols, nrows=len(k_orbits))


class SkeletonImage:
    """The image group with the kernels that sandwich it."""

    __slots__ = ("ker_k0q", "ker_sc", "ker_k_minus_1", "image",
                 "image_via_snake")

    def __init__(self, ker_k0q, ker_sc, ker_k_minus_1, image,
                 image_via_snake):
        self.ker_k0q = ker_k0q
        self.ker_sc = ker_sc
        self.ker_k_minus_1 = ker_k_minus_1
        self.image = image
        self.image_via_snake = image_via_snake


def _sum_rows(parts):
    """Direct sum of per-group short exact rows; returns the summed row
    plus the generator spans at the K0Q and SC levels."""
    a_sum, a_spans = direct_sum([p.basis.reduced for p in parts])
    b_sum, b_spans = direct_sum([p.sc.group for p in parts])
    c_sum, _ = direct_sum([p.sc.k_minus_1 for p in parts])
    i_sum = block_map(a_sum, b_sum,
                      {(i, i): p.sc.res.matrix for i, p in enumerate(parts)},
                      a_spans, b_spans)
    p_sum = AbMap(b_sum, c_sum, IntMat.identity(b_sum.n_gens))
    return ShortExactSeq(i_sum, p_sum), a_spans, b_spans


def _require_ladder(left, right, target, label):
    """Raise NonCommutingLadder unless left == right modulo target's
    relation lattice, column by column."""
    diff = IntMat([[a - b for a, b in zip(ra, rb)]
                   for ra, rb in zip(left.rows, right.rows)],
                  ncols=left.ncols)
    for c in diff.cols():
        if hnf_solve(target.relations, c) is None:
            raise NonCommutingLadder(label)


def image_from_one_skeleton(sk):
    """im(K~0Z -> K~0Q) of the skeleton's fundamental group.

    Route one: cokernel of the induced map ker^SC -> ker^{K-1}. Route two:
    image of the snake connecting map. Both are computed and must agree.
    """
    edge_parts = [GroupKTheory(e[0]) for e in sk.edges]
    vert_parts = [GroupKTheory(v) for v in sk.vertices]
    top, top_a, top_b = _sum_rows(edge_parts)
    bot, bot_a, bot_b = _sum_rows(vert_parts)

    fa_rows = [[0] * top.A.n_gens for _ in range(bot.A.n_gens)]
    fb_rows = [[0] * top.B.n_gens for _ in range(bot.B.n_gens)]
    for ei, (ectx, pair1, pair2) in enumerate(sk.edges):
        for sign, (vi, hom) in ((1, pair1), (-1, pair2)):
            vpart = vert_parts[vi]
            epart = edge_parts[ei]
            mat_a = induction_on_k0q(hom, epart, vpart).matrix
            _accumulate(fa_rows, mat_a, bot_a[vi][0], top_a[ei][0], sign)
            for p in ectx.primes:
                mat_p = _induction_matrix(hom, ectx, vpart.ctx, p)
                r0 = bot_b[vi][0] + vpart.sc.prime_spans[p][0]
                c0 = top_b[ei][0] + epart.sc.prime_spans[p][0]
                _accumulate(fb_rows, mat_p, r0, c0, sign)
    fA = AbMap(top.A, bot.A, IntMat(fa_rows, ncols=top.A.n_gens))
    fB = AbMap(top.B, bot.B, IntMat(fb_rows, ncols=top.B.n_gens))
    _require_ladder(fB.matrix * top.i.matrix, bot.i.matrix * fA.matrix,
                    bot.B, "K0Q square does not commute")
    fC = AbMap(top.C, bot.C, fB.matrix)
    _require_ladder(fC.matrix * top.p.matrix, bot.p.matrix * fB.matrix,
                    bot.C, "SC square does not commute")

    ker_b, incl_b = kernel(fB)
    ker_c, incl_c = kernel(fC)
    pushed = [top.p.matrix.apply(c) for c in incl_b.matrix.cols()]
    mat = express_in_span(pushed, incl_c.matrix, top.C.relations)
    assert mat is not None
    induced = AbMap(ker_b, ker_c, mat)
    image, _ = cokernel(induced)

    delta, _, _ = snake(top, bot, fA, fB, fC)
    via_snake = image_iso(delta)
    assert image.same_iso(via_snake), \
        "cokernel route and snake route disagree"
    ker_a, _ = kernel(fA)
    return SkeletonImage(ker_a, ker_b, ker_c, image, via_snake)


def _accumulate(rows, mat, r0, c0, sign):
    for i in range(mat.nrows):
        for j in range(mat.ncols):
            rows[r0 + i][c0 + j] += sign * mat.rows[i][j]


def amalgam_image(ctx_h, ctx_k1, hom1, ctx_k2, hom2):
    """Image group for the amalgam K1 *_H K2 along index-2 embeddings."""
    if ctx_k1.group.order != 2 * ctx_h.group.order \
            or ctx_k2.group.order != 2 * ctx_h.group.order:
        raise NotIndexTwo(
            "orders %d, %d are not twice %d"
            % (ctx_k1.group.order, ctx_k2.group.order, ctx_h.group.order))
    sk = OneSkeleton([ctx_k1, ctx_k2],
                     [(ctx_h, (0, hom1), (1, hom2))])
    return image_from_one_skeleton(sk)


def vc1_k0q(ctx, aut):
    """K0 of the rational group algebra of H-by-Z twisted by aut.

    Free on the orbits of rational irreducibles under the automorphism;
    computed both as an orbit count and as the cokernel of 1 - P.
    """
    if aut.source is not ctx.group or aut.target is not ctx.group \
            or not aut.is_injective():
        raise NotAutomorphism("twist must be a bijective self-map")
    rs = ctx.rs
    cd = ctx.table.classes
    row_index = {tuple(row): i for i, row in enumerate(ctx.table.rows)}
    perm = []
    for oi in range(rs.r_q):
        rep = rs.q_orbits[oi][0]
        moved = restrict_class_function(aut, cd, cd, ctx.table.rows[rep])
        target_row = row_index.get(tuple(moved))
        if target_row is None:
            raise NotAutomorphism("twist does not permute the irreducibles")
        perm.append(rs.orbit_of_row[target_row])
    assert sorted(perm) == list(range(rs.r_q))
    seen = set()
    orbits = 0
    for start in range(rs.r_q):
        if start in seen:
            continue
        orbits += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
    rows = [[(1 if i == j else 0) - (1 if perm[j] == i else 0)
             for j in range(rs.r_q)] for i in range(rs.r_q)]
    free = FgAbGroup.free(rs.r_q)
    quot, _ = cokernel(AbMap(free, free, IntMat(rows, ncols=rs.r_q)))
    assert quot.iso_type() == (orbits, ()), \
        "orbit count and cokernel of 1 - P disagree"
    return quot


def vc1_image(ctx, aut):
    """Image group for the H-by-Z input: the one-vertex one-edge skeleton
    with identity and the twist as the two edge maps."""
    ident = GroupHom(ctx.group, ctx.group, ctx.group.gens)
    sk = OneSkeleton([ctx], [(ctx, (0, ident), (0, aut))])
    return image_from_one_skeleton(sk)
