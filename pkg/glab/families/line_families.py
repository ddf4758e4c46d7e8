#!/usr/bin/python3

'''
Families of lines and planes given by polynomial matrices, the linear
projections acting on them, and the union-dimension tests.

Built-in families:
    veronese_family(n)      lines spanned by [[t, 0], [0, t]] over P^n in P^{2n+1}
    scroll_fiber_family(r)  the r-planes of the rational normal scroll in P^{2r+2}
    scroll_dual_family(r)   their kernels, (r+1)-planes meeting pairwise in a point
    scroll_lift(r)          the dual family lifted to P^{2r+3}, with its projection
    scroll_line_family(r)   lines inside the dual planes
    cone_family(n)          lines through a fixed point
'''

import logging

from glab.errors import DegenerateEvaluationError, DimensionMismatchError, ProjectionUndefinedError
from glab.exact.field import GF, QQ
from glab.exact.matrix import Matrix
from glab.geometry.grassmann import PluckerVector, plucker_pairs
from glab.geometry.proj_space import meet, subspace_from_rows
from glab.families.sampling import make_rng, max_over_trials, projective_points, random_point, resampled
from glab.poly.jet import Jet, jacobian_at, jet_point
from glab.poly.multipoly import MultiPoly, PolyMatrix, coefficient_rank
from glab.settings import hparams

logger = logging.getLogger(__name__)


class PlaneFamily:
    '''
    A family of d-planes: the row space of a (d+1)x(N+1) polynomial matrix.
    `dim` is the intrinsic dimension of the family; by default the
    parameters are one projective point, so dim = nvars - 1.
    '''

    def __init__(self, matrix, name='family', dim=None):
        self.matrix = matrix
        self.name = name
        self.field = matrix.field
        self.nvars = matrix.nvars
        self.N = matrix.ncols - 1
        self.rows = matrix.nrows
        self.dim = self.nvars - 1 if dim is None else dim

    @property
    def plane_dim(self):
        return self.rows - 1

    def evaluate_matrix(self, t):
        if len(t) != self.nvars:
            raise DimensionMismatchError('parameter has length %d, expected %d' % (len(t), self.nvars))
        t = [self.field(x) for x in t]
        if all(x == 0 for x in t):
            raise DegenerateEvaluationError('zero parameter vector')
        return self.matrix.evaluate(t)

    def evaluate(self, t):
        m = self.evaluate_matrix(t)
        s = subspace_from_rows(m)
        if s.dim != self.plane_dim:
            raise DegenerateEvaluationError('rank-deficient evaluation at %s: rank %d, expected %d' % (
                [str(x) for x in t], s.dim + 1, self.rows))
        return s

    def random_parameter(self, rng):
        return random_point(self.nvars, self.field, rng)

    def sample(self, rng):
        '''(t, subspace) at a random parameter, resampling degenerate points.'''
        def draw(r):
            t = self.random_parameter(r)
            return t, self.evaluate(t)
        return resampled(draw, rng, 'evaluation of ' + self.name)

    def is_linear(self):
        return self.matrix.is_linear()

    def over(self, field):
        return type(self)(self.matrix.over(field), self.name, self.dim)

    def __repr__(self):
        return '%s(%s, rows=%d, N=%d, dim=%d)' % (type(self).__name__, self.name, self.rows, self.N, self.dim)


class LineFamily(PlaneFamily):

    def __init__(self, matrix, name='family', dim=None):
        if matrix.nrows != 2:
            raise DimensionMismatchError('a line family needs a 2-row matrix, got %d rows' % matrix.nrows)
        super().__init__(matrix, name, dim)

    def plucker_polys(self):
        return [p for _, p in sorted(self.matrix.minors2().items())]


def _family_for(matrix, name, dim=None):
    if matrix.nrows == 2:
        return LineFamily(matrix, name, dim)
    return PlaneFamily(matrix, name, dim)


class ProjectionMap:

    def __init__(self, matrix):
        if matrix.rank() != matrix.nrows:
            raise DegenerateEvaluationError('projection matrix must have full row rank')
        self.matrix = matrix
        self.field = matrix.field
        self.N = matrix.ncols - 1
        self.M = matrix.nrows - 1
        self.center = subspace_from_rows(matrix.kernel_basis())

    @classmethod
    def from_center(cls, center):
        '''Projection P^N -> P^M whose kernel is the given center.'''
        return cls(center.equations())

    @classmethod
    def identity(cls, N, field=QQ):
        return cls(Matrix.identity(N + 1, field))

    def exterior_square(self):
        '''Induced map on Plücker coordinates, rows and columns in pair order.'''
        m = self.matrix
        rows = []
        for a, b in plucker_pairs(self.M):
            rows.append([m[a, i] * m[b, j] - m[a, j] * m[b, i] for i, j in plucker_pairs(self.N)])
        return Matrix._trusted(rows, self.field, len(plucker_pairs(self.N)))

    def over(self, field):
        return ProjectionMap(Matrix([[field(x) for x in r] for r in self.matrix.rows()], field))

    def __repr__(self):
        return 'ProjectionMap(P^%d -> P^%d, center dim %d)' % (self.N, self.M, self.center.dim)


def _check_positive(name, v):
    if v < 1:
        raise DimensionMismatchError('%s must be >= 1, got %d' % (name, v))


def veronese_family(n, field=QQ):
    _check_positive('n', n)
    t = MultiPoly.variables(n + 1, field)
    z = MultiPoly.zero(n + 1, field)
    m = PolyMatrix([t + [z] * (n + 1), [z] * (n + 1) + t], n + 1, field)
    return LineFamily(m, 'veronese(%d)' % n)


def veronese_projection(n, field=QQ):
    '''(x_0 : x_1 + x_{n+1} : ... : x_n + x_{2n} : x_{2n+1}).'''
    _check_positive('n', n)
    rows = []
    for i in range(n + 2):
        r = [0] * (2 * n + 2)
        if i == 0:
            r[0] = 1
        elif i == n + 1:
            r[2 * n + 1] = 1
        else:
            r[i] = 1
            r[n + i] = 1
        rows.append(r)
    return ProjectionMap(Matrix(rows, field))


def apply_projection(p, family, trials=None, seed=None):
    '''
    The family of image lines. Fails when the generic member meets the
    center, i.e. when every sampled member meets it.
    '''
    if p.N != family.N:
        raise DimensionMismatchError('projection from P^%d applied to a family in P^%d' % (p.N, family.N))
    trials = hparams['trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    image = family.matrix.right_multiply(p.matrix.transpose())
    clean = 0
    for i in range(trials):
        rng = make_rng(seed, i)
        t, s = family.sample(rng)
        stacked = s.basis.stack(p.center.basis)
        if stacked.rank() == s.basis.nrows + p.center.basis.nrows:
            clean += 1
    if clean == 0:
        raise ProjectionUndefinedError()
    logger.debug('apply_projection: %d of %d sampled members avoid the center', clean, trials)
    return _family_for(image, 'projected ' + family.name, family.dim)


def double_veronese_check(n, trials=None, pair_trials=None, seed=None, field=QQ):
    '''
    Minors of the projected Veronese family: they span all quadrics, they
    separate parameter points, and their differential has full rank.
    '''
    trials = hparams['immersion_points'] if trials is None else trials
    pair_trials = hparams['pair_trials'] if pair_trials is None else pair_trials
    seed = hparams['seed'] if seed is None else seed
    projected = apply_projection(veronese_projection(n, field), veronese_family(n, field), seed=seed)
    minors = projected.plucker_polys()
    expected_rank = (n + 2) * (n + 1) // 2
    crank = coefficient_rank_of(minors)

    report = {
        'n': n,
        'coefficient_rank': {'expected': expected_rank, 'observed': crank, 'pass': crank == expected_rank},
    }

    if n <= 2:
        F = GF(hparams['injectivity_prime'])
        fam = apply_projection(veronese_projection(n, F), veronese_family(n, F), seed=seed)
        small = fam.plucker_polys()
        seen = {}
        clashes = 0
        for t in projective_points(n, F):
            v = PluckerVector([m.evaluate(t) for m in small], fam.N, F)
            if v in seen:
                clashes += 1
            seen[v] = t
        report['injectivity_exhaustive'] = {'prime': F.p, 'points': len(seen) + clashes,
                                            'clashes': clashes, 'pass': clashes == 0}

    clashes = 0
    tested = 0
    for i in range(pair_trials):
        rng = make_rng(seed, 1000 + i)
        t = projected.random_parameter(rng)
        s = projected.random_parameter(rng)
        if Matrix([t, s], field).rank() < 2:
            continue
        tested += 1
        vt = PluckerVector([m.evaluate(t) for m in minors], projected.N, field)
        vs = PluckerVector([m.evaluate(s) for m in minors], projected.N, field)
        if vt == vs:
            clashes += 1
    report['injectivity_random'] = {'pairs': tested, 'clashes': clashes, 'pass': clashes == 0}

    low = 0
    for i in range(trials):
        rng = make_rng(seed, 5000 + i)
        t = projected.random_parameter(rng)
        if jacobian_at(minors, t).rank() != n + 1:
            low += 1
    report['immersion'] = {'points': trials, 'expected_rank': n + 1, 'rank_deficient': low, 'pass': low == 0}
    report['pass'] = all(v['pass'] for v in report.values() if isinstance(v, dict))
    return report


def coefficient_rank_of(polys):
    d = max(p.degree() for p in polys)
    return coefficient_rank(polys, d)


## scroll O(1)^r + O(2) over P^1: the 2-blocks first, the 3-block last ##

def _su(field):
    return MultiPoly.variables(2, field)


def scroll_fiber_family(r, field=QQ):
    _check_positive('r', r)
    s, u = _su(field)
    z = MultiPoly.zero(2, field)
    ncols = 2 * r + 3
    rows = []
    for i in range(r):
        row = [z] * ncols
        row[2 * i], row[2 * i + 1] = s, u
        rows.append(row)
    row = [z] * ncols
    row[2 * r], row[2 * r + 1], row[2 * r + 2] = s * s, s * u, u * u
    rows.append(row)
    return PlaneFamily(PolyMatrix(rows, 2, field), 'scroll_fiber(%d)' % r)


def _dual_rows(r, field):
    s, u = _su(field)
    z = MultiPoly.zero(2, field)
    ncols = 2 * r + 3
    rows = []
    for i in range(r):
        row = [z] * ncols
        row[2 * i], row[2 * i + 1] = u, -s
        rows.append(row)
    for k in range(2):
        row = [z] * ncols
        row[2 * r + k], row[2 * r + k + 1] = u, -s
        rows.append(row)
    return rows


def scroll_dual_family(r, field=QQ):
    _check_positive('r', r)
    return PlaneFamily(PolyMatrix(_dual_rows(r, field), 2, field), 'scroll_dual(%d)' % r)


def scroll_orthogonality(r, field=QQ):
    '''fiber . dual^T as a polynomial matrix; zero exactly when the dual family is the kernel.'''
    fiber = scroll_fiber_family(r, field).matrix
    dual = scroll_dual_family(r, field).matrix
    z = MultiPoly.zero(2, field)
    out = []
    for a in fiber.entries:
        row = []
        for b in dual.entries:
            acc = z
            for x, y in zip(a, b):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return PolyMatrix(out, 2, field)


def dual_meet_check(r, trials=None, seed=None, field=QQ):
    '''Distinct dual planes meet in exactly a point: random pairs plus (1:0), (0:1).'''
    trials = hparams['dual_meet_pairs'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    dual = scroll_dual_family(r, field)
    pairs = [(dual.evaluate([1, 0]), dual.evaluate([0, 1]))]
    for i in range(trials):
        rng = make_rng(seed, 7000 + i)
        pairs.append((dual.sample(rng)[1], dual.sample(rng)[1]))
    tested = 0
    bad = 0
    for a, b in pairs:
        if a == b:
            logger.debug('coincident dual planes skipped')
            continue
        tested += 1
        if meet(a, b).dim != 0:
            bad += 1
    return {'r': r, 'pairs': tested, 'not_a_point': bad, 'pass': bad == 0}


def scroll_lift(r, field=QQ):
    '''
    The dual family lifted to P^{2r+3} (every row (u, -s) in its own 2-block)
    and the projection merging the last two blocks (y1, y2, y3, y4) -> (y1, y2 + y3, y4).
    '''
    _check_positive('r', r)
    s, u = _su(field)
    z = MultiPoly.zero(2, field)
    ncols = 2 * r + 4
    rows = []
    for i in range(r + 2):
        row = [z] * ncols
        row[2 * i], row[2 * i + 1] = u, -s
        rows.append(row)
    lifted = PlaneFamily(PolyMatrix(rows, 2, field), 'scroll_lift(%d)' % r)
    merge = []
    for i in range(2 * r + 3):
        row = [0] * ncols
        if i <= 2 * r:
            row[i] = 1
        if i == 2 * r + 1:
            row[2 * r + 1] = 1
            row[2 * r + 2] = 1
        if i == 2 * r + 2:
            row[2 * r + 3] = 1
        merge.append(row)
    return lifted, ProjectionMap(Matrix(merge, field))


def scroll_lift_report(r, seed=None):
    seed = hparams['seed'] if seed is None else seed
    lifted, p = scroll_lift(r)
    dual = scroll_dual_family(r)
    image = lifted.matrix.right_multiply(p.matrix.transpose())
    identity_ok = image == dual.matrix
    expected_center = [0] * (2 * r + 4)
    expected_center[2 * r + 1], expected_center[2 * r + 2] = 1, -1
    center_ok = p.center.dim == 0 and p.center.contains_point(expected_center)
    stacked = Matrix.empty(2 * r + 4)
    for k in range(2 * r + 4):
        stacked = stacked.stack(lifted.evaluate_matrix([1, k]))
    span_rank = stacked.rank()
    try:
        apply_projection(p, lifted, seed=seed)
        defined = True
    except ProjectionUndefinedError:
        defined = False
    return {
        'r': r,
        'identity': identity_ok,
        'center': [str(x) for x in p.center.basis.row(0)],
        'center_ok': center_ok,
        'span_rank': span_rank,
        'expected_span_rank': 2 * r + 4,
        'projection_defined': defined,
        'pass': identity_ok and center_ok and span_rank == 2 * r + 4 and defined,
    }


def scroll_line_family(r, field=QQ):
    '''
    Lines inside the dual planes: variables (s, u, a_0..a_{r+1}, b_0..b_{r+1}),
    rows sum a_i D_i(s, u) and sum b_i D_i(s, u). The parametrization has
    5-dimensional fibres, so the family has dimension 2r + 1.
    '''
    _check_positive('r', r)
    nvars = 2 + 2 * (r + 2)
    dual = _dual_rows(r, field)
    ncols = 2 * r + 3

    def lift(p):
        ## re-index a polynomial in (s, u) into the full variable set ##
        return MultiPoly({tuple(list(e) + [0] * (nvars - 2)): c for e, c in p.terms.items()}, nvars, field)

    v = MultiPoly.variables(nvars, field)
    alphas = v[2:2 + r + 2]
    betas = v[2 + r + 2:]
    z = MultiPoly.zero(nvars, field)
    rows = []
    for coeffs in (alphas, betas):
        row = [z] * ncols
        for c, d in zip(coeffs, dual):
            for j in range(ncols):
                if not d[j].is_zero():
                    row[j] = row[j] + c * lift(d[j])
        rows.append(row)
    return LineFamily(PolyMatrix(rows, nvars, field), 'scroll_lines(%d)' % r, dim=2 * r + 1)


def cone_family(n, field=QQ):
    '''Lines joining e_0 to the points (0 : t) of P^{n+1}.'''
    _check_positive('n', n)
    t = MultiPoly.variables(n + 1, field)
    z = MultiPoly.zero(n + 1, field)
    one = MultiPoly.constant(1, n + 1, field)
    return LineFamily(PolyMatrix([[one] + [z] * (n + 1), [z] + t], n + 1, field), 'cone(%d)' % n)


def constant_family(line, nvars=2):
    '''The constant family at one fixed line.'''
    field = line.field
    rows = [[MultiPoly.constant(x, nvars, field) for x in r] for r in line.basis.rows()]
    return LineFamily(PolyMatrix(rows, nvars, field), 'constant', dim=0)


def evaluate_line(family, t):
    s = family.evaluate(t)
    if s.dim != 1:
        raise DimensionMismatchError('not a line family')
    return s


def _union_rank(family, rng):
    field = family.field
    t = family.random_parameter(rng)
    mu = [field.random(rng) for _ in range(family.rows)]
    size = family.nvars + family.rows
    tj = jet_point(t, field, 0, size)
    muj = jet_point(mu, field, family.nvars, size)
    rows = family.matrix.evaluate_raw(tj)
    zero = field.zero
    grads = []
    for j in range(family.N + 1):
        x = zero
        for m, r in zip(muj, rows):
            x = x + m * r[j]
        grads.append(x.gradient(zero) if isinstance(x, Jet) else [zero] * size)
    return Matrix._trusted(grads, field, size).rank() - 1


def union_dimension(family, trials=None, seed=None):
    '''
    Generic dimension of the union of the members: Jacobian rank of
    (t, mu) -> sum mu_i row_i(t), minus one, maximized over trials.
    '''
    trials = hparams['trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    return max_over_trials(lambda rng: _union_rank(family, rng), trials, seed, 'union ' + family.name)


def union_cap(family):
    return min(family.N, family.dim + family.rows - 1)


def _section_rank(family, h, rng):
    field = family.field
    t = family.random_parameter(rng)
    rows = family.matrix.evaluate_raw(jet_point(t, field))
    r0, r1 = rows

    def apply(r):
        acc = field.zero
        for a, x in zip(h, r):
            if a != 0:
                acc = acc + x * a
        return acc

    h0, h1 = apply(r0), apply(r1)
    zero = field.zero
    grads = []
    for x0, x1 in zip(r0, r1):
        x = h1 * x0 - h0 * x1
        grads.append(x.gradient(zero) if isinstance(x, Jet) else [zero] * family.nvars)
    return Matrix._trusted(grads, field, family.nvars).rank() - 1


def hyperplane_section_rank(family, seed=None, trials=None):
    '''
    Generic dimension of the image of l -> L meet H for a random hyperplane H.
    Equal to dim X exactly when X is uncompressed.
    '''
    if family.rows != 2:
        raise DimensionMismatchError('hyperplane sections are taken of line families')
    trials = hparams['trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    rng = make_rng(seed, 999983)
    h = [family.field.random(rng) for _ in range(family.N + 1)]
    return max_over_trials(lambda rng: _section_rank(family, h, rng), trials, seed, 'section ' + family.name, 1)


def compressedness(family, n=None, trials=None, seed=None):
    n = family.dim if n is None else n
    u = union_dimension(family, trials, seed)
    cap = union_cap(family)
    report = {
        'family': family.name,
        'n': n,
        'union_dimension': u,
        'cap': cap,
        'exact': u == cap,
        'compressed': u <= n,
    }
    if family.rows == 2:
        report['hyperplane_section_rank'] = hyperplane_section_rank(family, seed, trials)
    return report

