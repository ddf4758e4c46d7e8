#!/usr/bin/python3

'''
JSON documents for user families and projection centers.

family:
    {"name": "...", "ambient": N, "param_dim": n, "degree": d,
     "rows": [["t0", "t1", "0", ...], [...]],
     "variables": ["s", "u"],    optional, default t0..t_n
     "dim": k}                   optional intrinsic dimension

center (either spanning rows of the center, or a projection matrix):
    {"ambient": N, "rows": [["0", "1", "-1", "0"]]}
    {"ambient": N, "projection": [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]}

Scalars may be JSON integers or strings such as "3/7".
'''

import json
import logging

from glab.errors import FamilyFormatError, GlabError
from glab.exact.field import QQ
from glab.exact.matrix import Matrix
from glab.families.line_families import LineFamily, PlaneFamily, ProjectionMap
from glab.geometry.proj_space import subspace_from_rows
from glab.poly.multipoly import PolyMatrix

logger = logging.getLogger(__name__)


def _require(doc, key, kind):
    if key not in doc:
        raise FamilyFormatError('missing key "%s"' % key)
    if not isinstance(doc[key], kind):
        raise FamilyFormatError('key "%s" has the wrong type' % key)
    return doc[key]


def family_from_dict(doc, field=QQ):
    if not isinstance(doc, dict):
        raise FamilyFormatError('family document must be an object')
    N = _require(doc, 'ambient', int)
    n = _require(doc, 'param_dim', int)
    rows = _require(doc, 'rows', list)
    names = doc.get('variables')
    nvars = len(names) if names else n + 1
    if not rows or any(not isinstance(r, list) or len(r) != N + 1 for r in rows):
        raise FamilyFormatError('every row needs %d entries' % (N + 1))
    try:
        matrix = PolyMatrix.from_strings([[str(x) for x in r] for r in rows], nvars, field, names)
    except (GlabError, ZeroDivisionError) as e:
        raise FamilyFormatError('bad polynomial: %s' % e)
    if 'degree' in doc:
        degree = doc['degree']
        wanted = degree if isinstance(degree, list) else [degree] * matrix.nrows
        if len(wanted) != matrix.nrows:
            raise FamilyFormatError('degree list has %d entries for %d rows' % (len(wanted), matrix.nrows))
        for i, (r, d) in enumerate(zip(matrix.entries, wanted)):
            if not all(p.is_zero() or p.is_homogeneous(d) for p in r):
                raise FamilyFormatError('row %d is not homogeneous of degree %d' % (i, d))
    dim = doc.get('dim')
    name = doc.get('name', 'user family')
    if matrix.nrows == 2:
        family = LineFamily(matrix, name, dim)
    else:
        family = PlaneFamily(matrix, name, dim)
    logger.debug('loaded %r', family)
    return family


def family_to_dict(family, names=None):
    degrees = family.matrix.row_degrees()
    doc = {
        'name': family.name,
        'ambient': family.N,
        'param_dim': family.nvars - 1,
        'degree': degrees[0] if len(set(degrees)) == 1 else degrees,
        'rows': family.matrix.to_strings(names),
        'dim': family.dim,
    }
    if names is not None:
        doc['variables'] = list(names)
    return doc


def center_from_dict(doc, field=QQ):
    '''A ProjectionMap from either a center or an explicit projection matrix.'''
    if not isinstance(doc, dict):
        raise FamilyFormatError('center document must be an object')
    N = _require(doc, 'ambient', int)
    key = 'projection' if 'projection' in doc else 'rows'
    rows = _require(doc, key, list)
    try:
        m = Matrix([[field(str(x)) for x in r] for r in rows], field, N + 1)
    except (GlabError, ValueError, ZeroDivisionError) as e:
        raise FamilyFormatError('bad %s matrix: %s' % (key, e))
    try:
        if key == 'projection':
            return ProjectionMap(m)
        return ProjectionMap.from_center(subspace_from_rows(m))
    except GlabError as e:
        raise FamilyFormatError(str(e))


def load_family(path, field=QQ):
    with open(path, 'r') as f:
        try:
            doc = json.load(f)
        except ValueError as e:
            raise FamilyFormatError('%s: %s' % (path, e))
    return family_from_dict(doc, field)


def load_center(path, field=QQ):
    with open(path, 'r') as f:
        try:
            doc = json.load(f)
        except ValueError as e:
            raise FamilyFormatError('%s: %s' % (path, e))
    return center_from_dict(doc, field)


def save_family(family, path, names=None):
    with open(path, 'w') as f:
        json.dump(family_to_dict(family, names), f, indent=2, sort_keys=True)
