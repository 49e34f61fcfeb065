"""Abstract Young representations on cells.

A representation is stored row-wise: row w of the matrix of generator s holds
the coefficients of rho_s(C_w), so the only nonzero entries are a_s(w) on the
diagonal and b_s(w) in column ws. Coefficients come from a table indexed by
the reflection wsw^-1 and the direction of the edge (Axiom B); the table is
either built from a functional f (a_t = 1/<f, alpha_t>, or 1/[<f, alpha_t>]_q)
or given by hand.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

import scalars
from cells import UP, Cell, CellError, boundary_data, geodesic_counts, is_strongly_connected, make_cell
from coxeter_core import coset_shortest, generator_classes
from scalars import MODE_FLOAT, MODE_HECKE, MODE_Q1, HeckeParams

log = logging.getLogger('AYREP')

NORMALIZATIONS = ('SNN', 'RSN', 'CSN', 'SON')
EXACT_NORMALIZATIONS = ('SNN', 'RSN', 'CSN')
FLOAT_TOLERANCE = 1e-9


class AyRepError(ValueError):
    pass


class NotSimplyLacedError(AyRepError):
    pass


class NotGenericError(AyRepError):
    def __init__(self, report):
        self.report = report
        first = report.violations[0]
        super().__init__(f'functional is not generic on the cell: condition ({first.condition}) fails, '
                         f'{len(report.violations)} violation(s)')


class RelationError(AyRepError):
    def __init__(self, report):
        self.report = report
        super().__init__(f'group relations fail: {report.summary()}')


class RecoveryError(AyRepError):
    pass


class InvalidParametersError(AyRepError):
    pass


@dataclass(frozen=True)
class Functional:
    coords: tuple

    @classmethod
    def of(cls, values):
        return cls(tuple(Fraction(value) for value in values))

    @classmethod
    def parse(cls, text):
        return cls.of(part.strip() for part in str(text).split(',') if part.strip())

    def pair(self, root):
        return sum((c * r for c, r in zip(self.coords, root)), Fraction(0))

    @property
    def is_integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self):
        return ','.join(str(c) for c in self.coords)


def delta(sys):
    """The functional pairing every positive root with its height."""
    return Functional.of(sys.delta_functional())


@dataclass(frozen=True)
class Violation:
    condition: str
    reflections: tuple
    value: object


@dataclass
class GenericityReport:
    violations: list = field(default_factory=list)
    epsilon_signs: dict = field(default_factory=dict)

    @property
    def generic(self):
        return not self.violations


def _as_cell(sys, K):
    return K if isinstance(K, Cell) else make_cell(sys, K)


def check_generic(sys, K, f):
    """Conditions (i)-(iii) of genericity, with the epsilon signs for cells not containing e."""
    K = _as_cell(sys, K)
    if not K.members:
        raise CellError('genericity needs a nonempty cell')
    convexity = K.convexity
    if not convexity:
        u, v = convexity.endpoints
        raise CellError(f'cell is not convex: {sys.word_string(convexity.witness)} lies on a geodesic from '
                        f'{sys.word_string(u)} to {sys.word_string(v)}')
    if len(f.coords) != sys.rank:
        raise AyRepError(f'functional has {len(f.coords)} coordinates, the system has rank {sys.rank}')
    internal, boundary, _ = boundary_data(sys, K)
    report = GenericityReport()
    for t in sorted(internal):
        value = f.pair(sys.root(t))
        if value in (0, 1, -1):
            report.violations.append(Violation('i', (t,), value))
    for t in sorted(boundary):
        value = f.pair(sys.root(t))
        if value not in (1, -1):
            report.violations.append(Violation('ii', (t,), value))
    for w in K.members:
        for s, t in itertools.combinations(range(sys.rank), 2):
            if sys.coxeter_matrix[s][t] != 3:
                continue
            if sys.right[w][s] in K or sys.right[w][t] in K:
                continue
            sign_s = 1 if sys.is_up(w, s) else -1
            sign_t = 1 if sys.is_up(w, t) else -1
            report.epsilon_signs[(w, s)] = sign_s
            report.epsilon_signs[(w, t)] = sign_t
            value_s = sign_s * f.pair(sys.root(sys.reflection_of(w, s)))
            value_t = sign_t * f.pair(sys.root(sys.reflection_of(w, t)))
            if value_s != value_t or abs(value_s) != 1:
                report.violations.append(Violation(
                    'iii', (sys.reflection_of(w, s), sys.reflection_of(w, t)), (value_s, value_t)))
    return report


@dataclass(frozen=True)
class CoefficientTable:
    a_up: dict
    a_down: dict
    b_up: dict
    b_down: dict
    a_out: dict
    normalization: str = 'SNN'
    mode: str = MODE_Q1
    params: HeckeParams = None


def _reflection_parameter(sys, domain, params, t):
    if domain is None or scalars.is_rational_field(domain):
        return QQ.one if domain is not None else 1.0
    if params is None:
        return scalars.q_of(domain)
    class_id = sys.class_of(t)
    for s, element in enumerate(sys.generator_elements):
        if sys.class_of(element) == class_id:
            return params.parameter(domain, s)
    raise AyRepError(f'{sys.word_string(t)} is not a reflection')


def up_coefficient(table, cell, t, q):
    """a_t in the upward direction, recovered from the boundary value when needed."""
    if t in table.a_up:
        return table.a_up[t]
    if t in table.a_out and cell.out_direction is not None:
        value = table.a_out[t]
        return value if cell.out_direction[t] == UP else (1 - q) - value
    return None


def normalize(a_up, a_down, normalization, one):
    """(b_up, b_down) with b_up * b_down = (1 - a_up)(1 - a_down)."""
    if normalization == 'SNN':
        return (one - a_up) * (one - a_down), one
    if normalization == 'RSN':
        return one - a_up, one - a_down
    if normalization == 'CSN':
        return one - a_down, one - a_up
    if normalization == 'SON':
        product = float(scalars.to_fraction((one - a_up) * (one - a_down)))
        if product < 0:
            raise AyRepError('symmetric normalization needs (1 - a_up)(1 - a_down) >= 0')
        root = math.sqrt(product)
        return root, root
    raise AyRepError(f'unknown normalization "{normalization}", expected one of {", ".join(NORMALIZATIONS)}')


def functional_table(sys, K, f, normalization='SNN', mode=MODE_Q1, params=None):
    K = _as_cell(sys, K)
    internal, boundary, direction = boundary_data(sys, K)
    domain = scalars.field_for(MODE_Q1 if mode == MODE_FLOAT else mode, params)
    one = domain.one
    a_up, a_down, b_up, b_down, a_out = {}, {}, {}, {}, {}
    for t in sorted(internal | boundary):
        value = f.pair(sys.root(t))
        if value == 0:
            raise AyRepError(f'<f, alpha> vanishes on {sys.word_string(t)}')
        if mode == MODE_HECKE:
            q = _reflection_parameter(sys, domain, params, t)
            a_up[t] = one / scalars.q_integer(int(value), domain, q)
        else:
            a_up[t] = one / scalars.from_fraction(value, domain)
    for t in sorted(internal):
        q = _reflection_parameter(sys, domain, params, t)
        a_down[t] = (one - q) - a_up[t]
        b_up[t], b_down[t] = normalize(a_up[t], a_down[t], normalization, one)
    for t in sorted(boundary):
        q = _reflection_parameter(sys, domain, params, t)
        a_out[t] = a_up[t] if direction[t] == UP else (one - q) - a_up[t]
    return CoefficientTable(a_up, a_down, b_up, b_down, a_out, normalization,
                            MODE_FLOAT if normalization == 'SON' else mode, params)


@dataclass(frozen=True)
class AYRep:
    system: object = field(repr=False)
    cell: Cell
    basis: tuple
    rows: dict = field(repr=False)
    mode: str = MODE_Q1
    domain: object = None
    table: CoefficientTable = field(default=None, repr=False)
    params: HeckeParams = None
    relations: object = field(default=None, repr=False)

    @cached_property
    def position(self):
        return {w: i for i, w in enumerate(self.basis)}

    @property
    def dimension(self):
        return len(self.basis)

    @cached_property
    def matrices(self):
        return {s: _matrix(self, rows) for s, rows in self.rows.items()}

    def entry(self, s, w, x):
        return self.rows[s][self.position[w]][self.position[x]]

    def parameter(self, s):
        if self.mode == MODE_FLOAT:
            return 1.0
        if self.mode == MODE_Q1:
            return self.domain.one
        if self.params is None:
            return scalars.q_of(self.domain)
        return self.params.parameter(self.domain, s)

    def in_basis(self, basis):
        """The same representation with rows and columns permuted to ``basis``."""
        order = [self.position[w] for w in basis]
        rows = {s: [[matrix[i][j] for j in order] for i in order] for s, matrix in self.rows.items()}
        return replace(self, basis=tuple(basis), rows=rows)


def _matrix(rep, rows):
    if rep.mode == MODE_FLOAT:
        return np.array(rows, dtype=float).reshape(len(rows), len(rows))
    # sparse: most entries vanish
    entries = {i: {j: value for j, value in enumerate(row) if value} for i, row in enumerate(rows)}
    return DomainMatrix({i: row for i, row in entries.items() if row}, (len(rows), len(rows)), rep.domain)


def _diagonal(rep, value):
    n = rep.dimension
    zero = 0.0 if rep.mode == MODE_FLOAT else rep.domain.zero
    return _matrix(rep, [[value if i == j else zero for j in range(n)] for i in range(n)])


def _entries(rep, matrix):
    return matrix.tolist() if rep.mode == MODE_FLOAT else matrix.to_list()


def _matrices_equal(rep, left, right):
    if rep.mode == MODE_FLOAT:
        return bool(np.allclose(left, right, atol=FLOAT_TOLERANCE, rtol=0))
    return _entries(rep, left) == _entries(rep, right)


def _is_zero(rep, value):
    if rep.mode == MODE_FLOAT:
        return abs(value) <= FLOAT_TOLERANCE
    return not value


def _product(rep, left, right):
    return left @ right if rep.mode == MODE_FLOAT else left * right


def _assemble(sys, cell, table, basis, convert):
    position = {w: i for i, w in enumerate(basis)}
    n = len(basis)
    rows = {}
    for s in range(sys.rank):
        matrix = [[None] * n for _ in range(n)]
        for i, w in enumerate(basis):
            x = sys.right[w][s]
            t = sys.reflection_of(w, s)
            try:
                if x in position:
                    up = sys.is_up(w, s)
                    matrix[i][i] = convert((table.a_up if up else table.a_down)[t])
                    matrix[i][position[x]] = convert((table.b_up if up else table.b_down)[t])
                else:
                    matrix[i][i] = convert(table.a_out[t])
            except KeyError:
                raise AyRepError(f'coefficient table has no entry for reflection {sys.word_string(t)} '
                                 f'at ({sys.word_string(w)}, {sys.generators[s]})') from None
        rows[s] = matrix
    return rows


def _check_params(sys, params):
    if params is None:
        return
    if len(params.symbols) != sys.rank:
        raise InvalidParametersError(f'{len(params.symbols)} Hecke parameters for {sys.rank} generators')
    try:
        params.check(generator_classes(sys))
    except ValueError as error:
        raise InvalidParametersError(str(error)) from None


def build_from_table(sys, K, table, basis=None):
    """Assemble the matrices of a coefficient table; the relation report rides along on the result."""
    K = _as_cell(sys, K)
    if table.mode == MODE_HECKE:
        _check_params(sys, table.params)
    basis = tuple(basis) if basis is not None else K.members
    if table.mode == MODE_FLOAT:
        domain = None
        zero = 0.0

        def convert(value):
            return value if isinstance(value, float) else float(scalars.to_fraction(value))
    else:
        domain = scalars.field_for(table.mode, table.params)
        zero = domain.zero

        def convert(value):
            return value if isinstance(value, domain.dtype) else domain.convert(value)

    rows = _assemble(sys, K, table, basis, convert)
    for matrix in rows.values():
        for row in matrix:
            for j, value in enumerate(row):
                if value is None:
                    row[j] = zero
    rep = AYRep(sys, K, basis, rows, table.mode, domain, table, table.params)
    return replace(rep, relations=verify_relations(rep))


def build_ay_rep(sys, K, f, normalization='SNN', mode=MODE_Q1, params=None):
    """Representation induced by a generic functional; relations are verified before returning."""
    if not sys.is_simply_laced:
        raise NotSimplyLacedError(f'{sys.label} is not simply laced; use a coefficient table instead')
    if not (sys.is_irreducible or sys.is_parabolic):
        raise AyRepError(f'{sys.label} is reducible; build on each irreducible component')
    if mode == MODE_HECKE:
        _check_params(sys, params)
    K = _as_cell(sys, K)
    report = check_generic(sys, K, f)
    if not report.generic:
        raise NotGenericError(report)
    if normalization == 'SON' and mode != MODE_Q1:
        raise AyRepError('the symmetric normalization exists only at q = 1 (floating point)')
    if mode == MODE_HECKE and not f.is_integral:
        raise AyRepError('Hecke mode needs integer pairings <f, alpha_s>')
    table = functional_table(sys, K, f, normalization, mode, params)
    rep = build_from_table(sys, K, table)
    if not rep.relations.ok:
        raise RelationError(rep.relations)
    log.debug(f'built {rep.dimension}-dimensional representation of {sys.label} ({normalization}, {mode})')
    return rep


@dataclass(frozen=True)
class CosetFailure:
    element: int
    generators: tuple
    kind: str


@dataclass
class RelationReport:
    quadratic_failures: list = field(default_factory=list)
    braid_failures: list = field(default_factory=list)
    coset_failures: list = field(default_factory=list)
    table_issues: list = field(default_factory=list)
    coset_checks: int = 0

    @property
    def ok(self):
        return not (self.quadratic_failures or self.braid_failures or self.coset_failures or self.table_issues)

    def summary(self):
        return (f'{len(self.quadratic_failures)} quadratic, {len(self.braid_failures)} braid, '
                f'{len(self.coset_failures)} coset, {len(self.table_issues)} table failure(s)')

    def to_dict(self, sys):
        return {
            'ok': self.ok,
            'quadratic_failures': [sys.generators[s] for s in self.quadratic_failures],
            'braid_failures': [[sys.generators[s], sys.generators[t]] for s, t in self.braid_failures],
            'coset_failures': [{'w': sys.word_string(failure.element),
                                'generators': [sys.generators[s] for s in failure.generators],
                                'kind': failure.kind} for failure in self.coset_failures],
            'table_issues': list(self.table_issues),
            'coset_checks': self.coset_checks,
        }


def _alternating(first, second, length):
    return tuple(first if i % 2 == 0 else second for i in range(length))


def evaluate_word(rep, word):
    """Matrix of rho_{s_1 ... s_k}, i.e. M_{s_k} ... M_{s_1} in the row convention."""
    word = rep.system.parse_word(word) if isinstance(word, str) else tuple(word)
    one = 1.0 if rep.mode == MODE_FLOAT else rep.domain.one
    result = _diagonal(rep, one)
    for s in word:
        result = _product(rep, rep.matrices[s], result)
    return result


def _table_issues(rep):
    sys, table, cell = rep.system, rep.table, rep.cell
    issues = []
    if table is None or rep.mode == MODE_FLOAT:
        return issues
    one = rep.domain.one
    for t in sorted(cell.internal_reflections):
        q = _reflection_parameter(sys, rep.domain, rep.params, t)
        name = sys.word_string(t)
        a_up, a_down = table.a_up.get(t), table.a_down.get(t)
        b_up, b_down = table.b_up.get(t), table.b_down.get(t)
        if None in (a_up, a_down, b_up, b_down):
            issues.append(f'{name}: incomplete internal coefficients')
            continue
        if a_up + a_down != one - q:
            issues.append(f'{name}: a_up + a_down != 1 - q')
        if b_up * b_down != (one - a_up) * (one - a_down):
            issues.append(f'{name}: b_up * b_down != (1 - a_up)(1 - a_down)')
    for t in sorted(cell.boundary_reflections):
        q = _reflection_parameter(sys, rep.domain, rep.params, t)
        value = table.a_out.get(t)
        if value not in (one, -q):
            issues.append(f'{sys.word_string(t)}: boundary coefficient is not 1 or -q')
    return issues


def _coset_checks(rep, report):
    sys, cell, table = rep.system, rep.cell, rep.table
    if table is None or rep.mode == MODE_FLOAT or cell.out_direction is None:
        return
    one = rep.domain.one
    for s, t in itertools.combinations(range(sys.rank), 2):
        if sys.coxeter_matrix[s][t] != 3:
            continue
        q = rep.parameter(s)
        seen = set()
        for x in cell.members:
            w = coset_shortest(sys, x, (s, t))
            if w in seen:
                continue
            seen.add(w)
            ws, wt = sys.right[w][s], sys.right[w][t]
            coset = {w, ws, wt, sys.right[ws][t], sys.right[wt][s], sys.right[sys.right[ws][t]][s]}
            inside = sorted(y for y in coset if y in cell)
            report.coset_checks += 1
            if len(inside) >= 2:
                reflections = (sys.reflection_of(ws, t), sys.reflection_of(w, s), sys.reflection_of(w, t))
                middle, first, second = (up_coefficient(table, cell, r, q) for r in reflections)
                if None in (middle, first, second) or not (middle and first and second):
                    report.coset_failures.append(CosetFailure(w, (s, t), 'missing-or-zero-coefficient'))
                elif rep.mode == MODE_Q1:
                    if one / middle != one / first + one / second:
                        report.coset_failures.append(CosetFailure(w, (s, t), 'reciprocal-additivity'))
                else:
                    d = [scalars.d_coefficient(a, rep.domain, q) for a in (middle, first, second)]
                    if d[0] != d[1] * d[2]:
                        report.coset_failures.append(CosetFailure(w, (s, t), 'd-multiplicativity'))
            elif len(inside) == 1:
                y = inside[0]
                a_s, a_t = rep.entry(s, y, y), rep.entry(t, y, y)
                if a_s != a_t or a_s not in (one, -q):
                    report.coset_failures.append(CosetFailure(w, (s, t), 'single-element-coset'))


def verify_relations(rep):
    """Quadratic and braid relations as exact matrix identities, plus per-coset scalar diagnostics."""
    sys = rep.system
    report = RelationReport()
    one = 1.0 if rep.mode == MODE_FLOAT else rep.domain.one
    identity = _diagonal(rep, one)
    zero_matrix = _diagonal(rep, 0.0 if rep.mode == MODE_FLOAT else rep.domain.zero)
    for s in range(sys.rank):
        matrix = rep.matrices[s]
        q = rep.parameter(s)
        quadratic = _product(rep, matrix - identity, matrix + _diagonal(rep, q))
        if not _matrices_equal(rep, quadratic, zero_matrix):
            report.quadratic_failures.append(s)
    for s, t in itertools.combinations(range(sys.rank), 2):
        m = sys.coxeter_matrix[s][t]
        if not _matrices_equal(rep, evaluate_word(rep, _alternating(s, t, m)),
                               evaluate_word(rep, _alternating(t, s, m))):
            report.braid_failures.append((s, t))
    report.table_issues.extend(_table_issues(rep))
    _coset_checks(rep, report)
    if not report.ok:
        log.debug(f'relations fail on {sys.label}: {report.summary()}')
    return report


def trace(rep, matrix):
    entries = _entries(rep, matrix)
    if rep.mode == MODE_FLOAT:
        return float(sum(entries[i][i] for i in range(len(entries))))
    return sum((entries[i][i] for i in range(len(entries))), rep.domain.zero)


def specialize_rep(rep, q_value):
    """The Hecke representation with q replaced by a rational value (exact, over QQ)."""
    if rep.mode != MODE_HECKE:
        return rep
    q_value = Fraction(q_value)
    rows = {s: [[scalars.specialize(value, q_value, rep.domain) for value in row] for row in matrix]
            for s, matrix in rep.rows.items()}
    table = None
    if rep.table is not None and q_value == 1:
        def specialized(values):
            return {t: scalars.specialize(value, q_value, rep.domain) for t, value in values.items()}
        source = rep.table
        table = CoefficientTable(specialized(source.a_up), specialized(source.a_down), specialized(source.b_up),
                                 specialized(source.b_down), specialized(source.a_out), source.normalization,
                                 MODE_Q1, None)
    return replace(rep, rows=rows, mode=MODE_Q1, domain=QQ, table=table, params=None, relations=None)


class CharacterError(AyRepError):
    pass


def character(rep, q_value=None, check_representatives=True):
    """Trace on one representative per conjugacy class (class id -> value).

    Hecke representations are specialized at ``q_value`` first; the traces are
    a class function only at q = 1.
    """
    sys = rep.system
    if rep.mode == MODE_HECKE:
        if q_value is None:
            raise AyRepError('Hecke characters need a value for q')
        q_value = Fraction(q_value)
        check_representatives = check_representatives and q_value == 1
        rep = specialize_rep(rep, q_value)
    values = {}
    for class_id, members in enumerate(sys.conjugacy_classes):
        value = trace(rep, evaluate_word(rep, sys.words[members[0]]))
        if check_representatives and len(members) > 1:
            other = trace(rep, evaluate_word(rep, sys.words[members[-1]]))
            if not _scalars_equal(rep.mode, value, other):
                raise CharacterError(f'trace differs on class of {sys.word_string(members[0])}')
        values[class_id] = value
    return values


def _scalars_equal(mode, left, right):
    if mode == MODE_FLOAT or isinstance(left, float) or isinstance(right, float):
        return abs(float(scalars.to_fraction(left) if not isinstance(left, float) else left)
                   - float(scalars.to_fraction(right) if not isinstance(right, float) else right)) <= FLOAT_TOLERANCE
    return left == right


def is_minimal(rep):
    """Strong connectivity of the arcs w -> ws carrying b_s(w) != 0."""
    sys = rep.system

    def feasible(w, s):
        return not _is_zero(rep, rep.entry(s, w, sys.right[w][s]))

    return is_strongly_connected(sys, rep.basis, feasible)


def geodesic_feasibility(rep):
    """Pairs (u, v) where some but not all geodesics have nonzero b along every arc."""
    sys = rep.system

    def feasible(w, s):
        return not _is_zero(rep, rep.entry(s, w, sys.right[w][s]))

    mixed = []
    for u, v in itertools.permutations(rep.cell.members, 2):
        total, good = geodesic_counts(sys, rep.cell, feasible, u, v)
        if 0 < good < total:
            mixed.append((u, v, total, good))
    return mixed


def derive_table(rep):
    """Coefficient table read off the matrices, plus the (w, s) where Axiom B grouping fails."""
    sys, cell = rep.system, rep.cell
    stores = {'a_up': {}, 'a_down': {}, 'b_up': {}, 'b_down': {}, 'a_out': {}}
    violations = []

    def put(name, t, value, w, s):
        store = stores[name]
        if t in store and not _scalars_equal(rep.mode, store[t], value):
            violations.append((w, s, t))
        store.setdefault(t, value)

    for w in rep.basis:
        for s in range(sys.rank):
            x = sys.right[w][s]
            t = sys.reflection_of(w, s)
            if x in rep.position:
                direction = 'up' if sys.is_up(w, s) else 'down'
                put(f'a_{direction}', t, rep.entry(s, w, w), w, s)
                put(f'b_{direction}', t, rep.entry(s, w, x), w, s)
            else:
                put('a_out', t, rep.entry(s, w, w), w, s)
    if cell.out_direction is not None:
        for t, value in stores['a_out'].items():
            if t not in stores['a_up']:
                q = _reflection_parameter(sys, rep.domain, rep.params, t)
                stores['a_up'][t] = value if cell.out_direction[t] == UP else (1 - q) - value
    table = CoefficientTable(stores['a_up'], stores['a_down'], stores['b_up'], stores['b_down'], stores['a_out'],
                             rep.table.normalization if rep.table is not None else 'derived', rep.mode, rep.params)
    return table, violations


def axiom_b_grouping(rep):
    """(w, s, t) where a_s(w) or b_s(w) is not determined by (wsw^-1, direction)."""
    return derive_table(rep)[1]


def recover_functional(rep):
    """The functional f with a_t = 1/<f, alpha_t> (or 1/[<f, alpha_t>]_q) and its genericity report."""
    sys, cell = rep.system, rep.cell
    if rep.mode not in (MODE_Q1, MODE_HECKE):
        raise RecoveryError('functional recovery needs an exact representation')
    if 0 not in cell:
        raise RecoveryError('functional recovery needs the identity in the cell')
    table = rep.table if rep.table is not None else derive_table(rep)[0]
    domain = rep.domain
    one = domain.one
    coords = []
    for s, t in enumerate(sys.generator_elements):
        q = rep.parameter(s)
        a = up_coefficient(table, cell, t, q)
        if a is None or not a:
            raise RecoveryError(f'a-coefficient of {sys.generators[s]} is zero or missing')
        if rep.mode == MODE_Q1:
            coords.append(scalars.to_fraction(one / a))
        else:
            exponent = scalars.q_exponent(scalars.d_coefficient(a, domain, q), domain, q)
            if exponent is None:
                raise RecoveryError(f'd-coefficient of {sys.generators[s]} is not an integral power of q')
            coords.append(Fraction(exponent))
    f = Functional(tuple(coords))
    for t in sorted(cell.internal_reflections | cell.boundary_reflections):
        value = f.pair(sys.root(t))
        q = _reflection_parameter(sys, domain, rep.params, t)
        a = up_coefficient(table, cell, t, q)
        if value == 0 or a is None:
            raise RecoveryError(f'reflection {sys.word_string(t)} is not of functional type')
        if rep.mode == MODE_Q1:
            expected = one / scalars.from_fraction(value, domain)
        else:
            expected = one / scalars.q_integer(int(value), domain, q)
        if a != expected:
            raise RecoveryError(f'reflection {sys.word_string(t)} is not of functional type')
    return f, check_generic(sys, cell, f)


def translate_to_identity(rep):
    """The same matrices on v^-1 K, v the shortest member, in ShortLex order of the new cell."""
    sys, cell = rep.system, rep.cell
    v = cell.minimum
    v_inverse = sys.inverse[v]
    moved = {}
    for w in rep.basis:
        x = sys.multiply(v_inverse, w)
        if sys.lengths[w] != sys.lengths[v] + sys.lengths[x]:
            raise AyRepError(f'{sys.word_string(v)} is not a gate of the cell')
        moved[w] = x
    translated = make_cell(sys, moved.values())
    rows = rep.in_basis([w for w in sorted(rep.basis, key=lambda w: moved[w])]).rows
    return replace(rep, cell=translated, basis=translated.members, rows=rows, table=None, relations=None)


@dataclass(frozen=True)
class BIndependence:
    equal: bool
    characters: dict
    differing: tuple = None


def b_independence_check(sys, K, f, normalizations=NORMALIZATIONS):
    """Characters of the representations under several normalizations (exact ones compared exactly)."""
    characters = {normalization: character(build_ay_rep(sys, K, f, normalization, MODE_Q1))
                  for normalization in normalizations}
    exact = [normalization for normalization in normalizations if normalization != 'SON']
    reference = characters[exact[0]] if exact else characters[normalizations[0]]
    for normalization, values in characters.items():
        mode = MODE_FLOAT if normalization == 'SON' else MODE_Q1
        for class_id, value in values.items():
            if not _scalars_equal(mode, value, reference[class_id]):
                return BIndependence(False, characters, (normalization, class_id))
    return BIndependence(True, characters)


def character_equal(first, second, q_value=None):
    """Equality of characters, a necessary test for isomorphism of two representations."""
    if first.system is not second.system:
        raise AyRepError('characters of different systems can\'t be compared')
    left, right = character(first, q_value), character(second, q_value)
    mode = MODE_FLOAT if MODE_FLOAT in (first.mode, second.mode) else MODE_Q1
    return all(_scalars_equal(mode, left[c], right[c]) for c in left)


def generic_functionals(sys, K, bound):
    """Integer functionals with coordinates in [-bound, bound] that are generic on K."""
    K = _as_cell(sys, K)
    for coords in itertools.product(range(-bound, bound + 1), repeat=sys.rank):
        f = Functional.of(coords)
        if check_generic(sys, K, f).generic:
            yield f


def find_minimal_witness(sys, K, bound=3, mode=MODE_Q1):
    """First functional in the search box whose representation on K is a minimal AY pair, or None."""
    for f in generic_functionals(sys, K, bound):
        try:
            rep = build_ay_rep(sys, K, f, 'SNN', mode)
        except RelationError:
            continue
        if is_minimal(rep):
            return f, rep
    return None


@dataclass(frozen=True)
class FunctionalCensus:
    generic_functionals: int
    distinct_tables: int
    distinct_characters: int


def functional_census(sys, K, bound=2):
    """Functional-induced representations on K found in a bounded integer box."""
    count = 0
    tables, characters = set(), set()
    for f in generic_functionals(sys, K, bound):
        rep = build_ay_rep(sys, K, f, 'SNN', MODE_Q1)
        count += 1
        tables.add(tuple(sorted((t, scalars.render(a)) for t, a in rep.table.a_up.items())))
        characters.add(tuple(scalars.render(value) for _, value in sorted(character(rep).items())))
    return FunctionalCensus(count, len(tables), len(characters))


def table_to_dict(sys, table):
    def rendered(values):
        return {sys.word_string(t): scalars.render(value) for t, value in sorted(values.items())}

    return {
        'mode': table.mode,
        'normalization': table.normalization,
        'a_up': rendered(table.a_up),
        'a_down': rendered(table.a_down),
        'b_up': rendered(table.b_up),
        'b_down': rendered(table.b_down),
        'a_out': rendered(table.a_out),
    }


def table_from_dict(sys, data, params=None):
    mode = data.get('mode', MODE_Q1)
    if mode == MODE_FLOAT:
        raise AyRepError('floating point tables can\'t be read back exactly')
    domain = scalars.field_for(mode, params)

    def parsed(name):
        values = {}
        for word, text in data.get(name, {}).items():
            t = sys.from_word(sys.parse_word(word))
            if t not in sys.reflections:
                raise AyRepError(f'{word} is not a reflection of {sys.label}')
            values[t] = scalars.parse(text, domain)
        return values

    return CoefficientTable(parsed('a_up'), parsed('a_down'), parsed('b_up'), parsed('b_down'), parsed('a_out'),
                            data.get('normalization', 'SNN'), mode, params)
