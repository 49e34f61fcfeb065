"""Symmetric-group families: Specht cells of standard tableaux and descent representations.

Permutations are written in one-line notation. The word s_{x1} ... s_{xk}
stands for the composite s_{x1} o ... o s_{xk}, so right multiplication by
s_i swaps the entries in positions i and i+1, and the Cayley edge pi -- pi s_i
is labelled by the transposition (pi(i), pi(i+1)).
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

import scalars
from ay_rep import (FLOAT_TOLERANCE, AyRepError, Functional, build_ay_rep, check_generic, character, delta)
from cells import a_cell, descent_class, make_cell
from scalars import MODE_Q1

log = logging.getLogger('SPECHT')

MAX_TABLEAU_SIZE = 8
MAX_ORACLE_SIZE = 6


class SpechtError(AyRepError):
    pass


def parse_partition(text):
    parts = tuple(int(part) for part in str(text).replace(' ', '').split(',') if part)
    check_partition(parts)
    return parts


def check_partition(shape):
    if not shape or any(part <= 0 for part in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise SpechtError(f'{shape} is not a partition')
    return tuple(shape)


def partitions(n):
    """Partitions of n as nonincreasing tuples, in increasing lexicographic order."""
    def build(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - part, part):
                yield (part,) + rest

    return sorted(build(n, n))


@dataclass(frozen=True)
class Tableau:
    rows: tuple

    @classmethod
    def parse(cls, text):
        """Rows separated by "/", entries by ",": "1,2/3"."""
        return cls(tuple(tuple(int(entry) for entry in row.split(',') if entry.strip())
                         for row in str(text).replace(' ', '').split('/') if row))

    @classmethod
    def row_reading(cls, shape):
        """The tableau filled row by row."""
        shape = check_partition(shape)
        entries = iter(range(1, sum(shape) + 1))
        return cls(tuple(tuple(next(entries) for _ in range(part)) for part in shape))

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    @property
    def size(self):
        return sum(self.shape)

    @cached_property
    def cells(self):
        """entry -> (row, column)"""
        return {entry: (i, j) for i, row in enumerate(self.rows) for j, entry in enumerate(row)}

    def content(self, entry):
        row, column = self.cells[entry]
        return column - row

    @property
    def is_standard(self):
        if sorted(self.cells) != list(range(1, self.size + 1)):
            return False
        if any(a < b for a, b in zip(self.shape, self.shape[1:])):
            return False
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                if j > 0 and row[j - 1] >= entry:
                    return False
                if i > 0 and self.rows[i - 1][j] >= entry:
                    return False
        return True

    def relabel(self, mapping):
        """Q^pi: every entry i replaced by pi(i) (pi in one-line notation, 1-based)."""
        return Tableau(tuple(tuple(mapping[entry - 1] for entry in row) for row in self.rows))

    def reading_word(self):
        return tuple(entry for row in self.rows for entry in row)

    def __str__(self):
        return '/'.join(','.join(str(entry) for entry in row) for row in self.rows)


def hook_lengths(shape):
    shape = check_partition(shape)
    conjugate = [sum(1 for part in shape if part > j) for j in range(shape[0])]
    return [[shape[i] - j - 1 + conjugate[j] - i for j in range(shape[i])] for i in range(len(shape))]


def hook_length_count(shape):
    """Number of standard tableaux: n! / product of hook lengths."""
    n = sum(check_partition(shape))
    return math.factorial(n) // math.prod(itertools.chain.from_iterable(hook_lengths(shape)))


def syt_enumerate(shape):
    """All standard tableaux of a shape, sorted by row-reading word."""
    shape = check_partition(shape)
    n = sum(shape)
    if n > MAX_TABLEAU_SIZE:
        raise SpechtError(f'tableau enumeration is limited to n <= {MAX_TABLEAU_SIZE}')
    found = []

    def place(rows, entry):
        if entry > n:
            found.append(Tableau(tuple(tuple(row) for row in rows)))
            return
        for i, part in enumerate(shape):
            if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(entry)
                place(rows, entry + 1)
                rows[i].pop()

    place([[] for _ in shape], 1)
    return sorted(found, key=Tableau.reading_word)


def _check_type_a(sys, n):
    if sys.kind != 'A' or sys.rank != n - 1:
        raise SpechtError(f'{sys.label} is not the symmetric group S{n} (type A{n - 1})')


def permutation_of(sys, w):
    """One-line notation of the permutation of w (type A only)."""
    perm = list(range(1, sys.rank + 2))
    for s in sys.words[w]:
        perm[s], perm[s + 1] = perm[s + 1], perm[s]
    return tuple(perm)


def element_of_permutation(sys, perm):
    """Bubble sort: perm s_{j1} ... s_{jk} = id gives perm = s_{jk} ... s_{j1}."""
    perm = list(perm)
    if sorted(perm) != list(range(1, sys.rank + 2)):
        raise SpechtError(f'{perm} is not a permutation of 1..{sys.rank + 1}')
    swaps = []
    for end in range(len(perm) - 1, 0, -1):
        for j in range(end):
            if perm[j] > perm[j + 1]:
                perm[j], perm[j + 1] = perm[j + 1], perm[j]
                swaps.append(j)
    return sys.from_word(tuple(reversed(swaps)))


def transposition_of(sys, t):
    """(i, j) with i < j for the reflection t."""
    moved = [k + 1 for k, value in enumerate(permutation_of(sys, t)) if value != k + 1]
    if len(moved) != 2:
        raise SpechtError(f'{sys.word_string(t)} is not a transposition')
    return tuple(moved)


def cycle_type(perm):
    structure = Permutation([p - 1 for p in perm]).cycle_structure
    return tuple(sorted((length for length, count in structure.items() for _ in range(count)), reverse=True))


def class_cycle_types(sys):
    """Conjugacy class id -> cycle type."""
    return {class_id: cycle_type(permutation_of(sys, members[0]))
            for class_id, members in enumerate(sys.conjugacy_classes)}


def tableau_cell(sys, Q):
    """K_Q = {pi : Q^{pi^-1} standard}."""
    if not Q.is_standard:
        raise SpechtError(f'tableau {Q} is not standard')
    _check_type_a(sys, Q.size)
    members = [w for w in range(sys.order) if Q.relabel(permutation_of(sys, sys.inverse[w])).is_standard]
    return make_cell(sys, members)


def hook_distance_vector(Q):
    """(c(2) - c(1), ..., c(n) - c(n-1)); pairing with the root of (i j) gives c(j) - c(i)."""
    if not Q.is_standard:
        raise SpechtError(f'tableau {Q} is not standard')
    return Functional.of(Q.content(k + 1) - Q.content(k) for k in range(1, Q.size))


def specht_rep(sys, Q, normalization='SNN', mode=MODE_Q1, params=None):
    """The representation on K_Q induced by the hook distance functional of Q."""
    cell = tableau_cell(sys, Q)
    f = hook_distance_vector(Q)
    if not check_generic(sys, cell, f).generic:
        raise SpechtError(f'hook distance functional of {Q} is not generic on its cell')
    A = frozenset(t for t in sys.reflections if abs(f.pair(sys.root(t))) == 1)
    if a_cell(sys, A, 0).members != cell.members:
        raise SpechtError(f'the cell of the hook distance functional of {Q} at e is not K_Q')
    return build_ay_rep(sys, cell, f, normalization, mode, params)


def descent_cell(sys, w):
    """K^delta(w): the A-cell of w for A = {t : <delta, alpha_t> = +-1}, the simple reflections."""
    f = delta(sys)
    A = frozenset(t for t in sys.reflections if abs(f.pair(sys.root(t))) == 1)
    return a_cell(sys, A, w)


def descent_rep(sys, w, normalization='SNN', mode=MODE_Q1, params=None):
    """rho^delta(w) on the standard left descent class of w."""
    cell = descent_cell(sys, w)
    expected = descent_class(sys, w)
    if cell.members != expected.members:
        raise SpechtError(f'the delta-cell of {sys.word_string(w)} is not its descent class')
    return build_ay_rep(sys, cell, delta(sys), normalization, mode, params)


def orthogonal_form_problems(sys, w):
    """Entries of the descent representation of w that differ from the orthogonal form."""
    problems = []
    exact = descent_rep(sys, w, 'SNN', MODE_Q1)
    symmetric = descent_rep(sys, w, 'SON', MODE_Q1)
    one = exact.domain.one
    for v in exact.basis:
        for s in range(sys.rank):
            t = sys.reflection_of(v, s)
            height = sys.root_system.height(t)
            sign = 1 if sys.is_up(v, s) else -1
            expected = scalars.from_fraction(Fraction(sign, height), exact.domain)
            if exact.entry(s, v, v) != expected:
                problems.append(f'a_{sys.generators[s]}({sys.word_string(v)}) is not {sign}/{height}')
            x = sys.right[v][s]
            if x not in exact.position:
                continue
            product = exact.entry(s, v, x) * exact.entry(s, x, v)
            if product != one - scalars.from_fraction(Fraction(1, height * height), exact.domain):
                problems.append(f'b-product at ({sys.word_string(v)}, {sys.generators[s]}) is not 1 - 1/{height}^2')
            off_diagonal = symmetric.entry(s, v, x)
            if abs(off_diagonal - math.sqrt(1 - 1 / height ** 2)) > FLOAT_TOLERANCE:
                problems.append(f'orthogonal entry at ({sys.word_string(v)}, {sys.generators[s]}) '
                                f'is {off_diagonal!r}')
    return problems


def character_by_cycle_type(rep, q_value=None):
    """Character values keyed by cycle type, in increasing lexicographic order of the types."""
    types = class_cycle_types(rep.system)
    values = character(rep, q_value)
    return dict(sorted((types[class_id], value) for class_id, value in values.items()))


def character_record(values):
    return {
        'classes': [','.join(str(part) for part in cycle) for cycle in values],
        'values': [scalars.render(value) for value in values.values()],
    }


def irreducibility_norm(rep):
    """(1/|W|) sum over g of chi(g) chi(g^-1), exact for exact representations."""
    sys = rep.system
    values = character(rep)
    total = 0
    for class_id, members in enumerate(sys.conjugacy_classes):
        inverse_class = sys.class_of(sys.inverse[members[0]])
        total = total + len(members) * values[class_id] * values[inverse_class]
    if isinstance(total, float):
        return total / sys.order
    return scalars.to_fraction(total) / sys.order


class _OrthogonalForm:
    """Young's orthogonal form on standard tableaux, float matrices."""

    def __init__(self, shape):
        self.tableaux = syt_enumerate(shape)
        self.n = sum(shape)
        index = {t.rows: i for i, t in enumerate(self.tableaux)}
        dimension = len(self.tableaux)
        self.generators = []
        for k in range(1, self.n):
            matrix = np.zeros((dimension, dimension))
            for i, tableau in enumerate(self.tableaux):
                axial = tableau.content(k + 1) - tableau.content(k)
                matrix[i, i] = 1 / axial
                swap = tableau.relabel([k + 1 if x == k else k if x == k + 1 else x for x in range(1, self.n + 1)])
                if swap.is_standard:
                    matrix[index[swap.rows], i] = math.sqrt(1 - 1 / axial ** 2)
            self.generators.append(matrix)

    def matrix(self, permutation):
        """Matrix of a sympy permutation (0-based), built from adjacent transpositions."""
        perm = list(permutation.array_form)
        result = np.eye(len(self.tableaux))
        for end in range(len(perm) - 1, 0, -1):
            for j in range(end):
                if perm[j] > perm[j + 1]:
                    perm[j], perm[j + 1] = perm[j + 1], perm[j]
                    result = self.generators[j] @ result
        return result


def specht_oracle(shape):
    """(dimension, character by cycle type) from the orthogonal form summed over whole classes."""
    shape = check_partition(shape)
    n = sum(shape)
    if n > MAX_ORACLE_SIZE:
        raise SpechtError(f'the oracle is limited to n <= {MAX_ORACLE_SIZE}')
    form = _OrthogonalForm(shape)
    totals, sizes = {}, {}
    for permutation in SymmetricGroup(n).generate():
        lengths = []
        for length, count in permutation.cycle_structure.items():
            lengths.extend([length] * count)
        cycle = tuple(sorted(lengths, reverse=True))
        totals[cycle] = totals.get(cycle, 0.0) + float(np.trace(form.matrix(permutation)))
        sizes[cycle] = sizes.get(cycle, 0) + 1
    values = {cycle: totals[cycle] / sizes[cycle] for cycle in sorted(totals)}
    return hook_length_count(shape), values


def matches_oracle(rep, shape):
    """Exact character against the rounded float oracle, after checking the oracle is integral."""
    dimension, oracle = specht_oracle(shape)
    if rep.dimension != dimension:
        return False
    values = character_by_cycle_type(rep)
    for cycle, expected in oracle.items():
        rounded = round(expected)
        if abs(expected - rounded) > FLOAT_TOLERANCE or scalars.to_fraction(values[cycle]) != rounded:
            return False
    return True
