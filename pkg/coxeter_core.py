"""Finite Coxeter systems as exact element tables.

Typed and raw systems act by integer Cartan matrices on simple-root
coordinates; dihedral systems I2(m) use a (rotation, flip) model so any finite
m works. Elements are numbered in ShortLex order of their normal forms, and
every other table (lengths, inverses, reflections, classes) is indexed by that
number.
"""
import logging
import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import networkx as nx
import numpy as np

log = logging.getLogger('CORE')

DEFAULT_MAX_ORDER = 10 ** 6

_TYPE_PATTERN = re.compile(r'^\s*([ABCDEFGI])\s*_?\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$', re.IGNORECASE)
_WORD_PATTERN = re.compile(r's(\d+)')
_IDENTITY_WORDS = ('', 'e', 'id', '1')

# a_ij * a_ji of the Cartan matrix -> m(s_i, s_j)
_CARTAN_PRODUCT_TO_M = {0: 2, 1: 3, 2: 4, 3: 6}
_M_TO_CARTAN_PAIR = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}


class CoxeterError(ValueError):
    pass


class InvalidCoxeterMatrixError(CoxeterError):
    pass


class UnsupportedMatrixError(CoxeterError):
    pass


class OrderGuardError(CoxeterError):
    pass


class UnknownGeneratorError(CoxeterError):
    pass


class ElementError(CoxeterError):
    pass


def _chain(rank):
    cartan = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        cartan[i][i] = 2
        if i + 1 < rank:
            cartan[i][i + 1] = cartan[i + 1][i] = -1
    return cartan


def cartan_matrix(letter, rank):
    """Bourbaki-numbered Cartan matrix of a crystallographic type."""
    letter = letter.upper()
    if letter == 'A' and rank >= 1:
        return _chain(rank)
    if letter in ('B', 'C') and rank >= 2:
        cartan = _chain(rank)
        cartan[rank - 2][rank - 1] = -2
        return cartan
    if letter == 'D' and rank >= 4:
        cartan = _chain(rank - 1) + [[0] * (rank - 1)]
        for row in cartan:
            row.append(0)
        cartan[rank - 1][rank - 1] = 2
        cartan[rank - 3][rank - 1] = cartan[rank - 1][rank - 3] = -1
        return cartan
    if letter == 'E' and rank in (6, 7, 8):
        cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, rank - 1)]
        for i, j in edges:
            cartan[i][j] = cartan[j][i] = -1
        return cartan
    if letter == 'F' and rank == 4:
        cartan = _chain(4)
        cartan[1][2] = -2
        return cartan
    if letter == 'G' and rank == 2:
        return [[2, -1], [-3, 2]]
    raise CoxeterError(f'unknown Coxeter type {letter}{rank}')


def classical_order(letter, rank, m=None):
    letter = letter.upper()
    if letter == 'A':
        return math.factorial(rank + 1)
    if letter in ('B', 'C'):
        return 2 ** rank * math.factorial(rank)
    if letter == 'D':
        return 2 ** (rank - 1) * math.factorial(rank)
    if letter == 'I':
        return 2 * m
    return {('E', 6): 51840, ('E', 7): 2903040, ('E', 8): 696729600,
            ('F', 4): 1152, ('G', 2): 12}[(letter, rank)]


def coxeter_from_cartan(cartan):
    rank = len(cartan)
    matrix = [[1] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(rank):
            if i != j:
                product = cartan[i][j] * cartan[j][i]
                if product not in _CARTAN_PRODUCT_TO_M:
                    raise UnsupportedMatrixError(f'Cartan entries ({i + 1}, {j + 1}) are not of finite type')
                matrix[i][j] = _CARTAN_PRODUCT_TO_M[product]
    return matrix


def cartan_from_coxeter(matrix):
    rank = len(matrix)
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            m = matrix[i][j]
            if m not in _M_TO_CARTAN_PAIR:
                raise UnsupportedMatrixError(
                    f'm(s{i + 1},s{j + 1}) = {m} has no integer Cartan realization (only 2, 3, 4, 6 '
                    f'are supported above rank 2)')
            cartan[i][j], cartan[j][i] = _M_TO_CARTAN_PAIR[m]
    return cartan


def validate_coxeter_matrix(matrix):
    if not isinstance(matrix, (list, tuple)) or not matrix:
        raise InvalidCoxeterMatrixError('Coxeter matrix must be a nonempty square matrix')
    rank = len(matrix)
    for i, row in enumerate(matrix):
        if len(row) != rank:
            raise InvalidCoxeterMatrixError(f'row {i + 1} has {len(row)} entries, expected {rank}')
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise InvalidCoxeterMatrixError(f'entry ({i + 1}, {j + 1}) = {entry!r} is not a finite integer')
            if i == j and entry != 1:
                raise InvalidCoxeterMatrixError(f'diagonal entry ({i + 1}, {i + 1}) = {entry}, expected 1')
            if i != j and entry < 2:
                raise InvalidCoxeterMatrixError(f'entry ({i + 1}, {j + 1}) = {entry} must be >= 2')
            if matrix[j][i] != entry:
                raise InvalidCoxeterMatrixError(f'matrix is not symmetric at ({i + 1}, {j + 1})')
    return [list(row) for row in matrix]


class _CartanModel:
    """Elements as integer matrices acting on simple-root coordinate columns."""

    def __init__(self, cartan):
        rank = len(cartan)
        self.cartan = np.array(cartan, dtype=np.int64).reshape(rank, rank)
        self.identity = np.eye(rank, dtype=np.int64)
        self.generators = []
        for i in range(rank):
            reflection = np.eye(rank, dtype=np.int64)
            reflection[i, :] -= self.cartan[i, :]
            self.generators.append(reflection)

    @staticmethod
    def key(element):
        return element.tobytes()

    def right(self, element, s):
        return element @ self.generators[s]


class _DihedralModel:
    """I2(m) as r^k (flip 0) and r^k f (flip 1), with s1 = f and s2 = r f."""

    def __init__(self, m):
        self.m = m
        self.identity = (0, 0)

    @staticmethod
    def key(element):
        return element

    def right(self, element, s):
        k, flip = element
        if flip == 0:
            return (k % self.m, 1) if s == 0 else ((k + 1) % self.m, 1)
        return (k % self.m, 0) if s == 0 else ((k - 1) % self.m, 0)


@dataclass(frozen=True)
class GroupElement:
    index: int
    length: int
    word: tuple
    matrix: object = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class RootSystem:
    positive_roots: tuple
    root_of_reflection: dict = field(repr=False)
    reflection_of_root: dict = field(repr=False)
    heights: dict = field(repr=False)
    delta: tuple

    def root(self, t):
        return self.positive_roots[self.root_of_reflection[t]]

    def height(self, t):
        return self.heights[t]


@dataclass(frozen=True)
class ConjugationPath:
    pairs: tuple
    epsilon: int
    braid_moves: tuple


class CoxeterSystem:
    """Immutable after construction; the lazily cached tables are pure functions of it."""

    def __init__(self, generators, coxeter_matrix, kind, label, model, cartan, max_order):
        self.generators = tuple(generators)
        self.coxeter_matrix = tuple(tuple(row) for row in coxeter_matrix)
        self.kind = kind
        self.label = label
        self.cartan = None if cartan is None else tuple(tuple(row) for row in cartan)
        self.rank = len(self.generators)
        self._model = model
        self._enumerate(max_order)

    def __repr__(self):
        return f'CoxeterSystem({self.label}, order={self.order})'

    def _enumerate(self, max_order):
        model = self._model
        keys = {model.key(model.identity): 0}
        elements = [model.identity]
        words = [()]
        right = []
        position = 0
        while position < len(elements):
            current = elements[position]
            row = []
            for s in range(self.rank):
                product = model.right(current, s)
                key = model.key(product)
                index = keys.get(key)
                if index is None:
                    index = len(elements)
                    if index >= max_order:
                        raise OrderGuardError(f'{self.label}: more than {max_order} elements '
                                              f'(raise max_order or AY_MAX_ORDER)')
                    keys[key] = index
                    elements.append(product)
                    words.append(words[position] + (s,))
                row.append(index)
            right.append(tuple(row))
            position += 1

        self._matrices = elements
        self.words = tuple(words)
        self.lengths = tuple(len(word) for word in words)
        self.right = tuple(right)
        self.order = len(elements)

        inverse = []
        for word in words:
            index = 0
            for s in reversed(word):
                index = right[index][s]
            inverse.append(index)
        self.inverse = tuple(inverse)
        self.left = tuple(tuple(inverse[right[inverse[w]][s]] for s in range(self.rank))
                          for w in range(self.order))
        self.generator_elements = tuple(right[0]) if self.order > 1 else ()
        self.longest = max(range(self.order), key=lambda w: self.lengths[w])
        log.info(f'{self.label}: enumerated {self.order} elements')

    # elements

    def element(self, w):
        w = self.index(w)
        return GroupElement(w, self.lengths[w], self.words[w], self._matrices[w])

    def index(self, w):
        if isinstance(w, GroupElement):
            w = w.index
        if not isinstance(w, (int, np.integer)) or not 0 <= w < self.order:
            raise ElementError(f'{w!r} is not an element of {self.label}')
        return int(w)

    def generator_index(self, label):
        if isinstance(label, (int, np.integer)):
            if 0 <= label < self.rank:
                return int(label)
        elif label in self.generators:
            return self.generators.index(label)
        raise UnknownGeneratorError(f'unknown generator {label!r} for {self.label}')

    def generator_of_element(self, w):
        """Generator index s with w = s, or None."""
        for s, element in enumerate(self.generator_elements):
            if element == w:
                return s
        return None

    def multiply(self, u, v):
        index = u
        for s in self.words[v]:
            index = self.right[index][s]
        return index

    def from_word(self, word):
        index = 0
        for s in word:
            index = self.right[index][s]
        return index

    def word_string(self, w):
        word = self.words[w]
        return ''.join(self.generators[s] for s in word) if word else 'e'

    def parse_word(self, text):
        """Generator indices of a word written as "s1s2s1", "s1 s2", "s1,s2" or "e"."""
        if isinstance(text, (list, tuple)):
            return tuple(self.generator_index(letter) for letter in text)
        text = str(text).strip()
        if text.lower() in _IDENTITY_WORDS:
            return ()
        rest = _WORD_PATTERN.sub('', text)
        if rest.strip(' ,*.·') != '':
            raise UnknownGeneratorError(f'can\'t read word "{text}" for {self.label}')
        return tuple(self.generator_index(f's{number}') for number in _WORD_PATTERN.findall(text))

    # reflections and descents

    def reflection_of(self, w, s):
        """The reflection w s w^-1 labelling the Cayley edge w -- ws."""
        return self.edge_reflections[w][s]

    @cached_property
    def edge_reflections(self):
        return tuple(tuple(self.multiply(self.right[w][s], self.inverse[w]) for s in range(self.rank))
                     for w in range(self.order))

    @cached_property
    def conjugacy_classes(self):
        class_of = [-1] * self.order
        classes = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            class_id = len(classes)
            class_of[start] = class_id
            members = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for s in range(self.rank):
                    y = self.left[self.right[x][s]][s]
                    if class_of[y] < 0:
                        class_of[y] = class_id
                        members.append(y)
                        queue.append(y)
            classes.append(tuple(sorted(members)))
        self._class_of = tuple(class_of)
        return tuple(classes)

    def class_of(self, w):
        self.conjugacy_classes
        return self._class_of[w]

    @cached_property
    def reflections(self):
        found = set()
        for s in range(self.rank):
            found.update(self.conjugacy_classes[self.class_of(self.generator_elements[s])])
        return tuple(sorted(found))

    @cached_property
    def left_descents(self):
        """Des_T(w) for every w, built up the ShortLex tree: Des_T(ws) = Des_T(w) + {wsw^-1}."""
        descents = [frozenset()]
        for w in range(1, self.order):
            s = self.words[w][-1]
            parent = self.right[w][s]
            descents.append(descents[parent] | {self.reflection_of(parent, s)})
        return tuple(descents)

    def right_descents(self, w):
        return frozenset(s for s in range(self.rank) if self.lengths[self.right[w][s]] < self.lengths[w])

    def is_up(self, w, s):
        return self.lengths[self.right[w][s]] > self.lengths[w]

    # roots

    @property
    def is_crystallographic(self):
        return self.cartan is not None

    @property
    def is_simply_laced(self):
        return all(m in (2, 3) for row in self.coxeter_matrix for m in row if m != 1)

    @property
    def is_parabolic(self):
        return self.kind == 'parabolic'

    @property
    def is_irreducible(self):
        graph = self.dynkin_graph()
        return self.rank == 0 or nx.is_connected(graph)

    def dynkin_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.rank))
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.coxeter_matrix[i][j] > 2:
                    graph.add_edge(i, j, label=self.coxeter_matrix[i][j])
        return graph

    @cached_property
    def root_system(self):
        if self.cartan is None:
            raise UnsupportedMatrixError(f'{self.label} has no integer root system')
        generators = _CartanModel(self.cartan).generators
        root_of = {}
        queue = deque()
        for s, t in enumerate(self.generator_elements):
            root = tuple(int(c) for c in np.eye(self.rank, dtype=np.int64)[s])
            root_of[t] = root
            queue.append(t)
        while queue:
            t = queue.popleft()
            for s in range(self.rank):
                conjugate = self.left[self.right[t][s]][s]
                if conjugate in root_of:
                    continue
                image = generators[s] @ np.array(root_of[t], dtype=np.int64)
                if (image <= 0).all():
                    image = -image
                root_of[conjugate] = tuple(int(c) for c in image)
                queue.append(conjugate)

        positive_roots = tuple(root_of[t] for t in self.reflections)
        if len(set(positive_roots)) != len(positive_roots) or len(root_of) != len(self.reflections):
            raise CoxeterError(f'{self.label}: reflections and positive roots are not in bijection')
        root_index = {t: i for i, t in enumerate(self.reflections)}
        reflection_of_root = {root: t for t, root in root_of.items()}
        heights = {t: sum(root_of[t]) for t in self.reflections}
        delta = tuple(sum((Fraction(root[i]) for root in positive_roots), Fraction(0)) / 2
                      for i in range(self.rank))
        return RootSystem(positive_roots, root_index, reflection_of_root, heights, delta)

    def root(self, t):
        return self.root_system.root(t)

    def delta_functional(self):
        """Dot-product coordinates of delta: pairing with a root gives its height."""
        delta = self.root_system.delta
        return tuple(sum((self.cartan[i][j] * delta[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    # geometry

    @cached_property
    def cayley_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        for w in range(self.order):
            for s in range(self.rank):
                x = self.right[w][s]
                if w < x:
                    graph.add_edge(w, x, generator=s, reflection=self.reflection_of(w, s))
        return graph


def _system_label(letter, rank, m=None):
    return f'I2({m})' if letter == 'I' else f'{letter}{rank}'


def build_system(spec, max_order=DEFAULT_MAX_ORDER):
    """A Coxeter system from a type label ("A3", "I2(5)") or a Coxeter matrix."""
    if isinstance(spec, str):
        return _build_typed(spec, max_order)
    matrix = validate_coxeter_matrix(spec)
    rank = len(matrix)
    generators = [f's{i + 1}' for i in range(rank)]
    if rank == 2:
        m = matrix[0][1]
        cartan = cartan_from_coxeter(matrix) if m in _M_TO_CARTAN_PAIR else None
        return CoxeterSystem(generators, matrix, 'dihedral', f'I2({m})', _DihedralModel(m), cartan, max_order)
    cartan = cartan_from_coxeter(matrix)
    return CoxeterSystem(generators, matrix, 'raw', f'raw{rank}', _CartanModel(cartan), cartan, max_order)


def _build_typed(label, max_order):
    match = _TYPE_PATTERN.match(label)
    if match is None:
        raise CoxeterError(f'can\'t read Coxeter type "{label}"')
    letter, rank, m = match.group(1).upper(), int(match.group(2)), match.group(3)
    if letter == 'I':
        if rank != 2 or m is None:
            raise CoxeterError(f'dihedral type must be written I2(m), got "{label}"')
        m = int(m)
        if m < 2:
            raise InvalidCoxeterMatrixError(f'I2({m}) needs m >= 2')
        system = build_system([[1, m], [m, 1]], max_order)
    else:
        cartan = cartan_matrix(letter, rank)
        matrix = coxeter_from_cartan(cartan)
        generators = [f's{i + 1}' for i in range(rank)]
        system = CoxeterSystem(generators, matrix, letter, _system_label(letter, rank),
                               _CartanModel(cartan), cartan, max_order)
    expected = classical_order(letter, rank, m)
    if system.order != expected:
        raise CoxeterError(f'{label}: enumerated {system.order} elements, expected {expected}')
    return system


def from_cartan(labels, cartan, max_order=DEFAULT_MAX_ORDER, kind='parabolic', label=None):
    matrix = coxeter_from_cartan(cartan) if cartan else []
    return CoxeterSystem(labels, matrix, kind, label or '<' + ','.join(labels) + '>',
                         _CartanModel(cartan), cartan, max_order)


def word_to_element(sys, word):
    return sys.element(sys.from_word(sys.parse_word(word)))


def descent_set(sys, w, A=None):
    """Des_A(w) = {t in A : l(tw) < l(w)}; A defaults to all reflections."""
    descents = sys.left_descents[sys.index(w)]
    return descents if A is None else descents & frozenset(A)


def _generator_set(sys, J):
    return tuple(sorted({sys.generator_index(s) for s in J}))


@dataclass(frozen=True)
class CosetDecomposition:
    J: tuple
    representatives: tuple
    factors: dict = field(repr=False)


def minimal_coset_reps(sys, J):
    """W^J (minimal representatives of the right cosets <J> r) and the map w -> (p, r)."""
    J = _generator_set(sys, J)
    factors = {}
    for w in range(sys.order):
        r = w
        prefix = []
        while True:
            step = next((s for s in J if sys.lengths[sys.left[r][s]] < sys.lengths[r]), None)
            if step is None:
                break
            r = sys.left[r][step]
            prefix.append(step)
        p = sys.from_word(prefix)
        if sys.lengths[w] != sys.lengths[p] + sys.lengths[r]:
            raise CoxeterError(f'coset factorization of {sys.word_string(w)} is not length additive')
        factors[w] = (p, r)
    representatives = tuple(sorted({r for _, r in factors.values()}))
    return CosetDecomposition(J, representatives, factors)


def coset_shortest(sys, w, J):
    """The unique shortest element of the left coset w<J>."""
    J = _generator_set(sys, J)
    w = sys.index(w)
    while True:
        step = next((s for s in J if sys.lengths[sys.right[w][s]] < sys.lengths[w]), None)
        if step is None:
            return w
        w = sys.right[w][step]


def parabolic_subsystem(sys, J, max_order=DEFAULT_MAX_ORDER):
    """(<J> as its own Coxeter system, embedding of its elements into sys)."""
    J = _generator_set(sys, J)
    labels = [sys.generators[s] for s in J]
    if sys.cartan is not None:
        cartan = [[sys.cartan[i][j] for j in J] for i in J]
        sub = from_cartan(labels, cartan, max_order, label=f'{sys.label}<{",".join(labels)}>')
    elif len(J) == 2:
        m = sys.coxeter_matrix[J[0]][J[1]]
        sub = CoxeterSystem(labels, [[1, m], [m, 1]], 'parabolic', f'{sys.label}<{",".join(labels)}>',
                            _DihedralModel(m), None, max_order)
    else:
        sub = from_cartan(labels, [[2] * len(J)] if J else [], max_order,
                          label=f'{sys.label}<{",".join(labels)}>')
    embedding = tuple(sys.from_word(tuple(J[s] for s in word)) for word in sub.words)
    return sub, embedding


def _alternating(first, second, length):
    return tuple(first if i % 2 == 0 else second for i in range(length))


def conjugation_path(sys, start, target):
    """Sequence of (element, generator) pairs from (w, s) to (w~, s~) sharing one reflection.

    Each step drops m_i - 1 letters from w~^-1 w_i through one dihedral braid
    relation, so the pairs trace a geodesic with the structure of the
    conjugation lemma.
    """
    w, s = sys.index(start[0]), sys.generator_index(start[1])
    target_w, target_s = sys.index(target[0]), sys.generator_index(target[1])
    if sys.reflection_of(w, s) != sys.reflection_of(target_w, target_s):
        raise CoxeterError(f'({sys.word_string(w)}, {sys.generators[s]}) and '
                           f'({sys.word_string(target_w)}, {sys.generators[target_s]}) give different reflections')
    target_inverse = sys.inverse[target_w]

    def relative(x):
        return sys.multiply(target_inverse, x)

    epsilon = 0 if sys.lengths[relative(w)] < sys.lengths[relative(sys.right[w][s])] else 1
    current, letter = (w, s) if epsilon == 0 else (sys.right[w][s], s)
    pairs = [(current, letter)]
    moves = []
    while relative(current) != 0:
        y = sys.right[relative(current)][letter]
        other = min(t for t in sys.right_descents(y) if t != letter)
        m = sys.coxeter_matrix[letter][other]
        r = coset_shortest(sys, y, (letter, other))
        current = sys.multiply(target_w, r)
        letter = letter if m % 2 == 0 else other
        pairs.append((current, letter))
        moves.append((other, m))
    if pairs[-1] != (target_w, target_s):
        raise CoxeterError('conjugation path did not reach the target pair')
    return ConjugationPath(tuple(pairs), epsilon, tuple(moves))


def validate_conjugation_path(sys, path, start, target):
    """Violations of the four structural conditions (empty list when the path is valid)."""
    problems = []
    w, s = sys.index(start[0]), sys.generator_index(start[1])
    target_w = sys.index(target[0])
    target_inverse = sys.inverse[target_w]
    reflection = sys.reflection_of(w, s)

    def relative(x):
        return sys.multiply(target_inverse, x)

    for i, (w_i, s_i) in enumerate(path.pairs):
        if sys.reflection_of(w_i, s_i) != reflection:
            problems.append(f'pair {i + 1} changes the reflection')
        if not sys.lengths[relative(w_i)] < sys.lengths[sys.right[relative(w_i)][s_i]]:
            problems.append(f'pair {i + 1} is not an ascent relative to the target')

    epsilon = 0 if sys.lengths[relative(w)] < sys.lengths[relative(sys.right[w][s])] else 1
    if path.epsilon != epsilon:
        problems.append(f'epsilon is {path.epsilon}, expected {epsilon}')
    first = w if epsilon == 0 else sys.right[w][s]
    if path.pairs[0] != (first, s):
        problems.append('first pair is not (w s^epsilon, s)')

    if len(path.braid_moves) != len(path.pairs) - 1:
        problems.append('one braid move is needed between consecutive pairs')
    full_word = (s,) if epsilon else ()
    for i, (dot_s, m) in enumerate(path.braid_moves):
        (w_i, s_i), (w_next, s_next) = path.pairs[i], path.pairs[i + 1]
        if dot_s == s_i or sys.coxeter_matrix[s_i][dot_s] != m:
            problems.append(f'move {i + 1} does not use a braid relation with s_{i + 1}')
        expected_next = s_i if m % 2 == 0 else dot_s
        if s_next != expected_next:
            problems.append(f'move {i + 1}: generator parity rule broken')
        segment = _alternating(dot_s, s_i, m - 1)
        if sys.multiply(sys.inverse[w_i], w_next) != sys.from_word(segment):
            problems.append(f'move {i + 1}: w_i^-1 w_(i+1) is not the alternating word of length {m - 1}')
        drop = sys.lengths[relative(w_i)] - sys.lengths[relative(w_next)]
        if drop != m - 1:
            problems.append(f'move {i + 1}: length drops by {drop}, expected {m - 1}')
        full_word += segment
    if relative(path.pairs[-1][0]) != 0:
        problems.append('path does not end at the target element')
    quotient = sys.multiply(sys.inverse[w], target_w)
    if sys.from_word(full_word) != quotient or len(full_word) != sys.lengths[quotient]:
        problems.append('the implied word for w^-1 w~ is not a reduced expression')
    return problems


def simple_conjugacy(sys, s, other):
    """Generators are conjugate iff an odd-labelled Dynkin path joins them."""
    s, other = sys.generator_index(s), sys.generator_index(other)
    graph = nx.Graph()
    graph.add_nodes_from(range(sys.rank))
    graph.add_edges_from((i, j) for i in range(sys.rank) for j in range(i + 1, sys.rank)
                         if sys.coxeter_matrix[i][j] % 2 == 1)
    return nx.has_path(graph, s, other)


def generator_classes(sys):
    """Conjugacy class id of each generator."""
    return tuple(sys.class_of(t) for t in sys.generator_elements)
