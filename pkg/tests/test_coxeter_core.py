import itertools
import unittest

import numpy as np

from coxeter_core import (CoxeterError, InvalidCoxeterMatrixError, OrderGuardError, UnknownGeneratorError,
                          UnsupportedMatrixError, build_system, coset_shortest, conjugation_path, descent_set,
                          generator_classes, minimal_coset_reps, parabolic_subsystem, simple_conjugacy,
                          validate_conjugation_path)

from .support import element, system


class EnumerationTest(unittest.TestCase):
    def test_orders_and_reflection_counts(self):
        for label, order, reflections in (('A1', 2, 1), ('A2', 6, 3), ('A3', 24, 6), ('B3', 48, 9),
                                          ('D4', 192, 12), ('G2', 12, 6), ('I2(5)', 10, 5), ('F4', 1152, 24)):
            sys = system(label)
            self.assertEqual(sys.order, order, label)
            self.assertEqual(len(sys.reflections), reflections, label)

    def test_longest_element(self):
        sys = system('A3')
        self.assertEqual(sys.lengths[sys.longest], 6)
        self.assertEqual(sys.inverse[sys.longest], sys.longest)

    def test_shortlex_words(self):
        sys = system('A2')
        self.assertEqual([sys.word_string(w) for w in range(sys.order)],
                         ['e', 's1', 's2', 's1s2', 's2s1', 's1s2s1'])

    def test_braid_relation(self):
        sys = system('A2')
        self.assertEqual(element(sys, 's1s2s1'), element(sys, 's2s1s2'))
        sys = system('I2(5)')
        self.assertEqual(element(sys, 's1s2s1s2s1'), element(sys, 's2s1s2s1s2'))

    def test_inverse_and_multiply(self):
        sys = system('B3')
        for w in range(sys.order):
            self.assertEqual(sys.multiply(w, sys.inverse[w]), 0)

    def test_enumeration_is_logged(self):
        with self.assertLogs('CORE', 'INFO') as logs:
            build_system('A2')
        self.assertIn('A2: enumerated 6 elements', logs.output[0])

    def test_matrix_is_the_product_along_the_word(self):
        for label in ('A3', 'B3'):
            sys = system(label)
            generators = [sys.element(t).matrix for t in sys.generator_elements]
            for w in range(sys.order):
                product = np.eye(sys.rank, dtype=np.int64)
                for s in sys.words[w]:
                    product = product @ generators[s]
                self.assertTrue(np.array_equal(sys.element(w).matrix, product), sys.word_string(w))

    def test_word_parsing(self):
        sys = system('A3')
        self.assertEqual(sys.parse_word('s1 s2,s3'), (0, 1, 2))
        self.assertEqual(sys.parse_word('e'), ())
        with self.assertRaises(UnknownGeneratorError):
            sys.parse_word('s5')
        with self.assertRaises(UnknownGeneratorError):
            sys.parse_word('t1')

    def test_matrix_input(self):
        sys = build_system([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
        self.assertEqual(sys.order, 24)
        sys = build_system([[1, 7], [7, 1]])
        self.assertEqual(sys.order, 14)
        self.assertFalse(sys.is_crystallographic)

    def test_invalid_matrices(self):
        for matrix in ([[1, 1], [1, 1]], [[1, 3], [4, 1]], [[2, 3], [3, 1]], [], [[1, 3, 2], [3, 1]]):
            with self.assertRaises(InvalidCoxeterMatrixError):
                build_system(matrix)

    def test_unsupported_rank_three_label(self):
        with self.assertRaises(UnsupportedMatrixError):
            build_system([[1, 5, 2], [5, 1, 3], [2, 3, 1]])

    def test_order_guard(self):
        with self.assertRaises(OrderGuardError):
            build_system('A3', max_order=10)

    def test_unknown_type(self):
        with self.assertRaises(CoxeterError):
            build_system('Q3')


class DescentTest(unittest.TestCase):
    def test_reflection_descents_count_the_length(self):
        for label in ('A3', 'B3', 'I2(5)'):
            sys = system(label)
            for w in range(sys.order):
                self.assertEqual(len(descent_set(sys, w)), sys.lengths[w])

    def test_edge_reflections_are_reflections(self):
        sys = system('A3')
        reflections = set(sys.reflections)
        for w in range(sys.order):
            for s in range(sys.rank):
                self.assertIn(sys.reflection_of(w, s), reflections)

    def test_left_descents_match_lengths(self):
        sys = system('D4')
        for w in range(sys.order):
            for t in sys.reflections:
                shorter = sys.lengths[sys.multiply(t, w)] < sys.lengths[w]
                self.assertEqual(t in sys.left_descents[w], shorter)

    def test_lengths_change_by_one(self):
        for label in ('A3', 'B3', 'I2(5)'):
            sys = system(label)
            for w, s in itertools.product(range(sys.order), range(sys.rank)):
                self.assertEqual(abs(sys.lengths[sys.right[w][s]] - sys.lengths[w]), 1)


class RootTest(unittest.TestCase):
    def test_delta_pairs_with_ones(self):
        for label in ('A3', 'D4', 'B3'):
            sys = system(label)
            self.assertEqual(sys.delta_functional(), tuple([1] * sys.rank))

    def test_heights(self):
        sys = system('A3')
        self.assertEqual(max(sys.root_system.heights.values()), 3)
        self.assertEqual(sorted(sys.root_system.heights.values()), [1, 1, 1, 2, 2, 3])
        sys = system('D4')
        self.assertEqual(max(sys.root_system.heights.values()), 5)

    def test_simple_roots(self):
        sys = system('A3')
        for s, t in enumerate(sys.generator_elements):
            self.assertEqual(sys.root(t), tuple(1 if i == s else 0 for i in range(3)))

    def test_non_crystallographic_has_no_roots(self):
        with self.assertRaises(UnsupportedMatrixError):
            system('I2(5)').root_system

    def test_roots_and_reflections_correspond(self):
        for label in ('A3', 'B3', 'D4'):
            sys = system(label)
            roots = sys.root_system
            self.assertEqual(len(roots.positive_roots), len(sys.reflections))
            for t in sys.reflections:
                self.assertEqual(roots.reflection_of_root[sys.root(t)], t)
                root = np.array(sys.root(t), dtype=np.int64)
                self.assertTrue(np.array_equal(sys.element(t).matrix @ root, -root), label)
            for root in roots.positive_roots:
                self.assertEqual(sys.root(roots.reflection_of_root[root]), root)

    def test_roots_add_along_a_braid(self):
        sys = system('A3')
        for s, t in itertools.combinations(range(sys.rank), 2):
            if sys.coxeter_matrix[s][t] != 3:
                continue
            for w in range(sys.order):
                if coset_shortest(sys, w, (s, t)) != w:
                    continue
                middle = sys.root(sys.reflection_of(sys.right[w][s], t))
                first = sys.root(sys.reflection_of(w, s))
                second = sys.root(sys.reflection_of(w, t))
                self.assertEqual(middle, tuple(a + b for a, b in zip(first, second)), sys.word_string(w))


class CosetTest(unittest.TestCase):
    def test_minimal_representatives(self):
        sys = system('A3')
        decomposition = minimal_coset_reps(sys, (0,))
        self.assertEqual(len(decomposition.representatives), 12)
        for w, (p, r) in decomposition.factors.items():
            self.assertEqual(sys.multiply(p, r), w)
            self.assertEqual(sys.lengths[w], sys.lengths[p] + sys.lengths[r])

    def test_coset_shortest(self):
        sys = system('A2')
        self.assertEqual(coset_shortest(sys, sys.longest, (0, 1)), 0)
        self.assertEqual(coset_shortest(sys, element(sys, 's2s1'), (0,)), element(sys, 's2'))
        sys = system('A3')
        self.assertEqual(coset_shortest(sys, element(sys, 's1s3'), (1, 2)), element(sys, 's1'))

    def test_parabolic_subsystem(self):
        sys = system('A3')
        sub, embedding = parabolic_subsystem(sys, (0, 2))
        self.assertEqual(sub.order, 4)
        self.assertEqual(sub.generators, ('s1', 's3'))
        self.assertEqual(len(set(embedding)), 4)
        sub, embedding = parabolic_subsystem(sys, ())
        self.assertEqual(sub.order, 1)
        self.assertEqual(embedding, (0,))


class ConjugationTest(unittest.TestCase):
    def _all_pairs(self, sys):
        by_reflection = {}
        for w in range(sys.order):
            for s in range(sys.rank):
                by_reflection.setdefault(sys.reflection_of(w, s), []).append((w, s))
        return by_reflection

    def test_paths_satisfy_all_conditions(self):
        for label in ('A3', 'I2(5)'):
            sys = system(label)
            for pairs in self._all_pairs(sys).values():
                for start, target in itertools.product(pairs, repeat=2):
                    path = conjugation_path(sys, start, target)
                    self.assertEqual(validate_conjugation_path(sys, path, start, target), [],
                                     f'{label} {start} -> {target}')

    def test_different_reflections(self):
        sys = system('A2')
        with self.assertRaises(CoxeterError):
            conjugation_path(sys, (0, 0), (0, 1))

    def test_simple_conjugacy_agrees_with_classes(self):
        for label in ('A3', 'B3', 'D4', 'G2'):
            sys = system(label)
            for s, t in itertools.product(range(sys.rank), repeat=2):
                conjugate = sys.class_of(sys.generator_elements[s]) == sys.class_of(sys.generator_elements[t])
                self.assertEqual(simple_conjugacy(sys, s, t), conjugate, f'{label} s{s + 1} s{t + 1}')

    def test_generator_classes(self):
        self.assertEqual(len(set(generator_classes(system('A3')))), 1)
        classes = generator_classes(system('B3'))
        self.assertEqual(classes[0], classes[1])
        self.assertNotEqual(classes[1], classes[2])
