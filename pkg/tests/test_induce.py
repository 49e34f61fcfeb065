import itertools
import unittest

from sympy import QQ

from ay_rep import (CoefficientTable, Functional, build_ay_rep, build_from_table, character, functional_table,
                    specialize_rep)
from cells import is_convex
from coxeter_core import CoxeterError, parabolic_subsystem
from induce import (Fold, InductionError, InJ, induce_ay, induced_character_oracle, parabolic_context, restrict_ay,
                    restricted_character, restriction_consistent, step_classify)
from scalars import MODE_HECKE
from specht import descent_rep, partitions, specht_rep, syt_enumerate

from .support import element, system


def trivial(sys, J, mode=None):
    sub, _ = parabolic_subsystem(sys, J)
    return descent_rep(sub, 0) if mode is None else descent_rep(sub, 0, mode=mode)


class StepTest(unittest.TestCase):
    def test_classification(self):
        sys = system('A2')
        ctx = parabolic_context(sys, (0,))
        self.assertEqual(set(ctx.WJ), {0, element(sys, 's2'), element(sys, 's2s1')})
        self.assertEqual(step_classify(ctx, 0, 0), Fold(0))
        self.assertEqual(step_classify(ctx, 0, 1), InJ(element(sys, 's2')))
        self.assertEqual(step_classify(ctx, element(sys, 's2'), 0), InJ(element(sys, 's2s1')))
        self.assertEqual(step_classify(ctx, element(sys, 's2'), 1), InJ(0))
        self.assertEqual(step_classify(ctx, element(sys, 's2s1'), 1), Fold(0))

    def test_every_step_is_classified(self):
        sys = system('B3')
        for J in ((0,), (0, 2), (1, 2)):
            ctx = parabolic_context(sys, J)
            for r, s in itertools.product(ctx.WJ, range(sys.rank)):
                step = step_classify(ctx, r, s)
                if isinstance(step, Fold):
                    self.assertIn(step.generator, ctx.J)
                    self.assertEqual(sys.multiply(sys.generator_elements[step.generator], r), sys.right[r][s])

    def test_needs_a_representative(self):
        sys = system('A2')
        with self.assertRaises(CoxeterError):
            step_classify(parabolic_context(sys, (0,)), element(sys, 's1'), 1)


class InductionTest(unittest.TestCase):
    def test_permutation_representation_of_s3(self):
        sys = system('A2')
        induced = induce_ay(sys, (0,), trivial(sys, (0,)))
        self.assertEqual(induced.result.dimension, 3)
        self.assertEqual(list(character(induced.result).values()), [QQ(3), QQ(1), QQ(0)])
        self.assertEqual(character(induced.result), induced_character_oracle(sys, (0,), induced.source))
        self.assertEqual(len(induced.blocks), 3)

    def test_against_the_oracle(self):
        cases = [('A3', (0, 2), None, 6), ('A3', (0, 1), 'two', 8), ('D4', (0, 1, 2), None, 8)]
        for label, J, kind, dimension in cases:
            sys = system(label)
            if kind == 'two':
                sub, _ = parabolic_subsystem(sys, J)
                psi = build_ay_rep(sub, [0, element(sub, 's2')], Functional.of((1, -2)))
            else:
                psi = trivial(sys, J)
            induced = induce_ay(sys, J, psi)
            self.assertEqual(induced.result.dimension, dimension, label)
            self.assertTrue(induced.result.relations.ok, label)
            self.assertEqual(character(induced.result), induced_character_oracle(sys, J, psi), label)

    def test_table_source_on_b3(self):
        sys = system('B3')
        cases = []
        sub, _ = parabolic_subsystem(sys, (1, 2))
        s2, s3 = sub.generator_elements
        table = CoefficientTable({}, {}, {}, {}, {s2: QQ(1), s3: QQ(-1)})
        cases.append(((1, 2), build_from_table(sub, [0], table)))
        sub, _ = parabolic_subsystem(sys, (0, 1))
        cell = [0, sub.generator_elements[1]]
        cases.append(((0, 1), build_from_table(sub, cell, functional_table(sub, cell, Functional.of((1, -2))))))
        for J, psi in cases:
            self.assertTrue(psi.relations.ok, J)
            induced = induce_ay(sys, J, psi)
            ctx = induced.context
            expected = {sys.multiply(ctx.embedding[m], r) for m in psi.basis for r in ctx.WJ}
            self.assertEqual(induced.result.cell.member_set, expected, J)
            self.assertTrue(is_convex(sys, induced.result.cell), J)
            self.assertEqual(induced.result.dimension, psi.dimension * sys.order // psi.system.order)
            self.assertEqual(character(induced.result), induced_character_oracle(sys, J, psi), J)

    def test_hecke_induction(self):
        sys = system('A3')
        psi = trivial(sys, (0, 2), MODE_HECKE)
        induced = induce_ay(sys, (0, 2), psi)
        self.assertEqual(induced.result.mode, MODE_HECKE)
        self.assertTrue(induced.result.relations.ok)
        at_one = specialize_rep(induced.result, 1)
        self.assertEqual(character(at_one), induced_character_oracle(sys, (0, 2), psi))

    def test_whole_group(self):
        sys = system('A2')
        sub, _ = parabolic_subsystem(sys, (0, 1))
        psi = build_ay_rep(sub, [0, element(sub, 's2')], Functional.of((1, -2)))
        induced = induce_ay(sys, (0, 1), psi)
        self.assertEqual(induced.result.rows, psi.rows)

    def test_non_minimal_source(self):
        sys = system('A2')
        sub, _ = parabolic_subsystem(sys, (0,))
        t = sub.generator_elements[0]
        table = CoefficientTable({t: QQ(1)}, {t: QQ(-1)}, {t: QQ(1)}, {t: QQ(0)}, {})
        psi = build_from_table(sub, range(sub.order), table)
        with self.assertRaises(InductionError):
            induce_ay(sys, (0,), psi)

    def test_wrong_subgroup(self):
        with self.assertRaises(InductionError):
            induce_ay(system('A3'), (0,), descent_rep(system('A2'), 0))

    def test_float_source(self):
        sys = system('A2')
        sub, _ = parabolic_subsystem(sys, (0,))
        with self.assertRaises(InductionError):
            induce_ay(sys, (0,), descent_rep(sub, 0, 'SON'))


class RestrictionTest(unittest.TestCase):
    def test_blocks_of_the_two_dimensional_rep(self):
        sys = system('A2')
        rep = build_ay_rep(sys, [0, element(sys, 's2')], Functional.of((1, -2)))
        blocks = restrict_ay(rep, (0,))
        self.assertEqual([block.representative for block in blocks], [0, element(sys, 's2')])
        self.assertEqual([block.rep.rows[0] for block in blocks], [[[QQ(1)]], [[QQ(-1)]]])
        self.assertTrue(all(block.rep.relations.ok for block in blocks))
        self.assertEqual(restricted_character(rep, (0,)), {0: QQ(2), 1: QQ(0)})

    def test_consistency_for_specht_reps(self):
        sys = system('A3')
        subsets = [J for k in range(sys.rank + 1) for J in itertools.combinations(range(sys.rank), k)]
        self.assertEqual(len(subsets), 8)
        for shape in partitions(4):
            rep = specht_rep(sys, syt_enumerate(shape)[0])
            for J in subsets:
                self.assertTrue(restriction_consistent(rep, J), f'{shape} {J}')

    def test_hecke_consistency(self):
        sys = system('A3')
        rep = specht_rep(sys, syt_enumerate((2, 2))[0], mode=MODE_HECKE)
        self.assertTrue(restriction_consistent(rep, (0, 1)))

    def test_extremes(self):
        sys = system('A3')
        rep = descent_rep(sys, element(sys, 's2'))
        blocks = restrict_ay(rep, ())
        self.assertEqual(len(blocks), rep.dimension)
        whole = restrict_ay(rep, (0, 1, 2))
        self.assertEqual(len(whole), 1)
        self.assertEqual(whole[0].rep.rows, rep.rows)
