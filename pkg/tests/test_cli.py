import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from cli import main

CONFIG = Path(__file__).parent.parent / 'config.json'

TWO_DIMENSIONAL = ['--type', 'A2', '--members', 'e', 's2', '--f', '1,-2']


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv), CONFIG)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text) if text.strip() else None


class GroupCommandTest(unittest.TestCase):
    def test_info(self):
        code, document = run_json('group', 'info', '--type', 'A3')
        self.assertEqual(code, 0)
        self.assertEqual(document['schema'], 'ay-coxeter/1')
        self.assertEqual((document['order'], document['reflections']), (24, 6))
        self.assertTrue(document['simply_laced'])

    def test_matrix_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'm.json'
            path.write_text(json.dumps({'m': [[1, 5], [5, 1]]}), encoding='utf-8')
            code, document = run_json('group', 'info', '--matrix', str(path))
        self.assertEqual(code, 0)
        self.assertEqual(document['order'], 10)
        self.assertFalse(document['crystallographic'])

    def test_path(self):
        code, document = run_json('group', 'path', '--type', 'A3', '--start', 'e', 's1', '--target', 's2s1', 's2')
        self.assertEqual(code, 0)
        self.assertEqual(document['problems'], [])
        self.assertEqual(document['pairs'][-1], ['s2s1', 's2'])

    def test_order_guard(self):
        code, _ = run('--max-order', '10', 'group', 'info', '--type', 'A3')
        self.assertEqual(code, 2)


class CellCommandTest(unittest.TestCase):
    def test_descent_class(self):
        code, document = run_json('cells', 'class', '--type', 'A2', '--descent-of', 's1')
        self.assertEqual(code, 0)
        self.assertEqual(document['cell']['members'], ['s1', 's1s2'])

    def test_convex(self):
        code, document = run_json('cells', 'convex', '--type', 'A2', '--members', 'e', 's1s2')
        self.assertEqual(code, 0)
        self.assertFalse(document['convex'])
        self.assertEqual(document['witness'], 's1')

    def test_cut(self):
        code, document = run_json('cells', 'cut', '--type', 'A3', '--reflection', 's1s2s1')
        self.assertEqual(code, 0)
        self.assertEqual(document['lower']['size'] + document['upper']['size'], 24)
        self.assertIn('e', document['lower']['members'])

    def test_dot(self):
        code, text = run('export', 'cayley-dot', '--type', 'A3')
        self.assertEqual(code, 0)
        lines = text.strip().splitlines()
        self.assertEqual(sum(1 for line in lines if ' -- ' in line), 36)
        self.assertEqual(sum(1 for line in lines if '[label=' in line and ' -- ' not in line), 24)

    def test_dot_marks_the_boundary(self):
        code, text = run('export', 'cayley-dot', '--type', 'A2', '--members', 'e')
        self.assertEqual(code, 0)
        self.assertEqual(text.count('color=red'), 2)


class RepCommandTest(unittest.TestCase):
    def test_build(self):
        code, document = run_json('rep', 'build', *TWO_DIMENSIONAL)
        self.assertEqual(code, 0)
        self.assertEqual(document['rep']['matrices']['s2'], [['-1/2', '3/4'], ['1', '1/2']])
        self.assertTrue(document['rep']['relations']['ok'])

    def test_char(self):
        code, document = run_json('rep', 'char', *TWO_DIMENSIONAL)
        self.assertEqual(code, 0)
        self.assertEqual(document['character']['values'], ['2', '0', '-1'])
        self.assertEqual(document['character']['sizes'], [1, 3, 2])

    def test_hecke_char(self):
        code, document = run_json('rep', 'char', *TWO_DIMENSIONAL, '--mode', 'hecke', '--q', '1')
        self.assertEqual(code, 0)
        self.assertEqual(document['character']['values'], ['2', '0', '-1'])

    def test_hecke_char_at_a_pole(self):
        code, _ = run('rep', 'char', *TWO_DIMENSIONAL, '--mode', 'hecke', '--q=-1')
        self.assertEqual(code, 2)

    def test_recover(self):
        code, document = run_json('rep', 'recover', *TWO_DIMENSIONAL)
        self.assertEqual(code, 0)
        self.assertEqual(document['functional'], ['1', '-2'])
        self.assertTrue(document['generic'])

    def test_bindep(self):
        code, document = run_json('rep', 'bindep', *TWO_DIMENSIONAL, '--normalizations', 'SNN', 'RSN', 'CSN', 'SON')
        self.assertEqual(code, 0)
        self.assertTrue(document['equal'])

    def test_witness_and_census(self):
        code, document = run_json('rep', 'witness', '--type', 'A2', '--members', 'e', '--bound', '1')
        self.assertEqual(code, 0)
        self.assertEqual(document['functional'], ['-1', '-1'])
        code, document = run_json('rep', 'census', '--type', 'A2', '--members', 'e', '--bound', '1')
        self.assertEqual(code, 0)
        self.assertEqual(document['generic_functionals'], 2)

    def test_table_round_trip(self):
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'table.json'
            code, _ = run('--out', str(path), 'rep', 'build', *TWO_DIMENSIONAL, '--emit-table')
            self.assertEqual(code, 0)
            written = json.loads(path.read_text(encoding='utf-8'))
            self.assertEqual(written['cell'], ['e', 's2'])
            code, document = run_json('rep', 'build', '--type', 'A2', '--from-table', str(path))
            self.assertEqual(code, 0)
            self.assertEqual(document['rep']['matrices'], written['rep']['matrices'])
            code, document = run_json('rep', 'verify', '--type', 'A2', '--from-table', str(path))
            self.assertEqual(code, 0)
            self.assertTrue(document['relations']['ok'])

    def test_failing_table(self):
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'table.json'
            path.write_text(json.dumps({'cell': ['e'], 'table': {'a_out': {'s1': '1', 's2': '-1'}}}),
                            encoding='utf-8')
            code, document = run_json('rep', 'verify', '--type', 'A2', '--from-table', str(path))
        self.assertEqual(code, 1)
        self.assertFalse(document['ok'])
        self.assertEqual(document['command'], 'rep verify')
        self.assertEqual(document['relations']['braid_failures'], [['s1', 's2']])

    def test_not_generic(self):
        code, _ = run('rep', 'build', '--type', 'A2', '--members', 'e', '--f', '2,1')
        self.assertEqual(code, 2)

    def test_missing_cell(self):
        code, _ = run('rep', 'build', '--type', 'A2')
        self.assertEqual(code, 2)

    def test_unknown_command(self):
        code, _ = run('bogus')
        self.assertEqual(code, 2)


class InductionCommandTest(unittest.TestCase):
    def test_induce(self):
        code, document = run_json('induce', '--type', 'A2', '--J', 's1')
        self.assertEqual(code, 0)
        self.assertEqual(document['rep']['dimension'], 3)
        self.assertTrue(document['oracle_agrees'])
        self.assertEqual(document['character']['values'], ['3', '1', '0'])

    def test_induce_takes_no_cell(self):
        code, _ = run('induce', '--type', 'A2', '--J', 's1', '--members', 'e')
        self.assertEqual(code, 2)

    def test_restrict(self):
        code, document = run_json('restrict', *TWO_DIMENSIONAL, '--J', 's1')
        self.assertEqual(code, 0)
        self.assertTrue(document['consistent'])
        self.assertEqual([block['character'] for block in document['blocks']], [['1', '1'], ['1', '-1']])


class SpechtCommandTest(unittest.TestCase):
    def test_character(self):
        code, document = run_json('specht', 'rep', '--n', '3', '--shape', '2,1', '--char')
        self.assertEqual(code, 0)
        self.assertEqual(document['character'], {'classes': ['1,1,1', '2,1', '3'], 'values': ['2', '0', '-1']})

    def test_tableau_shape_mismatch(self):
        code, _ = run('specht', 'rep', '--n', '3', '--shape', '2,1', '--tableau', '1,2,3')
        self.assertEqual(code, 2)

    def test_oracle(self):
        code, document = run_json('specht', 'oracle', '--shape', '2,1')
        self.assertEqual(code, 0)
        self.assertEqual(document['dimension'], 2)
        self.assertEqual(document['character']['values'], [2.0, 0.0, -1.0])

    def test_descent(self):
        code, document = run_json('specht', 'descent', '--type', 'A2', '--descent-of', 's1')
        self.assertEqual(code, 0)
        self.assertEqual(document['rep']['basis'], ['s1', 's1s2'])
