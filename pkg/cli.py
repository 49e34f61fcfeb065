"""Command line surface: every command prints one JSON document (or DOT for the export).

Exit codes: 0 success, 1 a verification failed (the JSON carries the report),
2 bad usage or an unmet precondition.
"""
import argparse
import json
import logging
import sys
from pathlib import Path

import helpers
import scalars
from ay_rep import (NORMALIZATIONS, AyRepError, Functional, RelationError, b_independence_check, build_ay_rep,
                    build_from_table, character, delta, find_minimal_witness, functional_census, is_minimal,
                    recover_functional, table_from_dict, table_to_dict)
from cells import (CellError, DescentSpec, a_cell, a_cells, descent_class, generalized_descent_class,
                   is_convex, make_cell, reflection_cut)
from coxeter_core import (CoxeterError, build_system, conjugation_path, generator_classes, parabolic_subsystem,
                          validate_conjugation_path)
from induce import induce_ay, induced_character_oracle, restrict_ay, restricted_character
from scalars import MODE_FLOAT, MODE_HECKE, HeckeParams, PoleError
from specht import (SpechtError, Tableau, character_by_cycle_type, character_record, descent_rep, parse_partition,
                    specht_oracle, specht_rep)

log = logging.getLogger('CLI')

SCHEMA = 'ay-coxeter/1'


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, record):
        self.record = record
        super().__init__('verification failed')


# input

def _system(args, config):
    max_order = args.max_order or config['max_order']
    if getattr(args, 'matrix', None):
        matrix_path = Path(args.matrix)
        if not matrix_path.exists():
            raise UsageError(f'can\'t find matrix file [{matrix_path}]')
        data = json.loads(matrix_path.read_text(encoding='utf-8'))
        return build_system(data['m'], max_order)
    if getattr(args, 'type', None):
        return build_system(args.type, max_order)
    raise UsageError('a group is needed: --type A3 or --matrix file.json')


def _element(system, word):
    return system.from_word(system.parse_word(word))


def _elements(system, words):
    return [_element(system, word) for word in words or ()]


def _cell(system, args):
    if args.members:
        return make_cell(system, _elements(system, args.members))
    if args.descent_of:
        return descent_class(system, _element(system, args.descent_of))
    if args.A is not None and args.acell_of:
        return a_cell(system, _elements(system, args.A), _element(system, args.acell_of))
    if args.A is not None and args.D is not None:
        return generalized_descent_class(system, DescentSpec(frozenset(_elements(system, args.A)),
                                                             frozenset(_elements(system, args.D))))
    raise UsageError('a cell is needed: --members, --descent-of, --A with --acell-of, or --A with --D')


def _functional(system, args):
    if not getattr(args, 'f', None):
        return delta(system)
    f = Functional.parse(args.f)
    if len(f.coords) != system.rank:
        raise UsageError(f'functional needs {system.rank} coordinates, got {len(f.coords)}')
    return f


def _params(system, args):
    if args.mode != MODE_HECKE:
        return None
    if args.params == 'per-class':
        return HeckeParams.per_class(generator_classes(system))
    return HeckeParams.single(system.rank)


# output

def _words(system, elements):
    return [system.word_string(w) for w in elements]


def _scalar(value, config):
    return helpers.rf(value, config['float_digits']) if isinstance(value, float) else scalars.render(value)


def _cell_record(system, cell):
    record = {
        'size': len(cell),
        'members': cell.words(),
        'internal_reflections': _words(system, sorted(cell.internal_reflections)),
        'boundary_reflections': _words(system, sorted(cell.boundary_reflections)),
    }
    if cell.out_direction is not None:
        record['out_direction'] = {system.word_string(t): way for t, way in sorted(cell.out_direction.items())}
    return record


def _character_record(rep, values, config):
    system = rep.system
    classes = system.conjugacy_classes
    return {
        'classes': [system.word_string(classes[class_id][0]) for class_id in values],
        'sizes': [len(classes[class_id]) for class_id in values],
        'values': [_scalar(value, config) for value in values.values()],
    }


def _rep_record(rep, config):
    system = rep.system
    record = {
        'mode': rep.mode,
        'normalization': rep.table.normalization if rep.table is not None else None,
        'dimension': rep.dimension,
        'basis': _words(system, rep.basis),
        'matrices': {system.generators[s]: [[_scalar(value, config) for value in row] for row in rows]
                     for s, rows in rep.rows.items()},
    }
    if rep.relations is not None:
        record['relations'] = rep.relations.to_dict(system)
    return record


def _command_name(args):
    action = getattr(args, 'action', None)
    return f'{args.command} {action}' if action else args.command


def _document(system, command, **body):
    return {'schema': SCHEMA, 'group': system.label if system is not None else None, 'command': command, **body}


# commands

def group_info(args, config):
    system = _system(args, config)
    return _document(
        system, 'group info',
        order=system.order,
        rank=system.rank,
        generators=list(system.generators),
        coxeter_matrix=[list(row) for row in system.coxeter_matrix],
        reflections=len(system.reflections),
        longest_length=system.lengths[system.longest],
        conjugacy_classes=len(system.conjugacy_classes),
        generator_classes=list(generator_classes(system)),
        crystallographic=system.is_crystallographic,
        simply_laced=system.is_simply_laced,
        irreducible=system.is_irreducible,
    )


def group_path(args, config):
    system = _system(args, config)
    start = (_element(system, args.start[0]), system.generator_index(args.start[1]))
    target = (_element(system, args.target[0]), system.generator_index(args.target[1]))
    path = conjugation_path(system, start, target)
    problems = validate_conjugation_path(system, path, start, target)
    document = _document(system, 'group path',
                         pairs=[[system.word_string(w), system.generators[s]] for w, s in path.pairs],
                         epsilon=path.epsilon,
                         braid_moves=[[system.generators[s], m] for s, m in path.braid_moves],
                         problems=problems)
    if problems:
        raise VerificationFailed(document)
    return document


def cells_class(args, config):
    system = _system(args, config)
    return _document(system, 'cells class', cell=_cell_record(system, _cell(system, args)))


def cells_acell(args, config):
    system = _system(args, config)
    A = _elements(system, args.A)
    if args.acell_of:
        found = [a_cell(system, A, _element(system, args.acell_of))]
    else:
        found = a_cells(system, A)
    return _document(system, 'cells acell', cells=[_cell_record(system, cell) for cell in found])


def cells_convex(args, config):
    system = _system(args, config)
    cell = _cell(system, args)
    result = is_convex(system, cell.members)
    record = {'convex': result.convex}
    if not result.convex:
        record['witness'] = system.word_string(result.witness)
        record['endpoints'] = _words(system, result.endpoints)
    return _document(system, 'cells convex', members=cell.words(), **record)


def cells_cut(args, config):
    system = _system(args, config)
    lower, upper = reflection_cut(system, _element(system, args.reflection))
    return _document(system, 'cells cut', reflection=args.reflection,
                     lower=_cell_record(system, lower), upper=_cell_record(system, upper))


def _build(args, config, system=None):
    system = system or _system(args, config)
    if args.from_table:
        table_path = Path(args.from_table)
        if not table_path.exists():
            raise UsageError(f'can\'t find table file [{table_path}]')
        data = json.loads(table_path.read_text(encoding='utf-8'))
        cell = (make_cell(system, _elements(system, data['cell'])) if not _has_cell_options(args)
                else _cell(system, args))
        table = table_from_dict(system, data['table'], _params(system, args) if args.mode == MODE_HECKE else None)
        rep = build_from_table(system, cell, table)
        if not rep.relations.ok:
            raise VerificationFailed(_document(system, _command_name(args),
                                               relations=rep.relations.to_dict(system)))
        return rep
    cell = _cell(system, args)
    return build_ay_rep(system, cell, _functional(system, args), args.normalization, args.mode,
                        _params(system, args))


def _has_cell_options(args):
    return bool(args.members or args.descent_of or args.A is not None)


def rep_build(args, config):
    rep = _build(args, config)
    system = rep.system
    document = _document(system, 'rep build', cell=_cell_record(system, rep.cell), rep=_rep_record(rep, config))
    if args.emit_table:
        if rep.table is None or rep.mode == MODE_FLOAT:
            raise UsageError('only exact functional or table representations can emit a table')
        document['table'] = table_to_dict(system, rep.table)
        document['cell'] = rep.cell.words()
    return document


def rep_verify(args, config):
    try:
        rep = _build(args, config)
    except RelationError as error:
        system = _system(args, config)
        raise VerificationFailed(_document(system, 'rep verify', relations=error.report.to_dict(system))) from None
    return _document(rep.system, 'rep verify', relations=rep.relations.to_dict(rep.system))


def rep_char(args, config):
    rep = _build(args, config)
    values = character(rep, args.q)
    return _document(rep.system, 'rep char', character=_character_record(rep, values, config))


def rep_minimal(args, config):
    rep = _build(args, config)
    return _document(rep.system, 'rep minimal', minimal=is_minimal(rep))


def rep_recover(args, config):
    rep = _build(args, config)
    f, report = recover_functional(rep)
    return _document(rep.system, 'rep recover', functional=[str(c) for c in f.coords], generic=report.generic,
                     violations=[{'condition': v.condition, 'reflections': _words(rep.system, v.reflections)}
                                 for v in report.violations])


def rep_bindep(args, config):
    system = _system(args, config)
    cell = _cell(system, args)
    result = b_independence_check(system, cell, _functional(system, args), args.normalizations)
    document = _document(system, 'rep bindep', equal=result.equal,
                         characters={normalization: [_scalar(value, config) for value in values.values()]
                                     for normalization, values in result.characters.items()})
    if not result.equal:
        raise VerificationFailed(document)
    return document


def rep_witness(args, config):
    system = _system(args, config)
    cell = _cell(system, args)
    found = find_minimal_witness(system, cell, args.bound or config['search_bound'])
    if found is None:
        return _document(system, 'rep witness', found=False, bound=args.bound or config['search_bound'])
    f, rep = found
    return _document(system, 'rep witness', found=True, functional=[str(c) for c in f.coords],
                     rep=_rep_record(rep, config))


def rep_census(args, config):
    system = _system(args, config)
    cell = _cell(system, args)
    census = functional_census(system, cell, args.bound or config['search_bound'])
    return _document(system, 'rep census', generic_functionals=census.generic_functionals,
                     distinct_tables=census.distinct_tables, distinct_characters=census.distinct_characters)


def _parabolic_rep(system, args, config):
    J = [system.generator_index(label) for label in args.J]
    sub, _ = parabolic_subsystem(system, J)
    w = _element(sub, args.psi_descent_of) if args.psi_descent_of else 0
    cell = descent_class(sub, w)
    f = Functional.parse(args.psi_f) if args.psi_f else delta(sub)
    return J, build_ay_rep(sub, cell, f, args.normalization, args.mode, _params(sub, args))


def induce_command(args, config):
    system = _system(args, config)
    J, psi = _parabolic_rep(system, args, config)
    induced = induce_ay(system, J, psi)
    document = _document(system, 'induce', J=[system.generators[s] for s in J],
                         source=_rep_record(psi, config), rep=_rep_record(induced.result, config))
    if args.mode != MODE_HECKE:
        values = character(induced.result)
        oracle = induced_character_oracle(system, J, psi)
        document['character'] = _character_record(induced.result, values, config)
        document['oracle_agrees'] = values == oracle
        if values != oracle:
            raise VerificationFailed(document)
    return document


def restrict_command(args, config):
    rep = _build(args, config)
    system = rep.system
    J = [system.generator_index(label) for label in args.J]
    blocks = restrict_ay(rep, J)
    expected = restricted_character(rep, J)
    totals = dict.fromkeys(expected, 0)
    records = []
    for block in blocks:
        values = character(block.rep, 1 if block.rep.mode == MODE_HECKE else None)
        for class_id, value in values.items():
            totals[class_id] = totals[class_id] + value
        records.append({'representative': system.word_string(block.representative),
                        'members': _words(system, block.members),
                        'character': [_scalar(value, config) for value in values.values()]})
    consistent = all(totals[c] == expected[c] for c in expected)
    document = _document(system, 'restrict', J=[system.generators[s] for s in J], blocks=records,
                         restricted_character=[_scalar(value, config) for value in expected.values()],
                         consistent=consistent)
    if not consistent:
        raise VerificationFailed(document)
    return document


def _specht_system(args, config):
    return build_system(f'A{args.n - 1}', args.max_order or config['max_order'])


def specht_rep_command(args, config):
    shape = parse_partition(args.shape)
    if sum(shape) != args.n:
        raise UsageError(f'shape {args.shape} is not a partition of {args.n}')
    system = _specht_system(args, config)
    Q = Tableau.parse(args.tableau) if args.tableau else Tableau.row_reading(shape)
    if Q.shape != shape:
        raise UsageError(f'tableau {Q} does not have shape {args.shape}')
    rep = specht_rep(system, Q, args.normalization, args.mode, _params(system, args))
    document = _document(system, 'specht rep', tableau=str(Q), cell=_cell_record(system, rep.cell))
    if args.char:
        values = character_by_cycle_type(rep, args.q)
        document['character'] = character_record(values)
    else:
        document['rep'] = _rep_record(rep, config)
    return document


def specht_oracle_command(args, config):
    shape = parse_partition(args.shape)
    dimension, values = specht_oracle(shape)
    return _document(None, 'specht oracle', shape=list(shape), dimension=dimension,
                     character={'classes': [','.join(str(part) for part in cycle) for cycle in values],
                                'values': [helpers.rf(value, config['float_digits']) for value in values.values()]})


def specht_descent_command(args, config):
    system = _system(args, config)
    rep = descent_rep(system, _element(system, args.descent_of), args.normalization, args.mode,
                      _params(system, args))
    return _document(system, 'specht descent', cell=_cell_record(system, rep.cell), rep=_rep_record(rep, config))


def cayley_dot(args, config):
    system = _system(args, config)
    boundary = set()
    if _has_cell_options(args):
        cell = _cell(system, args)
        boundary = {frozenset((w, system.right[w][s])) for w in cell.members for s in range(system.rank)
                    if system.right[w][s] not in cell}
    lines = [f'graph "{system.label}" {{']
    for w in range(system.order):
        lines.append(f'    {w} [label="{system.word_string(w)}"];')
    graph = system.cayley_graph
    for u, v, data in sorted(graph.edges(data=True)):
        color = ' color=red' if frozenset((u, v)) in boundary else ''
        lines.append(f'    {u} -- {v} [label="{data["generator"] + 1}"{color}];')
    lines.append('}')
    return '\n'.join(lines)


# parser

def _add_group_options(parser):
    parser.add_argument('--type', help='Coxeter type, e.g. A3, B3, D4, I2(5)')
    parser.add_argument('--matrix', help='JSON file with a Coxeter matrix {"m": [[1, 3], [3, 1]]}')


def _add_cell_options(parser):
    parser.add_argument('--members', nargs='+', metavar='WORD', help='cell members as words')
    parser.add_argument('--descent-of', metavar='WORD', help='standard left descent class of an element')
    parser.add_argument('--A', nargs='*', metavar='WORD', help='reflection set A')
    parser.add_argument('--D', nargs='*', metavar='WORD', help='descent set D (with --A)')
    parser.add_argument('--acell-of', metavar='WORD', help='A-cell of an element (with --A)')


def _add_rep_options(parser, config):
    parser.add_argument('--f', help='functional coordinates, e.g. 1,2,1 (default: delta)')
    parser.add_argument('--normalization', choices=NORMALIZATIONS, default=config['normalization'])
    parser.add_argument('--mode', choices=(scalars.MODE_Q1, MODE_HECKE), default=config['mode'])
    parser.add_argument('--params', choices=('single', 'per-class'), default=config['hecke_params'],
                        help='one Hecke parameter, or one per conjugacy class of generators')
    parser.add_argument('--q', help='rational value of q for Hecke characters')


def build_parser(config):
    parser = argparse.ArgumentParser(prog='ay-coxeter', description='Abstract Young representations of '
                                                                    'finite Coxeter groups and Hecke algebras')
    parser.add_argument('--max-order', type=int, help='enumeration guard (also AY_MAX_ORDER)')
    parser.add_argument('--out', help='write the result to a file instead of stdout')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    commands = parser.add_subparsers(dest='command', required=True)

    group = commands.add_parser('group').add_subparsers(dest='action', required=True)
    info = group.add_parser('info')
    _add_group_options(info)
    info.set_defaults(handler=group_info)
    path = group.add_parser('path', help='conjugation path between two (element, generator) pairs')
    _add_group_options(path)
    path.add_argument('--start', nargs=2, required=True, metavar=('WORD', 'GENERATOR'))
    path.add_argument('--target', nargs=2, required=True, metavar=('WORD', 'GENERATOR'))
    path.set_defaults(handler=group_path)

    cells = commands.add_parser('cells').add_subparsers(dest='action', required=True)
    for name, handler in (('class', cells_class), ('acell', cells_acell), ('convex', cells_convex)):
        sub = cells.add_parser(name)
        _add_group_options(sub)
        _add_cell_options(sub)
        sub.set_defaults(handler=handler)
    cut = cells.add_parser('cut')
    _add_group_options(cut)
    cut.add_argument('--reflection', required=True, metavar='WORD')
    cut.set_defaults(handler=cells_cut)

    rep = commands.add_parser('rep').add_subparsers(dest='action', required=True)
    for name, handler in (('build', rep_build), ('verify', rep_verify), ('char', rep_char),
                          ('minimal', rep_minimal), ('recover', rep_recover), ('bindep', rep_bindep),
                          ('witness', rep_witness), ('census', rep_census)):
        sub = rep.add_parser(name)
        _add_group_options(sub)
        _add_cell_options(sub)
        _add_rep_options(sub, config)
        sub.add_argument('--from-table', metavar='FILE', help='coefficient table written by --emit-table')
        sub.set_defaults(handler=handler)
        if name == 'build':
            sub.add_argument('--emit-table', action='store_true')
        if name == 'bindep':
            sub.add_argument('--normalizations', nargs='+', choices=NORMALIZATIONS,
                             default=['SNN', 'RSN', 'CSN'])
        if name in ('witness', 'census'):
            sub.add_argument('--bound', type=int, help='coordinate bound of the search box')

    for name, handler in (('induce', induce_command), ('restrict', restrict_command)):
        sub = commands.add_parser(name)
        _add_group_options(sub)
        _add_rep_options(sub, config)
        sub.add_argument('--J', nargs='*', required=True, metavar='GENERATOR', help='parabolic generators')
        if name == 'restrict':
            _add_cell_options(sub)
            sub.add_argument('--from-table', metavar='FILE')
        else:
            sub.add_argument('--psi-descent-of', metavar='WORD', help='descent class in <J> carrying psi')
            sub.add_argument('--psi-f', help='functional of psi on <J> (default: delta)')
        sub.set_defaults(handler=handler)

    specht = commands.add_parser('specht').add_subparsers(dest='action', required=True)
    specht_rep_parser = specht.add_parser('rep')
    specht_rep_parser.add_argument('--n', type=int, required=True)
    specht_rep_parser.add_argument('--shape', required=True, help='partition, e.g. 2,1')
    specht_rep_parser.add_argument('--tableau', help='standard tableau, rows split by "/", e.g. 1,2/3')
    specht_rep_parser.add_argument('--char', action='store_true', help='print the character only')
    _add_rep_options(specht_rep_parser, config)
    specht_rep_parser.set_defaults(handler=specht_rep_command)
    oracle = specht.add_parser('oracle')
    oracle.add_argument('--shape', required=True)
    oracle.set_defaults(handler=specht_oracle_command)
    descent = specht.add_parser('descent')
    _add_group_options(descent)
    _add_rep_options(descent, config)
    descent.add_argument('--descent-of', required=True, metavar='WORD')
    descent.set_defaults(handler=specht_descent_command)

    export = commands.add_parser('export').add_subparsers(dest='action', required=True)
    dot = export.add_parser('cayley-dot')
    _add_group_options(dot)
    _add_cell_options(dot)
    dot.set_defaults(handler=cayley_dot)
    return parser


def main(argv=None, config_file_path=Path('config.json')):
    try:
        config = helpers.load_config(config_file_path)
    except ValueError as error:
        print(f'ERROR: {error}', file=sys.stderr)
        return 2
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_status:
        return exit_status.code
    helpers.setup_logging('DEBUG' if args.verbose > 1 else 'INFO' if args.verbose else config['log_level'])

    try:
        result = args.handler(args, config)
    except VerificationFailed as failure:
        helpers.write_output(helpers.to_json({**failure.record, 'ok': False}), args.out)
        return 1
    except RelationError as error:
        helpers.write_output(helpers.to_json({'schema': SCHEMA, 'ok': False, 'error': str(error)}), args.out)
        return 1
    except (UsageError, CoxeterError, CellError, AyRepError, SpechtError, PoleError, ValueError, KeyError) as error:
        print(f'ERROR: {error}', file=sys.stderr)
        return 2

    helpers.write_output(result if isinstance(result, str) else helpers.to_json(result), args.out)
    return 0


if __name__ == '__main__':
    sys.exit(main())
