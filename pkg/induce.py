"""Restriction to parabolic subgroups and combinatorial induction of AY representations.

Elements of W factor uniquely as p r with p in P = <J> and r in W^J. A minimal
AY representation psi of P on a cell D induces one on D W^J with basis
C_{mr}: the generator s moves C_{mr} to C_{mrs} when rs stays in W^J, and
otherwise rs = p r for a generator p of J and s acts through psi_p on m.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

from sympy import QQ

import scalars
from ay_rep import AYRep, AyRepError, character, evaluate_word, is_minimal, specialize_rep, trace, verify_relations
from cells import make_cell
from coxeter_core import CoxeterError, coset_shortest, minimal_coset_reps, parabolic_subsystem
from scalars import MODE_FLOAT, MODE_HECKE, HeckeParams

log = logging.getLogger('INDUCE')


class InductionError(AyRepError):
    pass


@dataclass(frozen=True)
class InJ:
    element: int


@dataclass(frozen=True)
class Fold:
    generator: int


@dataclass(frozen=True)
class ParabolicContext:
    system: object = field(repr=False)
    J: tuple
    subsystem: object = field(repr=False)
    embedding: tuple = field(repr=False)
    WJ: tuple = field(repr=False)

    @property
    def representatives(self):
        return frozenset(self.WJ)

    def local_generator(self, s):
        return self.J.index(s)

    def to_sub(self, w):
        return self.embedding.index(w)


def parabolic_context(sys, J):
    sub, embedding = parabolic_subsystem(sys, J)
    decomposition = minimal_coset_reps(sys, J)
    return ParabolicContext(sys, decomposition.J, sub, embedding, decomposition.representatives)


def step_classify(ctx, r, s):
    """InJ(rs) when rs is again a minimal representative, else Fold(p) with rs = p r."""
    sys = ctx.system
    if r not in ctx.representatives:
        raise CoxeterError(f'{sys.word_string(r)} is not a minimal coset representative for J')
    rs = sys.right[r][s]
    if rs in ctx.representatives:
        return InJ(rs)
    p = sys.generator_of_element(sys.multiply(rs, sys.inverse[r]))
    if p is None or p not in ctx.J:
        raise CoxeterError(f'{sys.word_string(r)}{sys.generators[s]} r^-1 is not a generator of J')
    return Fold(p)


def _check_over_parabolic(ctx, psi):
    sub = psi.system
    labels = tuple(ctx.system.generators[s] for s in ctx.J)
    matrix = tuple(tuple(ctx.system.coxeter_matrix[i][j] for j in ctx.J) for i in ctx.J)
    if tuple(sub.generators) != labels or tuple(sub.coxeter_matrix) != matrix:
        raise InductionError(f'representation lives on {sub.label}, not on the parabolic subgroup <{",".join(labels)}>')


@dataclass(frozen=True)
class InducedRep:
    source: AYRep = field(repr=False)
    result: AYRep
    context: ParabolicContext = field(repr=False)
    blocks: tuple = ()


def induce_ay(sys, J, psi):
    """Representation of W on D W^J built from a minimal representation psi of <J> on D."""
    ctx = parabolic_context(sys, J)
    _check_over_parabolic(ctx, psi)
    if psi.mode == MODE_FLOAT:
        raise InductionError('induction needs an exact representation')
    if psi.params is not None and len(psi.params.names) > 1:
        raise InductionError('induction supports a single Hecke parameter')
    if not is_minimal(psi):
        raise InductionError('the representation to induce is not minimal')
    sub = psi.system
    # psi's own element indices, carried into sys
    embed = {m: sys.from_word(tuple(ctx.J[s] for s in sub.words[m])) for m in psi.basis}

    basis = []
    for r in ctx.WJ:
        for m in psi.basis:
            basis.append((m, r))
    products = [sys.multiply(embed[m], r) for m, r in basis]
    if len(set(products)) != len(products):
        raise InductionError('the product map D x W^J -> W is not injective')
    position = {pair: i for i, pair in enumerate(basis)}

    domain = psi.domain
    one, zero = domain.one, domain.zero
    q = scalars.q_of(domain) if psi.mode == MODE_HECKE else one
    n = len(basis)
    rows = {}
    for s in range(sys.rank):
        matrix = [[zero] * n for _ in range(n)]
        for i, (m, r) in enumerate(basis):
            step = step_classify(ctx, r, s)
            if isinstance(step, InJ):
                j = position[(m, step.element)]
                if sys.is_up(r, s):
                    matrix[i][j] = one
                else:
                    matrix[i][i] = one - q
                    matrix[i][j] = q
            else:
                p = ctx.local_generator(step.generator)
                matrix[i][i] = psi.entry(p, m, m)
                mp = sub.right[m][p]
                if mp in psi.position:
                    matrix[i][position[(mp, r)]] = psi.entry(p, m, mp)
        rows[s] = matrix

    cell = make_cell(sys, products)
    params = None if psi.params is None else HeckeParams.single(sys.rank, psi.params.names[0])
    result = AYRep(sys, cell, tuple(products), rows, psi.mode, domain, None, params)
    result = replace(result, relations=verify_relations(result))
    if not result.relations.ok:
        raise InductionError(f'induced representation fails its relations: {result.relations.summary()}')
    if not is_minimal(result):
        raise InductionError('induced representation is not minimal')
    blocks = tuple((r, tuple(sys.multiply(embed[m], r) for m in psi.basis)) for r in ctx.WJ)
    log.debug(f'induced {psi.dimension}-dimensional representation of {sub.label} '
              f'to {result.dimension} dimensions on {sys.label}')
    return InducedRep(psi, result, ctx, blocks)


def induced_character_oracle(sys, J, psi):
    """chi(g) = 1/|P| sum over x of chi0(x g x^-1), chi0 the character of psi extended by zero."""
    ctx = parabolic_context(sys, J)
    _check_over_parabolic(ctx, psi)
    if psi.mode == MODE_FLOAT:
        raise InductionError('the induced-character oracle needs an exact representation')
    source = specialize_rep(psi, 1) if psi.mode == MODE_HECKE else psi
    sub = psi.system
    sub_character = character(source)
    local = {sys.from_word(tuple(ctx.J[s] for s in sub.words[p])): sub_character[sub.class_of(p)]
             for p in range(sub.order)}
    values = {}
    for class_id, members in enumerate(sys.conjugacy_classes):
        g = members[0]
        total = Fraction(0)
        for x in range(sys.order):
            h = sys.multiply(sys.multiply(x, g), sys.inverse[x])
            if h in local:
                total += scalars.to_fraction(local[h])
        values[class_id] = scalars.from_fraction(total / sub.order, QQ)
    return values


@dataclass(frozen=True)
class RestrictionBlock:
    representative: int
    members: tuple
    rep: AYRep


def restrict_ay(rep, J):
    """Blocks K cap wP, each moved by its shortest element onto a cell of <J> with the restricted matrices."""
    sys = rep.system
    ctx = parabolic_context(sys, J)
    sub = ctx.subsystem
    blocks = {}
    for w in rep.basis:
        blocks.setdefault(coset_shortest(sys, w, ctx.J), []).append(w)
    result = []
    for r in sorted(blocks, key=lambda x: (sys.lengths[x], x)):
        r_inverse = sys.inverse[r]
        local = {w: ctx.to_sub(sys.multiply(r_inverse, w)) for w in blocks[r]}
        members = sorted(blocks[r], key=lambda w: local[w])
        rows = {}
        for j, s in enumerate(ctx.J):
            rows[j] = [[rep.entry(s, w, x) for x in members] for w in members]
        params = None
        if rep.params is not None:
            params = HeckeParams(tuple(rep.params.symbols[s] for s in ctx.J))
        block_cell = make_cell(sub, local.values())
        block = AYRep(sub, block_cell, tuple(local[w] for w in members), rows, rep.mode, rep.domain, None, params)
        result.append(RestrictionBlock(r, tuple(members), replace(block, relations=verify_relations(block))))
    return result


def restricted_character(rep, J, q_value=None):
    """Trace of rep on one element of each conjugacy class of <J>."""
    sys = rep.system
    ctx = parabolic_context(sys, J)
    sub = ctx.subsystem
    target = specialize_rep(rep, 1 if q_value is None else q_value) if rep.mode == MODE_HECKE else rep
    return {class_id: trace(target, evaluate_word(target, tuple(ctx.J[s] for s in sub.words[members[0]])))
            for class_id, members in enumerate(sub.conjugacy_classes)}


def restriction_consistent(rep, J):
    """Block characters add up to the restricted character."""
    blocks = restrict_ay(rep, J)
    expected = restricted_character(rep, J)
    totals = {class_id: 0 for class_id in expected}
    for block in blocks:
        for class_id, value in character(block.rep, 1 if block.rep.mode == MODE_HECKE else None).items():
            totals[class_id] = totals[class_id] + value
    if rep.mode == MODE_FLOAT:
        return all(abs(totals[c] - expected[c]) <= 1e-9 for c in expected)
    return all(totals[c] == expected[c] for c in expected)
