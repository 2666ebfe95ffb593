"""
One function per subcommand. Each takes the parsed arguments, writes its
result to --out (stdout by default) and returns the exit code; errors
propagate as LamplighterError subclasses and are mapped in main.py.
"""
import logging

import pandas as pd

import settings as st
from cli.output import json_text, open_out, read_json, table_text, write_json, write_table, write_text
from errors import RejectedInputError, ResourceCapError, VerificationError
from graphs.cayley import cayley_ball, finite_cayley_graph
from graphs.constructions import cube_graph, cycle_graph
from graphs.export import to_dot
from groups.finite import FiniteModel
from groups.spec import finite_from_spec, model_from_spec
from hamiltonian.certificates import QhRefutation, qh_certificate
from hamiltonian.difference import hamiltonian_difference_report
from tsp.instance import TspInstance, TspSolution, validate_walk
from wreath.depth import PROFILE_COLUMNS, iter_depth_profile, profile_summary
from wreath.elements import lamplighter_from_spec
from wreath.metric import WordMetric, choose_backend
from wreath.verdicts import classify_abelian_free_product, depth_verdict


logger = logging.getLogger("lamplighter.cli")


def _need(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise RejectedInputError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


def _lamplighter(args):
    return lamplighter_from_spec(read_json(_need(args, 'group'), '--group'), '--group')


# ####### WORDLEN ########
#      ############
#         #####

def cmd_wordlen(args) -> int:
    group = _lamplighter(args)
    if args.element is None:
        g = group.identity
    else:
        g = group.element_from_json(read_json(args.element, '--element'), '--element')
    metric = WordMetric(group, choose_backend(group.base, args.backend))
    length = metric.length(g.state)
    walk = metric.ts_walk(g.state)
    if args.verify:
        ts = length - metric.lamp_cost(g.state)
        B = group.base
        gens = set(B.gens)
        if len(walk) - 1 != ts or walk[0] != B.identity or walk[-1] != g.position \
                or not set(g.support) <= set(walk) \
                or any(B.mul(B.inv(a), b) not in gens for a, b in zip(walk, walk[1:])):
            raise VerificationError(f"TS walk for {g} does not realise the computed TS term {ts}")
    names = [group.base.format(x) for x in walk]
    flag = 'exact' if metric.exact else 'upper-bound'
    if args.format == 'json':
        write_json({'element': str(g), 'length': length, 'exact': metric.exact,
                    'backend': metric.backend.strategy, 'walk': names}, args.out)
    else:
        head = f"{length} exact" if metric.exact else f"<= {length} upper-bound"
        write_text(f"{head}\nwalk: {' '.join(names)}\n", args.out)
    logger.info("wordlen %s = %d (%s)", g, length, flag)
    return st.EXIT_OK


# ####### HAMDIFF ########
#      ############
#         #####

def _finite_specs(args):
    doc = read_json(_need(args, 'group'), '--group')
    specs = doc if isinstance(doc, list) else [doc]
    return [finite_from_spec(spec, f"--group[{k}]" if isinstance(doc, list) else '--group')
            for k, spec in enumerate(specs)]


def _verify_difference(model: FiniteModel, report):
    graph = finite_cayley_graph(model)
    everything = frozenset(range(model.order))
    for g, walk in report.walks.items():
        inst = TspInstance(graph, model.identity, g, everything)
        try:
            validate_walk(inst, TspSolution(len(walk) - 1, walk))
        except VerificationError as e:
            raise VerificationError(f"{model.name}, walk to {model.format(g)}: {e}") from None


def cmd_hamdiff(args) -> int:
    rows = []
    for model in _finite_specs(args):
        report = hamiltonian_difference_report(model)
        if args.verify:
            _verify_difference(model, report)
        rows.append(report.as_row())
    df = pd.DataFrame(rows, columns=['group', 'gens', 'hamiltonian_difference', 'closed_ts',
                                     'max_open_ts', 'argmax'])
    write_table(df, _table_format(args), args.out)
    return st.EXIT_OK


def _table_format(args) -> str:
    return 'csv' if args.format in (None, 'dot') else args.format


# ####### VERDICT ########
#      ############
#         #####

def cmd_verdict(args) -> int:
    H = finite_from_spec(read_json(_need(args, 'H'), '--H'), '--H', letter='b')
    K = finite_from_spec(read_json(_need(args, 'K'), '--K'), '--K', letter='c')
    verdict = depth_verdict(H, K).to_dict()
    if H.table.is_abelian() and K.table.is_abelian():
        case = classify_abelian_free_product(H, K)
        verdict.update(case=case.case, case_reason=case.reason)
        if args.verify and case.verdict != verdict['verdict']:
            raise VerificationError(
                f"case {case.case} gives {case.verdict}, the Hamiltonian differences give {verdict['verdict']}"
            )
    write_json(verdict, args.out)
    return st.EXIT_OK


# ####### DEPTH PROFILE ########
#      ############
#         #####

def cmd_depth_profile(args) -> int:
    group = _lamplighter(args)
    backend = choose_backend(group.base, args.backend)
    radius, k_max = _need(args, 'radius'), _need(args, 'kmax')
    rows, partial = [], False
    fmt = _table_format(args)
    reports = iter_depth_profile(group, radius, k_max, backend, args.sample, args.seed)
    with open_out(args.out) as fh:
        if fmt == 'csv':
            fh.write(','.join(PROFILE_COLUMNS) + '\n')
        try:
            for report in reports:
                row = report.as_row()
                rows.append(row)
                partial = partial or report.partial
                if fmt == 'csv':
                    fh.write(pd.DataFrame([row], columns=PROFILE_COLUMNS)
                             .to_csv(index=False, header=False, lineterminator='\n'))
                    fh.flush()
        except ResourceCapError as e:
            logger.warning("depth profile cut short: %s", e)
            partial = True

        df = pd.DataFrame(rows, columns=PROFILE_COLUMNS)
        summary = profile_summary(df)
        if fmt == 'csv':
            fh.write(f"# summary{' (partial)' if partial else ''}\n")
            fh.write(table_text(summary, 'csv'))
        else:
            fh.write(json_text({
                'group': group.name,
                'backend': backend.strategy,
                'partial': partial,
                'rows': df.to_dict(orient='records'),
                'summary': summary.to_dict(orient='records'),
            }))
    return st.EXIT_CAP if partial else st.EXIT_OK


# ####### QH ########
#      ############
#         #####

def cmd_qh(args) -> int:
    model = model_from_spec(read_json(_need(args, 'group'), '--group'), '--group')
    if args.strategy is not None and args.strategy not in st.QH_STRATEGIES:
        raise RejectedInputError(f"--strategy must be one of {', '.join(st.QH_STRATEGIES)}")
    result = qh_certificate(model, _need(args, 'nmax'), args.M, args.strategy)
    if isinstance(result, QhRefutation):
        write_table(result.table, _table_format(args), args.out)
        return st.EXIT_OK
    if args.verify:
        result.check()
    if not result.holds:
        logger.warning("%s: certificate needs M = %d, above the requested %d", model.name,
                       result.achieved_M, result.M)
    write_json(result.to_dict(), args.out)
    return st.EXIT_OK if result.holds else st.EXIT_VERIFY


# ####### EXPORT GRAPH ########
#      ############
#         #####

def _dims(text: str):
    try:
        dims = [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise RejectedInputError(f"--cube expects comma-separated sides, got {text!r}") from None
    if not dims:
        raise RejectedInputError("--cube needs at least one side")
    return dims


def cmd_export_graph(args) -> int:
    if args.format not in (None, 'dot'):
        raise RejectedInputError(f"export-graph writes dot, not {args.format!r}")
    if args.cube is not None:
        dims = _dims(args.cube)
        text = to_dot(cube_graph(dims), name=f"Cube({','.join(map(str, dims))})")
    elif args.cycle is not None:
        text = to_dot(cycle_graph(args.cycle), name=f"C{args.cycle}")
    else:
        model = model_from_spec(read_json(_need(args, 'group'), '--group'), '--group')
        radius = args.radius
        if radius is None:
            if not model.is_finite:
                raise RejectedInputError(f"{model.name} is infinite; pass --radius")
            radius = model.order
        ball = cayley_ball(model, radius)
        text = to_dot(ball.graph, name=f"{model.name} r={radius}", namer=model.format)
    write_text(text, args.out)
    return st.EXIT_OK
