# -*- coding: utf-8 -*-
"""Reports for the command line: a dict per run, rendered as JSON or as text tables

Reports carry no timings unless asked for, so two runs over the same config give
byte-identical output.

"""
import json
import logging
import math
import pandas as pd
from nichols_tools.algebra import freealg
from nichols_tools.algebra import words as wd
from nichols_tools.cartan import analysis as cartan
from nichols_tools.lie import theorems
from nichols_tools.results import STATUSES
import nichols_tools.runner.constants as constants

logger = logging.getLogger(__name__)

INFINITE = 'inf'


def jsonable(value):
    """tuples to lists, tuple keys to 'a,b' strings, infinities to 'inf'"""
    if isinstance(value, dict):
        return {_key(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, float) and math.isinf(value):
        return INFINITE
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def _key(key) -> str:
    if isinstance(key, tuple):
        return ','.join(str(item) for item in key)
    return str(key)


#sections
def hilbert_section(check_set) -> dict:
    basis = check_set.basis
    series = basis.hilbert_series()
    return {
        'coefficients': series['coefficients'],
        'blocks': series['blocks'],
        'terminated_at': series['terminated_at'],
        'cutoff': basis.cutoff,
        'dimension': dimension_entry(check_set),
    }


def dimension_entry(check_set):
    """dim B(V), or why it is not a number: certificate kinds for infinity, else a cutoff note"""
    basis = check_set.basis
    if basis.is_finite():
        return basis.dimension()
    certificates = check_set.certificates
    if certificates:
        return {'value': 'infinite', 'certificates': sorted({item['kind'] for item in certificates})}
    return f'>= {sum(basis.hilbert())} at cutoff {basis.cutoff}'


def record_row(record, n: int) -> dict:
    return {
        'word': record.label(n),
        'degree': list(record.degree),
        'p_uu': str(record.p_uu),
        'ord_p_uu': record.ord_puu,
        'height': record.height if record.height is not None else 'unknown',
        'height_flag': record.height_flag or '',
    }


def roots_section(check_set) -> dict:
    analysis = check_set.analysis
    n = check_set.space.n
    system = analysis.root_system()
    return {
        'hard_letters': [record_row(record, n) for record in analysis.hard_letters()],
        'roots': system['roots'],
        'edge_count': system['edge_count'],
        'dynkin_edges': len(check_set.space.dynkin().edge_labels),
        'm_infinity': [record.label(n) for record in analysis.m_infinity_scan()],
        'certificates': theorems.infinity_certificates(analysis),
    }


def pbw_section(check_set) -> dict:
    analysis = check_set.analysis
    census = analysis.pbw_census()
    return {
        'heights': {record.label(check_set.space.n): record.height for record in analysis.hard_letters()},
        'census': census['coefficients'],
        'census_blocks': census['blocks'],
        'hilbert': check_set.basis.hilbert(),
        'dimension': census['dimension'],
    }


def lie_section(check_set) -> dict:
    spans = check_set.spans
    direct_sum = theorems.direct_sum_check(check_set.basis, check_set.span)
    return {
        'flavors': {flavor: spans[flavor].summary() for flavor in freealg.FLAVORS},
        'direct_sum': direct_sum,
        'certificates': check_set.certificates,
    }


def present_section(check_set) -> dict:
    datum = check_set.datum
    relations = cartan.presentation(datum, check_set.analysis)
    result = cartan.verify_presentation(datum, check_set.analysis, relations)
    return {
        'cartan': datum.summary(),
        'relations': relations.to_text(check_set.space.n).splitlines(),
        'verification': {'status': result.status, 'reason': result.reason, 'details': result.details},
    }


def checks_section(check_set, suites=None) -> dict:
    results = check_set.run(suites)
    counts = {status: sum(result.status == status for result in results) for status in STATUSES}
    return {
        'results': [dict(result.as_row(), details=result.details) for result in results],
        'counts': counts,
    }


SECTIONS = {
    'hilbert': (hilbert_section,),
    'roots': (hilbert_section, roots_section),
    'pbw': (hilbert_section, pbw_section),
    'lie': (hilbert_section, lie_section),
    'present': (present_section,),
}


def build_report(check_set, command: str, suites=None, timings: bool = False) -> dict:
    if command not in constants.COMMANDS:
        raise ValueError(f'unknown command {command!r}')
    config = check_set.config
    report = {
        'format_version': constants.REPORT_FORMAT_VERSION,
        'command': command,
        'config': config.to_dict(),
        'config_hash': config.cache_key(),
    }
    if command == 'check':
        report['hilbert'] = hilbert_section(check_set)
        report['roots'] = roots_section(check_set)
        report['lie'] = lie_section(check_set)
        report['checks'] = checks_section(check_set, suites)
    else:
        for section in SECTIONS[command]:
            report[section.__name__[:-len('_section')]] = section(check_set)
    if timings:
        report['timings'] = {stage: round(seconds, 3) for stage, seconds in sorted(check_set.timings.items())}
    return jsonable(report)


#rendering
def render(report: dict, output_format: str = 'text') -> str:
    if output_format == 'structured':
        return json.dumps(report, sort_keys=True, indent=2) + '\n'
    if output_format != 'text':
        raise ValueError(f'unknown report format {output_format!r}')
    return render_text(report)


def render_text(report: dict) -> str:
    config = report['config']
    lines = [f"{config['name'] or 'config'}: M={config['M']} n={config['n']} cutoff={config['cutoff']} "
             f"q={config['q']}", f"config hash {report['config_hash']}"]
    if 'hilbert' in report:
        hilbert = report['hilbert']
        lines += ['', 'Hilbert series',
                  '  coefficients: ' + ' '.join(str(c) for c in hilbert['coefficients']),
                  f"  terminated at: {hilbert['terminated_at']}",
                  f"  dim B(V): {_text(hilbert['dimension'])}"]
    if 'roots' in report:
        roots = report['roots']
        lines += ['', 'Hard super-letters', _table(roots['hard_letters']),
                  f"  roots: {roots['roots']}", f"  E_e': {roots['edge_count']}"]
        if roots['m_infinity']:
            lines.append(f"  m-infinity: {', '.join(roots['m_infinity'])}")
        lines += [f"  infinite: {item['kind']} {item['witness']}" for item in roots['certificates']]
    if 'pbw' in report:
        pbw = report['pbw']
        lines += ['', 'PBW census',
                  '  census:  ' + ' '.join(str(c) for c in pbw['census']),
                  '  hilbert: ' + ' '.join(str(c) for c in pbw['hilbert']),
                  f"  dimension: {_text(pbw['dimension'])}"]
    if 'lie' in report:
        lie = report['lie']
        rows = [{'flavor': flavor, 'dimension': summary['label'], 'stabilized': summary['stabilized']}
                for flavor, summary in lie['flavors'].items()]
        lines += ['', 'Nichols Lie algebras', _table(rows)]
        direct_sum = lie['direct_sum']
        lines.append(f"  B(V) = F + L(V): {_text(direct_sum['holds'])}"
                     + (f" (witness {direct_sum['witness']})" if direct_sum['witness'] else ''))
    if 'present' in report:
        present = report['present']
        lines += ['', f"Cartan type {present['cartan']['tag']}"] + ['  ' + line for line in present['relations']]
        verification = present['verification']
        lines.append(f"  verification: {verification['status']} {verification['reason']}".rstrip())
    if 'checks' in report:
        checks = report['checks']
        rows = [{key: row[key] for key in ('suite', 'check', 'status', 'reason', 'witness')}
                for row in checks['results']]
        counts = ', '.join(f'{count} {status}' for status, count in checks['counts'].items())
        lines += ['', 'Checks', _table(rows), f'  {counts}']
    if 'timings' in report:
        lines += ['', 'Timings'] + [f'  {stage}: {seconds}s' for stage, seconds in report['timings'].items()]
    return '\n'.join(lines) + '\n'


def _table(rows: list) -> str:
    if not rows:
        return '  (none)'
    return pd.DataFrame(rows).to_string(index=False)


def _text(value) -> str:
    if isinstance(value, dict):
        return f"{value['value']} ({', '.join(value['certificates'])})"
    if value is None:
        return 'unknown'
    return str(value)
