import json

import pandas as pd
import pytest

from mubpy.__main__ import get_mub_config
from mubpy.__main__ import main
from mubpy.composite_mubs import three_qubit_set
from mubpy.composite_mubs import two_qudit_complete_set
from mubpy.document import dump_document
from mubpy.document import mubset_to_document
from mubpy.globals import ExitCode
from mubpy.globals import ExportFormat
from mubpy.prime_mubs import complete_prime_set
from mubpy.utilities import package_path


LOCAL_CONFIG = """\
verification:
    tolerance          : 1e-9
    unitary_tolerance  : 1e-10
    n_jobs             : 1
    design_cross_check : True

entanglement:
    epsilon            : 1e-6
    haar_samples       : %d
    haar_batch         : 500

fixtures:
    directory          : null

output:
    format             : %s
    precision          : 4
"""


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write_set(path, mubs):
    path.write_text(dump_document(mubset_to_document(mubs)))
    return str(path)


def test_generate_prime(workdir, capsys):
    assert main(['generate', '--method', 'prime', '--p', '3']) == ExitCode.ok
    doc = json.loads(capsys.readouterr().out)
    assert doc['dim'] == 3
    assert len(doc['bases']) == 4
    assert doc['provenance']['method'] == 'prime'


def test_generate_to_file_with_seed(workdir):
    out = str(workdir / 'two_qutrit.json')
    code = main(['generate', '--method', 'prime-squared', '--p', '3', '--theta', '2',
                 '--seed', '11', '--out', out])
    assert code == ExitCode.ok
    doc = json.loads((workdir / 'two_qutrit.json').read_text())
    assert doc['provenance']['theta'] == 2
    assert doc['provenance']['seed'] == 11
    assert doc['bases'][3]['label'] == 'P^2 a0b1'


def test_generate_is_deterministic(workdir, capsys):
    main(['generate', '--method', 'two-qubit'])
    first = capsys.readouterr().out
    main(['generate', '--method', 'two-qubit'])
    assert capsys.readouterr().out == first


def run_pipeline(workdir, capsys, name):
    path = str(workdir / name)
    outputs = []
    for argv in (['generate', '--method', 'prime-squared', '--p', '3', '--out', path],
                 ['verify', path, '--design', '--complete', '--format', 'json'],
                 ['analyze', path, '--split', '3x3', '--seed', '9'],
                 ['export', path, '--format', 'text'],
                 ['export', path, '--format', 'latex']):
        assert main(argv) == ExitCode.ok
        outputs.append(capsys.readouterr().out)
    outputs.append((workdir / name).read_bytes())
    return outputs


def test_pipeline_is_byte_identical(workdir, capsys):
    (workdir / 'config').mkdir()
    (workdir / 'config' / 'mubpy.yml').write_text(LOCAL_CONFIG % (2000, 'json'))
    first = run_pipeline(workdir, capsys, 'first.json')
    second = run_pipeline(workdir, capsys, 'second.json')
    assert first == second
    assert json.loads(first[1])['verdict'] is True
    assert 'haar' in json.loads(first[2].split('\n', 1)[1])


@pytest.mark.parametrize("argv, code", [
    (['generate', '--method', 'prime', '--p', '6'], ExitCode.unsupported),
    (['generate', '--method', 'prime-squared', '--p', '2'], ExitCode.unsupported),
    (['generate', '--method', 'prime-squared', '--p', '5', '--theta', '2'], ExitCode.usage),
    (['generate', '--method', 'prime'], ExitCode.usage),
    (['generate', '--p', '3'], ExitCode.usage),
    (['generate', '--method', 'bogus', '--p', '3'], ExitCode.usage),
    (['generate', '--method', 'prime', '--p', '3', '--tol', '-1'], ExitCode.usage),
    (['generate', '--method', 'prime', '--p', '3', '--tol', '1e-6'], ExitCode.usage),
])
def test_generate_errors(workdir, argv, code):
    assert main(argv) == code


def test_verify_pass_and_fail(workdir, capsys):
    full = write_set(workdir / 'full.json', complete_prime_set(5))
    partial = write_set(workdir / 'partial.json', complete_prime_set(5).without(['m=4']))
    assert main(['verify', full, '--format', 'text', '--design', '--complete']) == ExitCode.ok
    assert capsys.readouterr().out.rstrip().endswith('VERDICT: PASS')
    assert main(['verify', partial, '--format', 'text']) == ExitCode.ok
    capsys.readouterr()
    assert main(['verify', partial, '--format', 'text', '--complete']) == ExitCode.failed
    out = capsys.readouterr().out
    assert 'INCOMPLETE: 5 of 6 bases' in out
    assert out.rstrip().endswith('VERDICT: FAIL')


def test_verify_json(workdir, capsys):
    full = write_set(workdir / 'full.json', two_qudit_complete_set(3))
    assert main(['verify', full, '--format', 'json', '--design']) == ExitCode.ok
    result = json.loads(capsys.readouterr().out)
    assert result['verdict'] is True
    assert result['n_bases'] == 10
    assert result['design']['passed'] is True
    assert len(result['pairs']) == 45


def test_verify_bad_input(workdir):
    assert main(['verify', str(workdir / 'missing.json')]) == ExitCode.usage
    (workdir / 'bad.json').write_text('{"schema_version": 1}')
    assert main(['verify', str(workdir / 'bad.json')]) == ExitCode.usage
    doc = mubset_to_document(complete_prime_set(3))
    doc['provenance'] = 5
    (workdir / 'odd.json').write_text(dump_document(doc))
    assert main(['verify', str(workdir / 'odd.json')]) == ExitCode.usage


def test_analyze_two_qutrit(workdir, capsys):
    path = write_set(workdir / 'd9.json', two_qudit_complete_set(3, 2))
    table = str(workdir / 'purities.csv')
    assert main(['analyze', path, '--split', '3x3', '--table', table]) == ExitCode.ok
    first, rest = capsys.readouterr().out.split('\n', 1)
    assert first == 'split 3x3: total purity 54.000000 vs reference 54'
    doc = json.loads(rest)
    assert (doc['n_product'], doc['n_maximal'], doc['n_mixed']) == (4, 6, 0)
    assert doc['design']['passed'] is True
    assert 'haar' not in doc
    assert len(pd.read_csv(table)) == 90


def test_analyze_three_qubit(workdir, capsys):
    path = write_set(workdir / 'd8.json', three_qubit_set())
    assert main(['analyze', path, '--split', '2x4']) == ExitCode.ok
    first, rest = capsys.readouterr().out.split('\n', 1)
    assert first.endswith('vs reference 48')
    assert json.loads(rest)['total'] == pytest.approx(48.0)


def test_analyze_middle_qubit_cut(workdir, capsys):
    path = write_set(workdir / 'd8.json', three_qubit_set())
    assert main(['analyze', path, '--split', '2x2x2:1']) == ExitCode.ok
    first, rest = capsys.readouterr().out.split('\n', 1)
    assert first == 'split 2x2x2:1: total purity 48.000000 vs reference 48'
    doc = json.loads(rest)
    assert doc['split'] == '2x2x2:1'
    assert (doc['n_product'], doc['n_maximal'], doc['n_mixed']) == (3, 6, 0)
    assert main(['analyze', path, '--split', '2x2x2:3']) == ExitCode.usage


def test_analyze_errors(workdir):
    path = write_set(workdir / 'd9.json', two_qudit_complete_set(3))
    assert main(['analyze', path, '--split', '2x4']) == ExitCode.usage
    assert main(['analyze', path]) == ExitCode.usage
    assert main(['analyze', path, '--split', '3by3']) == ExitCode.usage


def test_analyze_haar_with_local_config(workdir, capsys):
    (workdir / 'config').mkdir()
    (workdir / 'config' / 'mubpy.yml').write_text(LOCAL_CONFIG % (2000, 'json'))
    path = write_set(workdir / 'd9.json', two_qudit_complete_set(3))
    assert main(['analyze', path, '--split', '3x3', '--seed', '4']) == ExitCode.ok
    first, rest = capsys.readouterr().out.split('\n', 1)
    assert first == 'split 3x3: total purity 54.0000 vs reference 54'
    haar = json.loads(rest)['haar']
    assert haar['samples'] == 2000
    assert haar['lubkin'] == pytest.approx(0.6)
    assert abs(haar['mean'] - 0.6) < 5 * haar['stderr']


def test_export_formats(workdir, capsys):
    path = write_set(workdir / 'd2.json', complete_prime_set(2))
    assert main(['export', path, '--format', 'text']) == ExitCode.ok
    assert capsys.readouterr().out.startswith('d = 2, 3 bases')
    assert main(['export', path, '--format', 'latex']) == ExitCode.ok
    assert '\\begin{array}{cc}' in capsys.readouterr().out
    assert main(['export', path]) == ExitCode.ok
    assert capsys.readouterr().out == (workdir / 'd2.json').read_text()
    assert main(['export', path, '--format', 'pdf']) == ExitCode.usage


def test_export_uses_configured_format(workdir, capsys):
    config = workdir / 'text.yml'
    config.write_text(LOCAL_CONFIG % (1000, 'text'))
    path = write_set(workdir / 'd3.json', complete_prime_set(3))
    assert main(['export', path, '--config', str(config)]) == ExitCode.ok
    assert capsys.readouterr().out.startswith('d = 3, 4 bases')


def test_get_mub_config_defaults(workdir):
    specs = get_mub_config()
    assert specs['tolerance'] == pytest.approx(1e-9)
    assert specs['haar_samples'] == 100000
    assert specs['format'] == ExportFormat.json
    assert specs['fixture_dir'] is None


def test_get_mub_config_rejects_format(workdir):
    config = workdir / 'bad.yml'
    config.write_text(LOCAL_CONFIG % (1000, 'pdf'))
    with pytest.raises(ValueError):
        get_mub_config(str(config))
    assert main(['export', 'any.json', '--config', str(config)]) == ExitCode.usage


def test_verify_packaged_fixtures(workdir, capsys):
    two_qubit = package_path('fixtures', 'two_qubit_d4.json')
    triple = package_path('fixtures', 'qubit_qutrit_d6.json')
    assert main(['verify', two_qubit, '--design', '--complete']) == ExitCode.ok
    assert main(['verify', triple]) == ExitCode.ok
    assert main(['verify', triple, '--complete']) == ExitCode.failed
    assert main(['verify', triple, '--design']) == ExitCode.failed


def test_fixtures_command(workdir, capsys):
    assert main(['fixtures', '--format', 'text']) == ExitCode.ok
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert lines[0].startswith('qubit')
    assert lines[-1] == 'VERDICT: PASS'
    assert main(['fixtures']) == ExitCode.ok
    assert json.loads(capsys.readouterr().out)['passed'] is True


def test_fixtures_command_configured_directory(workdir, capsys):
    empty = workdir / 'empty'
    empty.mkdir()
    config = workdir / 'fixtures.yml'
    text = LOCAL_CONFIG % (1000, 'text')
    config.write_text(text.replace('directory          : null',
                                   'directory          : %s' % empty))
    assert main(['fixtures', '--config', str(config)]) == ExitCode.usage
