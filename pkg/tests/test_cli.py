import json
import os

import pytest

from app import main
from modules.cli.commands import (
    COMMANDS,
    EXIT_FAILS,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNDETERMINED,
    ConfigError,
    RunConfig,
    build_parser,
    config_from_args,
    render_text,
    run,
)
from modules.cli.settings import DEFAULT_SETTINGS, SETTINGS_FILE, load_settings
from modules.geometry.arrangement import parse_arrangement
from modules.presentation.storage import read_presentation


@pytest.fixture
def no_settings(tmp_path):
    """A settings path that does not exist, so built-in defaults apply."""
    return str(tmp_path / 'missing-settings.json')


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -----------------------------------------------------------------------------
# run()
# -----------------------------------------------------------------------------
def test_classify_pencil(arrangement_path):
    result = run(RunConfig('classify', (arrangement_path('pencil4'),)))
    assert result.exit_code == EXIT_OK
    assert result.report['has_no_edges']
    assert result.report['certified']
    assert result.report['reason'] == 'graph has no edges'


def test_lattice_and_graph(arrangement_path):
    lattice = run(RunConfig('lattice', (arrangement_path('shared_line'),)))
    assert lattice.exit_code == EXIT_OK
    assert lattice.report['pair_count_identity']

    graph = run(RunConfig('graph', (arrangement_path('ceva'),))).report
    assert len(graph['vertices']) == 4
    assert len(graph['edges']) == 6


def test_check_complete(arrangement_path):
    result = run(RunConfig('check-complete', (arrangement_path('shared_line'),)))
    assert result.exit_code == EXIT_FAILS
    assert result.report['verdict'] == 'incomplete'
    assert len(result.report['witness']) == 3

    result = run(RunConfig('check-complete', (arrangement_path('pencil3'),), workers=2))
    assert result.exit_code == EXIT_OK
    assert result.report['triples_checked'] == 27


def test_check_complete_uncertified_but_complete(arrangement_path):
    # K4 Fan graph, so no certificate, yet every generator triple passes
    result = run(RunConfig('check-complete', (arrangement_path('ceva'),)))
    assert result.exit_code == EXIT_OK
    assert result.report['verdict'] == 'complete'
    assert result.report['witness'] is None
    assert result.report['triples_checked'] == 216


def test_check_complemented(arrangement_path, presentation_path):
    assert run(RunConfig('check-complemented', (arrangement_path('ceva'),))).exit_code == EXIT_OK
    result = run(RunConfig('check-complemented', (presentation_path('noncancellative'),)))
    assert result.exit_code == EXIT_FAILS
    assert not result.report['ok']


def test_word_problem(arrangement_path):
    path = (arrangement_path('pencil3'),)
    result = run(RunConfig('word-problem', path, ('x2 x1 x0', 'x0 x2 x1')))
    assert result.exit_code == EXIT_OK
    assert result.report == {'verdict': 'equal', 'w': 'x2 x1 x0', 'w_prime': 'x0 x2 x1'}

    assert run(RunConfig('word-problem', path, ('x0 x1', 'x1 x0'))).exit_code == EXIT_FAILS

    result = run(RunConfig('word-problem', path, ('x2 x1 x0', 'x1 x0 x2'), budget=1))
    assert result.exit_code == EXIT_UNDETERMINED
    assert result.report['verdict'] == 'undetermined'


def test_reverse(arrangement_path, presentation_path):
    result = run(RunConfig('reverse', (arrangement_path('pencil3'),), ('x0^-1 x1',), trace=True))
    assert result.exit_code == EXIT_OK
    assert result.report['final'] == 'x2 x1 x2^-1 x0^-1'
    assert result.report['complements'] == {'v_prime': 'x2 x1', 'v': 'x0 x2'}
    assert result.report['steps'][0]['word'] == 'x0^-1 x1'

    quiet = run(RunConfig('reverse', (arrangement_path('pencil3'),), ('x0^-1 x1',), seed=3))
    assert 'steps' not in quiet.report
    assert quiet.report['final'] == result.report['final']

    stuck = run(RunConfig('reverse', (presentation_path('free2'),), ('a^-1 b',)))
    assert stuck.exit_code == EXIT_FAILS
    assert stuck.report['stuck_pair'] == ['a', 'b']


def test_present_writes_file(tmp_path, arrangement_path):
    output = tmp_path / 'pencil3.json'
    result = run(RunConfig('present', (arrangement_path('pencil3'),), output=str(output)))
    assert result.exit_code == EXIT_OK
    assert result.report['generators'] == ['x0', 'x1', 'x2']
    assert result.report['certified']
    assert read_presentation(str(output)).relations == (((2, 1, 0), (1, 0, 2)),
                                                        ((2, 1, 0), (0, 2, 1)),
                                                        ((1, 0, 2), (0, 2, 1)))


def test_generate():
    result = run(RunConfig('generate', words=('pencil', '3')))
    assert result.exit_code == EXIT_OK
    assert len(parse_arrangement(result.text)) == 3

    first = run(RunConfig('generate', words=('random', '5'), seed=7)).text
    assert first == run(RunConfig('generate', words=('random', '5'), seed=7)).text
    assert len(parse_arrangement(first)) == 5

    assert run(RunConfig('generate', words=('grid', '3'))).exit_code == EXIT_INPUT_ERROR


def test_transversal(tmp_path, arrangement_path):
    pencil3 = arrangement_path('pencil3')
    result = run(RunConfig('transversal', (pencil3, arrangement_path('pencil2_at_4_1'))))
    assert result.exit_code == EXIT_OK
    assert result.report == {'transversal': True, 'degrees': [3, 2]}

    parallel = tmp_path / 'parallel.arr'
    parallel.write_text('1 0 1\n', encoding='utf-8')
    result = run(RunConfig('transversal', (pencil3, str(parallel))))
    assert result.exit_code == EXIT_FAILS
    assert not result.report['transversal']

    # a line common to both is an input error
    result = run(RunConfig('transversal', (pencil3, arrangement_path('pencil4'))))
    assert result.exit_code == EXIT_INPUT_ERROR


def test_add_line(arrangement_path):
    path = (arrangement_path('pencil3'),)
    assert run(RunConfig('add-line', path, ('1 1 5',))).report == {'kind': 'transversal', 'point': None}
    assert run(RunConfig('add-line', path, ('1 2 0',))).report == {'kind': 'through-one-point', 'point': 0}
    assert run(RunConfig('add-line', path, ('1 0 0',))).exit_code == EXIT_INPUT_ERROR


def test_monoid_explore(arrangement_path, presentation_path):
    result = run(RunConfig('monoid-explore', (arrangement_path('pencil3'),), max_length=3,
                           list_classes=True))
    assert result.exit_code == EXIT_OK
    assert result.report['classes']['class_counts'] == {'0': 1, '1': 3, '2': 9, '3': 25}
    assert ['x0 x2 x1', 'x1 x0 x2', 'x2 x1 x0'] in result.report['classes']['classes']['3']
    assert result.report['fan_graph']['has_no_edges']
    assert result.report['corollary'] == {'applies': True, 'holds': True}

    result = run(RunConfig('monoid-explore', (presentation_path('noncancellative'),), max_length=3))
    assert result.exit_code == EXIT_FAILS
    assert 'fan_graph' not in result.report

    result = run(RunConfig('monoid-explore', (arrangement_path('pencil3'),), size_cap=10))
    assert result.exit_code == EXIT_INPUT_ERROR


def test_input_errors(tmp_path, arrangement_path):
    missing = run(RunConfig('classify', (str(tmp_path / 'nowhere.arr'),)))
    assert missing.exit_code == EXIT_INPUT_ERROR
    assert 'error' in missing.report

    broken = tmp_path / 'broken.arr'
    broken.write_text('1 0 zero\n', encoding='utf-8')
    assert run(RunConfig('lattice', (str(broken),))).exit_code == EXIT_INPUT_ERROR

    unknown = run(RunConfig('word-problem', (arrangement_path('pencil3'),), ('x0 x9', 'x0')))
    assert unknown.exit_code == EXIT_INPUT_ERROR

    binary = tmp_path / 'binary.arr'
    binary.write_bytes(b'\xff\xfe\x00 1 0 0\n')
    assert run(RunConfig('lattice', (str(binary),))).exit_code == EXIT_INPUT_ERROR

    bad_size = run(RunConfig('generate', words=('pencil', 'three')))
    assert bad_size.exit_code == EXIT_INPUT_ERROR
    assert 'integer' in bad_size.report['error']


def test_internal_errors_are_not_reported_as_input_errors(monkeypatch, arrangement_path):
    def broken(config):
        raise ValueError('internal failure')

    monkeypatch.setitem(COMMANDS, 'classify', broken)
    with pytest.raises(ValueError, match='internal failure'):
        run(RunConfig('classify', (arrangement_path('pencil4'),)))


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig('explode')
    with pytest.raises(ConfigError):
        RunConfig('classify', budget=0)
    with pytest.raises(ConfigError):
        RunConfig('classify', workers=0)
    with pytest.raises(ConfigError):
        RunConfig('classify', output_format='xml')


def test_render_text(arrangement_path):
    config = RunConfig('classify', (arrangement_path('pencil4'),), output_format='text')
    text = render_text(config, run(config))
    assert 'ARRANGEMENT MONOIDS - CLASSIFY' in text
    assert 'has_no_edges: True' in text
    assert text.rstrip().endswith('✅ Success')


# -----------------------------------------------------------------------------
# settings and argument parsing
# -----------------------------------------------------------------------------
def test_load_settings(tmp_path):
    assert load_settings(str(tmp_path / 'missing.json')) == DEFAULT_SETTINGS

    path = tmp_path / 'settings.json'
    path.write_text(json.dumps({'reversing': {'budget': 50}, 'extra': {'x': 1}}), encoding='utf-8')
    settings = load_settings(str(path))
    assert settings['reversing']['budget'] == 50
    assert settings['monoid'] == DEFAULT_SETTINGS['monoid']
    assert settings['extra'] == {'x': 1}


def test_default_settings_file_does_not_depend_on_cwd(monkeypatch, tmp_path):
    assert os.path.isabs(SETTINGS_FILE)
    assert os.path.isfile(SETTINGS_FILE)

    decoy = tmp_path / 'data'
    decoy.mkdir()
    (decoy / 'settings.json').write_text(json.dumps({'reversing': {'budget': 7}}), encoding='utf-8')
    monkeypatch.chdir(tmp_path)
    assert load_settings()['reversing']['budget'] == 10000


def test_config_from_args():
    settings = load_settings('does-not-exist.json')
    args = build_parser().parse_args(['word-problem', 'p.arr', 'x0', 'x1', '--budget', '5'])
    config = config_from_args(args, settings)
    assert config.inputs == ('p.arr',)
    assert config.words == ('x0', 'x1')
    assert config.budget == 5
    assert config.max_length == settings['monoid']['max_length']

    args = build_parser().parse_args(['generate', 'random', '4', '--seed', '2'])
    config = config_from_args(args, settings)
    assert config.words == ('random', '4')
    assert config.seed == 2


# -----------------------------------------------------------------------------
# main()
# -----------------------------------------------------------------------------
def test_main_json_output(capsys, no_settings, arrangement_path):
    code, out, _ = run_main(capsys, 'check-complete', arrangement_path('pencil3'),
                            '--settings', no_settings)
    assert code == EXIT_OK
    assert json.loads(out)['verdict'] == 'complete'


def test_main_text_output(capsys, no_settings, arrangement_path):
    code, out, _ = run_main(capsys, 'word-problem', arrangement_path('pencil3'), 'x2 x1 x0', 'x0 x2 x1',
                            '--format', 'text', '--settings', no_settings)
    assert code == EXIT_OK
    assert 'verdict: equal' in out


def test_main_generate_writes_arrangement(capsys, no_settings):
    code, out, _ = run_main(capsys, 'generate', 'pencil', '4', '--settings', no_settings)
    assert code == EXIT_OK
    assert len(parse_arrangement(out)) == 4


def test_main_input_error(capsys, no_settings, tmp_path):
    code, out, err = run_main(capsys, 'classify', str(tmp_path / 'nowhere.arr'),
                              '--settings', no_settings)
    assert code == EXIT_INPUT_ERROR
    assert 'Error' in err
    assert 'error' in json.loads(out)


def test_main_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(['word-problem'])
    assert info.value.code == EXIT_INPUT_ERROR
