"""E2E tests for numeric commands: check, sweep, inf, fig, mc, verify-all"""

import json

import pytest

from main import app

pytestmark = pytest.mark.e2e


def parse_json(text: str):
    """stdout 에서 JSON 문서 부분만 파싱"""
    return json.loads(text[text.index('{'):text.rindex('}') + 1])


class TestCheckCommand:
    """check 명령어 테스트"""

    def test_laplace(self, cli_runner):
        result = cli_runner.invoke(app, ['check', 'laplace:mu=0,b=1'])
        assert result.exit_code == 0
        assert 'family: laplace' in result.output
        assert '0.7568833' in result.output
        assert 'exceeds=True' in result.output

    def test_poisson_plain_below_threshold(self, cli_runner):
        result = cli_runner.invoke(app, ['check', 'poisson:lambda=3', '--variant', 'plain'])
        assert result.exit_code == 0
        assert '0.61611' in result.output
        assert 'exceeds=False' in result.output

    def test_poisson_corrected(self, cli_runner):
        result = cli_runner.invoke(app, ['check', 'poisson:lambda=3', '--variant', 'poisson-corrected'])
        assert result.exit_code == 0
        assert 'band (poisson-corrected)' in result.output

    def test_json(self, cli_runner):
        result = cli_runner.invoke(app, ['--output', 'json', 'check', 'laplace:mu=0,b=1'])
        assert result.exit_code == 0
        data = parse_json(result.stdout)
        assert data['family'] == 'laplace'
        assert data['coverage_closed'] == pytest.approx(0.7568833, abs=5e-7)
        assert data['coverage_oracle'] == pytest.approx(data['coverage_closed'], abs=1e-9)
        assert data['exceeds_threshold'] is True
        assert data['variant'] == 'plain'

    def test_compound_poisson_uses_monte_carlo(self, cli_runner):
        result = cli_runner.invoke(app, ['--output', 'json', 'check', 'compound_poisson:n=10', '--samples', '20000'])
        assert result.exit_code == 0
        data = parse_json(result.stdout)
        assert data['coverage_closed'] is None
        assert data['oracle_method'] == 'monte_carlo'

    def test_paper_threshold(self, cli_runner):
        result = cli_runner.invoke(app, ['check', 'weibull:lambda=1,k=3', '--threshold', 'paper'])
        assert result.exit_code == 0
        assert 'threshold (paper)' in result.output
        assert '0.6827' in result.output

    @pytest.mark.parametrize("spec, message", [
        ('pareto:xm=1,alpha=1.5', 'alpha must exceed 2'),
        ('cauchy:x0=0', "unknown family 'cauchy'"),
        ('gamma:alpha=2,shape=1', "unknown key 'shape'"),
    ])
    def test_invalid_spec(self, cli_runner, spec, message):
        result = cli_runner.invoke(app, ['check', spec])
        assert result.exit_code == 2
        assert message in result.output

    def test_incompatible_variant(self, cli_runner):
        result = cli_runner.invoke(app, ['check', 'laplace:mu=0,b=1', '--variant', 'poisson-corrected'])
        assert result.exit_code == 2

    def test_missing_argument(self, cli_runner):
        result = cli_runner.invoke(app, ['check'])
        assert result.exit_code == 2


class TestConfigOption:
    """--config 설정 파일 테스트"""

    def test_config_file_applies(self, cli_runner, temp_config_file):
        result = cli_runner.invoke(app, ['--config', temp_config_file, 'check', 'weibull:lambda=1,k=3'])
        assert result.exit_code == 0
        assert 'threshold (paper)' in result.output

    def test_flag_overrides_config(self, cli_runner, temp_config_file):
        result = cli_runner.invoke(
            app, ['--config', temp_config_file, 'check', 'weibull:lambda=1,k=3', '--threshold', 'exact'],
        )
        assert result.exit_code == 0
        assert 'threshold (exact)' in result.output

    def test_unknown_key(self, cli_runner, tmp_path):
        path = tmp_path / 'bad.conf'
        path.write_text('colour = blue\n', encoding='utf-8')
        result = cli_runner.invoke(app, ['--config', str(path), 'info'])
        assert result.exit_code == 2
        assert "unknown key 'colour'" in result.output

    def test_missing_file(self, cli_runner, tmp_path):
        result = cli_runner.invoke(app, ['--config', str(tmp_path / 'none.conf'), 'info'])
        assert result.exit_code == 2

    def test_invalid_value(self, cli_runner, tmp_path):
        path = tmp_path / 'small.conf'
        path.write_text('samples = 10\n', encoding='utf-8')
        result = cli_runner.invoke(app, ['--config', str(path), 'mc'])
        assert result.exit_code == 2
        assert 'samples' in result.output


class TestSweepCommand:
    """sweep / fig 명령어 테스트"""

    def test_csv_to_stdout(self, cli_runner):
        result = cli_runner.invoke(
            app, ['sweep', 'weibull', '--param', 'k', '--lo', '1', '--hi', '4', '--points', '4', '--fixed', 'lambda=1'],
        )
        assert result.exit_code == 0
        lines = [line for line in result.stdout.splitlines() if line]
        assert lines[0] == 'param,coverage,excess'
        assert len(lines) == 5
        assert lines[3].startswith('3,0.66771')

    def test_csv_and_svg_files(self, cli_runner, temp_output_dir):
        csv_path = temp_output_dir / 'gamma.csv'
        svg_path = temp_output_dir / 'gamma.svg'
        result = cli_runner.invoke(app, [
            'sweep', 'gamma', '--param', 'alpha', '--lo', '0.1', '--hi', '100', '--points', '20', '--log',
            '--csv', str(csv_path), '--svg', str(svg_path),
        ])
        assert result.exit_code == 0
        assert '20 rows' in result.output
        assert csv_path.read_text(encoding='utf-8').startswith('param,coverage,excess\n')
        assert len(csv_path.read_text(encoding='utf-8').splitlines()) == 21
        assert '<polyline' in svg_path.read_text(encoding='utf-8')

    def test_corrected_family_suffix(self, cli_runner):
        result = cli_runner.invoke(
            app, ['--output', 'json', 'sweep', 'geometric_j', '--param', 'p', '--lo', '0.1', '--hi', '0.9', '--points', '9'],
        )
        assert result.exit_code == 0
        data = parse_json(result.stdout)
        assert data['variant'] == 'geometric-corrected'
        assert len(data['rows']) == 9

    def test_invalid_grid_point(self, cli_runner):
        result = cli_runner.invoke(
            app, ['sweep', 'pareto', '--param', 'alpha', '--lo', '1', '--hi', '5', '--points', '5'],
        )
        assert result.exit_code == 2
        assert 'alpha must exceed 2' in result.output

    def test_too_few_points(self, cli_runner):
        result = cli_runner.invoke(app, ['sweep', 'gamma', '--param', 'alpha', '--lo', '1', '--hi', '2', '--points', '1'])
        assert result.exit_code == 2

    def test_malformed_fixed(self, cli_runner):
        result = cli_runner.invoke(
            app, ['sweep', 'beta', '--param', 'beta', '--lo', '1', '--hi', '2', '--points', '3', '--fixed', 'alpha'],
        )
        assert result.exit_code == 2
        assert 'malformed fixed parameter' in result.output

    def test_figure_csv(self, cli_runner, temp_output_dir):
        csv_path = temp_output_dir / 'fig4.csv'
        result = cli_runner.invoke(app, ['fig', '4', '--csv', str(csv_path)])
        assert result.exit_code == 0
        lines = csv_path.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 'param,coverage,excess'
        assert len(lines) == 400

    @pytest.mark.parametrize("fig_id", ['0', '10'])
    def test_unknown_figure(self, cli_runner, fig_id):
        result = cli_runner.invoke(app, ['fig', fig_id])
        assert result.exit_code == 2
        assert 'figure id must be in 1..9' in result.output


class TestInfCommand:
    """inf 명령어 테스트"""

    def test_lognormal_not_attained(self, cli_runner):
        result = cli_runner.invoke(app, ['inf', 'lognormal', '--param', 'sigma', '--lo', '0.005', '--hi', '4'])
        assert result.exit_code == 0
        assert 'inf = 0.68' in result.output
        assert 'attained=false' in result.output

    def test_geometric_json(self, cli_runner):
        result = cli_runner.invoke(
            app, ['--output', 'json', 'inf', 'geometric_j', '--param', 'p', '--lo', '0.01', '--hi', '0.999'],
        )
        assert result.exit_code == 0
        data = parse_json(result.stdout)
        assert data['inf_value'] == pytest.approx(0.75, abs=1e-3)
        assert data['attained'] is False

    def test_empty_range(self, cli_runner):
        result = cli_runner.invoke(app, ['inf', 'gamma', '--param', 'alpha', '--lo', '2', '--hi', '1'])
        assert result.exit_code == 2


class TestMcCommand:
    """mc 명령어 테스트"""

    def test_default_compound_poisson(self, cli_runner):
        result = cli_runner.invoke(app, ['mc', '--samples', '20000', '--seed', '3'])
        assert result.exit_code == 0
        assert 'estimate=' in result.output
        assert '99% interval' in result.output

    def test_reproducible(self, cli_runner):
        args = ['--output', 'json', 'mc', '--n', '10', '--samples', '20000', '--seed', '11']
        first = parse_json(cli_runner.invoke(app, args).stdout)
        second = parse_json(cli_runner.invoke(app, args).stdout)
        assert first['hits'] == second['hits']
        assert first['n_samples'] == 20000

    def test_generic_poisson(self, cli_runner):
        result = cli_runner.invoke(app, ['mc', 'poisson:lambda=3', '--samples', '20000'])
        assert result.exit_code == 0
        assert 'poisson:lambda=3: estimate=' in result.output

    def test_csv_stdout(self, cli_runner):
        result = cli_runner.invoke(app, ['mc', 'poisson:lambda=3', '--samples', '20000', '--seed', '5', '--csv', '-'])
        assert result.exit_code == 0
        lines = [line for line in result.stdout.splitlines() if line]
        assert lines[0] == 'family,params,n_samples,seed,hits,estimate,stderr,lower_99,upper_99'
        assert len(lines) == 2
        fields = lines[1].split(',')
        assert fields[:4] == ['poisson', 'lambda=3', '20000', '5']
        assert float(fields[5]) == int(fields[4]) / 20000
        assert 'estimate=' not in result.stdout

    def test_csv_file(self, cli_runner, temp_output_dir):
        csv_path = temp_output_dir / 'mc.csv'
        args = ['--output', 'json', 'mc', '--n', '10', '--samples', '20000', '--seed', '11', '--csv', str(csv_path)]
        result = cli_runner.invoke(app, args)
        assert result.exit_code == 0
        data = parse_json(result.stdout)
        header, row = csv_path.read_text(encoding='utf-8').splitlines()
        assert header.startswith('family,params,')
        fields = row.split(',')
        assert fields[0] == 'compound_poisson_uniform'
        assert fields[1] == 'n=10'
        assert int(fields[4]) == data['hits']
        assert float(fields[8]) == data['upper_99']

    def test_unsupported_family(self, cli_runner):
        result = cli_runner.invoke(app, ['mc', 'laplace:mu=0,b=1', '--samples', '20000'])
        assert result.exit_code == 2

    def test_too_few_samples(self, cli_runner):
        result = cli_runner.invoke(app, ['mc', '--samples', '100'])
        assert result.exit_code == 2


@pytest.mark.slow
class TestVerifyAllCommand:
    """verify-all 명령어 테스트 (전체 검증 모음)"""

    def test_writes_report(self, cli_runner, temp_output_dir):
        out = temp_output_dir / 'report.json'
        result = cli_runner.invoke(app, ['--quiet', 'verify-all', '--out', str(out), '--samples', '200000'])
        assert result.exit_code in (0, 1)
        data = json.loads(out.read_text(encoding='utf-8'))
        assert data['samples'] == 200000
        summary = data['summary']
        assert summary['records'] == summary['records_passed'] + summary['records_failed']
        assert (result.exit_code == 0) == (summary['records_failed'] == 0 and summary['checks_failed'] == 0)
        assert all('pass' in record for record in data['records'])
