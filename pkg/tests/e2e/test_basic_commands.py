"""E2E tests for basic commands: info, version, setup - all option combinations"""

import json

import pytest

import main
from main import app

pytestmark = pytest.mark.e2e


class TestInfoCommand:
    """info 명령어 테스트"""

    def test_info_help(self, cli_runner):
        """info --help 명령 테스트"""
        result = cli_runner.invoke(app, ['info', '--help'])
        assert result.exit_code == 0
        assert 'Usage:' in result.output

    @pytest.mark.smoke
    def test_info_basic(self, cli_runner):
        """info - 계열 목록 표시 테스트"""
        result = cli_runner.invoke(app, ['info'])
        assert result.exit_code == 0
        assert 'sigband' in result.output
        assert 'invgaussian' in result.output

    def test_info_json(self, cli_runner):
        """info - JSON 출력 테스트"""
        result = cli_runner.invoke(app, ['--output', 'json', 'info'])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data['families']['count']['total'] == 16
        assert data['threshold_paper'] == 0.6827
        assert 'poisson-corrected' in data['variants']

    # 전역 옵션과의 조합 테스트
    @pytest.mark.parametrize("global_options", [
        ['--verbose'],
        ['--quiet'],
        ['--output', 'text'],
    ])
    def test_info_with_global_options(self, cli_runner, global_options):
        """info와 전역 옵션 조합 테스트"""
        cmd = global_options + ['info']
        result = cli_runner.invoke(app, cmd)
        assert result.exit_code == 0


class TestVersionCommand:
    """version 명령어 테스트"""

    def test_version_help(self, cli_runner):
        """version --help 명령 테스트"""
        result = cli_runner.invoke(app, ['version', '--help'])
        assert result.exit_code == 0
        assert 'Usage:' in result.output

    @pytest.mark.smoke
    def test_version_basic(self, cli_runner):
        """version - 기본 버전 표시 테스트"""
        result = cli_runner.invoke(app, ['version'])
        assert result.exit_code == 0
        assert 'sigband v' in result.output

    def test_version_quiet(self, cli_runner):
        """version --quiet 는 아무것도 출력하지 않음"""
        result = cli_runner.invoke(app, ['--quiet', 'version'])
        assert result.exit_code == 0
        assert result.stdout == ''

    # 전역 옵션과의 조합 테스트
    @pytest.mark.parametrize("global_options", [
        ['--verbose'],
        ['--verbose', '--output', 'json'],
        ['--output', 'text'],
    ])
    def test_version_with_global_options(self, cli_runner, global_options):
        """version과 전역 옵션 조합 테스트"""
        cmd = global_options + ['version']
        result = cli_runner.invoke(app, cmd)
        assert result.exit_code == 0


class TestSetupCommand:
    """setup 명령어 테스트"""

    def test_setup_help(self, cli_runner):
        """setup --help 명령 테스트"""
        result = cli_runner.invoke(app, ['setup', '--help'])
        assert result.exit_code == 0
        assert 'Usage:' in result.output

    def test_setup_copies_sample(self, cli_runner, temp_project_root, monkeypatch):
        """setup - settings.sample.yaml 을 settings.yaml 로 복사"""
        monkeypatch.setattr(main, 'PROJECT_ROOT', temp_project_root)
        result = cli_runner.invoke(app, ['setup'])
        assert result.exit_code == 0
        settings_file = temp_project_root / 'settings.yaml'
        assert settings_file.exists()
        assert 'samples:' in settings_file.read_text(encoding='utf-8')

    def test_setup_existing(self, cli_runner, temp_project_root, monkeypatch):
        """setup - 이미 있으면 덮어쓰지 않음"""
        monkeypatch.setattr(main, 'PROJECT_ROOT', temp_project_root)
        settings_file = temp_project_root / 'settings.yaml'
        settings_file.write_text('seed: 1\n', encoding='utf-8')
        result = cli_runner.invoke(app, ['setup'])
        assert result.exit_code == 0
        assert settings_file.read_text(encoding='utf-8') == 'seed: 1\n'

    def test_setup_missing_sample(self, cli_runner, tmp_path, monkeypatch):
        """setup - 템플릿이 없으면 종료 코드 2"""
        monkeypatch.setattr(main, 'PROJECT_ROOT', tmp_path)
        result = cli_runner.invoke(app, ['setup'])
        assert result.exit_code == 2
        assert not (tmp_path / 'settings.yaml').exists()


class TestGlobalOptions:
    """전역 옵션 테스트"""

    def test_main_help(self, cli_runner):
        result = cli_runner.invoke(app, ['--help'])
        assert result.exit_code == 0
        for command in ('check', 'verify-all', 'sweep', 'inf', 'fig', 'mc'):
            assert command in result.output

    def test_invalid_output_format(self, cli_runner):
        result = cli_runner.invoke(app, ['--output', 'xml', 'info'])
        assert result.exit_code == 2

    def test_unknown_command(self, cli_runner):
        result = cli_runner.invoke(app, ['chat'])
        assert result.exit_code == 2
