"""
Тесты конфигурации и настроек
"""

import pytest
from pydantic import ValidationError

from mdst_engine.config.settings import (
    BenchSettings,
    DatabaseSettings,
    OracleSettings,
    Settings,
    SolverSettings,
)
from mdst_engine.models import RunConfig


class TestSettings:
    """Тесты настроек приложения"""

    def test_database_settings_defaults(self):
        """Тест настроек базы данных по умолчанию"""
        db_settings = DatabaseSettings()

        assert db_settings.url == "sqlite:///./mdst_bench.db"
        assert db_settings.echo is False

    def test_solver_settings_defaults(self):
        """Тест настроек решателя по умолчанию"""
        solver = SolverSettings()

        assert solver.default_epsilon == 0.1
        assert solver.threshold_scale == 1.0
        assert solver.check_invariants is False
        assert solver.max_wall_seconds is None

    def test_oracle_and_bench_defaults(self):
        """Тест настроек оракула и бенчмарка"""
        assert OracleSettings().exact_max_n == 9
        bench = BenchSettings()
        assert (bench.min_log_n, bench.max_log_n) == (12, 17)
        assert bench.max_ratio == 2.5

    def test_sweep_bound_follows_env(self, monkeypatch):
        """Граница перебора атласа берётся из окружения и не выходит за 2..7"""
        monkeypatch.setenv("MDST_ORACLE_SWEEP_MAX_N", "5")
        assert OracleSettings().sweep_max_n == 5
        with pytest.raises(ValidationError):
            OracleSettings(sweep_max_n=8)

    def test_env_prefix(self, monkeypatch):
        """Переменные окружения читаются с префиксом"""
        monkeypatch.setenv("MDST_SOLVER_THRESHOLD_SCALE", "0.5")
        assert SolverSettings().threshold_scale == 0.5

    def test_bench_ladder_validation(self):
        """Лестница бенчмарка не может быть пустой"""
        with pytest.raises(ValidationError):
            BenchSettings(min_log_n=10, max_log_n=8)

    def test_main_settings_structure(self):
        """Тест структуры основных настроек"""
        settings = Settings()

        assert settings.debug is False
        assert settings.log_level == "INFO"
        assert isinstance(settings.solver, SolverSettings)
        assert isinstance(settings.oracle, OracleSettings)
        assert isinstance(settings.bench, BenchSettings)
        assert isinstance(settings.database, DatabaseSettings)


class TestRunConfig:
    """Проверка флагов запуска"""

    def test_eps_is_scaled(self):
        """Внутренний ε равен ε/8"""
        assert RunConfig(eps_user=0.1).eps == pytest.approx(0.0125)

    @pytest.mark.parametrize("eps_user", [0.0, 0.2, 1 / 6, -0.1])
    def test_eps_out_of_range(self, eps_user):
        """ε вне (0, 1/8) отклоняется"""
        with pytest.raises(ValidationError):
            RunConfig(eps_user=eps_user)

    def test_frozen(self):
        """Конфигурация запуска неизменяема"""
        config = RunConfig(eps_user=0.1)
        with pytest.raises(ValidationError):
            config.seed = 3
