# tests/test_settings.py
# ShuffleLDP v1.0.0 - Test per impostazioni e thread di default
# ============================================================================

from unittest.mock import patch

from config import DEFAULT_N, THREADS_ENV_VAR, get_default_threads, load_settings


class TestLoadSettings:

    def test_missing_file_gives_defaults(self, tmp_path):
        settings = load_settings(tmp_path / "absent.yaml")
        assert settings["simulation"]["n"] == DEFAULT_N
        assert settings["app"]["title"] == "ShuffleLDP"

    def test_partial_override(self, tmp_path):
        path = tmp_path / "shuffle_ldp.yaml"
        path.write_text("simulation:\n  n: 42\namplification:\n  delta: 1.0e-6\n", encoding="utf-8")
        settings = load_settings(path)
        assert settings["simulation"]["n"] == 42
        assert settings["simulation"]["d"] == 64
        assert settings["amplification"]["delta"] == 1e-6
        assert settings["amplification"]["epsilon0"] == 0.25

    def test_malformed_yaml_falls_back(self, tmp_path):
        path = tmp_path / "shuffle_ldp.yaml"
        path.write_text("simulation: [unclosed\n", encoding="utf-8")
        assert load_settings(path)["simulation"]["n"] == DEFAULT_N

    def test_non_mapping_section_ignored(self, tmp_path):
        path = tmp_path / "shuffle_ldp.yaml"
        path.write_text("simulation: 3\n", encoding="utf-8")
        assert load_settings(path)["simulation"]["n"] == DEFAULT_N


class TestDefaultThreads:

    def test_env_override(self):
        with patch.dict("os.environ", {THREADS_ENV_VAR: "3"}):
            assert get_default_threads() == 3

    def test_invalid_env_falls_back(self):
        with patch.dict("os.environ", {THREADS_ENV_VAR: "many"}):
            assert get_default_threads() >= 1
        with patch.dict("os.environ", {THREADS_ENV_VAR: "0"}):
            assert get_default_threads() >= 1
