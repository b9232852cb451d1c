from compideal.cli import run
from compideal.fixtures import corpus_names, load, run_all


def test_corpus_parses():
    names = corpus_names()
    assert {"ex71", "ex72", "ex73_r3", "ex74_product", "m_cubed"} <= set(names)
    for name in names:
        assert load(name).ideal is not None


def test_every_fixture_check_passes():
    checks = run_all()
    failed = [c.to_dict() for c in checks if not c.passed]
    assert not failed
    assert len(checks) > 30


def test_fixtures_command_exit_zero():
    code, report = run(["fixtures"])
    assert code == 0 and report["result"]["failed"] == 0
