import pytest
from hypothesis import settings

from cmsenti import nb

from _fixtures import bn_darun_lexicon

# first calls pay numba compilation; wall-clock deadlines are meaningless here
settings.register_profile("default", deadline=None)
settings.load_profile("default")

TRAINED_MODELS = []
_CRITERIA = {}


@pytest.fixture(autouse=True, scope="session")
def _record_trained_models():
    """Keep every model trained anywhere in the suite for the normalization check."""
    original = nb.train

    def recording_train(*args, **kwargs):
        model = original(*args, **kwargs)
        TRAINED_MODELS.append(model)
        return model

    nb.train = recording_train
    yield
    nb.train = original


@pytest.fixture
def bn_lexicon():
    return bn_darun_lexicon()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    # acceptance runs last so the normalization criterion sees every model trained before it
    items.sort(key=lambda item: item.get_closest_marker("criterion") is not None)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[marker.args[0]] = (marker.args[1], report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome = _CRITERIA[number]
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]
        terminalreporter.write_line(f"AC{number:<3} {status}  {title}")
