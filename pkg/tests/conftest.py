import pytest
from hypothesis import settings

from lame_atlas.classify import load_catalog

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")

# criterion number -> (title, outcome); filled by the acceptance tests
ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        for title, ok in ACCEPTANCE[n]:
            terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
