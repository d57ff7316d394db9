import pytest
from hypothesis import settings

from dagsort.demo import demo_dag

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@pytest.fixture
def demo():
    """Fresh copy of the 12-vertex two-source ordered DAG."""
    return demo_dag()
