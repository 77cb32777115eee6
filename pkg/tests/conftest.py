import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sctor.combinatorics import SimplicialComplement, complex_from_complement
from sctor.linalg import GF2, QQ, FieldSpec

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIELDS = [QQ, GF2]
FIELD_IDS = ["QQ", "GF2"]

FIVE = SimplicialComplement.of(5, [[1, 5], [2, 4], [1, 2, 3], [3, 4, 5]])
OCTA = SimplicialComplement.of(6, [[1, 2], [3, 4], [5, 6]])

# acceptance lines collected during the run, printed at the end
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def field(request) -> FieldSpec:
    return request.param


@st.composite
def complements(draw, max_m: int = 6, max_k: int = 5, min_m: int = 1):
    m = draw(st.integers(min_m, max_m))
    gen = st.frozensets(st.integers(1, m), min_size=1, max_size=min(m, 4))
    gens = draw(st.lists(gen, min_size=0, max_size=max_k))
    return SimplicialComplement(m, tuple(gens))


@st.composite
def complexes(draw, max_m: int = 6, max_k: int = 5):
    return complex_from_complement(draw(complements(max_m, max_k)))


@st.composite
def generator_systems(draw, max_m: int = 3, max_k: int = 4, max_exp: int = 2):
    from sctor.combinatorics import GeneratorSystem

    m = draw(st.integers(1, max_m))
    vec = st.tuples(*[st.integers(0, max_exp)] * m).filter(any)
    return GeneratorSystem(m, tuple(draw(st.lists(vec, min_size=1, max_size=max_k))))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
