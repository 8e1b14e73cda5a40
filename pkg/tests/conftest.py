from hypothesis import settings, strategies as st

from multisym.indexing import Context
from multisym.polynomial import Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CTX3 = Context(1, 2, 1)


def polynomials(ctx=CTX3, max_exp=2, max_terms=5, max_coeff=5):
    """Small random polynomials over ``ctx``."""
    mono = st.tuples(*[st.integers(0, max_exp)] * ctx.size)
    coeff = st.integers(-max_coeff, max_coeff)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: Polynomial(ctx, d))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
