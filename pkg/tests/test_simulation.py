from mrdcodes.channels import ModelBParams, model_a_setup
from mrdcodes.codes import admissible_eps, new_code
from mrdcodes.simulation import run_trials

from conftest import field


def test_zero_error_control():
    pa = model_a_setup(field(2, 1, 6), 3)
    st = run_trials(new_code(pa.ctx, "GG", 3), pa, 0, 0)
    assert st.trials == 0
    spec = new_code(field(2, 1, 6), "GG", 3)
    st = run_trials(spec, None, 0, 25, seed=3)
    assert st.successes == 25 and dict(st.branch_histogram) == {"Case1": 25}


def test_deterministic_and_tallied():
    pa = model_a_setup(field(2, 1, 6), 3)
    spec = new_code(pa.ctx, "GG", 3)
    a = run_trials(spec, pa, 2, 40, seed=7).to_dict()
    b = run_trials(spec, pa, 2, 40, seed=7).to_dict()
    assert a == b and a["mean_decode_micros"] is None
    assert a["successes"] + a["failures"] + a["ambiguous"] == 40 and a["wrong"] == 0
    c = run_trials(spec, pa, 2, 40, seed=8).to_dict()
    assert c != a


def test_timing_and_model_b():
    ctx = field(2, 2, 7)
    spec = new_code(ctx, "GTG", 3, 1, admissible_eps(ctx, "GTG", 3)[0])
    st = run_trials(spec, ModelBParams("odd"), 0, 20, timing=True)
    assert st.successes == 20 and st.mean_decode_micros > 0
