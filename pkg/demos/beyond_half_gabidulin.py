"""Decode a Gabidulin code one rank unit past half its minimum distance.

A [6, 3] Gabidulin code over F_64 has minimum rank distance 4, so classical
decoding stops at rank 1. Under the constrained channel (Model A) the
decoder also handles rank-2 errors: the key equation leaves a one-parameter
family of solutions, and the two public constraints pin the parameter down
through a quadratic.
"""

import random

from mrdcodes import (DecodeAmbiguous, FieldContext, apply_error, decode_gabidulin, encode,
                      model_a_setup, new_code, sample_model_a_error)

ctx = FieldContext(2, 1, 6)
params = model_a_setup(ctx, k=3)
ctx = params.ctx  # setup may move the evaluation points
code = new_code(ctx, "GG", 3)
print(f"code: GG over F_{ctx.order}, n={code.n}, k={code.k}")
print(f"public constraint points: alpha[{params.theta1}]={params.alpha1:#x}, "
      f"alpha[{params.theta2}]={params.alpha2:#x}")

rng = random.Random(2024)
msg = [ctx.random_element(rng) for _ in range(3)]
err = sample_model_a_error(ctx, params, 3, 2, rng)
received = apply_error(encode(code, msg), err)
print("message :", [hex(x) for x in msg])
print("error rank:", err.rank)

try:
    rep = decode_gabidulin(code, params, received)
    print("decoded :", [hex(x) for x in rep.message], f"via {rep.branch}, t={rep.t_used}")
    print("X candidates from the quadratic:", [hex(x) for x in rep.trace["X_candidates"]])
    print("recovered error matches:", rep.error_poly == err.poly)
except DecodeAmbiguous as exc:
    # two rank-2 errors obeying both constraints explain the word equally well
    print("ambiguous:", [[hex(x) for x in c.message] for c in exc.candidates])

# how often does that ambiguity occur?
from mrdcodes.simulation import run_trials

stats = run_trials(code, params, 2, 200, seed=1)
print(f"200 trials: {stats.successes} recovered, {stats.ambiguous} ambiguous, {stats.wrong} wrong")
