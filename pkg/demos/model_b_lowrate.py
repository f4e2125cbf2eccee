"""Low-rate decoding under Model B.

Model B errors have Frobenius-symmetric coefficient vectors, so the known
tail of the error polynomial determines its head, whatever the rank. The
twist relation then recovers z_0. The catch is capacity: k <= (n-1)/2 for
odd n and k <= n/2 - 1 for even n.
"""

import random
from collections import Counter

from mrdcodes import (FieldContext, ModelBParams, apply_error, decode_model_b_lowrate, encode,
                      new_code, sample_model_b_error)
from mrdcodes.codes import admissible_eps
from mrdcodes.decoders import model_b_capacity

for n in (7, 8):
    ctx = FieldContext(2, 2, n)
    k = model_b_capacity(n)
    code = new_code(ctx, "GTG", k, 1, admissible_eps(ctx, "GTG", k)[0])
    model = ModelBParams.for_context(ctx)
    rng = random.Random(n)
    ranks, ok = Counter(), 0
    for _ in range(100):
        m = [ctx.random_element(rng) for _ in range(k)]
        e = sample_model_b_error(ctx, model, rng)
        rep = decode_model_b_lowrate(code, model, apply_error(encode(code, m), e))
        ok += rep.message == m
        ranks[e.rank] += 1
    print(f"n={n}, k={k}: {ok}/100 recovered; error ranks seen {dict(sorted(ranks.items()))}")
