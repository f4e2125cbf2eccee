"""Twisted Gabidulin codes: choosing eps, checking MRD-ness, decoding.

A twisted code adds eps * m_0^(q^h) as the coefficient of x^[k]. It stays
MRD only if the norm of eps avoids (-1)^(nk). Over F_2 that condition
can never hold, so the demo works over F_4.
"""

import random

from mrdcodes import FieldContext, model_a_setup, new_code, norm_to_base
from mrdcodes.channels import TWISTED_BEYOND
from mrdcodes.codes import admissible_eps
from mrdcodes.oracle import min_rank_bruteforce
from mrdcodes.simulation import run_trials

for l in (1, 2):
    ctx = FieldContext(2, l, 4)
    ok = admissible_eps(ctx, "GTG", 2)
    print(f"q={ctx.q}: {len(ok)} of {ctx.order - 1} nonzero eps keep GTG[4,2] MRD")

ctx = FieldContext(2, 2, 4)
eps = admissible_eps(ctx, "GTG", 2)[0]
code = new_code(ctx, "GTG", 2, h=1, eps=eps)
print(f"eps={eps:#x}, norm={norm_to_base(ctx, eps):#x}, "
      f"min codeword rank={min_rank_bruteforce(code)} (MRD bound 3)")

bad = new_code(FieldContext(2, 1, 4), "GTG", 2, h=1, eps=1, require_mrd=False)
print("same construction over F_2, min rank:", min_rank_bruteforce(bad))

# beyond-half decoding: n - k even gives a Case-2 quadratic at t = (n - k)/2
params = model_a_setup(FieldContext(2, 2, 8), 2, TWISTED_BEYOND)
ctx = params.ctx
code = new_code(ctx, "GTG", 2, 1, admissible_eps(ctx, "GTG", 2)[0])
for t in (1, 2, 3):
    st = run_trials(code, params, t, 30, seed=t)
    print(f"GTG[8,2] over F_4, rank {t}: {st.successes}/30, branches {dict(st.branch_histogram)}")
