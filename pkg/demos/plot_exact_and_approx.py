"""
Exact optimum versus the approximations
=======================================

Random instances are solved exactly and with both approximation routines.
The factor-d routine never exceeds d times the optimum, the other never
exceeds its square.
"""

from vecconn import approximate_d, approximate_opt_squared, brute_force_opt, gen_random, verify_solution

# %%
print(f"{'seed':>4} {'n':>3} {'d':>2} {'opt':>4} {'d-apx':>6} {'opt2-apx':>9}")
for seed in range(8):
    inst = gen_random(9, 0.35, None, 3, 3, seed)
    opt, witness = brute_force_opt(inst)
    a = approximate_d(inst)
    b = approximate_opt_squared(inst)
    assert verify_solution(inst, a) and verify_solution(inst, b)
    assert len(a) <= inst.d * opt and len(b) <= opt * opt
    print(f"{seed:>4} {inst.n:>3} {inst.d:>2} {opt:>4} {len(a):>6} {len(b):>9}")

# %%
# The local-ratio rounds can be inspected directly.
from vecconn import local_ratio

state = local_ratio(gen_random(9, 0.35, None, 3, 3, 4))
for v, cut in state.picks:
    print("picked", v, "with cut", sorted(cut))
print("unsatisfied demand vertices per round:", state.demand_counts)
