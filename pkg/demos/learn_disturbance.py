"""Learning the post-failure disturbance from flight data.

Runs the fault-recovery scenario with collection on, then checks the final
posterior along the flown trajectory. What the learner sees is everything
the nominal model misses: the injected aerodynamic disturbance plus the
sideways thrust of the tilted rotor, which the allocation model ignores.
"""

import os

import numpy as np

np.set_printoptions(suppress=True, precision=2)

from hexftc import gp
from hexftc.allocation import default_layout, reconfigure, rotor_wrench, thrust_from_pwm
from hexftc.harness import load_config, run_scenario

here = os.path.dirname(os.path.abspath(__file__))
cfg = load_config(os.path.join(here, "..", "configs", "fault_recovery.ini"))
cfg = cfg.with_(duration=42.0)
log = run_scenario(cfg)

print(f"reconfigured at {log.events['reconfig_time']:.2f} s, {len(log.dataset)} training pairs")
print("fitted lengthscales (first output):", log.hyperparams.per_output()[0][0])

after = log.t >= log.events["reconfig_time"] + 1.0
X = log.data[after, 1:19][::20] / np.asarray(cfg.gp.input_scales)
injected = log.block("f_true_fvx", 6)[after][::20]
plant, _ = reconfigure(default_layout(), cfg.fault.rotor)
gap = []
for row in np.flatnonzero(after)[::20]:
    tau, F = rotor_wrench(plant, thrust_from_pwm(plant, log.block("pwm1", 6)[row]))
    nominal_F = np.array([0.0, 0.0, log.col("fz_nom")[row]])
    gap.append(np.concatenate([F - nominal_F, tau - log.block("tau_nomx", 3)[row]]))
truth = injected + np.array(gap)
mean, var = gp.predict_batch(log.model, X)
inside = np.abs(mean - truth) <= 1.96 * np.sqrt(var + 1e-12)
for j, name in enumerate(gp.OUTPUT_NAMES):
    rmse = np.sqrt(np.mean((mean[:, j] - truth[:, j]) ** 2))
    print(f"{name}: injected {injected[:, j].mean():+.3f}, unmodelled total {truth[:, j].mean():+.3f}, "
          f"rmse {rmse:.3f}, "
          f"inside 95% band {inside[:, j].mean():.0%}")
print("beta per output:", np.round(log.bounds.beta, 1))
