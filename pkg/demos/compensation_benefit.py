"""Does subtracting the GP mean help?

Runs the figure-8 fault scenario twice with the same seed, compensation off
and on, and compares post-failure tracking and actuator activity. Takes
about a minute.
"""

import os

from hexftc.harness import compare_runs, load_config

here = os.path.dirname(os.path.abspath(__file__))
res = compare_runs(load_config(os.path.join(here, "..", "configs", "figure8_fault.ini")))
print(f"window {res.off.window_start:.1f} to {res.off.window_end:.1f} s")
print(f"position MSE off {res.off.pos_mse:.5f} m^2, on {res.on.pos_mse:.5f} m^2 "
      f"({res.improvement_pct:.1f} % better)")
print(f"PWM roughness off {res.off.pwm_roughness:.4f}, on {res.on.pwm_roughness:.4f} % per tick")
print(f"mean |eta| off {res.log_off.col('eta_norm').mean():.4f}, on {res.log_on.col('eta_norm').mean():.4f}")
