"""The failure timeline: loss, latency, reconfiguration, recovery.

Prints the attitude error around the fault and writes the standard
artifacts (CSV, metrics, plots) to demos/out/fault_timeline.
"""

import os

import numpy as np

from hexftc.harness import compute_metrics, emit, load_config, run_scenario

here = os.path.dirname(os.path.abspath(__file__))
cfg = load_config(os.path.join(here, "..", "configs", "fault_recovery.ini"))
log = run_scenario(cfg)

t_f, t_r = log.events["fault_time"], log.events["reconfig_time"]
psi = log.col("psi")
for label, lo, hi in (("before fault", t_f - 1.0, t_f), ("latency", t_f, t_r),
                      ("first second after", t_r, t_r + 1.0), ("settled", t_r + 2.0, log.t[-1])):
    m = (log.t >= lo) & (log.t < hi)
    print(f"{label:>20}: max Psi {psi[m].max():.4f}, max PWM {log.block('pwm1', 6)[m].max():5.1f} %")

err = np.linalg.norm(log.block("px", 3) - log.block("pdx", 3), axis=1)
print(f"largest position excursion {err[log.t >= t_f].max():.3f} m")
paths = emit(log, compute_metrics(log), os.path.join(here, "out", "fault_timeline"))
print("wrote", ", ".join(os.path.basename(p) for p in paths))
