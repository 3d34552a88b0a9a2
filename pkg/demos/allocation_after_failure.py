"""What a rotor failure does to torque authority, and what tilting buys back.

For every single failure we compare the attainable torque at hover thrust
with the remaining five rotors flat and with the paired rotor tilted.
"""

import numpy as np

from hexftc.allocation import _fibonacci_sphere, allocate, default_layout, reconfigure, torque_envelope

F_HOVER = 2.8 * 9.81
layout = default_layout()
dirs = _fibonacci_sphere(100)

_, nominal = reconfigure(layout, None)
hover = allocate(nominal, np.zeros(3), F_HOVER)
print(f"hover PWM {hover.u.round(2)} %")

print(f"\n{'failed':>6}  {'tilt':>8}  {'worst flat':>10}  {'worst tilted':>12}")
for failed in range(1, 7):
    _, flat = reconfigure(layout, failed, deploy_tilt=False)
    _, tilted = reconfigure(layout, failed)
    worst_flat = min(torque_envelope(flat, F_HOVER, d).value for d in dirs)
    worst_tilt = min(torque_envelope(tilted, F_HOVER, d).value for d in dirs)
    label, angle = layout.pairing[failed]
    print(f"{'M%d' % failed:>6}  M{label} {np.rad2deg(angle):+4.0f}  {worst_flat:10.3f}  {worst_tilt:12.3f}")

# Flat, every failure leaves some torque direction unreachable (worst case 0).
# Tilting M1 or M4 restores it, except when the failed rotor is one of the
# two tiltable ones.
