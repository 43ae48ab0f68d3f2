"""Three source positions on either side of, and inside, the uncorrelation window.

Detectors sit at x = -1 and x = +1 (units of the half-separation d).  The
aether drifts at beta = -0.4 and tachyons cross it at beta_t = 8.  Moving the
pair source along the axis decides which detection happens first, and
whether the tachyon it emits can reach the other particle in time.
"""
import sys

from tachyon_epr.timeline import Geometry1D, export_minkowski, run_timeline
from tachyon_epr.window import compute_window

BETA, BETA_T = -0.4, 8.0

w = compute_window(1.0, BETA_T, BETA)
print(f"window: ({w.delta_m:.6f}, {w.delta_M:.6f})  center {w.center:.6f}  width {w.width:.6f}")

for x_bar in (0.2, 0.42, 0.6):
    res = run_timeline(Geometry1D(x_bar), BETA_T, BETA)
    print(f"\nsource at x_bar = {x_bar}: {res.label.name}")
    for ev in res.events:
        print(f"  {ev.kind.name:<22} x = {ev.x:+.6f}  t = {ev.t:+.6f}")

# worldline table for plotting elsewhere
if len(sys.argv) > 1:
    export_minkowski(run_timeline(Geometry1D(0.2), BETA_T, BETA)).to_csv(sys.argv[1])
    print(f"\nMinkowski table written to {sys.argv[1]}")
