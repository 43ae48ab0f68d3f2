"""A tachyon seen from a moving lab: negative energy, forward momentum.

In the aether the tachyon carries p = k (1/beta_t, n).  Boosting into a lab
where the aether moves at -0.4 along x flips the sign of p0, so standard
clocks read decreasing times along the path, while the spatial momentum
still points the way the tachyon travels.
"""
from tachyon_epr.momentum import BoostVector, boost, propagation, tachyon_momentum

p_aether = tachyon_momentum(1.0, [1, 0, 0], 8.0)
for bx in (0.0, -0.1, -0.125, -0.4):
    p = boost(p_aether, BoostVector([bx, 0, 0]))
    rep = propagation(p)
    print(f"aether speed {bx:+.3f}: p0 = {p.p0:+.5f}  v_x = {rep.velocity[0]:+.5g}"
          f"  backward_in_time = {rep.backward_in_time}  norm2 = {p.norm2:+.5f}")
